use thiserror::Error;

/// Why `detect_theta` could not assign a commutation scalar to a component pair.
/// Component and basis indices are zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThetaFailure {
    #[error("components ({i},{j}): basis pair {pair:?} has a*b not a scalar multiple of b*a")]
    NotScalarMultiple {
        i: usize,
        j: usize,
        pair: (usize, usize),
    },
    #[error("components ({i},{j}): basis pairs {first:?} and {second:?} force different scalars")]
    InconsistentScalar {
        i: usize,
        j: usize,
        first: (usize, usize),
        second: (usize, usize),
    },
    #[error("components ({i},{j}): basis pair {pair:?} has exactly one of a*b, b*a equal to zero")]
    OneSidedZero {
        i: usize,
        j: usize,
        pair: (usize, usize),
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("cocycle identity fails at (g,h,k) = ({g},{h},{k})")]
    CocycleViolation { g: usize, h: usize, k: usize },
    #[error("bicharacter identity fails at (g,h,k) = ({g},{h},{k})")]
    BicharacterViolation { g: usize, h: usize, k: usize },
    #[error("group is not abelian")]
    NotAbelian,
    #[error("components do not form a direct sum decomposition of the algebra")]
    NotDirectSum,
    #[error("not quantum commutative: {0}")]
    Theta(#[from] ThetaFailure),
    #[error("theta entry ({i},{j}) is unconstrained")]
    UnconstrainedEntries { i: usize, j: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("not a set-grading: R_{i} R_{j} meets components {components:?}")]
    NotASetGrading {
        i: usize,
        j: usize,
        components: Vec<usize>,
    },
    #[error("w_{j} w_{k} is supported on components {support:?}")]
    MultiComponentProduct {
        j: usize,
        k: usize,
        support: Vec<usize>,
    },
    #[error("reconstructed product is not a group: {0}")]
    NotAGroup(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{n1} does not divide {n2}")]
    Divisibility { n1: usize, n2: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("degree {n} exceeds the cap {cap}")]
    DegreeCapExceeded { n: usize, cap: usize },
    #[error("subalgebra has no unit element")]
    NotUnital,
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
