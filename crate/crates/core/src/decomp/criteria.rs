use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Matrix, Rational};

use super::ThetaTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QcViolation {
    /// `θ(i,i)² ≠ 1`.
    DiagonalSquare(usize),
    /// `θ(i,j) θ(j,i) ≠ 1`, reported once with `i < j`.
    Reciprocal(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QcReport {
    pub violations: Vec<QcViolation>,
    /// Indices with constrained `θ(i,i) ≠ 1`.
    pub diagonal_not_one: Vec<usize>,
}

impl QcReport {
    pub fn relations_hold(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn diagonal_is_one(&self) -> bool {
        self.diagonal_not_one.is_empty()
    }
}

/// Checks `θ(i,i)² = 1` and `θ(i,j)θ(j,i) = 1` wherever both entries are
/// constrained, and separately whether the diagonal is all ones.
pub fn qc_relations_check(t: &ThetaTable) -> QcReport {
    let m = t.m();
    let mut violations = Vec::new();
    let mut diagonal_not_one = Vec::new();
    for i in 0..m {
        if !t.is_constrained(i, i) {
            continue;
        }
        let d = t.entry(i, i);
        if !(d * d).is_one() {
            violations.push(QcViolation::DiagonalSquare(i));
        }
        if !d.is_one() {
            diagonal_not_one.push(i);
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            if t.is_constrained(i, j)
                && t.is_constrained(j, i)
                && !(t.entry(i, j) * t.entry(j, i)).is_one()
            {
                violations.push(QcViolation::Reciprocal(i, j));
            }
        }
    }
    QcReport {
        violations,
        diagonal_not_one,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityReport {
    pub minimal: bool,
    /// Every pair `i < j` of equal rows.
    pub duplicates: Vec<(usize, usize)>,
}

/// No two rows of the table coincide.
pub fn is_minimal(t: &ThetaTable) -> Result<MinimalityReport> {
    t.require_constrained()?;
    let rows = t.entries();
    let mut duplicates = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if rows[i] == rows[j] {
                duplicates.push((i, j));
            }
        }
    }
    Ok(MinimalityReport {
        minimal: duplicates.is_empty(),
        duplicates,
    })
}

pub fn det_exact(m: &Matrix) -> Result<Cyclotomic> {
    m.det()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BahturinRegevReport {
    pub det: Cyclotomic,
    pub det_squared: Cyclotomic,
    /// `m^m`.
    pub target: Cyclotomic,
    /// `det² = m^m`.
    pub pass: bool,
    pub minimal: bool,
    /// `minimal ⟺ det ≠ 0`.
    pub equivalence_holds: bool,
}

/// Compares `det(M)²` with `m^m`; the squared form avoids `m^{m/2}` for odd `m`.
pub fn bahturin_regev_check(t: &ThetaTable) -> Result<BahturinRegevReport> {
    let minimal = is_minimal(t)?.minimal;
    let det = t.matrix().det()?;
    let det_squared = &det * &det;
    let m = t.m();
    let target = Cyclotomic::from_rational(Rational::from_int(m as i64).pow(m as u32));
    Ok(BahturinRegevReport {
        pass: det_squared == target,
        equivalence_holds: minimal == !det.is_zero(),
        det,
        det_squared,
        target,
        minimal,
    })
}

/// `M² = m·I`.
pub fn msquared_check(t: &ThetaTable) -> Result<bool> {
    t.require_constrained()?;
    let m = t.matrix();
    let sq = m.mul(&m)?;
    Ok(sq == Matrix::identity(t.m()).scale(&Cyclotomic::from_int(t.m() as i64)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootOrderReport {
    pub bound: u32,
    /// Multiplicative order of each constrained entry, `None` when it is not
    /// a root of unity; `None` also for unconstrained entries.
    pub orders: Vec<Vec<Option<u32>>>,
    /// Constrained entries whose order is undefined or does not divide `bound`.
    pub violations: Vec<(usize, usize)>,
}

impl RootOrderReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn root_order_check(t: &ThetaTable, bound: u32) -> RootOrderReport {
    let m = t.m();
    let mut orders = vec![vec![None; m]; m];
    let mut violations = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if !t.is_constrained(i, j) {
                continue;
            }
            let o = t.entry(i, j).order_of();
            orders[i][j] = o;
            if !o.is_some_and(|o| bound.is_multiple_of(o)) {
                violations.push((i, j));
            }
        }
    }
    RootOrderReport {
        bound,
        orders,
        violations,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NecessaryViolation {
    /// `q_max² > m`.
    ExceedsRoot { q_max: usize, m: usize },
    /// `1 < q_s < q_max` with `gcd(q_s, q_max) = 1`.
    Coprime { q_s: usize, q_max: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecessaryConditionReport {
    pub pass: bool,
    pub violations: Vec<NecessaryViolation>,
    pub caution: Option<String>,
}

/// Necessary condition on the sizes `q_i` of the simple components
/// `M_{q_i}(K)` for a regular decomposition of quantum length `m`.
pub fn necessary_condition_check(sizes: &[usize], m: usize) -> Result<NecessaryConditionReport> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::Precondition(
            "component sizes must be positive".into(),
        ));
    }
    let q_max = *sizes.iter().max().expect("nonempty");
    let mut violations = Vec::new();
    if q_max * q_max > m {
        violations.push(NecessaryViolation::ExceedsRoot { q_max, m });
    }
    let mut middle: Vec<usize> = sizes
        .iter()
        .copied()
        .filter(|&q| 1 < q && q < q_max)
        .collect();
    middle.sort_unstable();
    middle.dedup();
    for &q_s in &middle {
        if q_s.gcd(&q_max) == 1 {
            violations.push(NecessaryViolation::Coprime { q_s, q_max });
        }
    }
    let pass = violations.is_empty();
    let caution = middle
        .iter()
        .find(|&&q| !q_max.is_multiple_of(q))
        .filter(|_| pass)
        .map(|&q| {
            format!(
                "the condition is necessary but not sufficient; {q} does not divide {q_max}, \
                 so no divisor construction applies"
            )
        });
    Ok(NecessaryConditionReport {
        pass,
        violations,
        caution,
    })
}
