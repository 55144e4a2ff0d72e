//! Named decompositions used as fixtures: the Pauli gradings, the two
//! worked examples on `M_2 ⊕ M_4` and `M_6`, divisor and prime-power
//! gradings on sums of matrix algebras, the Grassmann parity split, and
//! (twisted) group algebras.
//!
//! Component 0 always contains the unit.

use std::sync::Arc;

use crate::algebra::{
    direct_sum, grassmann_truncated, group_algebra, matrix_algebra, matrix_element,
    subalgebra_with_basis, tensor_product, twisted_group_algebra, Algebra, Element, Embedding,
};
use crate::decomp::{Decomposition, ThetaTable};
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::gradedgroup::{classify_abelian, AbelianType, CayleyTable, Cocycle};

/// Names accepted by [`from_spec`] and the `build` subcommand.
pub const NAMES: &[&str] = &[
    "pauli",
    "example-6-1",
    "example-6-2",
    "kronecker",
    "p-power",
    "grassmann-z2",
    "group-algebra",
    "twisted",
];

#[derive(Clone, Debug)]
pub struct NamedConstruction {
    pub name: String,
    pub decomposition: Decomposition,
    pub labels: Vec<String>,
    pub expected_theta: Option<ThetaTable>,
    pub expected_group: Option<AbelianType>,
    /// Size of the largest matrix block, or the dimension when there is no
    /// matrix model; entries of θ have order dividing it.
    pub ambient_size: u32,
    /// Sizes `q_i` of the simple components `M_{q_i}(K)`, when known.
    pub block_sizes: Vec<usize>,
    /// Whether the components are the homogeneous parts of a group grading.
    pub group_grading: bool,
    /// For subalgebra-based constructions, the basis inside the ambient algebra.
    pub embedding: Option<Embedding>,
}

impl NamedConstruction {
    pub fn algebra(&self) -> &Algebra {
        self.decomposition.algebra()
    }
}

fn abelian_type(orders: &[usize]) -> AbelianType {
    let orders: Vec<usize> = orders.iter().copied().filter(|&n| n > 1).collect();
    if orders.is_empty() {
        return AbelianType {
            invariant_factors: Vec::new(),
        };
    }
    classify_abelian(&CayleyTable::abelian(&orders)).expect("abelian")
}

fn combine(a: &AbelianType, b: &AbelianType) -> AbelianType {
    let orders: Vec<usize> = a
        .invariant_factors
        .iter()
        .chain(&b.invariant_factors)
        .map(|&d| d as usize)
        .collect();
    abelian_type(&orders)
}

/// `P^i Q^j` in `M_n` with `P = diag(1, ζ_n, …, ζ_n^{n-1})` and `Q` the
/// cyclic shift with ones at `(r, r+1 mod n)`.
pub fn pauli_monomial(n: usize, i: usize, j: usize) -> Element {
    let mut coords = vec![Cyclotomic::zero(); n * n];
    for r in 0..n {
        coords[r * n + (r + j) % n] = Cyclotomic::root(n as u32, (i * r) as i64);
    }
    Element::new(coords)
}

fn pauli_theta(n: usize) -> ThetaTable {
    let idx: Vec<(i64, i64)> = (0..n as i64)
        .flat_map(|i| (0..n as i64).map(move |j| (i, j)))
        .collect();
    let exps: Vec<Vec<i64>> = idx
        .iter()
        .map(|&(i, j)| idx.iter().map(|&(k, l)| j * k - i * l).collect())
        .collect();
    ThetaTable::from_root_exponents(n as u32, &exps).expect("square")
}

/// `M_n` split into the lines spanned by `P^i Q^j`, in row-major `(i,j)` order,
/// with `θ((i,j),(k,l)) = ζ_n^{jk - il}`.
pub fn pauli_decomposition(n: usize) -> NamedConstruction {
    assert!(n >= 1, "matrix size must be positive");
    let alg = Arc::new(matrix_algebra(n).with_conductor(n as u32));
    let mut comps = Vec::with_capacity(n * n);
    let mut labels = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            comps.push(vec![pauli_monomial(n, i, j)]);
            labels.push(format!("({i},{j})"));
        }
    }
    NamedConstruction {
        name: format!("pauli:{n}"),
        decomposition: Decomposition::new(alg, comps).expect("nonzero monomials"),
        labels,
        expected_theta: Some(pauli_theta(n)),
        expected_group: Some(abelian_type(&[n, n])),
        ambient_size: n as u32,
        block_sizes: vec![n],
        group_grading: true,
        embedding: None,
    }
}

/// `M_2 ⊕ M_4` with components indexed by `(k,l) ∈ {0..3}²` in row-major
/// order. The four components `(0,0), (2,0), (0,1), (2,1)` pair `I, D, N, DN`
/// in `M_2` with the matching `M_4` monomial; the other twelve live in `M_4`.
pub fn example_6_1() -> NamedConstruction {
    let alg = Arc::new(direct_sum(&matrix_algebra(2), &matrix_algebra(4)).with_conductor(4));
    let total = alg.dim();
    let mut comps = Vec::with_capacity(16);
    let mut labels = Vec::with_capacity(16);
    for k in 0..4 {
        for l in 0..4 {
            let big = pauli_monomial(4, k, l).embed(4, total);
            let comp = match (k, l) {
                (0 | 2, 0 | 1) => vec![pauli_monomial(2, k / 2, l).embed(0, total), big],
                _ => vec![big],
            };
            comps.push(comp);
            labels.push(format!("({k},{l})"));
        }
    }
    NamedConstruction {
        name: "example-6-1".into(),
        decomposition: Decomposition::new(alg, comps).expect("nonzero components"),
        labels,
        expected_theta: Some(pauli_theta(4)),
        expected_group: None,
        ambient_size: 4,
        block_sizes: vec![2, 4],
        group_grading: false,
        embedding: None,
    }
}

fn int_matrix(rows: &[[i64; 6]]) -> Element {
    let rows: Vec<Vec<Cyclotomic>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Cyclotomic::from_int(x)).collect())
        .collect();
    matrix_element(&rows)
}

/// `L = diag(D,D,D)` and `J = diag(0,0,N)` in `M_6`.
pub fn example_6_2_generators() -> (Element, Element) {
    let l = int_matrix(&[
        [1, 0, 0, 0, 0, 0],
        [0, -1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, -1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, -1],
    ]);
    let j = int_matrix(&[
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0],
    ]);
    (l, j)
}

/// The subalgebra of `M_6` generated by `L` and `J`, split into the lines
/// spanned by `I, J², LJ, LJ², J, L` in that order. Its algebra basis is
/// that list, so the components are the coordinate lines.
pub fn example_6_2() -> NamedConstruction {
    let m6 = matrix_algebra(6);
    let (l, j) = example_6_2_generators();
    let mul = |a: &Element, b: &Element| m6.mul(a, b).expect("same dimension");
    let j2 = mul(&j, &j);
    let basis = vec![m6.unit(), j2.clone(), mul(&l, &j), mul(&l, &j2), j, l];
    let (sub, embedding) = subalgebra_with_basis(&m6, basis).expect("closed basis");
    let comps = (0..6).map(|i| vec![sub.basis_element(i)]).collect();
    let table: [[i64; 6]; 6] = [
        [1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1],
        [1, 1, 1, -1, -1, -1],
        [1, 1, -1, 1, -1, 1],
        [1, 1, -1, -1, 1, -1],
        [1, 1, -1, 1, -1, 1],
    ];
    let expected = ThetaTable::from_entries(
        table
            .iter()
            .map(|r| r.iter().map(|&x| Cyclotomic::from_int(x)).collect())
            .collect(),
    )
    .expect("square");
    NamedConstruction {
        name: "example-6-2".into(),
        decomposition: Decomposition::new(Arc::new(sub), comps).expect("nonzero lines"),
        labels: ["I", "J^2", "LJ", "LJ^2", "J", "L"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        expected_theta: Some(expected),
        expected_group: None,
        ambient_size: 6,
        block_sizes: vec![1, 1, 2],
        group_grading: false,
        embedding: Some(embedding),
    }
}

/// `A ⊗ B` with components `A_a ⊗ B_b` in `a`-major order.
pub fn kron(a: &NamedConstruction, b: &NamedConstruction) -> NamedConstruction {
    let alg = Arc::new(tensor_product(a.algebra(), b.algebra()));
    let mut comps = Vec::new();
    let mut labels = Vec::new();
    for (ca, la) in a.decomposition.components().iter().zip(&a.labels) {
        for (cb, lb) in b.decomposition.components().iter().zip(&b.labels) {
            comps.push(
                ca.iter()
                    .flat_map(|x| cb.iter().map(move |y| x.tensor(y)))
                    .collect(),
            );
            labels.push(format!("{la}{lb}"));
        }
    }
    let block_sizes = a
        .block_sizes
        .iter()
        .flat_map(|&p| b.block_sizes.iter().map(move |&q| p * q))
        .collect();
    NamedConstruction {
        name: format!("{}*{}", a.name, b.name),
        decomposition: Decomposition::new(alg, comps).expect("tensor of nonzero vectors"),
        labels,
        expected_theta: a
            .expected_theta
            .as_ref()
            .zip(b.expected_theta.as_ref())
            .map(|(x, y)| x.kronecker(y)),
        expected_group: a
            .expected_group
            .as_ref()
            .zip(b.expected_group.as_ref())
            .map(|(x, y)| combine(x, y)),
        ambient_size: a.ambient_size * b.ambient_size,
        block_sizes,
        group_grading: a.group_grading && b.group_grading,
        embedding: None,
    }
}

/// `K ⊕ B`, with the new unit summand absorbed into component 0.
pub fn unit_extension(b: &NamedConstruction) -> NamedConstruction {
    let alg = Arc::new(direct_sum(&matrix_algebra(1), b.algebra()));
    let total = alg.dim();
    let comps = b
        .decomposition
        .components()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut v: Vec<Element> = Vec::with_capacity(c.len() + 1);
            if i == 0 {
                v.push(Element::basis(total, 0));
            }
            v.extend(c.iter().map(|x| x.embed(1, total)));
            v
        })
        .collect();
    let mut block_sizes = vec![1];
    block_sizes.extend(&b.block_sizes);
    NamedConstruction {
        name: format!("K+{}", b.name),
        decomposition: Decomposition::new(alg, comps).expect("nonzero components"),
        labels: b.labels.clone(),
        expected_theta: b.expected_theta.clone(),
        expected_group: b.expected_group.clone(),
        ambient_size: b.ambient_size,
        block_sizes,
        group_grading: b.group_grading,
        embedding: None,
    }
}

/// `M_{n1} ⊕ M_{n2} ≅ M_{n1} ⊗ (K ⊕ M_q)` with `q = n2 / n1`, graded by
/// `(Z_{n1})² × (Z_q)²`.
pub fn kronecker_divisor_grading(n1: usize, n2: usize) -> Result<NamedConstruction> {
    if n1 == 0 || n2 == 0 || !n2.is_multiple_of(n1) {
        return Err(Error::Divisibility { n1, n2 });
    }
    let mut c = kron(
        &pauli_decomposition(n1),
        &unit_extension(&pauli_decomposition(n2 / n1)),
    );
    c.name = format!("kronecker:{n1}:{n2}");
    c.block_sizes = vec![n1, n2];
    c.ambient_size = n2 as u32;
    Ok(c)
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// `M_{p^{l_1}} ⊕ ⋯ ⊕ M_{p^{l_r}}`, built by factoring out the smallest block
/// and recursing on the exponent differences.
pub fn p_power_sum_grading(p: u64, exponents: &[u32]) -> Result<NamedConstruction> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if exponents.is_empty() {
        return Err(Error::Precondition(
            "at least one exponent is required".into(),
        ));
    }
    let mut exps = exponents.to_vec();
    exps.sort_unstable();
    let mut c = p_power_rec(p as usize, &exps);
    c.name = format!(
        "p-power:{p}:{}",
        exps.iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    );
    c.block_sizes = exps.iter().map(|&l| (p as usize).pow(l)).collect();
    c.ambient_size = (p as u32).pow(*exps.last().expect("nonempty"));
    Ok(c)
}

fn p_power_rec(p: usize, exps: &[u32]) -> NamedConstruction {
    let base = pauli_decomposition(p.pow(exps[0]));
    if exps.len() == 1 {
        return base;
    }
    let rest: Vec<u32> = exps[1..].iter().map(|&l| l - exps[0]).collect();
    kron(&base, &unit_extension(&p_power_rec(p, &rest)))
}

/// Even and odd parts of the Grassmann algebra on `k` generators.
pub fn grassmann_z2_decomposition(k: usize) -> NamedConstruction {
    let alg = Arc::new(grassmann_truncated(k));
    let (even, odd): (Vec<usize>, Vec<usize>) =
        (0..alg.dim()).partition(|s| s.count_ones() % 2 == 0);
    let comps = vec![
        even.into_iter().map(|s| alg.basis_element(s)).collect(),
        odd.into_iter().map(|s| alg.basis_element(s)).collect(),
    ];
    let expected_theta = (k >= 2).then(|| {
        ThetaTable::from_entries(vec![
            vec![Cyclotomic::one(), Cyclotomic::one()],
            vec![Cyclotomic::one(), Cyclotomic::from_int(-1)],
        ])
        .expect("square")
    });
    NamedConstruction {
        name: format!("grassmann-z2:{k}"),
        ambient_size: alg.dim() as u32,
        decomposition: Decomposition::new(alg, comps).expect("nonzero parts"),
        labels: vec!["even".into(), "odd".into()],
        expected_theta,
        expected_group: None,
        block_sizes: Vec::new(),
        group_grading: false,
        embedding: None,
    }
}

/// Parses `z2xz3`, `d4` (dihedral of order 8), `q8`.
pub fn parse_group(spec: &str) -> Result<CayleyTable> {
    let bad = || Error::Format(format!("unknown group {spec:?}"));
    let spec = spec.to_ascii_lowercase();
    if spec == "q8" {
        return Ok(CayleyTable::quaternion());
    }
    if let Some(n) = spec.strip_prefix('d') {
        let n: usize = n.parse().map_err(|_| bad())?;
        if n < 3 {
            return Err(bad());
        }
        return Ok(CayleyTable::dihedral(n));
    }
    let orders = spec
        .split('x')
        .map(|f| {
            f.strip_prefix('z')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| n >= 1)
        })
        .collect::<Option<Vec<usize>>>()
        .ok_or_else(bad)?;
    Ok(CayleyTable::abelian(&orders))
}

fn group_components(alg: &Algebra, m: usize) -> (Vec<Vec<Element>>, Vec<String>) {
    (
        (0..m).map(|g| vec![alg.basis_element(g)]).collect(),
        (0..m).map(|g| format!("g{g}")).collect(),
    )
}

/// `KG` split into the lines `K X_g`.
pub fn group_algebra_decomposition(name: &str, group: &CayleyTable) -> NamedConstruction {
    let alg = Arc::new(group_algebra(group));
    let m = group.order();
    let (comps, labels) = group_components(&alg, m);
    let abelian = group.is_abelian();
    NamedConstruction {
        name: format!("group-algebra:{name}"),
        decomposition: Decomposition::new(alg, comps).expect("basis lines"),
        labels,
        expected_theta: abelian.then(|| {
            ThetaTable::from_entries(vec![vec![Cyclotomic::one(); m]; m]).expect("square")
        }),
        expected_group: if abelian {
            classify_abelian(group).ok()
        } else {
            None
        },
        ambient_size: m as u32,
        block_sizes: if abelian { vec![1; m] } else { Vec::new() },
        group_grading: true,
        embedding: None,
    }
}

/// `K^α(Z_n × Z_n)` for the clock-shift cocycle, isomorphic to `M_n`.
pub fn twisted_decomposition(n: usize) -> NamedConstruction {
    let alpha = Cocycle::clock_shift(n);
    let alg = Arc::new(twisted_group_algebra(alpha.group(), &alpha).expect("valid cocycle"));
    let m = n * n;
    let (comps, labels) = group_components(&alg, m);
    // θ(g,h) = α(g,h)/α(h,g) = ζ_n^{a₂b₁ - b₂a₁}
    let exps: Vec<Vec<i64>> = (0..m)
        .map(|g| {
            (0..m)
                .map(|h| ((g % n) * (h / n)) as i64 - ((h % n) * (g / n)) as i64)
                .collect()
        })
        .collect();
    NamedConstruction {
        name: format!("twisted:{n}"),
        decomposition: Decomposition::new(alg, comps).expect("basis lines"),
        labels,
        expected_theta: Some(ThetaTable::from_root_exponents(n as u32, &exps).expect("square")),
        expected_group: Some(abelian_type(&[n, n])),
        ambient_size: n as u32,
        block_sizes: vec![n],
        group_grading: true,
        embedding: None,
    }
}

fn parse_num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Format(format!("invalid {what} {s:?}")))
}

/// Builds a construction from `name[:arg[:arg]]`, e.g. `pauli:3`,
/// `kronecker:2:4`, `p-power:2:1,2`, `grassmann-z2:6`,
/// `group-algebra:z2xz2`, `twisted:2`, `example-6-1`.
pub fn from_spec(spec: &str) -> Result<NamedConstruction> {
    let parts: Vec<&str> = spec.split(':').collect();
    let arity = |n: usize| -> Result<()> {
        if parts.len() == n + 1 {
            Ok(())
        } else {
            Err(Error::Format(format!("{spec:?} expects {n} argument(s)")))
        }
    };
    let positive = |s: &str, what: &str| -> Result<usize> {
        match parse_num::<usize>(s, what)? {
            0 => Err(Error::Format(format!("{what} must be positive"))),
            n => Ok(n),
        }
    };
    match parts[0] {
        "pauli" => {
            arity(1)?;
            Ok(pauli_decomposition(positive(parts[1], "n")?))
        }
        "example-6-1" => {
            arity(0)?;
            Ok(example_6_1())
        }
        "example-6-2" => {
            arity(0)?;
            Ok(example_6_2())
        }
        "kronecker" => {
            arity(2)?;
            kronecker_divisor_grading(positive(parts[1], "n1")?, positive(parts[2], "n2")?)
        }
        "p-power" => {
            arity(2)?;
            let exps = parts[2]
                .split(',')
                .map(|e| parse_num::<u32>(e, "exponent"))
                .collect::<Result<Vec<_>>>()?;
            p_power_sum_grading(parse_num(parts[1], "prime")?, &exps)
        }
        "grassmann-z2" => {
            arity(1)?;
            let k = positive(parts[1], "k")?;
            if k > 12 {
                return Err(Error::Format("grassmann-z2 supports k <= 12".into()));
            }
            Ok(grassmann_z2_decomposition(k))
        }
        "group-algebra" => {
            arity(1)?;
            Ok(group_algebra_decomposition(
                parts[1],
                &parse_group(parts[1])?,
            ))
        }
        "twisted" => {
            arity(1)?;
            Ok(twisted_decomposition(positive(parts[1], "n")?))
        }
        other => Err(Error::Format(format!(
            "unknown construction {other:?}; expected one of {}",
            NAMES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::detect_theta;

    #[test]
    fn pauli_small_cases() {
        let p1 = pauli_decomposition(1);
        assert_eq!(p1.decomposition.len(), 1);
        assert_eq!(detect_theta(&p1.decomposition).unwrap(), pauli_theta(1));
        let p2 = pauli_decomposition(2);
        // D = P, N = Q
        let d = matrix_element(&[
            vec![Cyclotomic::one(), Cyclotomic::zero()],
            vec![Cyclotomic::zero(), Cyclotomic::from_int(-1)],
        ]);
        assert_eq!(p2.decomposition.components()[2][0], d);
    }

    #[test]
    fn example_6_2_relations() {
        let m6 = matrix_algebra(6);
        let (l, j) = example_6_2_generators();
        assert_eq!(m6.mul(&l, &l).unwrap(), m6.unit());
        let lj = m6.mul(&l, &j).unwrap();
        let jl = m6.mul(&j, &l).unwrap();
        assert_eq!(lj, jl.scale(&Cyclotomic::from_int(-1)));
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(from_spec("pauli:3").unwrap().decomposition.len(), 9);
        assert_eq!(from_spec("kronecker:2:4").unwrap().algebra().dim(), 20);
        assert_eq!(
            from_spec("kronecker:2:3").unwrap_err(),
            Error::Divisibility { n1: 2, n2: 3 }
        );
        assert_eq!(from_spec("p-power:4:1").unwrap_err(), Error::NotPrime(4));
        assert_eq!(
            from_spec("group-algebra:z2xz2")
                .unwrap()
                .decomposition
                .len(),
            4
        );
        assert_eq!(from_spec("group-algebra:q8").unwrap().algebra().dim(), 8);
        assert!(from_spec("nonsense").is_err());
        assert!(from_spec("pauli").is_err());
        assert!(from_spec("pauli:0").is_err());
    }

    #[test]
    fn unit_extension_keeps_unit_in_component_zero() {
        let c = unit_extension(&pauli_decomposition(2));
        let solver = c.decomposition.solver().unwrap();
        assert_eq!(solver.support(&c.algebra().unit()), vec![0]);
        assert_eq!(c.decomposition.component_dims()[0], 2);
    }
}
