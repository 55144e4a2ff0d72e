//! Multilinear polynomial identities forced by a commutation table.
//!
//! If `b_i ∈ R_{l_i}`, then `b_{σ(1)} ⋯ b_{σ(n)} = Λ_σ(l) · b_1 ⋯ b_n`, so a
//! multilinear `g = Σ c_σ x_{σ(1)} ⋯ x_{σ(n)}` vanishes on homogeneous
//! substitutions whenever `Σ_σ Λ_σ(l) c_σ = 0` for every index tuple `l`.
//! That is an `m^n × n!` homogeneous linear system, with nonzero solutions
//! as soon as `n! > m^n`.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Element;
use crate::decomp::{Decomposition, ThetaTable};
use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Matrix};

/// Largest degree solved without opting in.
pub const DEFAULT_DEGREE_CAP: usize = 6;
/// Largest degree accepted with the `--large` opt-in.
pub const LARGE_DEGREE_CAP: usize = 7;

/// `Σ c_σ x_{σ(1)} ⋯ x_{σ(n)}` over permutations of `0..n`; only nonzero
/// coefficients are stored, in lexicographic order of the permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearPoly {
    pub n: usize,
    pub terms: Vec<(Vec<usize>, Cyclotomic)>,
}

impl MultilinearPoly {
    /// `x_1 x_2 - x_2 x_1`.
    pub fn commutator() -> Self {
        MultilinearPoly {
            n: 2,
            terms: vec![
                (vec![0, 1], Cyclotomic::one()),
                (vec![1, 0], Cyclotomic::from_int(-1)),
            ],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_zero())
    }

    /// Evaluates at `xs` (one element per variable) via `product`.
    pub fn evaluate<F>(&self, xs: &[Element], mut product: F) -> Element
    where
        F: FnMut(&[&Element]) -> Element,
    {
        assert_eq!(xs.len(), self.n, "one substitution per variable");
        let dim = xs.first().map_or(0, Element::dim);
        let mut acc = Element::zero(dim);
        for (perm, c) in &self.terms {
            if c.is_zero() {
                continue;
            }
            let factors: Vec<&Element> = perm.iter().map(|&i| &xs[i]).collect();
            acc = acc.add(&product(&factors).scale(c));
        }
        acc
    }
}

/// `Λ_σ(l) = Π θ(l_{σ(i)}, l_{σ(j)})` over `i < j` with `σ(i) > σ(j)`.
pub fn lambda_coefficient(t: &ThetaTable, tuple: &[usize], sigma: &[usize]) -> Cyclotomic {
    let n = sigma.len();
    let mut acc = Cyclotomic::one();
    for i in 0..n {
        for j in i + 1..n {
            if sigma[i] > sigma[j] {
                acc = &acc * t.entry(tuple[sigma[i]], tuple[sigma[j]]);
            }
        }
    }
    acc
}

/// Solves the `m^n × n!` system and returns the kernel vector attached to the
/// smallest free column, scaled so its first nonzero coefficient is 1; `None`
/// when the kernel is zero.
pub fn find_identity(t: &ThetaTable, n: usize, cap: usize) -> Result<Option<MultilinearPoly>> {
    if n > cap {
        return Err(Error::DegreeCapExceeded { n, cap });
    }
    if n == 0 {
        return Err(Error::Precondition("degree must be positive".into()));
    }
    let m = t.m();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let rows: Vec<Vec<Cyclotomic>> = std::iter::repeat_n(0..m, n)
        .multi_cartesian_product()
        .map(|tuple| {
            perms
                .iter()
                .map(|s| lambda_coefficient(t, &tuple, s))
                .collect()
        })
        .collect();
    let kernel = Matrix::from_rows(rows)?.kernel();
    let Some(v) = kernel.into_iter().next() else {
        return Ok(None);
    };
    let lead = v
        .iter()
        .find(|c| !c.is_zero())
        .expect("kernel vectors are nonzero")
        .clone();
    let inv = lead.inverse()?;
    let terms = perms
        .into_iter()
        .zip(v)
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (p, &c * &inv))
        .collect();
    Ok(Some(MultilinearPoly { n, terms }))
}

/// Outcome of substituting homogeneous elements into a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityVerification {
    pub trials: usize,
    pub random_violations: usize,
    /// Number of basis tuples tried; zero when the basis exceeds the limit.
    pub exhaustive_checked: usize,
    pub exhaustive_violations: usize,
    /// First nonzero value found, with the component index of each variable.
    pub counterexample: Option<(Vec<usize>, Element)>,
}

impl IdentityVerification {
    pub fn pass(&self) -> bool {
        self.random_violations == 0 && self.exhaustive_violations == 0
    }
}

/// Evaluates `p` on `trials` random homogeneous tuples (components uniform,
/// coordinates in `{-3, …, 3}`, trial `i` seeded by `seed + i`), and on every
/// tuple of component basis vectors when the decomposition has at most
/// `exhaustive_limit` basis vectors.
pub fn verify_identity(
    p: &MultilinearPoly,
    d: &Decomposition,
    trials: usize,
    seed: u64,
    exhaustive_limit: usize,
) -> IdentityVerification {
    let alg = d.algebra();
    let comps = d.components();
    let product = |xs: &[&Element]| alg.product(xs.iter().copied()).expect("same dimension");
    let mut out = IdentityVerification {
        trials,
        random_violations: 0,
        exhaustive_checked: 0,
        exhaustive_violations: 0,
        counterexample: None,
    };
    let record = |out: &mut IdentityVerification, ls: Vec<usize>, v: Element| {
        if out.counterexample.is_none() {
            out.counterexample = Some((ls, v));
        }
    };
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial as u64));
        let ls: Vec<usize> = (0..p.n).map(|_| rng.gen_range(0..comps.len())).collect();
        let xs: Vec<Element> = ls
            .iter()
            .map(|&l| {
                comps[l].iter().fold(Element::zero(alg.dim()), |acc, b| {
                    acc.add(&b.scale(&Cyclotomic::from_int(rng.gen_range(-3..=3))))
                })
            })
            .collect();
        let v = p.evaluate(&xs, product);
        if !v.is_zero() {
            out.random_violations += 1;
            record(&mut out, ls, v);
        }
    }
    let flat = d.flat_basis();
    if flat.len() <= exhaustive_limit {
        let owners = d.owners();
        for idx in std::iter::repeat_n(0..flat.len(), p.n).multi_cartesian_product() {
            let xs: Vec<Element> = idx.iter().map(|&i| flat[i].clone()).collect();
            out.exhaustive_checked += 1;
            let v = p.evaluate(&xs, product);
            if !v.is_zero() {
                out.exhaustive_violations += 1;
                record(&mut out, idx.iter().map(|&i| owners[i]).collect(), v);
            }
        }
    }
    out
}
