//! Regularity witnesses.
//!
//! A decomposition `R = R_1 ⊕ ⋯ ⊕ R_m` satisfying the commutation condition
//! `ab = θ(i,j) ba` is regular (every finite tuple of component indices admits
//! a nonzero product of homogeneous elements) iff there are `w_i ∈ R_i` with
//! `w_1 ⋯ w_m` not nilpotent.
//!
//! If `w = w_1 ⋯ w_m` is not nilpotent, take any tuple `(i_1, …, i_n)`. Using
//! the commutation rule, `w_{i_1} ⋯ w_{i_n}` is a nonzero scalar multiple of
//! `w_1^{k_1} ⋯ w_m^{k_m}`, where `k_i` counts occurrences of `i`. With
//! `K = max k_i`, multiplying on the right by `w_1^{K-k_1} ⋯ w_m^{K-k_m}` and
//! reordering again gives a nonzero multiple of `w_1^K ⋯ w_m^K`, which is a
//! nonzero multiple of `w^K ≠ 0`. So the tuple product is nonzero. Conversely,
//! regularity supplies, for each `n`, homogeneous elements whose product in
//! the order `(1, …, m)` repeated `n` times is nonzero; the set of tuples
//! `(w_1, …, w_m)` with `(w_1 ⋯ w_m)^d ≠ 0` is Zariski open in
//! `R_1 × ⋯ × R_m`, and nonempty by the same reordering argument applied to
//! a nonzero product of length `m·d`, so generic elements are witnesses.
//!
//! Phase 1 samples small integer coordinates. Phase 2 expands the product of
//! generic elements with one indeterminate per component basis vector and
//! decides whether its `d`-th power vanishes identically.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{is_nilpotent, Algebra, Element};
use crate::exactnum::Cyclotomic;

use super::Decomposition;

/// Maximum number of indeterminates in the symbolic phase.
pub const MAX_INDETERMINATES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessStatus {
    Found,
    Refuted,
    Inconclusive,
}

impl WitnessStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessStatus::Found => "found",
            WitnessStatus::Refuted => "refuted",
            WitnessStatus::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityWitness {
    pub status: WitnessStatus,
    /// `w_i ∈ R_i`; empty unless found.
    pub elements: Vec<Element>,
    /// `w_1 ⋯ w_m`; zero unless found.
    pub product: Element,
    /// Phase that settled the status (1 or 2).
    pub phase: u8,
    /// Phase 1 attempts made.
    pub attempts: usize,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessOptions {
    pub budget: usize,
    pub seed: u64,
    pub phase2: bool,
    /// Abort the symbolic expansion beyond this many terms.
    pub term_cap: usize,
}

impl Default for WitnessOptions {
    fn default() -> Self {
        WitnessOptions {
            budget: 64,
            seed: 0,
            phase2: false,
            term_cap: 50_000,
        }
    }
}

/// Phase 1 attempt 0 uses the sum of each component's basis vectors; later
/// attempts draw coordinates from `{-3, …, 3}` with the RNG seeded by
/// `seed + attempt`.
pub fn find_witness(d: &Decomposition, opts: &WitnessOptions) -> RegularityWitness {
    let alg = d.algebra();
    let comps = d.components();
    for attempt in 0..opts.budget {
        let ws: Vec<Element> = if attempt == 0 {
            comps
                .iter()
                .map(|c| c.iter().fold(Element::zero(alg.dim()), |acc, b| acc.add(b)))
                .collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(attempt as u64));
            comps
                .iter()
                .map(|c| random_combination(c, alg.dim(), 3, &mut rng))
                .collect()
        };
        if let Some(product) = non_nilpotent_product(alg, &ws) {
            return RegularityWitness {
                status: WitnessStatus::Found,
                elements: ws,
                product,
                phase: 1,
                attempts: attempt + 1,
                note: None,
            };
        }
    }
    let unsettled = |phase, note: String| RegularityWitness {
        status: WitnessStatus::Inconclusive,
        elements: Vec::new(),
        product: Element::zero(alg.dim()),
        phase,
        attempts: opts.budget,
        note: Some(note),
    };
    if !opts.phase2 {
        return unsettled(
            1,
            format!(
                "no witness in {} attempts; run the symbolic phase to decide",
                opts.budget
            ),
        );
    }
    match symbolic_phase(d, opts) {
        Symbolic::Refuted => RegularityWitness {
            status: WitnessStatus::Refuted,
            elements: Vec::new(),
            product: Element::zero(alg.dim()),
            phase: 2,
            attempts: opts.budget,
            note: Some("the generic product is nilpotent".into()),
        },
        Symbolic::Found(ws, product) => RegularityWitness {
            status: WitnessStatus::Found,
            elements: ws,
            product,
            phase: 2,
            attempts: opts.budget,
            note: None,
        },
        Symbolic::Inconclusive(note) => unsettled(2, note),
    }
}

fn random_combination(basis: &[Element], dim: usize, range: i64, rng: &mut ChaCha8Rng) -> Element {
    basis.iter().fold(Element::zero(dim), |acc, b| {
        let c = rng.gen_range(-range..=range);
        if c == 0 {
            acc
        } else {
            acc.add(&b.scale(&Cyclotomic::from_int(c)))
        }
    })
}

fn non_nilpotent_product(alg: &Algebra, ws: &[Element]) -> Option<Element> {
    let product = alg
        .product(ws)
        .expect("component vectors have the algebra's dimension");
    (!is_nilpotent(alg, &product).expect("same dimension")).then_some(product)
}

enum Symbolic {
    Refuted,
    Found(Vec<Element>, Element),
    Inconclusive(String),
}

type Monomial = [u8; MAX_INDETERMINATES];

/// Polynomial in commuting indeterminates with algebra-valued coefficients.
type Poly = BTreeMap<Monomial, Element>;

fn poly_mul(alg: &Algebra, p: &Poly, q: &Poly, cap: usize) -> Option<Poly> {
    let mut out: Poly = BTreeMap::new();
    for (ma, a) in p {
        for (mb, b) in q {
            let c = alg.mul_unchecked(a, b);
            if c.is_zero() {
                continue;
            }
            let mut key = *ma;
            for (k, e) in key.iter_mut().zip(mb) {
                *k += e;
            }
            match out.get_mut(&key) {
                Some(v) => *v = v.add(&c),
                None => {
                    out.insert(key, c);
                    if out.len() > cap {
                        return None;
                    }
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    Some(out)
}

fn symbolic_phase(d: &Decomposition, opts: &WitnessOptions) -> Symbolic {
    let alg = d.algebra();
    let vars = d.components().iter().map(Vec::len).sum::<usize>();
    if vars > MAX_INDETERMINATES {
        return Symbolic::Inconclusive(format!(
            "symbolic phase needs {vars} indeterminates; the cap is {MAX_INDETERMINATES}"
        ));
    }
    let cap_note = || {
        Symbolic::Inconclusive(format!(
            "symbolic expansion exceeded {} terms",
            opts.term_cap
        ))
    };
    let mut product: Poly = BTreeMap::from([([0u8; MAX_INDETERMINATES], alg.unit())]);
    let mut var = 0;
    for comp in d.components() {
        let generic: Poly = comp
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_zero())
            .map(|(p, b)| {
                let mut key = [0u8; MAX_INDETERMINATES];
                key[var + p] = 1;
                (key, b.clone())
            })
            .collect();
        var += comp.len();
        match poly_mul(alg, &product, &generic, opts.term_cap) {
            Some(p) => product = p,
            None => return cap_note(),
        }
    }
    let mut power = product;
    let mut exp = 1usize;
    loop {
        if power.is_empty() {
            return Symbolic::Refuted;
        }
        if exp >= alg.dim() {
            break;
        }
        match poly_mul(alg, &power, &power, opts.term_cap) {
            Some(p) => power = p,
            None => return cap_note(),
        }
        exp *= 2;
    }
    // The generic power is a nonzero polynomial, so it is nonzero at all but
    // a thin set of points; widen the sampling range until one is hit.
    let mut attempt = 0u64;
    for range in [3i64, 20, 1000] {
        for _ in 0..64 {
            attempt += 1;
            let mut rng = ChaCha8Rng::seed_from_u64(
                opts.seed
                    .wrapping_add(opts.budget as u64)
                    .wrapping_add(attempt),
            );
            let ws: Vec<Element> = d
                .components()
                .iter()
                .map(|c| random_combination(c, alg.dim(), range, &mut rng))
                .collect();
            if let Some(product) = non_nilpotent_product(alg, &ws) {
                return Symbolic::Found(ws, product);
            }
        }
    }
    Symbolic::Inconclusive(
        "the generic product is not nilpotent but no sampled specialization was".into(),
    )
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{grassmann_truncated, matrix_algebra, matrix_unit};

    fn grassmann_z2(k: usize) -> Decomposition {
        let g = Arc::new(grassmann_truncated(k));
        let (even, odd): (Vec<usize>, Vec<usize>) =
            (0..g.dim()).partition(|s| s.count_ones() % 2 == 0);
        let comps = vec![
            even.into_iter().map(|s| g.basis_element(s)).collect(),
            odd.into_iter().map(|s| g.basis_element(s)).collect(),
        ];
        Decomposition::new(g, comps).unwrap()
    }

    #[test]
    fn grassmann_is_refuted_symbolically() {
        let d = grassmann_z2(3);
        let phase1 = find_witness(&d, &WitnessOptions::default());
        assert_eq!(phase1.status, WitnessStatus::Inconclusive);
        let opts = WitnessOptions {
            phase2: true,
            ..Default::default()
        };
        let w = find_witness(&d, &opts);
        assert_eq!(w.status, WitnessStatus::Refuted);
        assert_eq!(w.phase, 2);
    }

    #[test]
    fn nilpotent_factor_refutes() {
        let a = Arc::new(matrix_algebra(2));
        let d = Decomposition::new(a.clone(), vec![vec![a.unit()], vec![matrix_unit(2, 0, 1)]])
            .unwrap();
        // I · e12 is nilpotent, so no choice works
        let opts = WitnessOptions {
            phase2: true,
            budget: 4,
            ..Default::default()
        };
        assert_eq!(find_witness(&d, &opts).status, WitnessStatus::Refuted);
        let whole = Decomposition::new(
            a.clone(),
            vec![(0..4).map(|i| a.basis_element(i)).collect()],
        )
        .unwrap();
        let w = find_witness(&whole, &opts);
        assert_eq!(w.status, WitnessStatus::Found);
        assert_eq!(w.phase, 1);
    }

    #[test]
    fn symbolic_phase_finds_specialization() {
        // a zero budget skips the sampling phase entirely
        let a = Arc::new(matrix_algebra(2));
        let d = Decomposition::new(
            a.clone(),
            vec![vec![
                matrix_unit(2, 0, 1),
                matrix_unit(2, 1, 0),
                matrix_unit(2, 0, 0),
                matrix_unit(2, 1, 1),
            ]],
        )
        .unwrap();
        let opts = WitnessOptions {
            phase2: true,
            budget: 0,
            ..Default::default()
        };
        let w = find_witness(&d, &opts);
        assert_eq!(w.status, WitnessStatus::Found);
        assert_eq!(w.phase, 2);
        assert!(!is_nilpotent(&a, &w.product).unwrap());
    }

    #[test]
    fn too_many_indeterminates() {
        let g = Arc::new(grassmann_truncated(5));
        let d = Decomposition::new(
            g.clone(),
            vec![(0..32).map(|i| g.basis_element(i)).collect()],
        )
        .unwrap();
        let opts = WitnessOptions {
            phase2: true,
            budget: 0,
            ..Default::default()
        };
        let w = find_witness(&d, &opts);
        assert_eq!(w.status, WitnessStatus::Inconclusive);
        assert!(w.note.unwrap().contains("cap"));
    }
}
