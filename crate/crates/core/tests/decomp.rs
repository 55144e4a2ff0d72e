use std::sync::Arc;

use proptest::prelude::*;
use qcreg::algebra::{grassmann_truncated, matrix_algebra, matrix_unit, Algebra, Element};
use qcreg::constructions::{
    example_6_1, example_6_2, from_spec, grassmann_z2_decomposition, pauli_decomposition,
};
use qcreg::decomp::{
    bahturin_regev_check, det_exact, detect_theta, find_witness, is_minimal, msquared_check,
    necessary_condition_check, qc_relations_check, root_order_check, Decomposition, QcViolation,
    ThetaTable, WitnessOptions, WitnessStatus,
};
use qcreg::error::ThetaFailure;
use qcreg::exactnum::{Cyclotomic, Matrix, Rational};
use qcreg::Error;

fn int(n: i64) -> Cyclotomic {
    Cyclotomic::from_int(n)
}

fn table(rows: &[&[i64]]) -> ThetaTable {
    ThetaTable::from_entries(
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect(),
    )
    .unwrap()
}

/// `ζ_n^{c(jk - il)}` on `Z_n × Z_n`, row-major.
fn skew_table(n: usize, c: i64) -> ThetaTable {
    let m = n * n;
    let entries = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| {
                    let (i, j) = ((a / n) as i64, (a % n) as i64);
                    let (k, l) = ((b / n) as i64, (b % n) as i64);
                    Cyclotomic::root(n as u32, c * (j * k - i * l))
                })
                .collect()
        })
        .collect();
    ThetaTable::from_entries(entries).unwrap()
}

const SPECS: &[&str] = &[
    "pauli:1",
    "pauli:2",
    "pauli:3",
    "pauli:4",
    "example-6-1",
    "example-6-2",
    "kronecker:1:2",
    "kronecker:2:2",
    "kronecker:2:4",
    "p-power:2:1,1",
    "p-power:2:1,2",
    "p-power:3:1,1",
    "grassmann-z2:2",
    "grassmann-z2:3",
    "group-algebra:z2xz2",
    "group-algebra:z6",
    "twisted:2",
    "twisted:3",
];

#[test]
fn direct_sums() {
    assert!(pauli_decomposition(2).decomposition.check_direct_sum());
    assert!(example_6_1().decomposition.check_direct_sum());

    let m2 = Arc::new(matrix_algebra(2));
    let i = m2.unit();
    let e12 = matrix_unit(2, 0, 1);
    let dependent = Decomposition::new(
        m2.clone(),
        vec![
            vec![i.clone()],
            vec![i.add(&e12)],
            vec![e12],
            vec![matrix_unit(2, 1, 0)],
        ],
    )
    .unwrap();
    assert!(!dependent.check_direct_sum());
    assert_eq!(detect_theta(&dependent).unwrap_err(), Error::NotDirectSum);

    let short = Decomposition::new(m2, vec![vec![i]]).unwrap();
    assert!(!short.check_direct_sum());
}

#[test]
fn pauli_theta_matches_formula() {
    for n in 2..=4 {
        let t = detect_theta(&pauli_decomposition(n).decomposition).unwrap();
        assert_eq!(t, skew_table(n, 1), "n = {n}");
    }
}

#[test]
fn commutative_single_component() {
    let g = Arc::new(grassmann_truncated(1));
    let basis = (0..2).map(|i| g.basis_element(i)).collect();
    let d = Decomposition::new(g, vec![basis]).unwrap();
    let t = detect_theta(&d).unwrap();
    assert_eq!(t.entries(), &[vec![int(1)]]);
    assert!(t.is_constrained(0, 0));
}

#[test]
fn nonabelian_group_lines_do_not_commute_up_to_scalar() {
    let d = from_spec("group-algebra:d3").unwrap().decomposition;
    assert!(matches!(
        detect_theta(&d),
        Err(Error::Theta(ThetaFailure::NotScalarMultiple { .. }))
    ));
}

#[test]
fn one_sided_zero_is_reported() {
    let m2 = Arc::new(matrix_algebra(2));
    let d = Decomposition::new(
        m2,
        vec![
            vec![matrix_unit(2, 0, 0), matrix_unit(2, 1, 1)],
            vec![matrix_unit(2, 0, 1), matrix_unit(2, 1, 0)],
        ],
    )
    .unwrap();
    match detect_theta(&d).unwrap_err() {
        Error::Theta(ThetaFailure::OneSidedZero { i, j, pair }) => {
            assert_ne!(i, j);
            let comps = d.components();
            let (a, b) = (&comps[i][pair.0], &comps[j][pair.1]);
            let ab = d.algebra().mul(a, b).unwrap();
            let ba = d.algebra().mul(b, a).unwrap();
            assert_ne!(ab.is_zero(), ba.is_zero());
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn qc_relations() {
    let r = qc_relations_check(&detect_theta(&pauli_decomposition(3).decomposition).unwrap());
    assert!(r.relations_hold());
    assert!(r.diagonal_is_one());

    let grassmann = detect_theta(&grassmann_z2_decomposition(3).decomposition).unwrap();
    assert_eq!(grassmann, table(&[&[1, 1], &[1, -1]]));
    let r = qc_relations_check(&grassmann);
    assert!(r.relations_hold());
    assert_eq!(r.diagonal_not_one, vec![1]);

    let half = Cyclotomic::from_rational(Rational::new(1, 2));
    let good = ThetaTable::from_entries(vec![vec![int(1), int(2)], vec![half, int(1)]]).unwrap();
    assert!(qc_relations_check(&good).relations_hold());
    let bad = table(&[&[1, 2], &[1, 1]]);
    assert_eq!(
        qc_relations_check(&bad).violations,
        vec![QcViolation::Reciprocal(0, 1)]
    );
    assert_eq!(
        qc_relations_check(&table(&[&[2]])).violations,
        vec![QcViolation::DiagonalSquare(0)]
    );
}

#[test]
fn witnesses() {
    let opts = WitnessOptions::default();
    let w = find_witness(&pauli_decomposition(2).decomposition, &opts);
    assert_eq!(w.status, WitnessStatus::Found);

    let c = example_6_2();
    let w = find_witness(&c.decomposition, &opts);
    assert_eq!(w.status, WitnessStatus::Found);

    // the basis vectors themselves are a witness
    let basis: Vec<Element> = c.decomposition.flat_basis();
    let product = c.algebra().product(basis.iter()).unwrap();
    let mut rows = vec![vec![int(0); 6]; 6];
    rows[4][4] = int(-1);
    rows[5][5] = int(1);
    let target = qcreg::algebra::matrix_element(&rows);
    assert_eq!(c.embedding.as_ref().unwrap().map(&product), target);

    let g = grassmann_z2_decomposition(3);
    let quick = find_witness(&g.decomposition, &opts);
    assert_eq!(quick.status, WitnessStatus::Inconclusive);
    let symbolic = WitnessOptions {
        phase2: true,
        ..WitnessOptions::default()
    };
    let w = find_witness(&g.decomposition, &symbolic);
    assert_eq!(w.status, WitnessStatus::Refuted);
    assert_eq!(w.phase, 2);
}

#[test]
fn witness_search_is_reproducible() {
    let d = from_spec("example-6-1").unwrap().decomposition;
    for seed in [0, 7, 1234] {
        let opts = WitnessOptions {
            seed,
            ..WitnessOptions::default()
        };
        assert_eq!(find_witness(&d, &opts), find_witness(&d, &opts));
    }
}

#[test]
fn minimality_and_determinants() {
    let pauli = detect_theta(&pauli_decomposition(2).decomposition).unwrap();
    assert!(is_minimal(&pauli).unwrap().minimal);
    let det = det_exact(&pauli.matrix()).unwrap();
    assert!(det == int(16) || det == int(-16));

    let t62 = detect_theta(&example_6_2().decomposition).unwrap();
    let r = is_minimal(&t62).unwrap();
    assert!(!r.minimal);
    assert_eq!(r.duplicates, vec![(0, 1), (3, 5)]);
    assert!(det_exact(&t62.matrix()).unwrap().is_zero());

    let t61 = detect_theta(&example_6_1().decomposition).unwrap();
    assert!(is_minimal(&t61).unwrap().minimal);

    assert!(det_exact(&Matrix::identity(3)).unwrap().is_one());

    let unconstrained = ThetaTable::new(
        vec![vec![int(1), int(1)], vec![int(1), int(1)]],
        vec![vec![true, true], vec![true, false]],
    )
    .unwrap();
    assert_eq!(
        is_minimal(&unconstrained).unwrap_err(),
        Error::UnconstrainedEntries { i: 1, j: 1 }
    );
}

#[test]
fn bahturin_regev() {
    for n in [2usize, 3] {
        let t = detect_theta(&pauli_decomposition(n).decomposition).unwrap();
        let r = bahturin_regev_check(&t).unwrap();
        let m = (n * n) as i64;
        assert!(r.pass);
        assert_eq!(r.det_squared, int(m.pow(m as u32)));
        assert!(r.minimal && r.equivalence_holds);
    }
    let t62 = detect_theta(&example_6_2().decomposition).unwrap();
    let r = bahturin_regev_check(&t62).unwrap();
    assert!(!r.pass && !r.minimal && r.equivalence_holds);
    assert!(r.det_squared.is_zero());
    assert_eq!(r.target, int(46656));

    let one = table(&[&[1]]);
    assert!(bahturin_regev_check(&one).unwrap().pass);
    assert!(msquared_check(&one).unwrap());
    assert!(msquared_check(&skew_table(2, 1)).unwrap());
    assert!(!msquared_check(&t62).unwrap());
}

#[test]
fn root_orders() {
    for n in 2..=4usize {
        let t = detect_theta(&pauli_decomposition(n).decomposition).unwrap();
        assert!(root_order_check(&t, n as u32).pass());
    }
    let t61 = detect_theta(&example_6_1().decomposition).unwrap();
    assert!(root_order_check(&t61, 4).pass());
    assert!(!root_order_check(&t61, 2).pass());

    let r = root_order_check(&table(&[&[1, 2], &[1, 1]]), 4);
    assert_eq!(r.violations, vec![(0, 1)]);
    assert_eq!(r.orders[0][1], None);
}

#[test]
fn necessary_condition() {
    for m in [4, 9, 16, 36, 100] {
        assert!(!necessary_condition_check(&[2, 3], m).unwrap().pass);
    }
    let r = necessary_condition_check(&[2, 4], 16).unwrap();
    assert!(r.pass && r.caution.is_none());
    let r = necessary_condition_check(&[4, 6], 36).unwrap();
    assert!(r.pass);
    assert!(r.caution.is_some());
    assert!(!necessary_condition_check(&[2, 4], 9).unwrap().pass);
    assert!(necessary_condition_check(&[], 4).is_err());
}

#[test]
fn theta_reevaluates_to_zero_on_all_basis_pairs() {
    for spec in SPECS {
        let d = from_spec(spec).unwrap().decomposition;
        let t = detect_theta(&d).unwrap();
        let alg = d.algebra();
        for (i, ci) in d.components().iter().enumerate() {
            for (j, cj) in d.components().iter().enumerate() {
                for a in ci {
                    for b in cj {
                        let ab = alg.mul(a, b).unwrap();
                        let ba = alg.mul(b, a).unwrap();
                        assert!(
                            ab.sub(&ba.scale(t.entry(i, j))).is_zero(),
                            "{spec}: ({i},{j})"
                        );
                    }
                }
            }
        }
    }
}

fn all_prefix_products_nonzero(alg: &Algebra, ws: &[Element], prefix: &Element, left: usize) {
    if left == 0 {
        return;
    }
    for w in ws {
        let p = alg.mul(prefix, w).unwrap();
        assert!(!p.is_zero());
        all_prefix_products_nonzero(alg, ws, &p, left - 1);
    }
}

#[test]
fn witness_tuples_never_vanish() {
    use rand::{Rng, SeedableRng};
    let opts = WitnessOptions::default();
    for spec in SPECS {
        let c = from_spec(spec).unwrap();
        let w = find_witness(&c.decomposition, &opts);
        if w.status != WitnessStatus::Found {
            continue;
        }
        let alg = c.algebra();
        let m = w.elements.len();
        if m <= 4 {
            all_prefix_products_nonzero(alg, &w.elements, &alg.unit(), 2 * m);
        } else {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(m as u64);
            for _ in 0..200 {
                let len = rng.gen_range(1..=2 * m);
                let tuple: Vec<&Element> =
                    (0..len).map(|_| &w.elements[rng.gen_range(0..m)]).collect();
                assert!(!alg.product(tuple).unwrap().is_zero(), "{spec}");
            }
        }

        let t = detect_theta(&c.decomposition).unwrap();
        if !c.block_sizes.is_empty() {
            let r = qc_relations_check(&t);
            assert!(r.relations_hold() && r.diagonal_is_one(), "{spec}");
        }
    }
}

#[test]
fn construction_tables_satisfy_the_equivalence() {
    for spec in SPECS {
        let t = detect_theta(&from_spec(spec).unwrap().decomposition).unwrap();
        let Ok(minimal) = is_minimal(&t) else {
            continue;
        };
        let det = det_exact(&t.matrix()).unwrap();
        assert_eq!(minimal.minimal, !det.is_zero(), "{spec}");
        if msquared_check(&t).unwrap() {
            assert!(bahturin_regev_check(&t).unwrap().pass, "{spec}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn skew_tables(n in 2usize..=4, c in 0i64..4) {
        let t = skew_table(n, c);
        let minimal = is_minimal(&t).unwrap().minimal;
        let det = det_exact(&t.matrix()).unwrap();
        prop_assert_eq!(minimal, !det.is_zero());
        if msquared_check(&t).unwrap() {
            prop_assert!(bahturin_regev_check(&t).unwrap().pass);
        }
        prop_assert!(qc_relations_check(&t).relations_hold());
        prop_assert!(root_order_check(&t, n as u32).pass());
    }

    #[test]
    fn random_sign_tables(signs in prop::collection::vec(prop::bool::ANY, 16)) {
        let entries = signs
            .chunks(4)
            .map(|r| r.iter().map(|&s| int(if s { -1 } else { 1 })).collect())
            .collect();
        let t = ThetaTable::from_entries(entries).unwrap();
        if msquared_check(&t).unwrap() {
            prop_assert!(bahturin_regev_check(&t).unwrap().pass);
        }
    }
}
