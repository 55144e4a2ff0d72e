use std::collections::BTreeSet;

use crate::algebra::center;
use crate::decomp::{is_minimal, Decomposition, RegularityWitness, ThetaTable, WitnessStatus};
use crate::error::{Error, Result};

use super::CayleyTable;

/// Partial index product of a set grading: `f(i,j) = Some(s)` when
/// `R_i R_j ⊆ R_s` is nonzero, `None` when `R_i R_j = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetGrading {
    pub table: Vec<Vec<Option<usize>>>,
}

impl SetGrading {
    pub fn m(&self) -> usize {
        self.table.len()
    }

    pub fn is_total(&self) -> bool {
        self.table.iter().flatten().all(Option::is_some)
    }

    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.table[i][j]
    }
}

/// Each product `R_i R_j` is zero or lies in a single component. Reports the
/// first failing pair in row-major order with every component it meets.
pub fn set_grading_detect(d: &Decomposition) -> Result<SetGrading> {
    let solver = d.solver()?;
    let alg = d.algebra();
    let comps = d.components();
    let m = comps.len();
    let mut table = vec![vec![None; m]; m];
    for i in 0..m {
        for j in 0..m {
            let mut hit = BTreeSet::new();
            for a in &comps[i] {
                for b in &comps[j] {
                    hit.extend(solver.support(&alg.mul_unchecked(a, b)));
                }
            }
            match hit.len() {
                0 => {}
                1 => table[i][j] = hit.first().copied(),
                _ => {
                    return Err(Error::NotASetGrading {
                        i,
                        j,
                        components: hit.into_iter().collect(),
                    })
                }
            }
        }
    }
    Ok(SetGrading { table })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `f(i,k) = f(j,k)` with `i ≠ j`.
    Right,
    /// `f(k,i) = f(k,j)` with `i ≠ j`.
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cancellation {
    pub side: Side,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizabilityVerdict {
    /// The table is total and is the multiplication table of this group.
    Realizable(CayleyTable),
    /// A partial table passed cancellation and associativity. This is not a
    /// proof of realizability.
    NecessaryConditionsHold,
    Violated(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizabilityReport {
    pub cancellation: Vec<Cancellation>,
    /// Triples `(i,j,k)` with `f(f(i,j),k) ≠ f(i,f(j,k))`, all entries defined.
    pub associativity: Vec<(usize, usize, usize)>,
    pub verdict: RealizabilityVerdict,
}

impl RealizabilityReport {
    pub fn pass(&self) -> bool {
        !matches!(self.verdict, RealizabilityVerdict::Violated(_))
    }
}

/// Necessary conditions for a set grading to come from a group grading, and
/// the full group axioms when the table is total.
pub fn realizability_check(f: &SetGrading) -> RealizabilityReport {
    let m = f.m();
    let mut cancellation = Vec::new();
    for k in 0..m {
        for i in 0..m {
            for j in i + 1..m {
                if let (Some(a), Some(b)) = (f.get(i, k), f.get(j, k)) {
                    if a == b {
                        cancellation.push(Cancellation {
                            side: Side::Right,
                            i,
                            j,
                            k,
                            value: a,
                        });
                    }
                }
                if let (Some(a), Some(b)) = (f.get(k, i), f.get(k, j)) {
                    if a == b {
                        cancellation.push(Cancellation {
                            side: Side::Left,
                            i,
                            j,
                            k,
                            value: a,
                        });
                    }
                }
            }
        }
    }
    cancellation.sort_by_key(|c| (c.i, c.j, c.k, c.side == Side::Left));
    let mut associativity = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let Some(ij) = f.get(i, j) else { continue };
            for k in 0..m {
                let (Some(left), Some(jk)) = (f.get(ij, k), f.get(j, k)) else {
                    continue;
                };
                if let Some(right) = f.get(i, jk) {
                    if left != right {
                        associativity.push((i, j, k));
                    }
                }
            }
        }
    }
    let verdict = if let Some(c) = cancellation.first() {
        let (a, b) = match c.side {
            Side::Right => (format!("f({},{})", c.i, c.k), format!("f({},{})", c.j, c.k)),
            Side::Left => (format!("f({},{})", c.k, c.i), format!("f({},{})", c.k, c.j)),
        };
        RealizabilityVerdict::Violated(format!(
            "cancellation fails: {a} = {b} = {} with {} != {}",
            c.value, c.i, c.j
        ))
    } else if let Some(&(i, j, k)) = associativity.first() {
        RealizabilityVerdict::Violated(format!("associativity fails at ({i},{j},{k})"))
    } else if f.is_total() {
        let table: Vec<Vec<usize>> = f
            .table
            .iter()
            .map(|r| r.iter().map(|x| x.expect("total")).collect())
            .collect();
        match (0..m).find(|&e| (0..m).all(|g| table[e][g] == g && table[g][e] == g)) {
            None => RealizabilityVerdict::Violated("no identity component".into()),
            Some(e) => match CayleyTable::new(table, e) {
                Ok(g) => RealizabilityVerdict::Realizable(g),
                Err(err) => RealizabilityVerdict::Violated(err.to_string()),
            },
        }
    } else {
        RealizabilityVerdict::NecessaryConditionsHold
    };
    RealizabilityReport {
        cancellation,
        associativity,
        verdict,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction {
    pub group: CayleyTable,
    /// Dimension of the center of the algebra.
    pub center_dim: usize,
    /// First triple with `θ(i,j) θ(i,k) ≠ θ(i, j⋆k)`.
    pub bicharacter_violation: Option<(usize, usize, usize)>,
}

/// Recovers the grading group from a decomposition into one-dimensional
/// components: `j ⋆ k` is the component containing `w_j w_k`. Unless
/// `force` is set the table must be minimal.
pub fn reconstruct_group(
    d: &Decomposition,
    t: &ThetaTable,
    w: &RegularityWitness,
    force: bool,
) -> Result<Reconstruction> {
    let m = d.len();
    if d.component_dims().iter().any(|&k| k != 1) || m != d.algebra().dim() {
        return Err(Error::Precondition(
            "every component must be one-dimensional".into(),
        ));
    }
    if w.status != WitnessStatus::Found || w.elements.len() != m {
        return Err(Error::Precondition("no regularity witness".into()));
    }
    if t.m() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: t.m(),
        });
    }
    if !force {
        let min = is_minimal(t)?;
        if let Some(&(i, j)) = min.duplicates.first() {
            return Err(Error::Precondition(format!(
                "table is not minimal: rows {i} and {j} coincide"
            )));
        }
    }
    let solver = d.solver()?;
    let alg = d.algebra();
    let mut table = vec![vec![0usize; m]; m];
    for j in 0..m {
        for k in 0..m {
            let support = solver.support(&alg.mul_unchecked(&w.elements[j], &w.elements[k]));
            if support.len() != 1 {
                return Err(Error::MultiComponentProduct { j, k, support });
            }
            table[j][k] = support[0];
        }
    }
    for k in 0..m {
        for i in 0..m {
            for j in i + 1..m {
                if table[i][k] == table[j][k] {
                    return Err(Error::NotAGroup(format!(
                        "w_{i} w_{k} and w_{j} w_{k} both lie in component {}",
                        table[i][k]
                    )));
                }
            }
        }
    }
    let identity = match solver.support(&alg.unit()).as_slice() {
        [e] => *e,
        s => {
            return Err(Error::NotAGroup(format!(
                "the unit is spread over components {s:?}"
            )))
        }
    };
    let group = CayleyTable::new(table, identity).map_err(|e| Error::NotAGroup(e.to_string()))?;
    if !group.is_abelian() {
        return Err(Error::NotAGroup("the product is not commutative".into()));
    }
    let mut bicharacter_violation = None;
    'scan: for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                if t.entry(i, j) * t.entry(i, k) != *t.entry(i, group.mul(j, k)) {
                    bicharacter_violation = Some((i, j, k));
                    break 'scan;
                }
            }
        }
    }
    Ok(Reconstruction {
        center_dim: center(alg).len(),
        group,
        bicharacter_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grading(rows: &[&[Option<usize>]]) -> SetGrading {
        SetGrading {
            table: rows.iter().map(|r| r.to_vec()).collect(),
        }
    }

    #[test]
    fn z2_table_is_realizable() {
        let f = grading(&[&[Some(0), Some(1)], &[Some(1), Some(0)]]);
        let r = realizability_check(&f);
        assert_eq!(
            r.verdict,
            RealizabilityVerdict::Realizable(CayleyTable::cyclic(2))
        );
    }

    #[test]
    fn partial_table_only_meets_necessary_conditions() {
        let f = grading(&[&[Some(0), Some(1)], &[Some(1), None]]);
        let r = realizability_check(&f);
        assert_eq!(r.verdict, RealizabilityVerdict::NecessaryConditionsHold);
        assert!(r.pass());
    }

    #[test]
    fn cancellation_failure_is_named() {
        let f = grading(&[&[Some(0), Some(1)], &[Some(1), Some(1)]]);
        let r = realizability_check(&f);
        assert!(!r.pass());
        assert_eq!(
            r.cancellation[0],
            Cancellation {
                side: Side::Right,
                i: 0,
                j: 1,
                k: 1,
                value: 1
            }
        );
    }

    #[test]
    fn associativity_failure() {
        // Latin square with identity 0 that is not associative
        let rows: Vec<Vec<Option<usize>>> = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        .iter()
        .map(|r| r.iter().map(|&x| Some(x)).collect())
        .collect();
        let r = realizability_check(&SetGrading { table: rows });
        assert!(r.cancellation.is_empty());
        assert!(!r.associativity.is_empty());
        assert!(!r.pass());
    }
}
