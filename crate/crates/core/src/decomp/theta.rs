use crate::error::{Error, Result, ThetaFailure};
use crate::exactnum::{Cyclotomic, Matrix};

use super::Decomposition;

/// The decomposition matrix `θ(i,j)` with a flag per entry recording whether
/// any product pair actually constrained it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaTable {
    entries: Vec<Vec<Cyclotomic>>,
    constrained: Vec<Vec<bool>>,
}

impl ThetaTable {
    /// A fully constrained table.
    pub fn from_entries(entries: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let m = entries.len();
        Self::new(entries, vec![vec![true; m]; m])
    }

    pub fn new(entries: Vec<Vec<Cyclotomic>>, constrained: Vec<Vec<bool>>) -> Result<Self> {
        let m = entries.len();
        if m == 0 {
            return Err(Error::Precondition("empty theta table".into()));
        }
        if let Some(row) = entries.iter().find(|r| r.len() != m) {
            return Err(Error::NotSquare {
                rows: m,
                cols: row.len(),
            });
        }
        if constrained.len() != m || constrained.iter().any(|r| r.len() != m) {
            return Err(Error::Format(
                "constraint flags do not match the table shape".into(),
            ));
        }
        if entries.iter().flatten().any(Cyclotomic::is_zero) {
            return Err(Error::Precondition("theta entries must be nonzero".into()));
        }
        Ok(ThetaTable {
            entries,
            constrained,
        })
    }

    /// `θ(i,j) = ζ_n^{f(i,j)}` for integer exponents.
    pub fn from_root_exponents(n: u32, exps: &[Vec<i64>]) -> Result<Self> {
        let entries = exps
            .iter()
            .map(|row| row.iter().map(|&e| Cyclotomic::root(n, e)).collect())
            .collect();
        Self::from_entries(entries)
    }

    pub fn m(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Cyclotomic>] {
        &self.entries
    }

    pub fn is_constrained(&self, i: usize, j: usize) -> bool {
        self.constrained[i][j]
    }

    pub fn constrained(&self) -> &[Vec<bool>] {
        &self.constrained
    }

    /// First unconstrained entry in row-major order, as an error.
    pub fn require_constrained(&self) -> Result<()> {
        for (i, row) in self.constrained.iter().enumerate() {
            if let Some(j) = row.iter().position(|&c| !c) {
                return Err(Error::UnconstrainedEntries { i, j });
            }
        }
        Ok(())
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_rows(self.entries.clone()).expect("square by construction")
    }

    /// Table of `A ⊗ B` on the product index `a * m_B + b`.
    pub fn kronecker(&self, other: &ThetaTable) -> ThetaTable {
        let (ma, mb) = (self.m(), other.m());
        let mut entries = vec![Vec::with_capacity(ma * mb); ma * mb];
        let mut constrained = vec![Vec::with_capacity(ma * mb); ma * mb];
        for a in 0..ma {
            for b in 0..mb {
                for c in 0..ma {
                    for d in 0..mb {
                        entries[a * mb + b].push(self.entry(a, c) * other.entry(b, d));
                        constrained[a * mb + b]
                            .push(self.is_constrained(a, c) && other.is_constrained(b, d));
                    }
                }
            }
        }
        ThetaTable {
            entries,
            constrained,
        }
    }

    /// The table with rows and columns reindexed: new index `t` is old `perm[t]`.
    pub fn permuted(&self, perm: &[usize]) -> ThetaTable {
        let pick = |t: &[Vec<Cyclotomic>]| -> Vec<Vec<Cyclotomic>> {
            perm.iter()
                .map(|&i| perm.iter().map(|&j| t[i][j].clone()).collect())
                .collect()
        };
        let constrained = perm
            .iter()
            .map(|&i| perm.iter().map(|&j| self.constrained[i][j]).collect())
            .collect();
        ThetaTable {
            entries: pick(&self.entries),
            constrained,
        }
    }
}

/// Determines `θ` with `ab = θ(i,j) ba` for all `a ∈ R_i`, `b ∈ R_j`.
/// By bilinearity it suffices to test component basis pairs.
pub fn detect_theta(d: &Decomposition) -> Result<ThetaTable> {
    if !d.check_direct_sum() {
        return Err(Error::NotDirectSum);
    }
    let alg = d.algebra();
    let comps = d.components();
    let m = comps.len();
    let mut entries = vec![vec![Cyclotomic::one(); m]; m];
    let mut constrained = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            let mut first: Option<((usize, usize), Cyclotomic)> = None;
            for (p, a) in comps[i].iter().enumerate() {
                for (q, b) in comps[j].iter().enumerate() {
                    let ab = alg.mul_unchecked(a, b);
                    let ba = alg.mul_unchecked(b, a);
                    let pair = (p, q);
                    match (ab.is_zero(), ba.is_zero()) {
                        (true, true) => continue,
                        (false, false) => {}
                        _ => return Err(ThetaFailure::OneSidedZero { i, j, pair }.into()),
                    }
                    let s =
                        ab.ratio_to(&ba)
                            .ok_or(ThetaFailure::NotScalarMultiple { i, j, pair })?;
                    match &first {
                        None => first = Some((pair, s)),
                        Some((f, t)) if *t != s => {
                            return Err(ThetaFailure::InconsistentScalar {
                                i,
                                j,
                                first: *f,
                                second: pair,
                            }
                            .into())
                        }
                        Some(_) => {}
                    }
                }
            }
            if let Some((_, s)) = first {
                entries[i][j] = s;
                constrained[i][j] = true;
            }
        }
    }
    ThetaTable::new(entries, constrained)
}
