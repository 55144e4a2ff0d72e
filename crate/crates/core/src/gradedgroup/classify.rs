use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::CayleyTable;

/// Isomorphism type of a finite abelian group: `Z_{d_1} × ⋯ × Z_{d_r}` with
/// `d_1 | d_2 | ⋯ | d_r` and every `d_i > 1`. The trivial group has no factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianType {
    pub invariant_factors: Vec<u64>,
}

impl AbelianType {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Reads the invariant factors off element orders: in the `p`-part
/// `⊕ Z_{p^{e_i}}`, the number of elements killed by `p^k` is
/// `p^{Σ min(k, e_i)}`, so consecutive ratios count the `e_i ≥ k`.
pub fn classify_abelian(t: &CayleyTable) -> Result<AbelianType> {
    if !t.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let m = t.order() as u64;
    let orders: Vec<u64> = (0..t.order()).map(|g| t.element_order(g) as u64).collect();
    // exponents of each p-part, largest first
    let mut parts: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for (p, a) in prime_factors(m) {
        let mut log_counts = vec![0u32];
        for k in 1..=a {
            let pk = p.pow(k);
            let count = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            log_counts.push(exact_log(count, p));
        }
        // rank_k = #{i : e_i ≥ k}
        let ranks: Vec<u32> = (1..=a as usize)
            .map(|k| log_counts[k] - log_counts[k - 1])
            .collect();
        let r1 = ranks.first().copied().unwrap_or(0);
        let exps: Vec<u32> = (0..r1)
            .map(|i| ranks.iter().filter(|&&r| r > i).count() as u32)
            .collect();
        parts.insert(p, exps);
    }
    let r = parts.values().map(Vec::len).max().unwrap_or(0);
    // the i-th largest factor multiplies the i-th largest prime powers
    let mut factors: Vec<u64> = (0..r)
        .map(|i| {
            parts
                .iter()
                .map(|(&p, exps)| exps.get(i).map_or(1, |&e| p.pow(e)))
                .product()
        })
        .collect();
    factors.reverse();
    Ok(AbelianType {
        invariant_factors: factors,
    })
}

fn exact_log(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        debug_assert_eq!(n % p, 0, "count of p-torsion is a power of p");
        n /= p;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(t: &CayleyTable) -> Vec<u64> {
        classify_abelian(t).unwrap().invariant_factors
    }

    #[test]
    fn small_groups() {
        assert_eq!(factors(&CayleyTable::abelian(&[2, 2])), vec![2, 2]);
        assert_eq!(factors(&CayleyTable::abelian(&[3, 3])), vec![3, 3]);
        assert_eq!(factors(&CayleyTable::cyclic(6)), vec![6]);
        assert_eq!(factors(&CayleyTable::abelian(&[2, 3])), vec![6]);
        assert_eq!(factors(&CayleyTable::abelian(&[4, 2, 3])), vec![2, 12]);
        assert_eq!(factors(&CayleyTable::abelian(&[2, 4, 2])), vec![2, 2, 4]);
        assert!(factors(&CayleyTable::cyclic(1)).is_empty());
    }

    #[test]
    fn nonabelian_is_rejected() {
        assert_eq!(
            classify_abelian(&CayleyTable::dihedral(3)).unwrap_err(),
            Error::NotAbelian
        );
    }
}
