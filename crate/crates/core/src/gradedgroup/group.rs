//! Finite groups given by Cayley tables, and scalar-valued tables on them.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;

/// Multiplication table of a finite group; `table[g][h]` is the index of `gh`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl CayleyTable {
    /// Validates the Latin-square, identity and associativity conditions.
    pub fn new(table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let m = table.len();
        if m == 0 {
            return Err(Error::InvalidGroupTable("empty table".into()));
        }
        if identity >= m {
            return Err(Error::InvalidGroupTable(format!(
                "identity {identity} out of range"
            )));
        }
        for (g, row) in table.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidGroupTable(format!(
                    "row {g} has wrong length"
                )));
            }
            if row.iter().any(|&x| x >= m) {
                return Err(Error::InvalidGroupTable(format!(
                    "row {g} has out-of-range entry"
                )));
            }
        }
        for g in 0..m {
            let row: BTreeSet<_> = table[g].iter().collect();
            let col: BTreeSet<_> = (0..m).map(|h| &table[h][g]).collect();
            if row.len() != m || col.len() != m {
                return Err(Error::InvalidGroupTable(format!(
                    "not a Latin square at index {g}"
                )));
            }
            if table[identity][g] != g || table[g][identity] != g {
                return Err(Error::InvalidGroupTable(format!(
                    "{identity} is not a two-sided identity for {g}"
                )));
            }
        }
        for g in 0..m {
            for h in 0..m {
                for k in 0..m {
                    if table[table[g][h]][k] != table[g][table[h][k]] {
                        return Err(Error::InvalidGroupTable(format!(
                            "associativity fails at ({g},{h},{k})"
                        )));
                    }
                }
            }
        }
        Ok(CayleyTable { table, identity })
    }

    /// Cyclic group `Z_n` with elements `0..n` under addition.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        CayleyTable { table, identity: 0 }
    }

    /// `G × H` with element `(g, h)` at index `g * |H| + h`.
    pub fn direct_product(a: &CayleyTable, b: &CayleyTable) -> Self {
        let (ma, mb) = (a.order(), b.order());
        let mut table = vec![vec![0; ma * mb]; ma * mb];
        for g1 in 0..ma {
            for h1 in 0..mb {
                for g2 in 0..ma {
                    for h2 in 0..mb {
                        table[g1 * mb + h1][g2 * mb + h2] = a.mul(g1, g2) * mb + b.mul(h1, h2);
                    }
                }
            }
        }
        CayleyTable {
            table,
            identity: a.identity * mb + b.identity,
        }
    }

    /// `Z_{n_1} × ⋯ × Z_{n_r}` in mixed-radix order (first factor major).
    pub fn abelian(factors: &[usize]) -> Self {
        factors.iter().fold(CayleyTable::cyclic(1), |acc, &n| {
            CayleyTable::direct_product(&acc, &CayleyTable::cyclic(n))
        })
    }

    /// Dihedral group of order `2n`: index `s * n + r` stands for `x^s y^r`
    /// with `y^n = x^2 = 1` and `x y = y^{-1} x`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        let m = 2 * n;
        let mut table = vec![vec![0; m]; m];
        for s1 in 0..2 {
            for r1 in 0..n {
                for s2 in 0..2 {
                    for r2 in 0..n {
                        // x^s1 y^r1 x^s2 y^r2 = x^{s1+s2} y^{(-1)^{s2} r1 + r2}
                        let r = if s2 == 0 { r1 + r2 } else { n - r1 + r2 } % n;
                        table[s1 * n + r1][s2 * n + r2] = ((s1 + s2) % 2) * n + r;
                    }
                }
            }
        }
        CayleyTable { table, identity: 0 }
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`, index `2 * u + s` for unit
    /// `u ∈ {1, i, j, k}` and sign bit `s`.
    pub fn quaternion() -> Self {
        // unit products: (unit, sign flip)
        let unit_mul = |a: usize, b: usize| -> (usize, usize) {
            match (a, b) {
                (0, x) | (x, 0) => (x, 0),
                (x, y) if x == y => (0, 1),
                (1, 2) => (3, 0),
                (2, 3) => (1, 0),
                (3, 1) => (2, 0),
                (2, 1) => (3, 1),
                (3, 2) => (1, 1),
                (1, 3) => (2, 1),
                _ => unreachable!(),
            }
        };
        let mut table = vec![vec![0; 8]; 8];
        for a in 0..8 {
            for b in 0..8 {
                let (u, s) = unit_mul(a / 2, b / 2);
                table[a][b] = 2 * u + (s + a % 2 + b % 2) % 2;
            }
        }
        CayleyTable { table, identity: 0 }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        (0..self.order())
            .find(|&h| self.table[g][h] == self.identity)
            .expect("Latin square has an inverse in every row")
    }

    pub fn is_abelian(&self) -> bool {
        let m = self.order();
        (0..m).all(|g| (g + 1..m).all(|h| self.table[g][h] == self.table[h][g]))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut t = 1;
        while x != self.identity {
            x = self.mul(x, g);
            t += 1;
        }
        t
    }

    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        (0..self.order())
            .filter(|&h| self.mul(g, h) == self.mul(h, g))
            .collect()
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let m = self.order();
        let mut seen = vec![false; m];
        let mut classes = Vec::new();
        for g in 0..m {
            if seen[g] {
                continue;
            }
            let class: BTreeSet<usize> = (0..m)
                .map(|x| self.mul(self.mul(x, g), self.inverse(x)))
                .collect();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }
}

fn check_square(group: &CayleyTable, values: &[Vec<Cyclotomic>]) -> Result<()> {
    let m = group.order();
    if values.len() != m || values.iter().any(|r| r.len() != m) {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: values.len(),
        });
    }
    if values.iter().flatten().any(Cyclotomic::is_zero) {
        return Err(Error::InvalidGroupTable(
            "scalar table must take nonzero values".into(),
        ));
    }
    Ok(())
}

/// A function `α: G × G → K*`, not yet known to satisfy the cocycle identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    group: CayleyTable,
    values: Vec<Vec<Cyclotomic>>,
}

impl Cocycle {
    pub fn new(group: CayleyTable, values: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        check_square(&group, &values)?;
        Ok(Cocycle { group, values })
    }

    pub fn trivial(group: CayleyTable) -> Self {
        let m = group.order();
        Cocycle {
            group,
            values: vec![vec![Cyclotomic::one(); m]; m],
        }
    }

    /// On `Z_n × Z_n`: `α((a₁,a₂),(b₁,b₂)) = ζ_n^{a₂ b₁}`. Bilinear, hence a
    /// cocycle; for `n = 2` this is `(-1)^{a₂ b₁}`.
    pub fn clock_shift(n: usize) -> Self {
        let group = CayleyTable::abelian(&[n, n]);
        let values = (0..n * n)
            .map(|g| {
                (0..n * n)
                    .map(|h| Cyclotomic::root(n as u32, ((g % n) * (h / n)) as i64))
                    .collect()
            })
            .collect();
        Cocycle { group, values }
    }

    pub fn group(&self) -> &CayleyTable {
        &self.group
    }

    pub fn values(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    #[inline]
    pub fn value(&self, g: usize, h: usize) -> &Cyclotomic {
        &self.values[g][h]
    }

    /// Full triple scan of `α(g,h)α(gh,k) = α(g,hk)α(h,k)`; reports the
    /// lexicographically smallest violating triple.
    pub fn validate(&self) -> Result<()> {
        let m = self.group.order();
        for g in 0..m {
            for h in 0..m {
                let gh = self.group.mul(g, h);
                for k in 0..m {
                    let hk = self.group.mul(h, k);
                    let lhs = self.value(g, h) * self.value(gh, k);
                    let rhs = self.value(g, hk) * self.value(h, k);
                    if lhs != rhs {
                        return Err(Error::CocycleViolation { g, h, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// `β(g,h) = α(g,h) α(h,g)^{-1}` on an abelian group.
    pub fn induced_bicharacter(&self) -> Result<Bicharacter> {
        if !self.group.is_abelian() {
            return Err(Error::NotAbelian);
        }
        self.validate()?;
        let m = self.group.order();
        let values = (0..m)
            .map(|g| {
                (0..m)
                    .map(|h| self.value(g, h).checked_div(self.value(h, g)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Bicharacter::new(self.group.clone(), values)
    }
}

/// Result of the ray-class computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayClasses {
    /// Conjugacy classes consisting of α-regular elements.
    pub classes: Vec<Vec<usize>>,
}

impl RayClasses {
    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

/// `g` is α-regular iff `α(g,h) = α(h,g)` for every `h` centralizing `g`.
pub fn is_alpha_regular(alpha: &Cocycle, g: usize) -> bool {
    alpha
        .group
        .centralizer(g)
        .into_iter()
        .all(|h| alpha.value(g, h) == alpha.value(h, g))
}

/// Conjugacy classes of α-regular elements; their number is the dimension
/// of the center of the twisted group algebra.
pub fn ray_classes(alpha: &Cocycle) -> Result<RayClasses> {
    alpha.validate()?;
    let classes = alpha
        .group
        .conjugacy_classes()
        .into_iter()
        .filter(|c| is_alpha_regular(alpha, c[0]))
        .collect();
    Ok(RayClasses { classes })
}

/// A candidate bicharacter on an abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    group: CayleyTable,
    values: Vec<Vec<Cyclotomic>>,
}

impl Bicharacter {
    pub fn new(group: CayleyTable, values: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        if !group.is_abelian() {
            return Err(Error::NotAbelian);
        }
        check_square(&group, &values)?;
        Ok(Bicharacter { group, values })
    }

    pub fn group(&self) -> &CayleyTable {
        &self.group
    }

    pub fn values(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    #[inline]
    pub fn value(&self, g: usize, h: usize) -> &Cyclotomic {
        &self.values[g][h]
    }

    /// Checks `β(gh,k) = β(g,k)β(h,k)` and `β(g,hk) = β(g,h)β(g,k)`.
    pub fn validate(&self) -> Result<()> {
        let m = self.group.order();
        for g in 0..m {
            for h in 0..m {
                for k in 0..m {
                    let left = self.value(self.group.mul(g, h), k)
                        == &(self.value(g, k) * self.value(h, k));
                    let right = self.value(g, self.group.mul(h, k))
                        == &(self.value(g, h) * self.value(g, k));
                    if !(left && right) {
                        return Err(Error::BicharacterViolation { g, h, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// `β(g,h) β(h,g) = 1` for all pairs.
    pub fn is_skew_symmetric(&self) -> bool {
        let m = self.group.order();
        (0..m).all(|g| (0..m).all(|h| (self.value(g, h) * self.value(h, g)).is_one()))
    }

    /// Only the identity has an all-ones row.
    pub fn is_nondegenerate(&self) -> bool {
        let m = self.group.order();
        (0..m)
            .filter(|&g| (0..m).all(|h| self.value(g, h).is_one()))
            .eq(std::iter::once(self.group.identity()))
    }
}
