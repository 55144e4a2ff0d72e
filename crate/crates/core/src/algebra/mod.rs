//! Finite-dimensional unital associative algebras given by structure
//! constants, their elements, and the standard constructors.

mod span;

pub use span::{SpanBuilder, SpanSolver};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Matrix};
use crate::gradedgroup::{CayleyTable, Cocycle};

/// A vector of coordinates in the basis of some algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    coords: Vec<Cyclotomic>,
}

impl Element {
    pub fn new(coords: Vec<Cyclotomic>) -> Self {
        Element { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Element {
            coords: vec![Cyclotomic::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coords[i] = Cyclotomic::one();
        e
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Element {
            coords: coords.iter().map(|&c| Cyclotomic::from_int(c)).collect(),
        }
    }

    pub fn coords(&self) -> &[Cyclotomic] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Cyclotomic> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Cyclotomic::is_zero)
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| !self.coords[i].is_zero())
            .collect()
    }

    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.dim(), other.dim());
        Element {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        assert_eq!(self.dim(), other.dim());
        Element {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Cyclotomic) -> Element {
        Element {
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// Image under the inclusion into a direct sum at `offset`.
    pub fn embed(&self, offset: usize, total: usize) -> Element {
        let mut e = Element::zero(total);
        e.coords[offset..offset + self.dim()].clone_from_slice(&self.coords);
        e
    }

    /// Coordinates of `self ⊗ other` in Kronecker (self-major) order.
    pub fn tensor(&self, other: &Element) -> Element {
        let mut coords = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.coords {
            for b in &other.coords {
                coords.push(a * b);
            }
        }
        Element { coords }
    }

    /// If `self = s · other` for a scalar `s`, returns `s` (requires `other ≠ 0`).
    pub fn ratio_to(&self, other: &Element) -> Option<Cyclotomic> {
        let k = other.coords.iter().position(|c| !c.is_zero())?;
        let s = self.coords[k].checked_div(&other.coords[k]).ok()?;
        (other.scale(&s) == *self).then_some(s)
    }
}

/// Structure-constant algebra: `b_i b_j = Σ_k c_{ij}^k b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    conductor: u32,
    /// Nonzero terms of `b_i b_j`, stored at `i * dim + j`, sorted by `k`.
    table: Vec<Vec<(usize, Cyclotomic)>>,
    unit: Vec<Cyclotomic>,
    components: Option<Vec<(usize, usize)>>,
}

impl Algebra {
    /// Assembles an algebra from `(i, j, k, c)` entries; repeated `(i, j, k)`
    /// entries are summed. Only shape is checked here; see [`Algebra::validate`].
    pub fn new(
        dim: usize,
        conductor: u32,
        entries: impl IntoIterator<Item = (usize, usize, usize, Cyclotomic)>,
        unit: Vec<Cyclotomic>,
        components: Option<Vec<(usize, usize)>>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        if conductor == 0 {
            return Err(Error::InvalidAlgebra("conductor must be positive".into()));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: unit.len(),
            });
        }
        let mut table: Vec<Vec<(usize, Cyclotomic)>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "structure entry ({i},{j},{k}) out of range"
                )));
            }
            let slot = &mut table[i * dim + j];
            match slot.iter_mut().find(|(kk, _)| *kk == k) {
                Some((_, v)) => *v = &*v + &c,
                None => slot.push((k, c)),
            }
        }
        for slot in &mut table {
            slot.retain(|(_, c)| !c.is_zero());
            slot.sort_by_key(|(k, _)| *k);
        }
        let alg = Algebra {
            dim,
            conductor,
            table,
            unit,
            components,
        };
        if let Some(comps) = &alg.components {
            let mut next = 0;
            for &(offset, size) in comps {
                let root = (size as f64).sqrt().round() as usize;
                if offset != next || size == 0 || root * root != size {
                    return Err(Error::InvalidAlgebra(format!(
                        "component ({offset},{size}) does not continue a partition into square blocks"
                    )));
                }
                next += size;
            }
            if next != dim {
                return Err(Error::InvalidAlgebra(
                    "components do not cover the basis".into(),
                ));
            }
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Raises the recorded conductor to include `ζ_n`.
    pub fn with_conductor(mut self, n: u32) -> Self {
        self.conductor = self.conductor.lcm(&n);
        self
    }

    pub fn unit(&self) -> Element {
        Element::new(self.unit.clone())
    }

    pub fn components(&self) -> Option<&[(usize, usize)]> {
        self.components.as_deref()
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim, i)
    }

    /// Nonzero terms of `b_i b_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Cyclotomic)] {
        &self.table[i * self.dim + j]
    }

    /// All nonzero structure constants as `(i, j, k, c)`, lexicographically.
    pub fn structure_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Cyclotomic)> {
        self.table.iter().enumerate().flat_map(move |(ij, terms)| {
            let (i, j) = (ij / self.dim, ij % self.dim);
            terms.iter().map(move |(k, c)| (i, j, *k, c))
        })
    }

    fn check_dim(&self, x: &Element) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &Element, y: &Element) -> Element {
        let mut out = vec![Cyclotomic::zero(); self.dim];
        let ys: Vec<usize> = y.support();
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &j in &ys {
                let terms = &self.table[i * self.dim + j];
                if terms.is_empty() {
                    continue;
                }
                let s = xi * &y.coords[j];
                for (k, c) in terms {
                    out[*k] = &out[*k] + &(&s * c);
                }
            }
        }
        Element::new(out)
    }

    /// Product of a sequence, left to right; the unit for an empty sequence.
    pub fn product<'a>(&self, xs: impl IntoIterator<Item = &'a Element>) -> Result<Element> {
        let mut acc: Option<Element> = None;
        for x in xs {
            self.check_dim(x)?;
            acc = Some(match acc {
                None => x.clone(),
                Some(a) => self.mul_unchecked(&a, x),
            });
        }
        Ok(acc.unwrap_or_else(|| self.unit()))
    }

    pub fn pow(&self, x: &Element, mut exp: u64) -> Result<Element> {
        self.check_dim(x)?;
        let mut base = x.clone();
        let mut acc = self.unit();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul_unchecked(&base, &base);
            }
        }
        Ok(acc)
    }

    pub fn commutator(&self, x: &Element, y: &Element) -> Result<Element> {
        Ok(self.mul(x, y)?.sub(&self.mul(y, x)?))
    }

    /// Full scan of `(b_i b_j) b_k = b_i (b_j b_k)`.
    pub fn check_associativity(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let bij = self.terms_as_element(i, j);
                for k in 0..d {
                    let left = self.mul_unchecked(&bij, &self.basis_element(k));
                    let right =
                        self.mul_unchecked(&self.basis_element(i), &self.terms_as_element(j, k));
                    if left != right {
                        return Err(Error::InvalidAlgebra(format!(
                            "associativity fails at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn terms_as_element(&self, i: usize, j: usize) -> Element {
        let mut e = Element::zero(self.dim);
        for (k, c) in self.product_terms(i, j) {
            e.coords[*k] = c.clone();
        }
        e
    }

    pub fn check_unit(&self) -> Result<()> {
        let u = self.unit();
        for i in 0..self.dim {
            let b = self.basis_element(i);
            if self.mul_unchecked(&u, &b) != b || self.mul_unchecked(&b, &u) != b {
                return Err(Error::InvalidAlgebra(format!(
                    "unit law fails for basis element {i}"
                )));
            }
        }
        Ok(())
    }

    /// Each declared component is closed and products across components vanish.
    pub fn check_components(&self) -> Result<()> {
        let Some(comps) = &self.components else {
            return Ok(());
        };
        let owner = |x: usize| comps.iter().position(|&(o, s)| x >= o && x < o + s);
        for (i, j, k, _) in self.structure_entries() {
            let (ci, cj, ck) = (owner(i), owner(j), owner(k));
            if ci != cj || ci != ck {
                return Err(Error::InvalidAlgebra(format!(
                    "product b_{i} b_{j} leaves its component"
                )));
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.check_associativity()?;
        self.check_unit()?;
        self.check_components()
    }
}

/// `M_n(K)` with basis `e_{ij}` at index `i * n + j`.
pub fn matrix_algebra(n: usize) -> Algebra {
    assert!(n >= 1, "matrix size must be positive");
    let mut entries = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                entries.push((i * n + j, j * n + l, i * n + l, Cyclotomic::one()));
            }
        }
    }
    let mut unit = vec![Cyclotomic::zero(); n * n];
    for i in 0..n {
        unit[i * n + i] = Cyclotomic::one();
    }
    Algebra::new(n * n, 1, entries, unit, Some(vec![(0, n * n)])).expect("well-formed")
}

/// Matrix unit `e_{ij}` of `M_n` as an element.
pub fn matrix_unit(n: usize, i: usize, j: usize) -> Element {
    Element::basis(n * n, i * n + j)
}

/// Element of `M_n` from a row-major square array.
pub fn matrix_element(rows: &[Vec<Cyclotomic>]) -> Element {
    Element::new(rows.iter().flatten().cloned().collect())
}

pub fn direct_sum(a: &Algebra, b: &Algebra) -> Algebra {
    let off = a.dim;
    let entries = a
        .structure_entries()
        .map(|(i, j, k, c)| (i, j, k, c.clone()))
        .chain(
            b.structure_entries()
                .map(|(i, j, k, c)| (i + off, j + off, k + off, c.clone())),
        )
        .collect::<Vec<_>>();
    let unit = a.unit.iter().chain(&b.unit).cloned().collect();
    let components = match (&a.components, &b.components) {
        (Some(ca), Some(cb)) => Some(
            ca.iter()
                .copied()
                .chain(cb.iter().map(|&(o, s)| (o + off, s)))
                .collect(),
        ),
        _ => None,
    };
    Algebra::new(
        a.dim + b.dim,
        a.conductor.lcm(&b.conductor),
        entries,
        unit,
        components,
    )
    .expect("well-formed")
}

/// `A ⊗ B` with basis `a_i ⊗ b_j` at index `i * dim B + j`. Simple-component
/// metadata is dropped, since the blocks are no longer contiguous.
pub fn tensor_product(a: &Algebra, b: &Algebra) -> Algebra {
    let db = b.dim;
    let mut entries = Vec::new();
    for (i, j, k, c) in a.structure_entries() {
        for (p, q, r, e) in b.structure_entries() {
            entries.push((i * db + p, j * db + q, k * db + r, c * e));
        }
    }
    let unit = a.unit().tensor(&b.unit()).into_coords();
    let components = match (&a.components, &b.components) {
        (Some(ca), Some(cb)) if ca.len() == 1 && cb.len() == 1 => Some(vec![(0, a.dim * db)]),
        _ => None,
    };
    Algebra::new(
        a.dim * db,
        a.conductor.lcm(&b.conductor),
        entries,
        unit,
        components,
    )
    .expect("well-formed")
}

pub fn group_algebra(group: &CayleyTable) -> Algebra {
    twisted_group_algebra(group, &Cocycle::trivial(group.clone())).expect("trivial cocycle")
}

/// `K^α G`: basis `X_g` at index `g`, with `X_g X_h = α(g,h) X_{gh}`.
pub fn twisted_group_algebra(group: &CayleyTable, alpha: &Cocycle) -> Result<Algebra> {
    if alpha.group() != group {
        return Err(Error::InvalidGroupTable(
            "cocycle is defined on a different group".into(),
        ));
    }
    alpha.validate()?;
    let m = group.order();
    let mut conductor = 1u32;
    let mut entries = Vec::with_capacity(m * m);
    for g in 0..m {
        for h in 0..m {
            let v = alpha.value(g, h).clone();
            conductor = conductor.lcm(&v.order());
            entries.push((g, h, group.mul(g, h), v));
        }
    }
    let e = group.identity();
    let mut unit = vec![Cyclotomic::zero(); m];
    unit[e] = alpha.value(e, e).inverse()?;
    Algebra::new(m, conductor, entries, unit, None)
}

/// Grassmann algebra on `k` anticommuting generators, basis indexed by the
/// bitmask of the generators in an ordered product (`e_1` is bit 0).
pub fn grassmann_truncated(k: usize) -> Algebra {
    assert!((1..=16).contains(&k), "generator count must be in 1..=16");
    let dim = 1usize << k;
    let mut entries = Vec::new();
    for s in 0..dim {
        for t in 0..dim {
            if s & t != 0 {
                continue;
            }
            // sign of moving each generator of t left past the larger ones of s
            let swaps: u32 = (0..k)
                .filter(|&b| t >> b & 1 == 1)
                .map(|b| (s >> (b + 1)).count_ones())
                .sum();
            let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
            entries.push((s, t, s | t, Cyclotomic::from_int(sign)));
        }
    }
    let mut unit = vec![Cyclotomic::zero(); dim];
    unit[0] = Cyclotomic::one();
    Algebra::new(dim, 1, entries, unit, None).expect("well-formed")
}

/// Basis of a subalgebra inside an ambient algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub basis: Vec<Element>,
}

impl Embedding {
    /// Image of a subalgebra element in the ambient algebra.
    pub fn map(&self, x: &Element) -> Element {
        assert_eq!(x.dim(), self.basis.len());
        let dim = self.basis.first().map_or(0, Element::dim);
        x.coords()
            .iter()
            .zip(&self.basis)
            .filter(|(c, _)| !c.is_zero())
            .fold(Element::zero(dim), |acc, (c, b)| acc.add(&b.scale(c)))
    }

    /// Basis vectors as the columns of a matrix.
    pub fn matrix(&self) -> Matrix {
        let dim = self.basis.first().map_or(0, Element::dim);
        let cols: Vec<Vec<Cyclotomic>> = self.basis.iter().map(|b| b.coords().to_vec()).collect();
        Matrix::from_columns(&cols, dim)
    }
}

/// Structure constants of the subalgebra spanned by `basis`, which must be
/// linearly independent and closed under multiplication. The unit is the
/// ambient unit when it lies in the span; otherwise a local unit is solved for.
pub fn subalgebra_with_basis(a: &Algebra, basis: Vec<Element>) -> Result<(Algebra, Embedding)> {
    let solver = SpanSolver::new(&basis, a.dim())?;
    let s = basis.len();
    let mut entries = Vec::new();
    let mut conductor = a.conductor;
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let p = a.mul(x, y)?;
            let coords = solver.coordinates(&p).ok_or_else(|| {
                Error::InvalidAlgebra(format!("product of basis vectors {i},{j} leaves the span"))
            })?;
            for (k, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    conductor = conductor.lcm(&c.order());
                    entries.push((i, j, k, c));
                }
            }
        }
    }
    let unit = match solver.coordinates(&a.unit()) {
        Some(u) => u,
        None => local_unit(a, &basis)?,
    };
    let sub = Algebra::new(s, conductor, entries, unit, None)?;
    Ok((sub, Embedding { basis }))
}

/// Solves for `e` in the span with `e b = b e = b` for every basis vector `b`.
fn local_unit(a: &Algebra, basis: &[Element]) -> Result<Vec<Cyclotomic>> {
    let s = basis.len();
    let d = a.dim();
    // unknowns: coefficients of e; right-hand side in the last column
    let mut rows = Vec::new();
    for bj in basis {
        let left: Vec<Element> = basis.iter().map(|bi| a.mul_unchecked(bi, bj)).collect();
        let right: Vec<Element> = basis.iter().map(|bi| a.mul_unchecked(bj, bi)).collect();
        for prods in [&left, &right] {
            for t in 0..d {
                let mut row: Vec<Cyclotomic> =
                    prods.iter().map(|p| p.coords()[t].clone()).collect();
                row.push(bj.coords()[t].clone());
                rows.push(row);
            }
        }
    }
    let mut m = Matrix::from_rows(rows)?;
    let pivots = m.rref();
    if pivots.last() == Some(&s) {
        return Err(Error::NotUnital);
    }
    let mut e = vec![Cyclotomic::zero(); s];
    for (r, &p) in pivots.iter().enumerate() {
        e[p] = m[(r, s)].clone();
    }
    Ok(e)
}

/// The subalgebra generated by `gens` (and the unit, if requested), closed
/// by iterated products until the span stops growing.
pub fn subalgebra_closure(
    a: &Algebra,
    gens: &[Element],
    include_unit: bool,
) -> Result<(Algebra, Embedding)> {
    let mut span = SpanBuilder::new(a.dim());
    if include_unit {
        span.insert(&a.unit());
    }
    for g in gens {
        a.check_dim(g)?;
        span.insert(g);
    }
    let mut done = 0;
    let mut rounds = 0;
    while done < span.len() {
        rounds += 1;
        assert!(
            rounds <= a.dim() + 1,
            "closure exceeded {} rounds without stabilizing",
            a.dim()
        );
        let start = done;
        let end = span.len();
        for i in 0..end {
            for j in 0..end {
                if i.max(j) < start {
                    continue;
                }
                let p = a.mul_unchecked(&span.basis()[i], &span.basis()[j]);
                span.insert(&p);
            }
        }
        done = end;
    }
    subalgebra_with_basis(a, span.into_basis())
}

/// Basis of the center, as the kernel of `x ↦ (x b_i - b_i x)_i`.
pub fn center(a: &Algebra) -> Vec<Element> {
    let d = a.dim();
    let mut m = Matrix::zeros(d * d, d);
    for i in 0..d {
        for k in 0..d {
            for (t, c) in a.product_terms(k, i) {
                m[(i * d + t, k)] = &m[(i * d + t, k)] + c;
            }
            for (t, c) in a.product_terms(i, k) {
                m[(i * d + t, k)] = &m[(i * d + t, k)] - c;
            }
        }
    }
    m.kernel().into_iter().map(Element::new).collect()
}

/// `x^d = 0` with `d = dim A`; the nilpotency index of any nilpotent element
/// of a `d`-dimensional unital algebra is at most `d`.
pub fn is_nilpotent(a: &Algebra, x: &Element) -> Result<bool> {
    a.check_dim(x)?;
    let mut p = x.clone();
    let mut e = 1usize;
    while e < a.dim() {
        if p.is_zero() {
            return Ok(true);
        }
        p = a.mul_unchecked(&p, &p);
        e *= 2;
    }
    Ok(p.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_units_multiply() {
        let m2 = matrix_algebra(2);
        let e11 = matrix_unit(2, 0, 0);
        let e12 = matrix_unit(2, 0, 1);
        assert_eq!(m2.mul(&e11, &e12).unwrap(), e12);
        assert!(m2.mul(&e12, &e12).unwrap().is_zero());
        assert!(matches!(
            m2.mul(&e11, &Element::zero(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn constructors_pass_validation() {
        assert_eq!(matrix_algebra(2).dim(), 4);
        matrix_algebra(1).validate().unwrap();
        matrix_algebra(3).validate().unwrap();
        let ds = direct_sum(&matrix_algebra(2), &matrix_algebra(4));
        assert_eq!(ds.dim(), 20);
        assert_eq!(ds.components(), Some(&[(0, 4), (4, 16)][..]));
        ds.validate().unwrap();
        let tp = tensor_product(&matrix_algebra(2), &matrix_algebra(2));
        assert_eq!(tp.dim(), 16);
        tp.validate().unwrap();
        grassmann_truncated(4).validate().unwrap();
    }

    #[test]
    fn tensor_with_ground_field_is_identity() {
        let a = direct_sum(&matrix_algebra(2), &grassmann_truncated(2));
        let t = tensor_product(&a, &matrix_algebra(1));
        let lhs: Vec<_> = a.structure_entries().collect();
        let rhs: Vec<_> = t.structure_entries().collect();
        assert_eq!(lhs, rhs);
        assert_eq!(a.unit(), t.unit());
    }

    #[test]
    fn grassmann_relations() {
        let g = grassmann_truncated(3);
        let (e1, e2) = (g.basis_element(1), g.basis_element(2));
        let e1e2 = g.basis_element(3);
        assert_eq!(g.mul(&e1, &e2).unwrap(), e1e2);
        assert_eq!(
            g.mul(&e2, &e1).unwrap(),
            e1e2.scale(&Cyclotomic::from_int(-1))
        );
        assert!(g.mul(&e1e2, &e1).unwrap().is_zero());
        let g5 = grassmann_truncated(5);
        let gens: Vec<Element> = (0..5).map(|b| g5.basis_element(1 << b)).collect();
        let top = g5.product(&gens).unwrap();
        assert_eq!(top, g5.basis_element(31));
    }

    #[test]
    fn group_algebras() {
        let z2 = CayleyTable::cyclic(2);
        let a = group_algebra(&z2);
        let x = a.basis_element(1);
        assert_eq!(a.mul(&x, &x).unwrap(), a.unit());
        let tw = twisted_group_algebra(&z2, &Cocycle::trivial(z2.clone())).unwrap();
        assert_eq!(tw, a);
    }

    #[test]
    fn twisted_klein_anticommutes() {
        let alpha = Cocycle::clock_shift(2);
        let a = twisted_group_algebra(alpha.group(), &alpha).unwrap();
        a.validate().unwrap();
        // (1,0) is index 2, (0,1) is index 1
        let (x10, x01) = (a.basis_element(2), a.basis_element(1));
        let lhs = a.mul(&x10, &x01).unwrap();
        let rhs = a.mul(&x01, &x10).unwrap();
        assert_eq!(lhs, rhs.scale(&Cyclotomic::from_int(-1)));
    }

    #[test]
    fn closure_of_single_idempotent() {
        let m2 = matrix_algebra(2);
        let (sub, emb) = subalgebra_closure(&m2, &[matrix_unit(2, 0, 0)], true).unwrap();
        assert_eq!(sub.dim(), 2);
        sub.validate().unwrap();
        assert_eq!(emb.map(&sub.unit()), m2.unit());
    }

    #[test]
    fn closure_of_full_basis_and_idempotence() {
        let m2 = matrix_algebra(2);
        let gens: Vec<Element> = (0..4).map(|i| m2.basis_element(i)).collect();
        let (sub, _) = subalgebra_closure(&m2, &gens, false).unwrap();
        assert_eq!(sub.dim(), 4);
        let (again, _) = subalgebra_closure(&sub, &[sub.basis_element(0)], true).unwrap();
        assert!(again.dim() <= sub.dim());
        let all: Vec<Element> = (0..sub.dim()).map(|i| sub.basis_element(i)).collect();
        assert_eq!(
            subalgebra_closure(&sub, &all, true).unwrap().0.dim(),
            sub.dim()
        );
    }

    #[test]
    fn closure_without_unit_finds_local_unit() {
        let m2 = matrix_algebra(2);
        let (sub, emb) = subalgebra_closure(&m2, &[matrix_unit(2, 1, 1)], false).unwrap();
        assert_eq!(sub.dim(), 1);
        assert_eq!(emb.map(&sub.unit()), matrix_unit(2, 1, 1));
        let e12 = matrix_unit(2, 0, 1);
        assert!(matches!(
            subalgebra_closure(&m2, &[e12], false),
            Err(Error::NotUnital)
        ));
    }

    #[test]
    fn centers() {
        assert_eq!(center(&matrix_algebra(3)).len(), 1);
        assert_eq!(center(&grassmann_truncated(2)).len(), 2);
        let ds = direct_sum(
            &direct_sum(&matrix_algebra(2), &matrix_algebra(1)),
            &matrix_algebra(3),
        );
        assert_eq!(center(&ds).len(), 3);
    }

    /// Brute-force oracle: an element commutes with all basis vectors.
    #[test]
    fn grassmann_center_elements_commute() {
        let g = grassmann_truncated(2);
        for z in center(&g) {
            for i in 0..g.dim() {
                assert!(g.commutator(&z, &g.basis_element(i)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn nilpotency() {
        let m2 = matrix_algebra(2);
        assert!(is_nilpotent(&m2, &matrix_unit(2, 0, 1)).unwrap());
        assert!(!is_nilpotent(&m2, &m2.unit()).unwrap());
        let m3 = matrix_algebra(3);
        // strictly upper triangular, nilpotency index 3
        let n = matrix_unit(3, 0, 1).add(&matrix_unit(3, 1, 2));
        assert!(is_nilpotent(&m3, &n).unwrap());
        assert!(!m3.mul(&n, &n).unwrap().is_zero());
    }

    #[test]
    fn component_metadata_is_checked() {
        let bad = Algebra::new(
            2,
            1,
            vec![],
            vec![Cyclotomic::one(), Cyclotomic::zero()],
            Some(vec![(0, 2)]),
        );
        assert!(bad.is_err());
        let ds = direct_sum(&matrix_algebra(1), &matrix_algebra(2));
        ds.check_components().unwrap();
    }
}
