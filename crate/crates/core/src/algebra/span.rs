use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Matrix};

use super::Element;

/// Incrementally grown linear span, kept in fully reduced echelon form for
/// membership tests while remembering the vectors as originally inserted.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    dim: usize,
    /// `(pivot column, reduced row)`; each row is zero at every other pivot.
    reduced: Vec<(usize, Vec<Cyclotomic>)>,
    basis: Vec<Element>,
}

impl SpanBuilder {
    pub fn new(dim: usize) -> Self {
        SpanBuilder {
            dim,
            reduced: Vec::new(),
            basis: Vec::new(),
        }
    }

    fn reduce(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let mut v = v.to_vec();
        for (p, row) in &self.reduced {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.reduce(x.coords()).iter().all(Cyclotomic::is_zero)
    }

    /// Adds `x` if it is outside the span; returns whether the span grew.
    pub fn insert(&mut self, x: &Element) -> bool {
        assert_eq!(x.dim(), self.dim);
        let mut v = self.reduce(x.coords());
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inverse().expect("nonzero pivot");
        for c in v.iter_mut() {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        for (_, row) in self.reduced.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (r, x) in row.iter_mut().zip(&v) {
                if !x.is_zero() {
                    *r = &*r - &(&f * x);
                }
            }
        }
        self.reduced.push((p, v));
        self.basis.push(x.clone());
        true
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Element> {
        self.basis
    }
}

/// Coordinates with respect to a linearly independent family of vectors.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    basis: Vec<Element>,
    /// Rows of the basis matrix forming an invertible square block.
    rows: Vec<usize>,
    block_inverse: Matrix,
}

impl SpanSolver {
    /// Fails with `InvalidAlgebra` if the vectors are dependent.
    pub fn new(basis: &[Element], dim: usize) -> Result<Self> {
        if basis.iter().any(|b| b.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: basis
                    .iter()
                    .map(Element::dim)
                    .find(|&d| d != dim)
                    .unwrap_or(0),
            });
        }
        let s = basis.len();
        // pivot columns of the transposed basis matrix are independent rows
        let cols: Vec<Vec<Cyclotomic>> = basis.iter().map(|b| b.coords().to_vec()).collect();
        let mut transposed = Matrix::from_rows(cols.clone())?;
        let rows = if s == 0 {
            Vec::new()
        } else {
            transposed.rref()
        };
        if rows.len() != s {
            return Err(Error::InvalidAlgebra(
                "basis vectors are linearly dependent".into(),
            ));
        }
        let mut block = Matrix::zeros(s, s);
        for (r, &row) in rows.iter().enumerate() {
            for (c, col) in cols.iter().enumerate() {
                block[(r, c)] = col[row].clone();
            }
        }
        let block_inverse = block
            .inverse()?
            .expect("pivot rows of an independent family form an invertible block");
        Ok(SpanSolver {
            basis: basis.to_vec(),
            rows,
            block_inverse,
        })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coefficients `c` with `Σ c_i basis_i = x`, or `None` if `x` is outside the span.
    pub fn coordinates(&self, x: &Element) -> Option<Vec<Cyclotomic>> {
        let rhs: Vec<Cyclotomic> = self.rows.iter().map(|&r| x.coords()[r].clone()).collect();
        let c = self.block_inverse.mul_vec(&rhs).ok()?;
        let mut recon = Element::zero(x.dim());
        for (ci, b) in c.iter().zip(&self.basis) {
            if !ci.is_zero() {
                recon = recon.add(&b.scale(ci));
            }
        }
        (recon == *x).then_some(c)
    }
}
