//! Decompositions `R = R_1 ⊕ ⋯ ⊕ R_m` of an algebra into subspaces, their
//! commutation tables, regularity witnesses and the matrix-level criteria
//! evaluated on the table.

mod criteria;
mod theta;
pub mod witness;

use std::sync::Arc;

pub use criteria::{
    bahturin_regev_check, det_exact, is_minimal, msquared_check, necessary_condition_check,
    qc_relations_check, root_order_check, BahturinRegevReport, MinimalityReport,
    NecessaryConditionReport, NecessaryViolation, QcReport, QcViolation, RootOrderReport,
};
pub use theta::{detect_theta, ThetaTable};
pub use witness::{find_witness, RegularityWitness, WitnessOptions, WitnessStatus};

use crate::algebra::{Algebra, Element, SpanSolver};
use crate::error::{Error, Result};

/// An ordered list of subspaces of an algebra, each given by a spanning list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    algebra: Arc<Algebra>,
    components: Vec<Vec<Element>>,
}

impl Decomposition {
    /// Rejects empty or zero components and vectors of the wrong length.
    pub fn new(algebra: Arc<Algebra>, components: Vec<Vec<Element>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Precondition(
                "decomposition has no components".into(),
            ));
        }
        for (i, comp) in components.iter().enumerate() {
            for v in comp {
                if v.dim() != algebra.dim() {
                    return Err(Error::DimensionMismatch {
                        expected: algebra.dim(),
                        found: v.dim(),
                    });
                }
            }
            if comp.iter().all(Element::is_zero) {
                return Err(Error::Precondition(format!("component {i} is zero")));
            }
        }
        Ok(Decomposition {
            algebra,
            components,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn components(&self) -> &[Vec<Element>] {
        &self.components
    }

    /// Quantum length `m`.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component_dims(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    /// All component vectors, concatenated in order.
    pub fn flat_basis(&self) -> Vec<Element> {
        self.components.iter().flatten().cloned().collect()
    }

    /// Component index of each vector in [`Decomposition::flat_basis`].
    pub fn owners(&self) -> Vec<usize> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(i, c)| std::iter::repeat_n(i, c.len()))
            .collect()
    }

    /// The component vectors are jointly independent and span the algebra.
    pub fn check_direct_sum(&self) -> bool {
        self.solver().is_ok()
    }

    /// Coordinates in the concatenated component basis; fails unless the
    /// decomposition is a direct sum.
    pub fn solver(&self) -> Result<ComponentSolver> {
        let basis = self.flat_basis();
        if basis.len() != self.algebra.dim() {
            return Err(Error::NotDirectSum);
        }
        let solver =
            SpanSolver::new(&basis, self.algebra.dim()).map_err(|_| Error::NotDirectSum)?;
        Ok(ComponentSolver {
            solver,
            owners: self.owners(),
        })
    }
}

/// Splits algebra elements along a direct-sum decomposition.
#[derive(Clone, Debug)]
pub struct ComponentSolver {
    solver: SpanSolver,
    owners: Vec<usize>,
}

impl ComponentSolver {
    /// Sorted indices of the components in which `x` has a nonzero part.
    pub fn support(&self, x: &Element) -> Vec<usize> {
        let coords = self
            .solver
            .coordinates(x)
            .expect("a direct sum spans the whole algebra");
        let mut s: Vec<usize> = coords
            .iter()
            .zip(&self.owners)
            .filter(|(c, _)| !c.is_zero())
            .map(|(_, &o)| o)
            .collect();
        s.dedup();
        s
    }
}
