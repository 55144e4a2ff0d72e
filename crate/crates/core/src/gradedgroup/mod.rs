//! Finite groups, cocycles and bicharacters, and the passage between
//! decompositions and group gradings.

mod classify;
mod grading;
mod group;

pub use classify::{classify_abelian, AbelianType};
pub use grading::{
    realizability_check, reconstruct_group, set_grading_detect, Cancellation, RealizabilityReport,
    RealizabilityVerdict, Reconstruction, SetGrading, Side,
};
pub use group::{is_alpha_regular, ray_classes, Bicharacter, CayleyTable, Cocycle, RayClasses};
