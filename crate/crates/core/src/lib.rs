//! Exact computations with quantum commutative decompositions of
//! finite-dimensional algebras over cyclotomic fields.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cli;
pub mod constructions;
pub mod decomp;
pub mod error;
pub mod exactnum;
pub mod format;
pub mod gradedgroup;
pub mod identities;

pub use error::{Error, Result};
