//! Exact arithmetic: rationals, cyclotomic fields and dense linear algebra
//! over them.

pub mod cyclotomic;
pub mod linalg;
pub mod rational;

pub use cyclotomic::{totient, Cyclotomic};
pub use linalg::Matrix;
pub use rational::Rational;
