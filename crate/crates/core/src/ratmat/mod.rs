//! Exact nonnegative rationals and dense square matrices over them.

mod matrix;
mod rational;

pub use matrix::{MatrixClass, RMatrix};
pub use rational::Rational;
