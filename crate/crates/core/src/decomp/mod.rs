//! Conical and convex combinations of semideterministic matrices.
//!
//! * [`semidet_decompose`]: any nonnegative matrix, semideterministic bases.
//! * [`det_decompose`]: stochastic matrices, deterministic bases, `Σα = 1`.
//! * [`birkhoff_decompose`]: doubly stochastic matrices, permutation bases.

mod birkhoff;
mod decomposition;
mod greedy;
mod matching;

pub use birkhoff::birkhoff_decompose;
pub use decomposition::{Decomposition, Term};
pub use greedy::{det_decompose, det_trace, semidet_decompose, semidet_trace, GreedyStep};
