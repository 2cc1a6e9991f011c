//! Exact-arithmetic semiautomata.
//!
//! Deterministic semiautomata act on a finite state set through (partial)
//! state maps; generalized semiautomata replace each map by a nonnegative
//! rational matrix. The centrepiece is [`source::factorize`], which writes
//! any generalized semiautomaton as a sequential product of a dependent
//! source (a weight table from input to output symbols) and a
//! semideterministic machine, built from the matrix decompositions in
//! [`decomp`]. All arithmetic is exact, so every identity is checked with
//! `==`.
//!
//! ```
//! use semiautomata::automata::madic;
//! use semiautomata::source::{factorize, verify_factorization};
//!
//! let a = madic(3).unwrap();
//! let f = factorize(&a);
//! assert_eq!(f.source().output_alphabet().len(), 3);
//! assert!(f.source().is_probabilistic());
//! assert!(verify_factorization(&a, &f, 2).unwrap().passed());
//! ```

pub mod automata;
pub mod decomp;
mod error;
pub mod format;
pub mod ratmat;
pub mod source;

pub use error::{Error, Result};
