//! JSON documents: automata, decompositions, sources and factorizations.
//!
//! Every rational is written as a `"p/q"` string, or `"p"` when the
//! denominator is 1. Readers also accept JSON numbers and finite decimals
//! (`"0.25"`), converted exactly. Key order follows the alphabets, so
//! output is byte-for-byte reproducible.

mod documents;
mod literal;

pub use documents::{
    automaton_from_str, automaton_from_value, automaton_to_string, automaton_to_value,
    decomposition_from_str, decomposition_from_value, decomposition_to_string,
    decomposition_to_value, factorization_from_str, factorization_from_value,
    factorization_to_string, factorization_to_value, parse_json, source_from_value,
    source_to_value,
};
pub use literal::{matrix_to_value, parse_matrix, parse_rational, rational_to_value};
