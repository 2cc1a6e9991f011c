use std::collections::{HashSet, VecDeque};

use super::word::{check_distinct, resolve_word, symbol_index};
use super::{GeneralizedSA, TransformTable};
use crate::error::{Error, Result};

/// A (possibly partial) deterministic semiautomaton `(S, Σ, {δ_x})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterministicSA {
    states: Vec<String>,
    alphabet: Vec<String>,
    transitions: Vec<TransformTable>,
}

/// One element of a transformation monoid together with a shortest word
/// (as symbol indices) that produces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidElement {
    pub table: TransformTable,
    pub word: Vec<usize>,
}

impl DeterministicSA {
    /// `transitions[k]` is the map of `alphabet[k]`.
    pub fn new(
        states: Vec<String>,
        alphabet: Vec<String>,
        transitions: Vec<TransformTable>,
    ) -> Result<Self> {
        if states.is_empty() {
            return Err(Error::NoStates);
        }
        check_distinct(&states, Error::DuplicateState)?;
        check_distinct(&alphabet, Error::DuplicateSymbol)?;
        if transitions.len() != alphabet.len() {
            return Err(Error::CountMismatch {
                what: "transition maps",
                expected: alphabet.len(),
                found: transitions.len(),
            });
        }
        if let Some(t) = transitions.iter().find(|t| t.degree() != states.len()) {
            return Err(Error::DimensionMismatch {
                expected: states.len(),
                found: t.degree(),
            });
        }
        Ok(DeterministicSA {
            states,
            alphabet,
            transitions,
        })
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn transitions(&self) -> &[TransformTable] {
        &self.transitions
    }

    pub fn delta<S: AsRef<str>>(&self, symbol: S) -> Result<&TransformTable> {
        Ok(&self.transitions[symbol_index(&self.alphabet, symbol)?])
    }

    /// `δ_u = δ_{x_1} ⋯ δ_{x_k}`, applying `x_1` first; the empty word
    /// gives the identity.
    pub fn delta_word<S: AsRef<str>>(&self, word: &[S]) -> Result<TransformTable> {
        let indices = resolve_word(&self.alphabet, word)?;
        Ok(self.delta_indices(&indices))
    }

    pub(crate) fn delta_indices(&self, word: &[usize]) -> TransformTable {
        let identity = TransformTable::identity(self.states.len()).expect("states nonempty");
        word.iter()
            .fold(identity, |acc, &x| acc.then(&self.transitions[x]))
    }

    /// Enumerates `T(A) = {δ_u | u ∈ Σ*}` breadth-first: by word length,
    /// then by generator order. Each element carries the first (hence
    /// shortest) word reaching it. Fails once more than `cap` distinct
    /// elements have been found.
    pub fn transformation_monoid(&self, cap: usize) -> Result<Vec<MonoidElement>> {
        let identity = TransformTable::identity(self.states.len())?;
        let mut seen = HashSet::from([identity.clone()]);
        let mut elements = vec![MonoidElement {
            table: identity,
            word: Vec::new(),
        }];
        if elements.len() > cap {
            return Err(Error::CapExceeded(cap));
        }
        let mut queue = VecDeque::from([0usize]);
        while let Some(index) = queue.pop_front() {
            for (x, generator) in self.transitions.iter().enumerate() {
                let next = elements[index].table.then(generator);
                if seen.insert(next.clone()) {
                    if elements.len() == cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    let mut word = elements[index].word.clone();
                    word.push(x);
                    elements.push(MonoidElement { table: next, word });
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        Ok(elements)
    }

    /// Word of symbol names for a monoid element's index word.
    pub fn symbols_of(&self, word: &[usize]) -> Vec<&str> {
        word.iter().map(|&x| self.alphabet[x].as_str()).collect()
    }

    /// The generalized semiautomaton whose `Q_x` has a 1 at `(i, j)` iff
    /// `δ_x(s_i) = s_j`. Undefined transitions become zero rows.
    pub fn embed(&self) -> GeneralizedSA {
        GeneralizedSA::new(
            self.states.clone(),
            self.alphabet.clone(),
            self.transitions
                .iter()
                .map(TransformTable::to_matrix)
                .collect(),
        )
        .expect("embedding preserves shape")
    }
}
