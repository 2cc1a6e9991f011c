use std::fmt;

use super::word::{check_distinct, resolve_word, symbol_index};
use super::{DeterministicSA, TransformTable};
use crate::error::{Error, Result};
use crate::ratmat::{RMatrix, Rational};

/// The strongest matrix class shared by every symbol matrix of a GSA.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AutomatonClass {
    Permutation,
    Deterministic,
    DoublyStochastic,
    Stochastic,
    Semideterministic,
    Generalized,
}

impl AutomatonClass {
    pub fn label(self) -> &'static str {
        match self {
            AutomatonClass::Permutation => "permutation",
            AutomatonClass::Deterministic => "deterministic",
            AutomatonClass::DoublyStochastic => "doubly-stochastic",
            AutomatonClass::Stochastic => "stochastic",
            AutomatonClass::Semideterministic => "semideterministic",
            AutomatonClass::Generalized => "generalized",
        }
    }

    pub fn is_stochastic(self) -> bool {
        matches!(
            self,
            AutomatonClass::Permutation
                | AutomatonClass::Deterministic
                | AutomatonClass::DoublyStochastic
                | AutomatonClass::Stochastic
        )
    }

    pub fn is_doubly_stochastic(self) -> bool {
        matches!(
            self,
            AutomatonClass::Permutation | AutomatonClass::DoublyStochastic
        )
    }
}

impl fmt::Display for AutomatonClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A generalized semiautomaton `(S, Σ, {Q_x})` with nonnegative rational
/// matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedSA {
    states: Vec<String>,
    alphabet: Vec<String>,
    matrices: Vec<RMatrix>,
}

impl GeneralizedSA {
    /// `matrices[k]` is `Q_x` for `x = alphabet[k]`.
    pub fn new(states: Vec<String>, alphabet: Vec<String>, matrices: Vec<RMatrix>) -> Result<Self> {
        if states.is_empty() {
            return Err(Error::NoStates);
        }
        check_distinct(&states, Error::DuplicateState)?;
        check_distinct(&alphabet, Error::DuplicateSymbol)?;
        if matrices.len() != alphabet.len() {
            return Err(Error::CountMismatch {
                what: "symbol matrices",
                expected: alphabet.len(),
                found: matrices.len(),
            });
        }
        if let Some(m) = matrices.iter().find(|m| m.order() != states.len()) {
            return Err(Error::DimensionMismatch {
                expected: states.len(),
                found: m.order(),
            });
        }
        Ok(GeneralizedSA {
            states,
            alphabet,
            matrices,
        })
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn matrices(&self) -> &[RMatrix] {
        &self.matrices
    }

    pub fn order(&self) -> usize {
        self.states.len()
    }

    pub fn matrix<S: AsRef<str>>(&self, symbol: S) -> Result<&RMatrix> {
        Ok(&self.matrices[symbol_index(&self.alphabet, symbol)?])
    }

    /// `Q_u = Q_{x_1} ⋯ Q_{x_k}`; the empty word gives `I_n`.
    pub fn q_word<S: AsRef<str>>(&self, word: &[S]) -> Result<RMatrix> {
        let indices = resolve_word(&self.alphabet, word)?;
        Ok(self.q_indices(&indices))
    }

    pub(crate) fn q_indices(&self, word: &[usize]) -> RMatrix {
        let identity = RMatrix::identity(self.order()).expect("states nonempty");
        word.iter().fold(identity, |acc, &x| {
            acc.multiply(&self.matrices[x]).expect("orders validated")
        })
    }

    /// Entry `(from, to)` of `Q_u`; for a stochastic automaton this is the
    /// probability of reaching `to` from `from` while reading `u`.
    pub fn transition_weight<S: AsRef<str>>(
        &self,
        from: usize,
        word: &[S],
        to: usize,
    ) -> Result<Rational> {
        let states = self.order();
        for index in [from, to] {
            if index >= states {
                return Err(Error::StateOutOfRange { index, states });
            }
        }
        Ok(self.q_word(word)?.get(from, to).clone())
    }

    /// Strongest class holding for all symbol matrices at once.
    pub fn classify(&self) -> AutomatonClass {
        let all = |pred: fn(&RMatrix) -> bool| self.matrices.iter().all(pred);
        if all(RMatrix::is_permutation) {
            AutomatonClass::Permutation
        } else if all(RMatrix::is_deterministic) {
            AutomatonClass::Deterministic
        } else if all(RMatrix::is_doubly_stochastic) {
            AutomatonClass::DoublyStochastic
        } else if all(RMatrix::is_stochastic) {
            AutomatonClass::Stochastic
        } else if all(RMatrix::is_semideterministic) {
            AutomatonClass::Semideterministic
        } else {
            AutomatonClass::Generalized
        }
    }

    /// Reads back the (partial) state maps of an automaton whose matrices
    /// are all semideterministic.
    pub fn extract(&self) -> Result<DeterministicSA> {
        let transitions = self
            .matrices
            .iter()
            .zip(&self.alphabet)
            .map(|(m, symbol)| {
                let images = m
                    .row_images()
                    .ok_or_else(|| Error::NotSemideterministic(symbol.clone()))?;
                TransformTable::new(images)
            })
            .collect::<Result<Vec<_>>>()?;
        DeterministicSA::new(self.states.clone(), self.alphabet.clone(), transitions)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::madic;
    use crate::automata::tests::{collapse_sa, mixed_gsa};
    use proptest::prelude::*;

    fn r(n: u64, d: u64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn quarter(rows: [[u64; 2]; 2]) -> RMatrix {
        RMatrix::from_fn(2, |i, j| r(rows[i][j], 4)).unwrap()
    }

    #[test]
    fn empty_word_is_identity() {
        for a in [mixed_gsa(), madic(3).unwrap(), collapse_sa().embed()] {
            assert_eq!(
                a.q_word::<&str>(&[]).unwrap(),
                RMatrix::identity(a.order()).unwrap()
            );
        }
    }

    #[test]
    fn q_word_examples() {
        let m2 = madic(2).unwrap();
        assert_eq!(m2.q_word(&["0", "1"]).unwrap(), quarter([[2, 2], [1, 3]]));
        assert_eq!(
            mixed_gsa().q_word(&["x1", "x2"]).unwrap(),
            RMatrix::from_integers(&[[2, 13], [1, 2]]).unwrap()
        );
        assert_eq!(m2.q_word(&["2"]), Err(Error::UnknownSymbol("2".into())));
    }

    #[test]
    fn transition_weight_examples() {
        let a = mixed_gsa();
        for i in 0..2 {
            for j in 0..2 {
                let expected = if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                assert_eq!(a.transition_weight::<&str>(i, &[], j).unwrap(), expected);
            }
        }
        assert_eq!(
            madic(2)
                .unwrap()
                .transition_weight(0, &["0", "1"], 1)
                .unwrap(),
            r(1, 2)
        );
        assert!(matches!(
            a.transition_weight::<&str>(2, &[], 0),
            Err(Error::StateOutOfRange { index: 2, .. })
        ));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(madic(3).unwrap().classify(), AutomatonClass::Stochastic);
        assert_eq!(
            collapse_sa().embed().classify(),
            AutomatonClass::Deterministic
        );
        assert_eq!(mixed_gsa().classify(), AutomatonClass::Generalized);
        let d = GeneralizedSA::new(
            vec!["a".into(), "b".into()],
            vec!["u".into()],
            vec![RMatrix::from_fn(2, |_, _| r(1, 2)).unwrap()],
        )
        .unwrap();
        assert_eq!(d.classify(), AutomatonClass::DoublyStochastic);
        let semi = GeneralizedSA::new(
            vec!["a".into(), "b".into()],
            vec!["u".into()],
            vec![RMatrix::from_integers(&[[1, 0], [0, 0]]).unwrap()],
        )
        .unwrap();
        assert_eq!(semi.classify(), AutomatonClass::Semideterministic);
    }

    #[test]
    fn extract_examples() {
        let states = vec!["s1".to_string(), "s2".to_string()];
        let single = |m: RMatrix| {
            GeneralizedSA::new(states.clone(), vec!["z".into()], vec![m])
                .unwrap()
                .extract()
                .unwrap()
                .transitions()[0]
                .clone()
        };
        assert_eq!(
            single(RMatrix::from_integers(&[[1, 0], [0, 0]]).unwrap()).images(),
            &[Some(0), None]
        );
        assert_eq!(
            single(RMatrix::identity(2).unwrap()),
            TransformTable::identity(2).unwrap()
        );
        assert_eq!(
            single(RMatrix::from_integers(&[[0, 1], [0, 1]]).unwrap()),
            TransformTable::total(&[1, 1]).unwrap()
        );
        assert_eq!(
            mixed_gsa().extract(),
            Err(Error::NotSemideterministic("x1".into()))
        );
    }

    fn collapse_word() -> impl Strategy<Value = Vec<&'static str>> {
        proptest::collection::vec(prop_oneof![Just("x"), Just("y")], 0..=6)
    }

    proptest! {
        #[test]
        fn q_word_is_a_homomorphism(
            u in proptest::collection::vec(0usize..2, 0..=6),
            v in proptest::collection::vec(0usize..2, 0..=6),
        ) {
            let a = mixed_gsa();
            let uv: Vec<usize> = u.iter().chain(&v).copied().collect();
            prop_assert_eq!(a.q_indices(&uv), a.q_indices(&u).multiply(&a.q_indices(&v)).unwrap());
        }

        #[test]
        fn delta_word_is_a_homomorphism(u in collapse_word(), v in collapse_word()) {
            let a = collapse_sa();
            let uv: Vec<&str> = u.iter().chain(&v).copied().collect();
            prop_assert_eq!(
                a.delta_word(&uv).unwrap(),
                a.delta_word(&u).unwrap().then(&a.delta_word(&v).unwrap())
            );
        }

        #[test]
        fn embedding_commutes_with_words(u in proptest::collection::vec(prop_oneof![Just("x"), Just("y")], 0..=5)) {
            let a = collapse_sa();
            prop_assert_eq!(a.embed().q_word(&u).unwrap(), a.delta_word(&u).unwrap().to_matrix());
        }

        #[test]
        fn embedding_commutes_for_partial_maps(
            maps in proptest::collection::vec(proptest::collection::vec(proptest::option::of(0usize..3), 3), 2),
            u in proptest::collection::vec(0usize..2, 0..=5),
        ) {
            let tables: Vec<_> = maps.into_iter().map(|m| TransformTable::new(m).unwrap()).collect();
            let a = DeterministicSA::new(
                vec!["p".into(), "q".into(), "r".into()],
                vec!["a".into(), "b".into()],
                tables,
            ).unwrap();
            prop_assert_eq!(a.embed().q_indices(&u), a.delta_indices(&u).to_matrix());
            prop_assert_eq!(a.embed().extract().unwrap(), a);
        }
    }
}
