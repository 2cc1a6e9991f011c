//! Deterministic and generalized semiautomata.
//!
//! Words act left to right: `δ_{xy}` applies `δ_x` first, and
//! `Q_{xy} = Q_x · Q_y`. State `i` of an automaton is row/column `i` of its
//! matrices.

mod deterministic;
mod generalized;
mod madic;
mod transform;
pub(crate) mod word;

pub use deterministic::{DeterministicSA, MonoidElement};
pub use generalized::{AutomatonClass, GeneralizedSA};
pub use madic::madic;
pub use transform::TransformTable;
pub use word::parse_word;

/// Either kind of automaton, as read from an automaton file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Automaton {
    Deterministic(DeterministicSA),
    Generalized(GeneralizedSA),
}

impl Automaton {
    pub fn states(&self) -> &[String] {
        match self {
            Automaton::Deterministic(a) => a.states(),
            Automaton::Generalized(a) => a.states(),
        }
    }

    pub fn alphabet(&self) -> &[String] {
        match self {
            Automaton::Deterministic(a) => a.alphabet(),
            Automaton::Generalized(a) => a.alphabet(),
        }
    }

    /// The automaton as a GSA, embedding a deterministic one.
    pub fn to_generalized(&self) -> GeneralizedSA {
        match self {
            Automaton::Deterministic(a) => a.embed(),
            Automaton::Generalized(a) => a.clone(),
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::ratmat::RMatrix;

    /// Three states; `x` sends everything to 1, `y` sends 1 to 2 and fixes 2, 3.
    pub(crate) fn collapse_sa() -> DeterministicSA {
        DeterministicSA::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec!["x".into(), "y".into()],
            vec![
                TransformTable::total(&[0, 0, 0]).unwrap(),
                TransformTable::total(&[1, 1, 2]).unwrap(),
            ],
        )
        .unwrap()
    }

    pub(crate) fn mixed_gsa() -> GeneralizedSA {
        GeneralizedSA::new(
            vec!["s1".into(), "s2".into()],
            vec!["x1".into(), "x2".into()],
            vec![
                RMatrix::from_integers(&[[2, 3], [1, 0]]).unwrap(),
                RMatrix::from_integers(&[[1, 2], [0, 3]]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn automaton_wrapper_embeds() {
        let a = Automaton::Deterministic(collapse_sa());
        assert_eq!(a.to_generalized(), collapse_sa().embed());
        assert_eq!(a.alphabet(), ["x", "y"]);
    }
}
