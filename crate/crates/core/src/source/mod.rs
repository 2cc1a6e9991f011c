//! Dependent sources, sequential products, and the factorization of a
//! generalized semiautomaton into a source feeding a semideterministic
//! machine.

mod dependent;
mod factorize;
mod verify;

pub use dependent::DependentSource;
pub use factorize::{decompose_symbols, factorize, factorize_with, Factorization, Strategy};
pub use verify::{verify_factorization, Counterexample, VerificationReport};

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::automata::{DeterministicSA, GeneralizedSA, TransformTable};
    use crate::ratmat::{RMatrix, Rational};

    fn names(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }

    pub(crate) fn mixed_gsa() -> GeneralizedSA {
        crate::automata::tests::mixed_gsa()
    }

    pub(crate) fn mixed_source() -> DependentSource {
        let row = |ws: [u64; 5]| ws.iter().map(|&w| Rational::from(w)).collect();
        DependentSource::new(
            names("x", 2),
            names("z", 5),
            vec![row([1, 1, 3, 0, 0]), row([0, 0, 0, 1, 2])],
        )
        .unwrap()
    }

    pub(crate) fn mixed_machine() -> DeterministicSA {
        let t = |images: [Option<usize>; 2]| TransformTable::new(images.to_vec()).unwrap();
        DeterministicSA::new(
            names("s", 2),
            names("z", 5),
            vec![
                t([Some(0), Some(0)]),
                t([Some(0), None]),
                t([Some(1), None]),
                t([Some(0), Some(1)]),
                t([Some(1), Some(1)]),
            ],
        )
        .unwrap()
    }

    /// `γ(·|x) = ((m−x−1)/m, 1/m, x/m)` over `[[1,0],[1,0]]`, `I`, `[[0,1],[0,1]]`.
    pub(crate) fn madic_source(m: u64) -> (DependentSource, DeterministicSA) {
        let gamma = (0..m)
            .map(|x| {
                [m - x - 1, 1, x]
                    .iter()
                    .map(|&c| Rational::new(c, m).unwrap())
                    .collect()
            })
            .collect();
        let source = DependentSource::new(
            (0..m).map(|x| x.to_string()).collect(),
            names("z", 3),
            gamma,
        )
        .unwrap();
        let machine = DeterministicSA::new(
            names("s", 2),
            names("z", 3),
            vec![
                TransformTable::total(&[0, 0]).unwrap(),
                TransformTable::total(&[0, 1]).unwrap(),
                TransformTable::total(&[1, 1]).unwrap(),
            ],
        )
        .unwrap();
        (source, machine)
    }

    #[test]
    fn fixture_machine_embeds_to_expected_basis() {
        let basis = mixed_machine().embed().matrices().to_vec();
        assert_eq!(basis[1], RMatrix::from_integers(&[[1, 0], [0, 0]]).unwrap());
        assert_eq!(basis[2], RMatrix::from_integers(&[[0, 1], [0, 0]]).unwrap());
    }
}
