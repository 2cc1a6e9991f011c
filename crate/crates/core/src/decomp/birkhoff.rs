use super::matching::perfect_matching;
use super::{Decomposition, Term};
use crate::error::{Error, Result};
use crate::ratmat::RMatrix;

/// Writes a doubly stochastic matrix as a convex combination of
/// permutation matrices.
///
/// Each round finds a perfect matching on the support of the residual,
/// subtracts the smallest matched entry times the matching's permutation
/// matrix, and repeats until the residual vanishes. The residual stays a
/// multiple of a doubly stochastic matrix, so a perfect matching always
/// exists; [`Error::NoPerfectMatching`] therefore indicates a bug.
pub fn birkhoff_decompose(d: &RMatrix) -> Result<Decomposition> {
    if !d.is_doubly_stochastic() {
        return Err(Error::NotDoublyStochastic);
    }
    let n = d.order();
    let mut residual = d.clone();
    let mut terms = Vec::new();
    while !residual.is_zero() {
        let support: Vec<Vec<usize>> = residual
            .rows()
            .map(|row| (0..n).filter(|&j| !row[j].is_zero()).collect())
            .collect();
        let matching = perfect_matching(&support).ok_or(Error::NoPerfectMatching)?;
        let coeff = matching
            .iter()
            .enumerate()
            .map(|(i, &j)| residual.get(i, j))
            .min()
            .expect("order >= 1")
            .clone();
        let images: Vec<Option<usize>> = matching.into_iter().map(Some).collect();
        let basis = RMatrix::from_partial_map(&images)?;
        residual = residual
            .checked_sub_scaled(&coeff, &basis)
            .ok_or(Error::NoPerfectMatching)?;
        terms.push(Term::new(coeff, basis));
    }
    Ok(Decomposition::from_terms_unchecked(n, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat::Rational;
    use proptest::prelude::*;

    fn perm(images: &[usize]) -> RMatrix {
        let images: Vec<_> = images.iter().map(|&j| Some(j)).collect();
        RMatrix::from_partial_map(&images).unwrap()
    }

    #[test]
    fn permutation_matrices_are_single_terms() {
        for p in [vec![0], vec![1, 0], vec![2, 0, 1], vec![3, 1, 0, 2]] {
            let m = perm(&p);
            let d = birkhoff_decompose(&m).unwrap();
            assert_eq!(d.terms(), &[Term::new(Rational::one(), m)]);
        }
    }

    #[test]
    fn uniform_two_by_two() {
        let half = Rational::new(1, 2).unwrap();
        let u = RMatrix::from_fn(2, |_, _| half.clone()).unwrap();
        let d = birkhoff_decompose(&u).unwrap();
        assert_eq!(
            d.terms(),
            &[
                Term::new(half.clone(), perm(&[0, 1])),
                Term::new(half, perm(&[1, 0]))
            ]
        );
    }

    #[test]
    fn uniform_three_by_three() {
        let third = Rational::new(1, 3).unwrap();
        let u = RMatrix::from_fn(3, |_, _| third.clone()).unwrap();
        let d = birkhoff_decompose(&u).unwrap();
        assert_eq!(d.recompose(), u);
        assert_eq!(d.len(), 3);
        assert!(d.len() <= 3 * 3 - 2 * 3 + 2);
        assert!(d
            .terms()
            .iter()
            .all(|t| t.coeff == third && t.basis.is_permutation()));
    }

    #[test]
    fn rejects_non_doubly_stochastic_input() {
        let p = RMatrix::from_integers(&[[1, 0], [1, 0]]).unwrap();
        assert_eq!(birkhoff_decompose(&p), Err(Error::NotDoublyStochastic));
    }

    fn mixture(n: usize) -> impl Strategy<Value = RMatrix> {
        let perms =
            proptest::collection::vec(Just((0..n).collect::<Vec<_>>()).prop_shuffle(), 1..=n);
        let weights = proptest::collection::vec(1u64..20, n);
        (perms, weights).prop_map(move |(perms, weights)| {
            let total: u64 = weights[..perms.len()].iter().sum();
            perms
                .iter()
                .zip(&weights)
                .fold(RMatrix::zeros(n).unwrap(), |acc, (p, &w)| {
                    acc.add_scaled(&Rational::new(w, total).unwrap(), &perm(p))
                        .unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn mixtures_of_permutations_decompose(d in (1usize..=6).prop_flat_map(mixture)) {
            let n = d.order();
            let dec = birkhoff_decompose(&d).unwrap();
            prop_assert!(dec.terms().iter().all(|t| t.basis.is_permutation()));
            prop_assert!(dec.coefficient_sum().is_one());
            prop_assert_eq!(dec.recompose(), d);
            prop_assert!(dec.len() <= n * n + 2 - 2 * n);
        }
    }
}
