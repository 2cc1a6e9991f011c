#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use semiautomata::automata::GeneralizedSA;
use semiautomata::ratmat::{RMatrix, Rational};

pub fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn m<const N: usize>(rows: [[u64; N]; N]) -> RMatrix {
    RMatrix::from_integers(&rows).unwrap()
}

pub fn ratio(p: u64, q: u64) -> Rational {
    Rational::new(p, q).unwrap()
}

/// Entries are zero with probability 1/3, otherwise `a/b` with
/// `a ≤ 20`, `1 ≤ b ≤ 10`.
pub fn nonnegative_matrix(rng: &mut ChaCha8Rng, n: usize) -> RMatrix {
    RMatrix::from_fn(n, |_, _| {
        if rng.gen_range(0..3) == 0 {
            Rational::zero()
        } else {
            ratio(rng.gen_range(0..=20), rng.gen_range(1..=10))
        }
    })
    .unwrap()
}

/// Each row normalizes random weights, with at least one positive entry.
pub fn stochastic_matrix(rng: &mut ChaCha8Rng, n: usize) -> RMatrix {
    let weights: Vec<Vec<u64>> = (0..n)
        .map(|_| {
            let mut row: Vec<u64> = (0..n)
                .map(|_| {
                    if rng.gen_bool(0.4) {
                        0
                    } else {
                        rng.gen_range(1..=20)
                    }
                })
                .collect();
            if row.iter().all(|&w| w == 0) {
                row[rng.gen_range(0..n)] = rng.gen_range(1..=20);
            }
            row
        })
        .collect();
    RMatrix::from_fn(n, |i, j| ratio(weights[i][j], weights[i].iter().sum())).unwrap()
}

pub fn permutation(rng: &mut ChaCha8Rng, n: usize) -> RMatrix {
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.shuffle(rng);
    RMatrix::from_partial_map(&sigma.into_iter().map(Some).collect::<Vec<_>>()).unwrap()
}

/// A convex combination of `1..=n` random permutation matrices with
/// random rational weights.
pub fn doubly_stochastic_matrix(rng: &mut ChaCha8Rng, n: usize) -> RMatrix {
    let k = rng.gen_range(1..=n);
    let weights: Vec<u64> = (0..k).map(|_| rng.gen_range(1..=10)).collect();
    let total: u64 = weights.iter().sum();
    weights.iter().fold(RMatrix::zeros(n).unwrap(), |acc, &w| {
        acc.add_scaled(&ratio(w, total), &permutation(rng, n))
            .unwrap()
    })
}

pub fn gsa(matrices: Vec<RMatrix>) -> GeneralizedSA {
    let n = matrices[0].order();
    let k = matrices.len();
    GeneralizedSA::new(names("s", n), names("a", k), matrices).unwrap()
}

/// `n ≤ max_n` states and `1 ≤ |Σ| ≤ max_symbols` symbols.
pub fn random_gsa(
    rng: &mut ChaCha8Rng,
    max_n: usize,
    max_symbols: usize,
    matrix: fn(&mut ChaCha8Rng, usize) -> RMatrix,
) -> GeneralizedSA {
    let n = rng.gen_range(1..=max_n);
    let k = rng.gen_range(1..=max_symbols);
    gsa((0..k).map(|_| matrix(rng, n)).collect())
}
