use super::GeneralizedSA;
use crate::error::{Error, Result};
use crate::ratmat::{RMatrix, Rational};

/// The m-adic semiautomaton: two states `s1`, `s2`, digits `0..m` as input
/// symbols, and `P_x = (1/m)·[[m−x, x], [m−x−1, x+1]]`.
///
/// Reading `x_1 … x_k` from `s1` lands in `s2` with probability
/// `0.x_k…x_1` in base `m`.
pub fn madic(m: u64) -> Result<GeneralizedSA> {
    if m < 2 {
        return Err(Error::InvalidBase(m));
    }
    let alphabet = (0..m).map(|x| x.to_string()).collect();
    let matrices = (0..m)
        .map(|x| {
            let cells = [[m - x, x], [m - x - 1, x + 1]];
            RMatrix::from_fn(2, |i, j| Rational::new(cells[i][j], m).expect("m > 0"))
        })
        .collect::<Result<Vec<_>>>()?;
    GeneralizedSA::new(vec!["s1".into(), "s2".into()], alphabet, matrices)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scaled(m: u64, rows: [[u64; 2]; 2]) -> RMatrix {
        RMatrix::from_fn(2, |i, j| Rational::new(rows[i][j], m).unwrap()).unwrap()
    }

    #[test]
    fn symbol_matrices_match_the_formula() {
        let m2 = madic(2).unwrap();
        assert_eq!(m2.matrix("0").unwrap(), &scaled(2, [[2, 0], [1, 1]]));
        assert_eq!(m2.matrix("1").unwrap(), &scaled(2, [[1, 1], [0, 2]]));
        assert_eq!(
            madic(3).unwrap().matrix("1").unwrap(),
            &scaled(3, [[2, 1], [1, 2]])
        );
        let m10 = madic(10).unwrap();
        assert_eq!(m10.alphabet().len(), 10);
        assert_eq!(m10.matrix("7").unwrap(), &scaled(10, [[3, 7], [2, 8]]));
    }

    #[test]
    fn rejects_small_bases() {
        assert_eq!(madic(1), Err(Error::InvalidBase(1)));
        assert_eq!(madic(0), Err(Error::InvalidBase(0)));
    }

    #[test]
    fn words_follow_the_closed_form() {
        for m in [2u64, 3, 5] {
            let a = madic(m).unwrap();
            let mut words: Vec<Vec<u64>> = vec![vec![]];
            for _ in 0..5 {
                let mut next = Vec::new();
                for w in &words {
                    for x in 0..m {
                        let mut longer = w.clone();
                        longer.push(x);
                        next.push(longer);
                    }
                }
                for u in &next {
                    let k = u.len() as u32;
                    let mk = m.pow(k);
                    // w_k = x_k m^{k-1} + … + x_1
                    let w: u64 = u
                        .iter()
                        .enumerate()
                        .map(|(i, &x)| x * m.pow(i as u32))
                        .sum();
                    let expected = scaled(mk, [[mk - w, w], [mk - w - 1, w + 1]]);
                    let symbols: Vec<String> = u.iter().map(|x| x.to_string()).collect();
                    assert_eq!(a.q_word(&symbols).unwrap(), expected, "m={m} u={u:?}");
                    assert!(expected.is_stochastic());
                }
                words = next;
            }
        }
    }
}
