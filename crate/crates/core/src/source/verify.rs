use super::Factorization;
use crate::automata::GeneralizedSA;
use crate::error::{Error, Result};
use crate::ratmat::RMatrix;

/// Where a factorization disagrees with the automaton it claims to
/// reproduce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// `Q_x ≠ Σ_z γ(z|x) D_z` for a single input symbol.
    Symbol {
        symbol: String,
        expected: RMatrix,
        actual: RMatrix,
    },
    /// `Q_u ≠ Σ_v γ(v|u) Q^B_v` for a word.
    Word {
        word: Vec<String>,
        expected: RMatrix,
        actual: RMatrix,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub symbols_checked: usize,
    pub words_checked: usize,
    pub failure: Option<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks a factorization against `a`, first symbol by symbol and then on
/// every word of length at most `max_word_len`, where the right-hand side
/// `Σ_{v ∈ Ξ^{|u|}} γ(v|u) · Q^B_v` is summed by brute force over all
/// output words. Stops at the first counterexample.
///
/// Fails with an error only when `a` and `f` do not even share states and
/// input alphabet.
pub fn verify_factorization(
    a: &GeneralizedSA,
    f: &Factorization,
    max_word_len: usize,
) -> Result<VerificationReport> {
    let source = f.source();
    if a.states() != f.machine().states() {
        return Err(Error::StateMismatch(format!(
            "automaton has {:?}, machine has {:?}",
            a.states(),
            f.machine().states()
        )));
    }
    let mut sorted_a = a.alphabet().to_vec();
    let mut sorted_source = source.input_alphabet().to_vec();
    sorted_a.sort();
    sorted_source.sort();
    if sorted_a != sorted_source {
        return Err(Error::AlphabetMismatch(format!(
            "automaton reads {:?}, source reads {:?}",
            a.alphabet(),
            source.input_alphabet()
        )));
    }
    // input symbols are indexed in the source's order from here on
    let remap: Vec<usize> = source
        .input_alphabet()
        .iter()
        .map(|x| {
            a.alphabet()
                .iter()
                .position(|y| y == x)
                .expect("same symbols")
        })
        .collect();
    let machine = f.machine().embed();
    let product = f.product();

    let mut report = VerificationReport {
        symbols_checked: 0,
        words_checked: 0,
        failure: None,
    };
    for (x, symbol) in source.input_alphabet().iter().enumerate() {
        report.symbols_checked += 1;
        let expected = &a.matrices()[remap[x]];
        let actual = &product.matrices()[x];
        if expected != actual {
            report.failure = Some(Counterexample::Symbol {
                symbol: symbol.clone(),
                expected: expected.clone(),
                actual: actual.clone(),
            });
            return Ok(report);
        }
    }

    let sigma = source.input_alphabet().len();
    let xi = source.output_alphabet().len();
    let zero = RMatrix::zeros(a.order())?;
    for len in 0..=max_word_len {
        for u in words(sigma, len) {
            report.words_checked += 1;
            let original: Vec<usize> = u.iter().map(|&x| remap[x]).collect();
            let expected = a.q_indices(&original);
            let mut actual = zero.clone();
            for v in words(xi, len) {
                let weight = source.gamma_indices(&v, &u);
                if !weight.is_zero() {
                    actual = actual.add_scaled(&weight, &machine.q_indices(&v))?;
                }
            }
            if expected != actual {
                report.failure = Some(Counterexample::Word {
                    word: u
                        .iter()
                        .map(|&x| source.input_alphabet()[x].clone())
                        .collect(),
                    expected,
                    actual,
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// All words of the given length over `{0, …, k-1}`, in lexicographic order.
fn words(k: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if len == 0 {
        Some(1)
    } else {
        k.checked_pow(len as u32)
    };
    let total = total.expect("word count overflows usize");
    (0..total).map(move |mut index| {
        let mut word = vec![0; len];
        for slot in word.iter_mut().rev() {
            *slot = index % k;
            index /= k;
        }
        word
    })
}
