use crate::automata::word::{check_distinct, resolve_word, symbol_index};
use crate::automata::GeneralizedSA;
use crate::error::{Error, Result};
use crate::ratmat::{RMatrix, Rational};

/// A generalized dependent source `(Σ, Ξ, γ)`: a nonnegative weight
/// `γ(z | x)` for every input symbol `x` and output symbol `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependentSource {
    input_alphabet: Vec<String>,
    output_alphabet: Vec<String>,
    /// `gamma[x][z]`
    gamma: Vec<Vec<Rational>>,
}

impl DependentSource {
    pub fn new(
        input_alphabet: Vec<String>,
        output_alphabet: Vec<String>,
        gamma: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        check_distinct(&input_alphabet, Error::DuplicateSymbol)?;
        check_distinct(&output_alphabet, Error::DuplicateSymbol)?;
        if gamma.len() != input_alphabet.len() {
            return Err(Error::CountMismatch {
                what: "weight rows",
                expected: input_alphabet.len(),
                found: gamma.len(),
            });
        }
        if let Some(row) = gamma.iter().find(|row| row.len() != output_alphabet.len()) {
            return Err(Error::CountMismatch {
                what: "weights per row",
                expected: output_alphabet.len(),
                found: row.len(),
            });
        }
        Ok(DependentSource {
            input_alphabet,
            output_alphabet,
            gamma,
        })
    }

    /// The source with `γ(z | x) = [z = x]`.
    pub fn identity(alphabet: Vec<String>) -> Result<Self> {
        let gamma = (0..alphabet.len())
            .map(|x| {
                (0..alphabet.len())
                    .map(|z| {
                        if x == z {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        DependentSource::new(alphabet.clone(), alphabet, gamma)
    }

    pub fn input_alphabet(&self) -> &[String] {
        &self.input_alphabet
    }

    pub fn output_alphabet(&self) -> &[String] {
        &self.output_alphabet
    }

    /// Weight rows indexed like the alphabets.
    pub fn table(&self) -> &[Vec<Rational>] {
        &self.gamma
    }

    /// `γ(z | x)`.
    pub fn weight<S: AsRef<str>>(&self, z: S, x: S) -> Result<&Rational> {
        let x = symbol_index(&self.input_alphabet, x)?;
        let z = symbol_index(&self.output_alphabet, z)?;
        Ok(&self.gamma[x][z])
    }

    /// True iff every `γ(· | x)` sums to 1, i.e. this is a dependent source
    /// in the probabilistic sense.
    pub fn is_probabilistic(&self) -> bool {
        self.gamma
            .iter()
            .all(|row| row.iter().sum::<Rational>().is_one())
    }

    /// `γ(v | u)` for words: 1 for two empty words, 0 for words of different
    /// length, otherwise `Π_t γ(v_t | u_t)`.
    pub fn gamma_word<S: AsRef<str>>(&self, v: &[S], u: &[S]) -> Result<Rational> {
        let v = resolve_word(&self.output_alphabet, v)?;
        let u = resolve_word(&self.input_alphabet, u)?;
        Ok(self.gamma_indices(&v, &u))
    }

    pub(crate) fn gamma_indices(&self, v: &[usize], u: &[usize]) -> Rational {
        if v.len() != u.len() {
            return Rational::zero();
        }
        let mut product = Rational::one();
        for (&z, &x) in v.iter().zip(u) {
            let w = &self.gamma[x][z];
            if w.is_zero() {
                return Rational::zero();
            }
            product = &product * w;
        }
        product
    }

    /// The GSA over this source's input alphabet with
    /// `Q_x = Σ_z γ(z | x) · Q^machine_z`, on the machine's states.
    ///
    /// The machine's alphabet must equal the output alphabet as a set;
    /// symbols are matched by name.
    pub fn sequential_product(&self, machine: &GeneralizedSA) -> Result<GeneralizedSA> {
        let mut lookup = Vec::with_capacity(self.output_alphabet.len());
        for z in &self.output_alphabet {
            let index = symbol_index(machine.alphabet(), z).map_err(|_| {
                Error::AlphabetMismatch(format!("output symbol {z:?} missing from the machine"))
            })?;
            lookup.push(index);
        }
        if machine.alphabet().len() != self.output_alphabet.len() {
            return Err(Error::AlphabetMismatch(format!(
                "machine has {} symbols, source emits {}",
                machine.alphabet().len(),
                self.output_alphabet.len()
            )));
        }
        let zero = RMatrix::zeros(machine.order())?;
        let matrices = self
            .gamma
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&lookup)
                    .try_fold(zero.clone(), |acc, (w, &z)| {
                        acc.add_scaled(w, &machine.matrices()[z])
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        GeneralizedSA::new(
            machine.states().to_vec(),
            self.input_alphabet.clone(),
            matrices,
        )
    }
}
