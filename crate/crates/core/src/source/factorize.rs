use super::DependentSource;
use crate::automata::{AutomatonClass, DeterministicSA, GeneralizedSA};
use crate::decomp::{birkhoff_decompose, det_decompose, semidet_decompose, Decomposition};
use crate::error::{Error, Result};
use crate::ratmat::{RMatrix, Rational};

/// How [`factorize_with`] decomposes the symbol matrices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Birkhoff for doubly stochastic automata, cumulative splitting for
    /// stochastic ones, the minimal-entry greedy reduction otherwise.
    #[default]
    Auto,
    /// Always the minimal-entry greedy reduction.
    Greedy,
}

/// A generalized semiautomaton written as the sequential product of a
/// dependent source and a semideterministic machine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    source: DependentSource,
    machine: DeterministicSA,
    basis: Vec<RMatrix>,
}

impl Factorization {
    /// Pairs a source with the machine reading its output symbols; the
    /// machine's alphabet must list the output symbols in the same order.
    pub fn new(source: DependentSource, machine: DeterministicSA) -> Result<Self> {
        if source.output_alphabet() != machine.alphabet() {
            return Err(Error::AlphabetMismatch(format!(
                "source emits {:?} but the machine reads {:?}",
                source.output_alphabet(),
                machine.alphabet()
            )));
        }
        let basis = machine.embed().matrices().to_vec();
        Ok(Factorization {
            source,
            machine,
            basis,
        })
    }

    /// Like [`Factorization::new`], additionally checking a stored basis
    /// against the machine's transitions.
    pub fn with_basis(
        source: DependentSource,
        machine: DeterministicSA,
        basis: Vec<RMatrix>,
    ) -> Result<Self> {
        let f = Factorization::new(source, machine)?;
        if basis.len() != f.basis.len() {
            return Err(Error::CountMismatch {
                what: "basis matrices",
                expected: f.basis.len(),
                found: basis.len(),
            });
        }
        if let Some(k) = (0..basis.len()).find(|&k| basis[k] != f.basis[k]) {
            return Err(Error::BasisMismatch(f.machine.alphabet()[k].clone()));
        }
        Ok(f)
    }

    pub fn source(&self) -> &DependentSource {
        &self.source
    }

    pub fn machine(&self) -> &DeterministicSA {
        &self.machine
    }

    /// `D_z` for each output symbol, in output-alphabet order.
    pub fn basis(&self) -> &[RMatrix] {
        &self.basis
    }

    /// The machine's strongest shared matrix class.
    pub fn machine_class(&self) -> AutomatonClass {
        self.machine.embed().classify()
    }

    /// The sequential product of the source and the embedded machine.
    pub fn product(&self) -> GeneralizedSA {
        self.source
            .sequential_product(&self.machine.embed())
            .expect("alphabets checked on construction")
    }
}

/// The per-symbol decompositions [`factorize_with`] builds on, with
/// repeated basis matrices merged.
pub fn decompose_symbols(a: &GeneralizedSA, strategy: Strategy) -> Vec<Decomposition> {
    let class = a.classify();
    a.matrices()
        .iter()
        .map(|q| {
            let d = match strategy {
                Strategy::Auto if class.is_doubly_stochastic() => {
                    birkhoff_decompose(q).expect("doubly stochastic")
                }
                Strategy::Auto if class.is_stochastic() => det_decompose(q).expect("stochastic"),
                _ => semidet_decompose(q),
            };
            d.dedup()
        })
        .collect()
}

/// Factorizes with [`Strategy::Auto`].
pub fn factorize(a: &GeneralizedSA) -> Factorization {
    factorize_with(a, Strategy::Auto)
}

/// Writes `a` as a sequential product of a dependent source and a
/// semideterministic machine on the same states.
///
/// The output alphabet consists of the distinct basis matrices of the
/// symbol decompositions, named `z1, z2, …` in order of first appearance
/// (symbols in alphabet order, terms in decomposition order), and
/// `γ(z | x)` is the coefficient of `D_z` in the decomposition of `Q_x`.
/// Stochastic inputs yield a probabilistic source and a total machine;
/// doubly stochastic inputs under [`Strategy::Auto`] yield a permutation
/// machine.
pub fn factorize_with(a: &GeneralizedSA, strategy: Strategy) -> Factorization {
    let decompositions = decompose_symbols(a, strategy);
    let mut basis: Vec<RMatrix> = Vec::new();
    let mut entries: Vec<Vec<(usize, Rational)>> = Vec::with_capacity(decompositions.len());
    for d in &decompositions {
        let row = d
            .terms()
            .iter()
            .map(|t| {
                let z = match basis.iter().position(|b| b == &t.basis) {
                    Some(z) => z,
                    None => {
                        basis.push(t.basis.clone());
                        basis.len() - 1
                    }
                };
                (z, t.coeff.clone())
            })
            .collect();
        entries.push(row);
    }
    let output_alphabet: Vec<String> = (1..=basis.len()).map(|k| format!("z{k}")).collect();
    let gamma = entries
        .into_iter()
        .map(|row| {
            let mut dense = vec![Rational::zero(); basis.len()];
            for (z, c) in row {
                dense[z] = c;
            }
            dense
        })
        .collect();
    let source = DependentSource::new(a.alphabet().to_vec(), output_alphabet.clone(), gamma)
        .expect("one weight per output symbol");
    let machine = GeneralizedSA::new(a.states().to_vec(), output_alphabet, basis)
        .and_then(|b| b.extract())
        .expect("basis matrices are semideterministic");
    Factorization::new(source, machine).expect("alphabets agree")
}
