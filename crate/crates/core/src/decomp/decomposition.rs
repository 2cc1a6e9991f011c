use crate::error::{Error, Result};
use crate::ratmat::{RMatrix, Rational};

/// One weighted basis matrix of a conical combination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub basis: RMatrix,
}

impl Term {
    pub fn new(coeff: Rational, basis: RMatrix) -> Self {
        Term { coeff, basis }
    }
}

/// A matrix written as `Σ α_k D_k` with `α_k > 0` and every `D_k`
/// semideterministic of the same order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    order: usize,
    terms: Vec<Term>,
}

impl Decomposition {
    pub fn new(order: usize, terms: Vec<Term>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyMatrix);
        }
        for term in &terms {
            if term.coeff.is_zero() {
                return Err(Error::NonPositiveCoefficient(term.coeff.to_string()));
            }
            if term.basis.order() != order {
                return Err(Error::DimensionMismatch {
                    expected: order,
                    found: term.basis.order(),
                });
            }
            if !term.basis.is_semideterministic() {
                return Err(Error::NotSemideterministic(term.basis.to_string()));
            }
        }
        Ok(Decomposition { order, terms })
    }

    pub(crate) fn from_terms_unchecked(order: usize, terms: Vec<Term>) -> Self {
        debug_assert!(Decomposition::new(order, terms.clone()).is_ok());
        Decomposition { order, terms }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_sum(&self) -> Rational {
        self.terms.iter().map(|t| &t.coeff).sum()
    }

    /// `Σ α_k D_k`; the empty decomposition gives the zero matrix.
    pub fn recompose(&self) -> RMatrix {
        let zero = RMatrix::zeros(self.order).expect("order >= 1");
        self.terms.iter().fold(zero, |acc, t| {
            acc.add_scaled(&t.coeff, &t.basis)
                .expect("orders validated")
        })
    }

    /// Merges repeated basis matrices by summing their coefficients,
    /// keeping the position of each basis matrix's first occurrence.
    pub fn dedup(&self) -> Decomposition {
        let mut merged: Vec<Term> = Vec::with_capacity(self.terms.len());
        for term in &self.terms {
            match merged.iter_mut().find(|t| t.basis == term.basis) {
                Some(existing) => existing.coeff = &existing.coeff + &term.coeff,
                None => merged.push(term.clone()),
            }
        }
        Decomposition {
            order: self.order,
            terms: merged,
        }
    }
}
