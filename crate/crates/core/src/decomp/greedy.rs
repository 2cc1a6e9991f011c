use super::{Decomposition, Term};
use crate::error::{Error, Result};
use crate::ratmat::{RMatrix, Rational};

/// One iteration of a greedy reduction: the residual `P_k` it started
/// from, the column chosen in each row (`None` for zero rows), and the
/// amount `m(P_k)` subtracted along the selection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyStep {
    pub residual: RMatrix,
    pub selection: Vec<Option<usize>>,
    pub coeff: Rational,
}

#[derive(Clone, Copy, Debug)]
enum Pivot {
    /// Leftmost minimal nonzero entry per row; subtract the global minimum.
    RowMinimum,
    /// Leftmost nonzero entry per row; subtract the smallest selected entry.
    RowLeftmost,
}

fn select(row: &[Rational], pivot: Pivot) -> Option<usize> {
    let mut nonzero = row.iter().enumerate().filter(|(_, e)| !e.is_zero());
    match pivot {
        Pivot::RowLeftmost => nonzero.next().map(|(j, _)| j),
        // min_by returns the first of several equal minima
        Pivot::RowMinimum => nonzero.min_by(|a, b| a.1.cmp(b.1)).map(|(j, _)| j),
    }
}

fn reduce(a: &RMatrix, pivot: Pivot) -> (Decomposition, Vec<GreedyStep>) {
    let mut residual = a.clone();
    let mut terms = Vec::new();
    let mut steps = Vec::new();
    while !residual.is_zero() {
        let selection: Vec<Option<usize>> = residual.rows().map(|row| select(row, pivot)).collect();
        let coeff = match pivot {
            Pivot::RowMinimum => residual.entries().iter().filter(|e| !e.is_zero()).min(),
            Pivot::RowLeftmost => selection
                .iter()
                .enumerate()
                .filter_map(|(i, j)| j.map(|j| residual.get(i, j)))
                .min(),
        }
        .expect("residual is nonzero")
        .clone();
        let basis = RMatrix::from_partial_map(&selection).expect("selection within bounds");
        let next = residual
            .checked_sub_scaled(&coeff, &basis)
            .expect("every selected entry is at least the subtracted amount");
        debug_assert!(next.nnz() < residual.nnz());
        steps.push(GreedyStep {
            residual: std::mem::replace(&mut residual, next),
            selection,
            coeff: coeff.clone(),
        });
        terms.push(Term::new(coeff, basis));
    }
    (Decomposition::from_terms_unchecked(a.order(), terms), steps)
}

/// Writes a nonnegative matrix as a conical combination of
/// semideterministic matrices.
///
/// Each round puts a 1 at the leftmost minimal nonzero entry of every
/// nonzero row, subtracts the smallest nonzero entry of the whole residual
/// times that pattern, and repeats until nothing is left. Every round
/// zeroes at least one entry, so the number of terms never exceeds the
/// number of nonzero entries of `a`. Terms are returned in the order they
/// were produced; repeated patterns are not merged (see
/// [`Decomposition::dedup`]).
pub fn semidet_decompose(a: &RMatrix) -> Decomposition {
    reduce(a, Pivot::RowMinimum).0
}

/// The full reduction sequence behind [`semidet_decompose`].
pub fn semidet_trace(a: &RMatrix) -> Vec<GreedyStep> {
    reduce(a, Pivot::RowMinimum).1
}

/// Writes a stochastic matrix as a convex combination of deterministic
/// matrices.
///
/// Every row selects its leftmost nonzero entry and the smallest selected
/// entry is subtracted along the selection. Row sums shrink in lockstep,
/// so no row runs empty before the others and every basis matrix is
/// deterministic. Geometrically this cuts `[0, 1)` at the cumulative row
/// sums of all rows; each piece maps every row to the column whose
/// cumulative interval contains it.
pub fn det_decompose(p: &RMatrix) -> Result<Decomposition> {
    if !p.is_stochastic() {
        return Err(Error::NotStochastic);
    }
    Ok(reduce(p, Pivot::RowLeftmost).0)
}

/// The reduction sequence behind [`det_decompose`].
pub fn det_trace(p: &RMatrix) -> Result<Vec<GreedyStep>> {
    if !p.is_stochastic() {
        return Err(Error::NotStochastic);
    }
    Ok(reduce(p, Pivot::RowLeftmost).1)
}
