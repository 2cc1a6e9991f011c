use std::collections::BTreeSet;
use std::fmt;

use super::Rational;
use crate::error::{Error, Result};

/// Structural classes a nonnegative square matrix can belong to.
///
/// Containments: permutation ⊆ deterministic ⊆ semideterministic and
/// permutation ⊆ doubly stochastic ⊆ stochastic. Every deterministic
/// matrix is also stochastic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MatrixClass {
    Nonnegative,
    Stochastic,
    DoublyStochastic,
    Deterministic,
    Semideterministic,
    Permutation,
}

impl MatrixClass {
    pub fn label(self) -> &'static str {
        match self {
            MatrixClass::Nonnegative => "nonnegative",
            MatrixClass::Stochastic => "stochastic",
            MatrixClass::DoublyStochastic => "doubly-stochastic",
            MatrixClass::Deterministic => "deterministic",
            MatrixClass::Semideterministic => "semideterministic",
            MatrixClass::Permutation => "permutation",
        }
    }
}

impl fmt::Display for MatrixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Dense square matrix of nonnegative rationals, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RMatrix {
    order: usize,
    entries: Vec<Rational>,
}

impl RMatrix {
    /// Builds a matrix from its rows; rows must form a nonempty square.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(order * order);
        for (row, values) in rows.into_iter().enumerate() {
            if values.len() != order {
                return Err(Error::RaggedMatrix {
                    row,
                    expected: order,
                    found: values.len(),
                });
            }
            entries.extend(values);
        }
        Ok(RMatrix { order, entries })
    }

    /// Convenience constructor for integer matrices.
    pub fn from_integers<R: AsRef<[u64]>>(rows: &[R]) -> Result<Self> {
        RMatrix::from_rows(
            rows.iter()
                .map(|row| row.as_ref().iter().map(|&v| Rational::from(v)).collect())
                .collect(),
        )
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyMatrix);
        }
        let entries = (0..order * order)
            .map(|k| f(k / order, k % order))
            .collect();
        Ok(RMatrix { order, entries })
    }

    pub fn zeros(order: usize) -> Result<Self> {
        RMatrix::from_fn(order, |_, _| Rational::zero())
    }

    /// The identity `I_n`.
    pub fn identity(order: usize) -> Result<Self> {
        RMatrix::from_fn(order, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// The 0/1 matrix of a partial map: entry `(i, j)` is 1 iff `images[i] == Some(j)`.
    pub fn from_partial_map(images: &[Option<usize>]) -> Result<Self> {
        let order = images.len();
        if let Some(&index) = images.iter().flatten().find(|&&j| j >= order) {
            return Err(Error::StateOutOfRange {
                index,
                states: order,
            });
        }
        RMatrix::from_fn(order, |i, j| {
            if images[i] == Some(j) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.order)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    fn check_order(&self, other: &RMatrix) -> Result<()> {
        if self.order != other.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                found: other.order,
            });
        }
        Ok(())
    }

    /// Exact product `self · other`.
    pub fn multiply(&self, other: &RMatrix) -> Result<RMatrix> {
        self.check_order(other)?;
        let n = self.order;
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let slot = &mut entries[i * n + j];
                        *slot = &*slot + &(a * b);
                    }
                }
            }
        }
        Ok(RMatrix { order: n, entries })
    }

    /// `self + c · m`.
    pub fn add_scaled(&self, c: &Rational, m: &RMatrix) -> Result<RMatrix> {
        self.check_order(m)?;
        if c.is_zero() {
            return Ok(self.clone());
        }
        let entries = self
            .entries
            .iter()
            .zip(&m.entries)
            .map(|(a, b)| if b.is_zero() { a.clone() } else { a + &(c * b) })
            .collect();
        Ok(RMatrix {
            order: self.order,
            entries,
        })
    }

    /// `self - c · m`, or `None` if any entry would become negative.
    pub fn checked_sub_scaled(&self, c: &Rational, m: &RMatrix) -> Option<RMatrix> {
        if self.order != m.order {
            return None;
        }
        let entries = self
            .entries
            .iter()
            .zip(&m.entries)
            .map(|(a, b)| a.checked_sub(&(c * b)))
            .collect::<Option<Vec<_>>>()?;
        Some(RMatrix {
            order: self.order,
            entries,
        })
    }

    pub fn row_sums(&self) -> Vec<Rational> {
        self.rows().map(|row| row.iter().sum()).collect()
    }

    pub fn column_sums(&self) -> Vec<Rational> {
        (0..self.order)
            .map(|j| (0..self.order).map(|i| self.get(i, j)).sum())
            .collect()
    }

    pub fn is_stochastic(&self) -> bool {
        self.row_sums().iter().all(Rational::is_one)
    }

    pub fn is_doubly_stochastic(&self) -> bool {
        self.is_stochastic() && self.column_sums().iter().all(Rational::is_one)
    }

    /// Row-wise view of a 0/1 matrix with at most one 1 per row: `Some(j)`
    /// for a row whose single 1 sits in column `j`, `None` for a zero row.
    /// Returns `None` overall if the matrix is not semideterministic.
    pub fn row_images(&self) -> Option<Vec<Option<usize>>> {
        self.rows()
            .map(|row| {
                let mut image = None;
                for (j, e) in row.iter().enumerate() {
                    if e.is_zero() {
                        continue;
                    }
                    if !e.is_one() || image.is_some() {
                        return Err(());
                    }
                    image = Some(j);
                }
                Ok(image)
            })
            .collect::<Result<Vec<_>, ()>>()
            .ok()
    }

    pub fn is_semideterministic(&self) -> bool {
        self.row_images().is_some()
    }

    pub fn is_deterministic(&self) -> bool {
        self.row_images()
            .is_some_and(|images| images.iter().all(Option::is_some))
    }

    pub fn is_permutation(&self) -> bool {
        let Some(images) = self.row_images() else {
            return false;
        };
        let mut hit = vec![false; self.order];
        for image in images {
            match image {
                Some(j) if !hit[j] => hit[j] = true,
                _ => return false,
            }
        }
        true
    }

    /// Every class label that holds for this matrix.
    pub fn classify(&self) -> BTreeSet<MatrixClass> {
        let mut classes = BTreeSet::from([MatrixClass::Nonnegative]);
        let stochastic = self.is_stochastic();
        if stochastic {
            classes.insert(MatrixClass::Stochastic);
            if self.column_sums().iter().all(Rational::is_one) {
                classes.insert(MatrixClass::DoublyStochastic);
            }
        }
        if let Some(images) = self.row_images() {
            classes.insert(MatrixClass::Semideterministic);
            if images.iter().all(Option::is_some) {
                classes.insert(MatrixClass::Deterministic);
                if self.is_permutation() {
                    classes.insert(MatrixClass::Permutation);
                }
            }
        }
        classes
    }
}

impl fmt::Display for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.chunks(self.order).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            f.write_str("[")?;
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str("  ")?;
                }
                write!(f, "{cell:>width$}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}
