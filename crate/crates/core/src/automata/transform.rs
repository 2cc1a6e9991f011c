use std::fmt;

use crate::error::{Error, Result};
use crate::ratmat::RMatrix;

/// A partial map on `{0, …, n-1}`: one element of the full transformation
/// monoid on the state set, with `None` marking an undefined image.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransformTable {
    images: Vec<Option<usize>>,
}

impl TransformTable {
    pub fn new(images: Vec<Option<usize>>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::NoStates);
        }
        let states = images.len();
        if let Some(&index) = images.iter().flatten().find(|&&j| j >= states) {
            return Err(Error::StateOutOfRange { index, states });
        }
        Ok(TransformTable { images })
    }

    /// Shorthand for a total map.
    pub fn total(images: &[usize]) -> Result<Self> {
        TransformTable::new(images.iter().copied().map(Some).collect())
    }

    pub fn identity(states: usize) -> Result<Self> {
        TransformTable::new((0..states).map(Some).collect())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, state: usize) -> Option<usize> {
        self.images.get(state).copied().flatten()
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    pub fn is_total(&self) -> bool {
        self.images.iter().all(Option::is_some)
    }

    /// Apply `self` first, then `next`. Undefined images stay undefined.
    pub fn then(&self, next: &TransformTable) -> TransformTable {
        TransformTable {
            images: self
                .images
                .iter()
                .map(|image| image.and_then(|s| next.image(s)))
                .collect(),
        }
    }

    /// The 0/1 matrix with a 1 at `(i, j)` iff the map sends `i` to `j`.
    pub fn to_matrix(&self) -> RMatrix {
        RMatrix::from_partial_map(&self.images).expect("images validated on construction")
    }

    /// Renders the map as `a↦b, c↦-` using the given state names.
    pub fn render<S: AsRef<str>>(&self, states: &[S]) -> String {
        self.images
            .iter()
            .enumerate()
            .map(|(i, image)| {
                let target = image.map_or("-", |j| states[j].as_ref());
                format!("{}↦{}", states[i].as_ref(), target)
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for TransformTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.degree()).map(|i| i.to_string()).collect();
        f.write_str(&self.render(&names))
    }
}
