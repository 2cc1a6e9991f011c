use thiserror::Error;

/// Errors raised while building or combining automata, matrices and sources.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
    #[error("negative value {0} is not allowed")]
    Negative(String),
    #[error("matrix order must be at least 1")]
    EmptyMatrix,
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("dimension mismatch: expected order {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("automaton needs at least one state")]
    NoStates,
    #[error("duplicate state {0:?}")]
    DuplicateState(String),
    #[error("duplicate symbol {0:?}")]
    DuplicateSymbol(String),
    #[error("unknown state {0:?}")]
    UnknownState(String),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("state index {index} out of range for {states} states")]
    StateOutOfRange { index: usize, states: usize },
    #[error("expected {expected} entries for {what}, found {found}")]
    CountMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("matrix for symbol {0:?} is not semideterministic")]
    NotSemideterministic(String),
    #[error("matrix is not stochastic")]
    NotStochastic,
    #[error("matrix is not doubly stochastic")]
    NotDoublyStochastic,
    #[error("support of a doubly stochastic matrix has no perfect matching")]
    NoPerfectMatching,
    #[error("coefficient must be strictly positive, found {0}")]
    NonPositiveCoefficient(String),
    #[error("m-adic base must be at least 2, got {0}")]
    InvalidBase(u64),
    #[error("monoid enumeration exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("state set mismatch: {0}")]
    StateMismatch(String),
    #[error("basis matrix for {0:?} does not match the machine's transitions")]
    BasisMismatch(String),
    #[error("cannot split {0:?} into alphabet symbols")]
    UntokenizableWord(String),
    #[error("malformed document: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
