use thiserror::Error;

/// Errors raised by the engine.
///
/// `NotApplicable` and `GuardExceeded` are usage-level refusals; `Invariant`
/// means a computed object violated a property the engine relies on and is
/// always a bug or a genuine mathematical counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidType(String),
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("weight has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("|W| = {order} exceeds the configured guard {guard}")]
    GuardExceeded { order: u128, guard: u64 },
    #[error("word {0:?} is not a permutation of the simple roots")]
    NotAPermutation(Vec<usize>),
    #[error("cannot parse {0}")]
    Parse(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("engine invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
