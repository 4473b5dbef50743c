use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal {text:?}: {reason}")]
    InvalidRational { text: String, reason: &'static str },

    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),

    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid cycle notation {text:?}: {reason}")]
    CycleSyntax { text: String, reason: String },

    #[error("index {index} appears more than once in cycle notation")]
    RepeatedIndex { index: usize },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("column {column} is not a signed unit vector, or two columns share a support row")]
    NotSignedPermutation { column: usize },

    #[error("group closure exceeds the limit of {limit} elements")]
    ClosureLimitExceeded { limit: usize },

    #[error("symmetry detection is capped at n = {cap}, got n = {n}; supply generators instead")]
    DimensionTooLarge { n: usize, cap: usize },

    #[error(
        "backtracking and exhaustive symmetry detection disagree ({backtrack} vs {naive} elements)"
    )]
    DetectionMismatch { backtrack: usize, naive: usize },

    #[error("invalid orbit partition: {0}")]
    InvalidPartition(String),

    #[error("orbit partition is not contiguous")]
    NonContiguousPartition,

    #[error("utility vector is not constant on orbit {orbit} (1-indexed block)")]
    UtilityNotOrbitConstant { orbit: usize },

    #[error("utility vector must have at least one nonzero entry")]
    ZeroUtility,

    #[error("point is not feasible for the linear program")]
    InfeasiblePoint,

    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },

    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(op: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            op,
            expected,
            found,
        })
    }
}
