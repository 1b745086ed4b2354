use alloc::string::String;

/// Errors raised by the core algorithms.
///
/// Precondition violations carry the failed inequality verbatim so callers
/// (and the CLI) can report exactly which hypothesis did not hold.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("malformed tableau: {0}")]
    MalformedTableau(String),
    #[error("letter {letter} repeats in column {column}")]
    ColumnRepeat { letter: u32, column: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u64, found: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cost cap of {cap} enumeration nodes exceeded")]
    CostCapExceeded { cap: u64 },
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
    #[error("witness search exhausted after {tries} tries")]
    WitnessSearchExhausted { tries: u32 },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

macro_rules! precondition {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::Error::Precondition(alloc::format!($($arg)+)));
        }
    };
}
pub(crate) use precondition;
