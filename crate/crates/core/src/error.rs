use thiserror::Error;

/// Errors raised by the tableau, statistic and sieving routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Row lengths increase somewhere, so the rows do not form a Young diagram.
    #[error("malformed shape: row {row} has length {len}, longer than the row above ({above})")]
    MalformedShape { row: usize, len: usize, above: usize },

    #[error("tableau is not semistandard: {0}")]
    NotSemistandard(String),

    #[error("entry {entry} lies outside the alphabet 1..={alphabet}")]
    EntryOutOfRange { entry: u32, alphabet: u32 },

    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,

    #[error("invalid hook-arm shape (m={m}, n={n}, b={b}): need m >= n >= 1 and b >= 1")]
    InvalidHookArm { m: u32, n: u32, b: u32 },

    #[error("content {content:?} does not fit the family: {reason}")]
    ContentMismatch { content: Vec<u32>, reason: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("infeasible family: beta = {beta} < 0")]
    InfeasibleFamily { beta: i64 },

    #[error("multiset {0:?} does not produce a semistandard tableau")]
    InfeasibleMultiset(Vec<u32>),

    #[error("orbit exceeded {bound} elements without closing")]
    OrbitBound { bound: usize },

    /// Two verification routes that must agree did not.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
