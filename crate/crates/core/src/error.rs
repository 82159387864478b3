use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    /// 1-based position of the first letter that exceeds the running maximum plus one.
    #[error("growth violation at position {position}")]
    GrowthViolation { position: usize },
    #[error("partition is not in standard form: {0}")]
    NotStandardForm(String),
    #[error("node {node} out of range 1..={n}")]
    NodeOutOfRange { n: usize, node: usize },
    #[error("invalid pair ({i},{j}) for n={n}: {reason}")]
    InvalidPair {
        n: usize,
        i: usize,
        j: usize,
        reason: &'static str,
    },
    #[error("enumeration of n={n} needs B_n={bell} sequences, above the limit {limit}")]
    TooLarge { n: usize, bell: String, limit: u64 },
    #[error("series divisor has a non-unit constant term")]
    NonUnitDivisor,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}
