use thiserror::Error;

/// Errors raised while building bit strings, tables or running a search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A textual bit string contained something other than `0`, `1` or
    /// whitespace.
    #[error("malformed bit string: unexpected {found:?} at character {position}")]
    InvalidSymbol { position: usize, found: char },

    /// A requested bit length does not fit in the bytes supplied.
    #[error("malformed input: bit length {requested} exceeds the {available} bits available")]
    BitLenTooLarge { requested: usize, available: usize },

    /// A bit index fell outside the valid range for the operation.
    #[error("bit index {index} out of range (valid range {min}..{len})")]
    IndexOutOfRange {
        index: usize,
        min: usize,
        len: usize,
    },

    /// The pattern is empty.
    #[error("pattern must contain at least one bit")]
    EmptyPattern,

    /// The pattern is too short for the selected matcher.
    #[error("pattern length {m} is below the minimum of {min} bits required by `{algorithm}`")]
    PatternTooShort {
        algorithm: &'static str,
        m: usize,
        min: usize,
    },

    /// The pattern is longer than the text.
    #[error("pattern length {m} exceeds text length {n}")]
    PatternLongerThanText { m: usize, n: usize },

    /// An algorithm name could not be parsed.
    #[error("unknown algorithm {0:?} (expected oracle, naive, hash, skip or auto)")]
    UnknownAlgorithm(alloc::string::String),
}

/// Result alias for this crate.
pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn check_lengths(m: usize, n: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::EmptyPattern);
    }
    if m > n {
        return Err(Error::PatternLongerThanText { m, n });
    }
    Ok(())
}
