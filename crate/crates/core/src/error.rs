use thiserror::Error;

/// Errors raised by the braid and singular-braid operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count must be at least 2, got {0}")]
    TooFewStrands(usize),

    #[error("generator index {index} out of range 1..={max} for {strands} strands")]
    IndexOutOfRange {
        index: usize,
        max: usize,
        strands: usize,
    },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("inverse singular letter t{0}^-1 is not supported")]
    InverseSingular(usize),

    #[error("word is not a pure braid (permutation {0})")]
    NotPure(String),

    #[error("commutation oracle needs at most two singular letters, got {0}")]
    DegreeTooHigh(usize),

    #[error("invalid generator {name}: {reason}")]
    InvalidGenerator { name: String, reason: String },

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("internal certification failed: {0}")]
    Certification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_strands(strands: usize) -> Result<()> {
    if strands < 2 {
        return Err(Error::TooFewStrands(strands));
    }
    Ok(())
}

pub(crate) fn check_index(index: usize, strands: usize) -> Result<()> {
    if index == 0 || index >= strands {
        return Err(Error::IndexOutOfRange {
            index,
            max: strands - 1,
            strands,
        });
    }
    Ok(())
}

pub(crate) fn check_same(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::StrandMismatch { left, right });
    }
    Ok(())
}
