use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at alpha = {alpha}: a denominator factor vanishes")]
    Pole { alpha: Rational },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("consistency error: {0}")]
    Consistency(String),

    #[error("cannot parse rational {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
