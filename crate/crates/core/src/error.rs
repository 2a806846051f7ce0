use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("origami is disconnected")]
    Disconnected,
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    /// Internal consistency failure of the generator action. Never expected on valid input.
    #[error("normalization failure: {0}")]
    NormalizationFailure(String),
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(i64),
    #[error("edge path is not closed: {0}")]
    NotClosed(String),
    #[error("moduli list is incompatible with the origami")]
    Incompatible,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("invalid tuple: {0}")]
    InvalidTuple(String),
    #[error("origami is not abelian")]
    NotAbelian,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("validation error: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
