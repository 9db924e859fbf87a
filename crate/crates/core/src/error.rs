use thiserror::Error;

/// Errors produced by the test battery.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Zero variance, an empty sign category, or anything else that leaves a
    /// statistic undefined.
    #[error("degenerate series: {0}")]
    Degenerate(String),

    #[error("singular design matrix: {0}")]
    SingularDesign(String),

    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    /// True for errors caused by the caller's data rather than by numerics.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::InvalidInput(_) | Error::Format(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}

pub(crate) fn degenerate<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Degenerate(msg.into()))
}
