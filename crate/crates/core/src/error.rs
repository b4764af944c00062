use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("{what} cap of {cap} exceeded")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("coloring {0} is not a homomorphism of this set")]
    NotInHomSet(String),

    #[error("unclassifiable coloring {0}")]
    Unclassifiable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
