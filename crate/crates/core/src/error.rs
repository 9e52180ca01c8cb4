use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text input that does not follow the documented syntax.
    #[error("parse error at offset {position} in {input:?}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    /// Structurally invalid value (ragged grid, zero part, non-surjective word, ...).
    #[error("malformed input: {0}")]
    Malformed(String),

    /// A computation refused because its input exceeds a configured size guard.
    #[error("resource guard `{guard}` exceeded: {value} > {limit} (raise it with {flag})")]
    Resource {
        guard: &'static str,
        value: u64,
        limit: u64,
        flag: &'static str,
    },

    #[error("usage error: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn parse(input: &str, position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            position,
            message: message.into(),
        }
    }

    pub(crate) fn malformed(message: impl Into<String>) -> Self {
        Error::Malformed(message.into())
    }
}
