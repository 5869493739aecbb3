use thiserror::Error;

/// Errors produced by the simulation library.
///
/// `Config` covers structural mistakes (dimension mismatches, invalid
/// subsystem selections, inconsistent sweep grids). `Precondition` covers
/// numeric contract violations detected at runtime (non-Hermitian inputs,
/// non-normalized amplitudes). The CLI maps the two variants to distinct
/// exit codes.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("numeric precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// Prefix the message with a locating context, preserving the variant.
    pub fn with_context(self, ctx: &str) -> Self {
        match self {
            Error::Config(m) => Error::Config(format!("{ctx}: {m}")),
            Error::Precondition(m) => Error::Precondition(format!("{ctx}: {m}")),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
