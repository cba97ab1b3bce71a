use thiserror::Error;

/// Errors produced by word parsing, engines, constructions and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (empty word, `m < 1`, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A structured input violates one of its stated invariants.
    #[error("precondition violated: {clause}")]
    Precondition { clause: String },

    /// A factor or shift reaches past the end of the word.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// Text could not be parsed as a word. `position` is 1-based.
    #[error("parse error at position {position}: unexpected {found:?}")]
    Parse { position: usize, found: char },

    /// A construction spec or key/value list could not be parsed.
    #[error("invalid spec key `{key}`: {reason}")]
    Spec { key: String, reason: String },

    /// An internal invariant failed. This always indicates an engine bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(clause: impl Into<String>) -> Self {
        Error::Precondition {
            clause: clause.into(),
        }
    }

    pub(crate) fn spec(key: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Spec {
            key: key.into(),
            reason: reason.into(),
        }
    }

    /// True for errors caused by malformed user input rather than by the engine.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
