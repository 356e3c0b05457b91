//! Crate-wide error type.

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two values over different ground sets were combined.
    #[error("ground-set size mismatch: {0} vs {1}")]
    SizeMismatch(u8, u8),

    /// A structural precondition was violated (bad blocks, unstable tree,
    /// out-of-range argument, ...).
    #[error("{0}")]
    Invalid(String),

    /// Text input could not be parsed; `pos` is a 0-based byte offset.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// An exhaustive operation was asked to run above its safety guard.
    #[error("n = {n} exceeds the enumeration guard ({guard}); pass a larger guard explicitly to override")]
    Guard { n: u8, guard: u8 },
}

impl Error {
    /// Convenience constructor for [`Error::Invalid`].
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    /// Convenience constructor for [`Error::Parse`].
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
