use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    /// A solver or enumerator hit its declared size limit. `best_known` carries
    /// the best upper (or lower, for maximisation) value established so far.
    #[error("capacity exceeded in {what}: limit {limit}{}", best_known.map(|b| format!(", best known {b}")).unwrap_or_default())]
    Capacity {
        what: &'static str,
        limit: usize,
        best_known: Option<usize>,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
