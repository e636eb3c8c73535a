use thiserror::Error;

/// Errors surfaced by graph, group, and search operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A vertex set sized for one graph was used with another.
    #[error("capacity mismatch: vertex set holds {set_capacity} bits but graph order is {order}")]
    CapacityMismatch { set_capacity: usize, order: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Removing the named generator does not leave an index-2 subgroup.
    #[error(
        "subgroup generated without `{generator}` is the whole group, not an index-2 subgroup"
    )]
    NotIndexTwo { generator: String },

    /// Exhaustive cutset search refuses large graphs unless forced.
    #[error("graph has {order} vertices; exact search is limited to 64 (pass force to override)")]
    TooLarge { order: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
