use crate::grid::{Edge, Vertex};

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The vertex is out of range or has been deleted.
    #[error("invalid vertex {0}: out of range or deleted")]
    InvalidVertex(Vertex),

    /// The edge is not present (out of range, already removed, or incident
    /// to a deleted vertex).
    #[error("edge {0} is not present in the graph")]
    EdgeNotPresent(Edge),

    /// Column index outside `1..=n`.
    #[error("column {0} out of range")]
    InvalidColumn(u32),

    /// A transpose map was applied to a non-square grid.
    #[error("transpose symmetry requires a square grid")]
    InvalidSymmetry,

    /// The instance exceeds a solver size cap.
    #[error("instance too large: {0}")]
    TooLarge(String),

    /// A precondition on the operation's arguments was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
