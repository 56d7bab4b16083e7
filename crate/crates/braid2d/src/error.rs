use thiserror::Error;

/// Errors shared across the braid, surface, and search layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("free-word rank {rank} does not match braid degree {degree}")]
    RankMismatch { rank: usize, degree: usize },

    #[error("generator index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },

    #[error("boundary braid is not trivial")]
    BoundaryNotTrivial,

    #[error("non-simple branch point: exponent {0} (only ±1 is supported)")]
    NonSimpleEntry(i64),

    #[error("position {position} out of range: need 1 <= position < {count}")]
    PositionOutOfRange { position: usize, count: usize },

    #[error("orientability parity violated on the component of sheet {sheet}")]
    InternalParityViolation { sheet: usize },

    #[error("enumeration budget exceeded after {0} nodes")]
    BudgetExceeded(u64),

    #[error("move {index} in trace is not applicable: {reason}")]
    InapplicableMove { index: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
