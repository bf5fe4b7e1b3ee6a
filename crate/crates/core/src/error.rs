use thiserror::Error;

use crate::ring::Variety;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("variety mismatch: expected {expected}, found {found}")]
    VarietyMismatch { expected: Variety, found: Variety },

    #[error("middle variety mismatch: {left} vs {right}")]
    MiddleMismatch { left: Variety, right: Variety },

    #[error("factor selection {selected:?} is not valid for {source_variety}")]
    BadSelection {
        source_variety: Variety,
        selected: Vec<usize>,
    },

    #[error("cycle is not of pure codimension")]
    NotPure,

    #[error("series has zero constant term and cannot be inverted")]
    SingularSeries,

    #[error("total Chern class has nonzero component in codimension {codim} above rank {rank}")]
    ChernAboveRank { codim: u32, rank: i64 },

    #[error("total Chern class must have constant term 1")]
    ChernConstant,

    #[error("correspondence is not idempotent")]
    NotIdempotent,

    #[error("correspondence is not of pure degree {0}")]
    WrongDegree(i64),

    #[error("sandwich condition fails: target projector after morphism after source projector differs from morphism")]
    NotSandwiched,

    #[error("object mismatch: {0}")]
    ObjectMismatch(String),

    #[error("morphisms are not mutually inverse")]
    NotInverse,

    #[error("support condition violated: component at index {0} < 0 is nonzero")]
    SupportCondition(i64),

    #[error("correspondence is not invertible")]
    NotInvertible,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
