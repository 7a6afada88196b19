use thiserror::Error;

use crate::structure::SpacetimeKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("dimension {0} outside the supported range 1..=16")]
    DimensionOutOfRange(usize),

    #[error("degree {degree} invalid in dimension {dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },

    #[error("frame index {index} outside 0..{dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("spatial dimension must be at least 1, got {0}")]
    SpatialDimension(usize),

    #[error("form contains the temporal leg e0 and is not spatial")]
    NotSpatial,

    #[error("star variant {variant} cannot be used with a {kind} structure")]
    IncompatibleVariant {
        variant: &'static str,
        kind: SpacetimeKind,
    },

    #[error("operation requires dimension 4, got {0}")]
    RequiresFourDimensions(usize),

    #[error("closed-form star needs the canonical adapted structure")]
    NonCanonical,

    #[error("matrix is singular")]
    Singular,

    #[error("not a proper rotation: {0}")]
    NotRotation(&'static str),

    #[error("matrix shape {rows}x{cols} does not fit dimension {dim}")]
    Shape { rows: usize, cols: usize, dim: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("polynomials over {left} and {right} variables cannot be combined")]
    VariableMismatch { left: usize, right: usize },

    #[error("invalid document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
