//! Diagonal braidings, generalized Dynkin diagrams, twist equivalence and
//! Yetter–Drinfeld data over finite abelian groups.

mod diagram;
mod format;
mod matrix;
mod yd;

pub use diagram::{connected_components, dynkin_of, twist_equivalent, GeneralizedDynkinDiagram};
pub use format::{parse_braiding, serialize_braiding, BraidingFile};
pub use matrix::BraidingMatrix;
pub use yd::{braiding_from_yd_datum, signed_braiding, super_sign_transform, YDDatum};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidingError {
    #[error("braiding matrix must have at least one row")]
    EmptyMatrix,
    #[error("braiding matrix is not square")]
    NotSquare,
    #[error("malformed Yetter-Drinfeld datum")]
    MalformedDatum,
    #[error("line {0}: {1}")]
    Parse(usize, String),
}
