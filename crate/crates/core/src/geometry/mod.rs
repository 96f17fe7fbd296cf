//! Exact projective geometry over ℚ(√d): lines, points, arrangements and their
//! intersection lattices, plus the coordinate maps used to compare two realizations.

mod arrangement;
mod frame;
mod lattice;
mod projective;

pub use arrangement::{apply_coordinate_map, format_arrangement, parse_arrangement, relabel, Arrangement};
pub use frame::{grid_frame, GRID_LINES};
pub use lattice::{lattice_of, IntersectionLattice, LatticePoint};
pub use projective::{intersect, join, lines_proj_equal, proportionality, ProjLine, ProjPoint, Triple};

use thiserror::Error;

use crate::field::FieldError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("all three coordinates are zero")]
    ZeroTriple,
    #[error("identical lines have no single intersection point")]
    IdenticalLines,
    #[error("coincident points span no single line")]
    CoincidentPoints,
    #[error("lines {first} and {second} coincide")]
    DuplicateLines { first: usize, second: usize },
    #[error("size mismatch: {left} lines against {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("line {line} outside 1..{n}")]
    LineOutOfRange { line: usize, n: usize },
    #[error("grid lines {lines:?} contain three concurrent lines")]
    ConcurrentGrid { lines: [usize; 4] },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
}
