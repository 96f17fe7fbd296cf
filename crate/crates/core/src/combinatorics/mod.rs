//! Configuration tables, lattice isomorphisms and automorphism groups.

mod aut;
mod perm;
mod table;

pub use aut::{automorphism_group, involutions, AutGroup};
pub use perm::Permutation;
pub use table::{is_lattice_isomorphism, parse_config_table, ConfigTable, TablePoint};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("point {point} has only {count} lines; multiple points need at least 3")]
    TooFewLines { point: String, count: usize },
    #[error("point {point} lists line {line} twice")]
    RepeatedLine { point: String, line: usize },
    #[error("lines {a} and {b} meet in both {first} and {second}")]
    RepeatedPair {
        a: usize,
        b: usize,
        first: String,
        second: String,
    },
    #[error("point {point} uses line {line}, outside 1..{n}")]
    LabelOutOfRange { point: String, line: usize, n: usize },
    #[error("duplicate point label {0}")]
    DuplicateLabel(String),
    #[error("size mismatch: tables on {left} and {right} lines, permutation of degree {perm}")]
    SizeMismatch { left: usize, right: usize, perm: usize },
    #[error("bad permutation: {0}")]
    BadPermutation(String),
}
