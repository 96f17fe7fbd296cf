//! Reflection witnesses: checking that a coordinate map carries one moduli component onto
//! the other under a line relabelling, recovering that relabelling, and the full search.

mod pipeline;
mod reflection;

pub use pipeline::{run_case, run_pipeline, Attempt, Outcome, PipelineReport};
pub use reflection::{extract_sigma, grid_candidates, verify_reflection, LineCertificate, ReflectionWitness};

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::combinatorics::CombError;
use crate::corpus::CorpusError;
use crate::field::FieldSpec;
use crate::geometry::GeomError;
use crate::moduli::ModuliError;

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error("arrangements have {left} and {right} lines")]
    SizeMismatch { left: usize, right: usize },
    #[error("arrangements live over {left} and {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },
    #[error("permutation of degree {degree} for {n} lines")]
    DegreeMismatch { degree: usize, n: usize },
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Moduli(#[from] ModuliError),
    #[error(transparent)]
    Comb(#[from] CombError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
}

/// A coordinate map: `swap` exchanges x and y, `conjugate` applies Galois conjugation
/// to every coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MapKind {
    pub swap: bool,
    pub conjugate: bool,
}

impl MapKind {
    pub const SWAP: MapKind = MapKind { swap: true, conjugate: false };
    pub const SWAP_CONJUGATE: MapKind = MapKind { swap: true, conjugate: true };
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match (self.swap, self.conjugate) {
            (true, false) => "swap",
            (true, true) => "swap+conjugate",
            (false, true) => "conjugate",
            (false, false) => "identity",
        })
    }
}

impl FromStr for MapKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "swap" => Ok(MapKind::SWAP),
            "swap+conjugate" => Ok(MapKind::SWAP_CONJUGATE),
            "conjugate" => Ok(MapKind { swap: false, conjugate: true }),
            "identity" => Ok(MapKind { swap: false, conjugate: false }),
            other => Err(format!("unknown map kind {:?}", other)),
        }
    }
}

impl Serialize for MapKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Overall result of the search for a case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    /// Some attempt verified.
    Success,
    /// Every attempt was tried and none verified.
    Failure,
    /// The automorphism group has no involution.
    Inapplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Success => "SUCCESS",
            Status::Failure => "FAILURE",
            Status::Inapplicable => "INAPPLICABLE",
        })
    }
}

impl FromStr for Status {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "SUCCESS" => Ok(Status::Success),
            "FAILURE" => Ok(Status::Failure),
            "INAPPLICABLE" => Ok(Status::Inapplicable),
            other => Err(format!("unknown status {:?}", other)),
        }
    }
}
