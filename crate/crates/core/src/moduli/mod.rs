//! Construction plans over ℚ(t), the polynomial constraint cutting out the moduli
//! components, and exact realizations of both components.

mod constraint;
mod eval;
mod expr;
mod plan;

pub use constraint::{derive_constraint, realize_components, requirement_polys, root_product, Discarded, ModuliConstraint, Requirement};
pub use eval::evaluate_plan;
pub use expr::parse_ratfunc;
pub use plan::{parse_plan, ConstructionPlan, Step};

use thiserror::Error;

use crate::field::FieldError;
use crate::geometry::GeomError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModuliError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {name} used before it is defined")]
    UseBeforeDefine { name: String, line: usize },
    #[error("line {line}: {name} defined twice")]
    Duplicate { name: String, line: usize },
    #[error("line {0} of the arrangement is never defined")]
    MissingLine(usize),
    #[error("no constant grid line {0}")]
    MissingGrid(&'static str),
    #[error("empty plan")]
    EmptyPlan,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("line {line} has a pole at {at}")]
    Pole { line: usize, at: String },
    #[error("line {line} vanishes identically at {at}")]
    ZeroLine { line: usize, at: String },
    #[error("degenerate: point {point} is the meet of coincident lines {a},{b} at {at}")]
    DegenerateMeet { point: String, a: usize, b: usize, at: String },
    #[error("degenerate: line {line} joins coincident points {p},{q} at {at}")]
    DegenerateJoin { line: usize, p: String, q: String, at: String },
    #[error("plan is degenerate for every parameter value: {0}")]
    GenericDegenerate(String),
    #[error("plan has {plan} lines but the table has {table}")]
    SizeMismatch { plan: usize, table: usize },
    #[error("no requirement constrains the parameter")]
    NoRequirements,
    #[error("no admissible factor; discarded: {}", .discarded.join("; "))]
    NoAdmissibleFactor { discarded: Vec<String> },
    #[error("several admissible factors: {}", .factors.join(", "))]
    AmbiguousConstraint { factors: Vec<String> },
    #[error("moduli not disconnected: the constraint has a single root")]
    NotDisconnected,
    #[error("expected a quadratic, found degree {degree}")]
    WrongDegree { degree: usize },
}
