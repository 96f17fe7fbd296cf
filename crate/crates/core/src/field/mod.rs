//! Exact arithmetic: ℚ, quadratic fields ℚ(√d), and univariate polynomials and rational
//! functions over ℚ. Nothing in here rounds.

mod literal;
mod poly;
mod quadratic;
mod ratfunc;
mod rational;

pub use literal::{format_scalar, parse_scalar};
pub use poly::{poly_reduce, Factorization, Poly};
pub use quadratic::{quad_roots, FieldSpec, QuadRoots, QuadScalar};
pub use ratfunc::{ratfunc_eval, RatFunc};
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FieldError {
    #[error("degenerate quadratic: leading coefficient is zero")]
    DegenerateQuadratic,
    #[error("cannot mix scalars of ℚ({left}) and ℚ({right})")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation pole at t = {at}")]
    Pole { at: String },
    #[error("unsupported irreducible factor of degree {degree}")]
    UnsupportedDegree { degree: usize },
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("{0} is not a square-free integer other than 0 and 1")]
    InvalidField(i64),
    #[error("nonzero √d coefficient over the rational field")]
    IrrationalOverQ,
    #[error("square-free part of the discriminant does not fit in 64 bits")]
    DiscriminantTooLarge,
    #[error("bad scalar literal {input:?}: {reason}")]
    Literal { input: String, reason: String },
}

/// `galois_conjugate(x) = a − b√d`.
pub fn galois_conjugate(x: &QuadScalar) -> QuadScalar {
    x.galois_conjugate()
}
