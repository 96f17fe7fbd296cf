use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{FieldError, Rational};

/// The ground field of a computation: either ℚ or ℚ(√d) for a square-free `d ∉ {0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Quadratic { d: i64 },
}

impl FieldSpec {
    pub fn quadratic(d: i64) -> Result<Self, FieldError> {
        if d == 0 || d == 1 || !is_square_free(d) {
            return Err(FieldError::InvalidField(d));
        }
        Ok(FieldSpec::Quadratic { d })
    }

    /// The radicand, or `None` over ℚ.
    pub fn d(&self) -> Option<i64> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Quadratic { d } => Some(*d),
        }
    }

    /// True for ℚ and for real quadratic fields.
    pub fn is_real(&self) -> bool {
        self.d().is_none_or(|d| d > 0)
    }

    /// The smallest field containing both, or a mismatch error for two distinct quadratic fields.
    pub fn join(self, other: FieldSpec) -> Result<FieldSpec, FieldError> {
        match (self, other) {
            (FieldSpec::Rational, f) | (f, FieldSpec::Rational) => Ok(f),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(FieldError::FieldMismatch { left: a, right: b }),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Quadratic { d } => write!(f, "sqrt {}", d),
        }
    }
}

fn is_square_free(d: i64) -> bool {
    let (_, core) = split_square(&BigInt::from(d));
    core == BigInt::from(d)
}

/// Writes `m = s² · core` with `core` square-free (sign kept in `core`). Trial division.
pub(crate) fn split_square(m: &BigInt) -> (BigInt, BigInt) {
    if m.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let sign = if m.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut rest = m.abs();
    let mut square_root = BigInt::one();
    let mut core = BigInt::one();
    let mut p = BigInt::from(2u32);
    while &p * &p <= rest {
        let mut count = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            count += 1;
        }
        for _ in 0..count / 2 {
            square_root *= &p;
        }
        if count % 2 == 1 {
            core *= &p;
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    core *= rest;
    (square_root, sign * core)
}

/// An element `a + b√d` of a [`FieldSpec`]. Over ℚ, `b` is always zero.
#[derive(Clone)]
pub struct QuadScalar {
    a: Rational,
    b: Rational,
    field: FieldSpec,
}

impl QuadScalar {
    /// Builds `a + b√d`. Fails if `b ≠ 0` over ℚ.
    pub fn new(a: Rational, b: Rational, field: FieldSpec) -> Result<Self, FieldError> {
        if field == FieldSpec::Rational && !b.is_zero() {
            return Err(FieldError::IrrationalOverQ);
        }
        Ok(QuadScalar { a, b, field })
    }

    pub fn rational(a: Rational) -> Self {
        QuadScalar {
            a,
            b: Rational::zero(),
            field: FieldSpec::Rational,
        }
    }

    pub fn from_rational_in(a: Rational, field: FieldSpec) -> Self {
        QuadScalar {
            a,
            b: Rational::zero(),
            field,
        }
    }

    pub fn from_int(n: i64) -> Self {
        QuadScalar::rational(Rational::from_integer(n))
    }

    pub fn zero_in(field: FieldSpec) -> Self {
        QuadScalar::from_rational_in(Rational::zero(), field)
    }

    pub fn one_in(field: FieldSpec) -> Self {
        QuadScalar::from_rational_in(Rational::one(), field)
    }

    /// `√d` itself.
    pub fn sqrt_d(field: FieldSpec) -> Result<Self, FieldError> {
        QuadScalar::new(Rational::zero(), Rational::one(), field)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    /// Re-homes the scalar into `field`, which must contain it.
    pub fn in_field(&self, field: FieldSpec) -> Result<Self, FieldError> {
        if self.b.is_zero() || self.field == field {
            Ok(QuadScalar {
                a: self.a.clone(),
                b: self.b.clone(),
                field,
            })
        } else {
            Err(FieldError::FieldMismatch {
                left: self.field,
                right: field,
            })
        }
    }

    /// `a − b√d`. For `d < 0` this is complex conjugation.
    pub fn galois_conjugate(&self) -> Self {
        QuadScalar {
            a: self.a.clone(),
            b: -&self.b,
            field: self.field,
        }
    }

    /// `x · conj(x) = a² − d b²`.
    pub fn norm(&self) -> Rational {
        match self.field.d() {
            None => &self.a * &self.a,
            Some(d) => &(&self.a * &self.a) - &(&(&self.b * &self.b) * &Rational::from(d)),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, FieldError> {
        let field = self.field.join(rhs.field)?;
        Ok(QuadScalar {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            field,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, FieldError> {
        let field = self.field.join(rhs.field)?;
        Ok(QuadScalar {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            field,
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, FieldError> {
        let field = self.field.join(rhs.field)?;
        let d = Rational::from(field.d().unwrap_or(0));
        let a = &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &d);
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        Ok(QuadScalar { a, b, field })
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let conj = self.galois_conjugate();
        Ok(QuadScalar {
            a: &conj.a / &n,
            b: &conj.b / &n,
            field: self.field,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.field.join(rhs.field)?;
        self.checked_mul(&rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = QuadScalar::one_in(self.field);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Float value; requires a real field.
    pub fn to_f64(&self) -> Option<f64> {
        match self.field.d() {
            None => Some(self.a.to_f64()),
            Some(d) if d > 0 => Some(self.a.to_f64() + self.b.to_f64() * (d as f64).sqrt()),
            Some(_) => self.b.is_zero().then(|| self.a.to_f64()),
        }
    }
}

/// Equality on the normalized pair `(a, b)`; a rational value is equal across fields.
impl PartialEq for QuadScalar {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.field == other.field)
    }
}

impl Eq for QuadScalar {}

impl Hash for QuadScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::literal::format_scalar(self))
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.field.d() {
            None => write!(f, "{}", self.a),
            Some(d) => write!(f, "{} + {}·√{}", self.a, self.b, d),
        }
    }
}

// Operator forms panic on a field mismatch; the checked_* methods report it.
macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a QuadScalar> for &'a QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &'a QuadScalar) -> QuadScalar {
                self.$checked(rhs).expect("mixed-field arithmetic")
            }
        }
        impl $trait<QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                self.$checked(&rhs).expect("mixed-field arithmetic")
            }
        }
    };
}

scalar_binop!(Add, add, checked_add);
scalar_binop!(Sub, sub, checked_sub);
scalar_binop!(Mul, mul, checked_mul);

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar {
            a: -self.a,
            b: -self.b,
            field: self.field,
        }
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        -(self.clone())
    }
}

/// The two roots of a quadratic, labelled so that `plus` has the positive `√d` coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadRoots {
    pub field: FieldSpec,
    pub plus: QuadScalar,
    pub minus: QuadScalar,
}

/// Roots of `a t² + b t + c` in ℚ(√d), `d` the square-free part of the discriminant.
pub fn quad_roots(a: &Rational, b: &Rational, c: &Rational) -> Result<QuadRoots, FieldError> {
    if a.is_zero() {
        return Err(FieldError::DegenerateQuadratic);
    }
    let disc = &(b * b) - &(&(a * c) * &Rational::from(4));
    let two_a = a * &Rational::from(2);
    let centre = &(-b) / &two_a;
    // disc = m / q², m = num · den
    let m = disc.numer() * disc.denom();
    let (s, core) = split_square(&m);
    let radical_coeff = Rational::from_bigints(s, disc.denom().clone());
    if core.is_zero() || core.is_one() {
        let offset = &radical_coeff / &two_a;
        let (r1, r2) = (&centre + &offset, &centre - &offset);
        let (plus, minus) = if r1 >= r2 { (r1, r2) } else { (r2, r1) };
        return Ok(QuadRoots {
            field: FieldSpec::Rational,
            plus: QuadScalar::rational(plus),
            minus: QuadScalar::rational(minus),
        });
    }
    let d = core.to_i64().ok_or(FieldError::DiscriminantTooLarge)?;
    let field = FieldSpec::Quadratic { d };
    let coeff = (&radical_coeff / &two_a).abs();
    Ok(QuadRoots {
        field,
        plus: QuadScalar {
            a: centre.clone(),
            b: coeff.clone(),
            field,
        },
        minus: QuadScalar {
            a: centre,
            b: -coeff,
            field,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn golden_ratio_roots() {
        let r = quad_roots(&q(1, 1), &q(-1, 1), &q(-1, 1)).unwrap();
        assert_eq!(r.field, FieldSpec::Quadratic { d: 5 });
        assert_eq!(r.plus.a(), &q(1, 2));
        assert_eq!(r.plus.b(), &q(1, 2));
        assert_eq!(r.minus.b(), &q(-1, 2));
    }

    #[test]
    fn gaussian_roots() {
        let r = quad_roots(&q(2, 1), &q(-2, 1), &q(1, 1)).unwrap();
        assert_eq!(r.field, FieldSpec::Quadratic { d: -1 });
        assert_eq!(r.plus.a(), &q(1, 2));
        assert_eq!(r.plus.b(), &q(1, 2));
    }

    #[test]
    fn square_factor_absorbed_into_b() {
        // t² − 12 → ±2√3
        let r = quad_roots(&q(1, 1), &q(0, 1), &q(-12, 1)).unwrap();
        assert_eq!(r.field, FieldSpec::Quadratic { d: 3 });
        assert_eq!(r.plus.b(), &q(2, 1));
    }

    #[test]
    fn perfect_square_discriminant_is_rational() {
        let r = quad_roots(&q(1, 1), &q(0, 1), &q(-4, 1)).unwrap();
        assert_eq!(r.field, FieldSpec::Rational);
        assert_eq!(r.plus, QuadScalar::from_int(2));
        assert_eq!(r.minus, QuadScalar::from_int(-2));
        let double = quad_roots(&q(1, 1), &q(-2, 1), &q(1, 1)).unwrap();
        assert_eq!(double.plus, double.minus);
    }

    #[test]
    fn degenerate_quadratic() {
        assert!(matches!(
            quad_roots(&q(0, 1), &q(1, 1), &q(1, 1)),
            Err(FieldError::DegenerateQuadratic)
        ));
    }

    #[test]
    fn conjugate_examples() {
        let r = quad_roots(&q(1, 1), &q(-1, 1), &q(-1, 1)).unwrap();
        assert_eq!(r.plus.galois_conjugate(), r.minus);
        assert_eq!(&r.plus * &r.plus.galois_conjugate(), QuadScalar::from_int(-1));
        let fixed = QuadScalar::rational(q(3, 4));
        assert_eq!(fixed.galois_conjugate(), fixed);
    }

    #[test]
    fn field_validation() {
        assert!(FieldSpec::quadratic(5).is_ok());
        assert!(FieldSpec::quadratic(-3).is_ok());
        assert!(FieldSpec::quadratic(12).is_err());
        assert!(FieldSpec::quadratic(1).is_err());
        assert!(FieldSpec::quadratic(0).is_err());
        assert!(FieldSpec::quadratic(-4).is_err());
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = QuadScalar::sqrt_d(FieldSpec::Quadratic { d: 5 }).unwrap();
        let b = QuadScalar::sqrt_d(FieldSpec::Quadratic { d: -1 }).unwrap();
        assert!(matches!(
            a.checked_add(&b),
            Err(FieldError::FieldMismatch { .. })
        ));
        // rationals embed everywhere
        assert!(a.checked_mul(&QuadScalar::from_int(3)).is_ok());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = FieldSpec::Quadratic { d: -3 };
        let x = QuadScalar::new(q(1, 2), q(1, 2), f).unwrap();
        assert!((&x * &x.inv().unwrap()).is_one());
        assert!(QuadScalar::zero_in(f).inv().is_err());
    }
}
