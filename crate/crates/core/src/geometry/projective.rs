use std::fmt;

use crate::field::{format_scalar, FieldError, FieldSpec, QuadScalar};

use super::GeomError;

pub type Triple = [QuadScalar; 3];

/// Scales so the first nonzero entry is 1; `None` for the zero triple.
pub(crate) fn normalize(raw: &Triple) -> Result<Option<Triple>, FieldError> {
    let Some(pivot) = raw.iter().find(|c| !c.is_zero()) else {
        return Ok(None);
    };
    let inv = pivot.inv()?;
    Ok(Some([
        raw[0].checked_mul(&inv)?,
        raw[1].checked_mul(&inv)?,
        raw[2].checked_mul(&inv)?,
    ]))
}

pub(crate) fn cross(u: &Triple, v: &Triple) -> Result<Triple, FieldError> {
    let m = |a: &QuadScalar, b: &QuadScalar, c: &QuadScalar, d: &QuadScalar| {
        a.checked_mul(b)?.checked_sub(&c.checked_mul(d)?)
    };
    Ok([
        m(&u[1], &v[2], &u[2], &v[1])?,
        m(&u[2], &v[0], &u[0], &v[2])?,
        m(&u[0], &v[1], &u[1], &v[0])?,
    ])
}

pub(crate) fn dot(u: &Triple, v: &Triple) -> Result<QuadScalar, FieldError> {
    u[0].checked_mul(&v[0])?
        .checked_add(&u[1].checked_mul(&v[1])?)?
        .checked_add(&u[2].checked_mul(&v[2])?)
}

fn common_field(t: &Triple) -> Result<FieldSpec, FieldError> {
    t[0].field().join(t[1].field())?.join(t[2].field())
}

fn rehome(t: &Triple, field: FieldSpec) -> Result<Triple, FieldError> {
    Ok([
        t[0].in_field(field)?,
        t[1].in_field(field)?,
        t[2].in_field(field)?,
    ])
}

fn conjugate(t: &Triple) -> Triple {
    [
        t[0].galois_conjugate(),
        t[1].galois_conjugate(),
        t[2].galois_conjugate(),
    ]
}

fn write_triple(f: &mut fmt::Formatter<'_>, t: &Triple, open: char, sep: &str, close: char) -> fmt::Result {
    write!(
        f,
        "{}{}{}{}{}{}{}",
        open,
        format_scalar(&t[0]),
        sep,
        format_scalar(&t[1]),
        sep,
        format_scalar(&t[2]),
        close
    )
}

/// The line `A·x + B·y + C·z = 0`, stored with its first nonzero coefficient equal to 1.
#[derive(Clone)]
pub struct ProjLine {
    coeffs: Triple,
    field: FieldSpec,
}

impl ProjLine {
    pub fn new(a: QuadScalar, b: QuadScalar, c: QuadScalar) -> Result<Self, GeomError> {
        Self::from_triple(&[a, b, c])
    }

    pub fn from_triple(raw: &Triple) -> Result<Self, GeomError> {
        let field = common_field(raw)?;
        let coeffs = normalize(&rehome(raw, field)?)?.ok_or(GeomError::ZeroTriple)?;
        Ok(ProjLine { coeffs, field })
    }

    pub fn coeffs(&self) -> &Triple {
        &self.coeffs
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// The same line with coefficients homed in `field`.
    pub fn in_field(&self, field: FieldSpec) -> Result<Self, GeomError> {
        Ok(ProjLine {
            coeffs: rehome(&self.coeffs, field)?,
            field,
        })
    }

    pub fn contains(&self, p: &ProjPoint) -> Result<bool, GeomError> {
        Ok(dot(&self.coeffs, &p.coords)?.is_zero())
    }

    /// `(A, B, C) ↦ (B, A, C)`.
    pub fn swap_xy(&self) -> Self {
        let [a, b, c] = self.coeffs.clone();
        ProjLine::from_triple(&[b, a, c]).expect("nonzero triple stays nonzero")
    }

    pub fn galois_conjugate(&self) -> Self {
        // conjugation fixes 1, so normal forms are preserved
        ProjLine {
            coeffs: conjugate(&self.coeffs),
            field: self.field,
        }
    }
}

// equality ignores the ambient field: a rational line is the same line in every field
impl PartialEq for ProjLine {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for ProjLine {}

impl std::hash::Hash for ProjLine {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_triple(f, &self.coeffs, '(', ", ", ')')
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjLine{}", self)
    }
}

/// A point `[X:Y:Z]`, normalized like [`ProjLine`].
#[derive(Clone)]
pub struct ProjPoint {
    coords: Triple,
    field: FieldSpec,
}

impl ProjPoint {
    pub fn new(x: QuadScalar, y: QuadScalar, z: QuadScalar) -> Result<Self, GeomError> {
        Self::from_triple(&[x, y, z])
    }

    pub fn from_triple(raw: &Triple) -> Result<Self, GeomError> {
        let field = common_field(raw)?;
        let coords = normalize(&rehome(raw, field)?)?.ok_or(GeomError::ZeroTriple)?;
        Ok(ProjPoint { coords, field })
    }

    pub fn coords(&self) -> &Triple {
        &self.coords
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coords[2].is_zero()
    }

    pub fn galois_conjugate(&self) -> Self {
        ProjPoint {
            coords: conjugate(&self.coords),
            field: self.field,
        }
    }
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for ProjPoint {}

impl std::hash::Hash for ProjPoint {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_triple(f, &self.coords, '[', ":", ']')
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjPoint{}", self)
    }
}

/// The common point of two distinct lines.
pub fn intersect(l1: &ProjLine, l2: &ProjLine) -> Result<ProjPoint, GeomError> {
    let raw = cross(&l1.coeffs, &l2.coeffs)?;
    ProjPoint::from_triple(&raw).map_err(|e| match e {
        GeomError::ZeroTriple => GeomError::IdenticalLines,
        other => other,
    })
}

/// The line through two distinct points.
pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine, GeomError> {
    let raw = cross(&p.coords, &q.coords)?;
    ProjLine::from_triple(&raw).map_err(|e| match e {
        GeomError::ZeroTriple => GeomError::CoincidentPoints,
        other => other,
    })
}

/// Projective equality: equal normal forms.
pub fn lines_proj_equal(l1: &ProjLine, l2: &ProjLine) -> bool {
    l1.coeffs == l2.coeffs
}

/// The scalar `λ` with `u = λ·v`, if the triples are proportional and `v ≠ 0`.
pub fn proportionality(u: &Triple, v: &Triple) -> Result<Option<QuadScalar>, FieldError> {
    let Some(k) = v.iter().position(|c| !c.is_zero()) else {
        return Ok(None);
    };
    let lambda = u[k].checked_div(&v[k])?;
    for (a, b) in u.iter().zip(v) {
        if a != &lambda.checked_mul(b)? {
            return Ok(None);
        }
    }
    Ok(Some(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{quad_roots, Rational};

    fn q(n: i64) -> QuadScalar {
        QuadScalar::from_int(n)
    }

    fn line(a: i64, b: i64, c: i64) -> ProjLine {
        ProjLine::new(q(a), q(b), q(c)).unwrap()
    }

    #[test]
    fn axes_meet_at_origin() {
        let p = intersect(&line(1, 0, 0), &line(0, 1, 0)).unwrap();
        assert_eq!(p, ProjPoint::new(q(0), q(0), q(1)).unwrap());
        let p = intersect(&line(1, 0, 0), &line(1, 0, -1)).unwrap();
        assert_eq!(p, ProjPoint::new(q(0), q(1), q(0)).unwrap());
    }

    #[test]
    fn identical_lines_have_no_intersection() {
        assert_eq!(intersect(&line(1, 2, 3), &line(2, 4, 6)), Err(GeomError::IdenticalLines));
        assert!(ProjLine::new(q(0), q(0), q(0)).is_err());
    }

    #[test]
    fn normal_form_and_equality() {
        assert!(lines_proj_equal(&line(1, 0, 0), &line(2, 0, 0)));
        assert!(!lines_proj_equal(&line(1, 0, 0), &line(1, 0, 1)));
        assert_eq!(line(0, -3, 6).coeffs()[2], q(-2));
    }

    #[test]
    fn golden_ratio_lines_meet_at_infinity() {
        // y = x + (1/t) z and y = x + t z with t² = t + 1
        let r = quad_roots(&Rational::from(1), &Rational::from(-1), &Rational::from(-1)).unwrap();
        let t = r.plus;
        let l7 = ProjLine::new(q(-1), q(1), t.inv().unwrap()).unwrap();
        let l8 = ProjLine::new(q(-1), q(1), -&t).unwrap();
        let p = intersect(&l7, &l8).unwrap();
        assert_eq!(p, ProjPoint::new(q(1), q(1), q(0)).unwrap());
        assert!(line(0, 0, 1).contains(&p).unwrap());
    }

    #[test]
    fn join_and_proportionality() {
        let p = ProjPoint::new(q(0), q(0), q(1)).unwrap();
        let r = ProjPoint::new(q(1), q(1), q(1)).unwrap();
        assert!(lines_proj_equal(&join(&p, &r).unwrap(), &line(1, -1, 0)));
        assert_eq!(join(&p, &p), Err(GeomError::CoincidentPoints));
        let lam = proportionality(&[q(2), q(0), q(-4)], &[q(1), q(0), q(-2)]).unwrap();
        assert_eq!(lam, Some(q(2)));
        assert_eq!(proportionality(&[q(2), q(1), q(-4)], &[q(1), q(0), q(-2)]).unwrap(), None);
    }
}
