use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{FieldError, QuadScalar, Rational};

/// A univariate polynomial over ℚ, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// From integer coefficients, ascending degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn var() -> Self {
        Poly::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip().expect("nonzero leading coefficient")),
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from(i as i64))
                .collect(),
        )
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Horner evaluation in the field of `x`.
    pub fn eval(&self, x: &QuadScalar) -> QuadScalar {
        let field = x.field();
        self.coeffs.iter().rev().fold(QuadScalar::zero_in(field), |acc, c| {
            &(&acc * x) + &QuadScalar::from_rational_in(c.clone(), field)
        })
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = &rem[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &(&c * dc);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.div_rem(self).1.is_zero()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Splits off the rational content: `self = content · primitive`, where `primitive` has
    /// coprime integer coefficients and a positive leading coefficient.
    pub fn content_primitive(&self) -> (Rational, Poly) {
        if self.is_zero() {
            return (Rational::zero(), Poly::zero());
        }
        let l = Rational::denom_lcm(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = Poly::new(
            ints.into_iter()
                .map(|c| Rational::from_bigint(c / &g))
                .collect(),
        );
        (Rational::from_bigints(g, l), prim)
    }

    pub fn primitive(&self) -> Poly {
        self.content_primitive().1
    }

    /// Formats with the given variable name, highest degree first, e.g. `2s^2 - 2s + 1`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{}^{}", var, i),
            };
            if i == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else if mag.is_integer() {
                out.push_str(&format!("{}{}", mag, mono));
            } else {
                out.push_str(&format!("({}){}", mag, mono));
            }
        }
        out
    }

    fn binop(&self, rhs: &Poly, f: impl Fn(&Rational, &Rational) -> Rational) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| f(&self.coeff(i), &rhs.coeff(i))).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.binop(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.binop(rhs, |a, b| a - b)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// `p = content · Π factorᵐ`, every factor primitive with integer coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub content: Rational,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        self.factors.iter().fold(Poly::constant(self.content.clone()), |acc, (f, m)| {
            (0..*m).fold(acc, |acc, _| &acc * f)
        })
    }
}

/// Factors `p` over ℚ into linear factors and irreducible quadratics.
///
/// Works on the square-free decomposition; rational roots are found by the rational root
/// test and quadratic factors of what remains by Kronecker interpolation. A leftover
/// irreducible factor of degree ≥ 3 is reported as unsupported.
pub fn poly_reduce(p: &Poly) -> Result<Factorization, FieldError> {
    if p.is_zero() {
        return Err(FieldError::ZeroPolynomial);
    }
    let (content, prim) = p.content_primitive();
    let mut factors = Vec::new();
    for (part, mult) in square_free_decomposition(&prim) {
        let mut rest = part.primitive();
        for root in rational_roots(&rest) {
            let linear = Poly::new(vec![-root.numer().clone(), root.denom().clone()]
                .into_iter()
                .map(Rational::from_bigint)
                .collect());
            rest = rest.div_rem(&linear).0.primitive();
            factors.push((linear, mult));
        }
        loop {
            match rest.degree() {
                None | Some(0) => break,
                Some(2) => {
                    factors.push((rest.clone(), mult));
                    break;
                }
                Some(deg) if deg >= 4 => match quadratic_factor(&rest)? {
                    Some(q) => {
                        rest = rest.div_rem(&q).0.primitive();
                        factors.push((q, mult));
                    }
                    None => return Err(FieldError::UnsupportedDegree { degree: deg }),
                },
                Some(deg) => return Err(FieldError::UnsupportedDegree { degree: deg }),
            }
        }
    }
    factors.sort_by(|(f, _), (g, _)| factor_order(f, g));
    // multiplying the primitive factors back recovers prim exactly up to sign
    let expanded = factors
        .iter()
        .fold(Poly::one(), |acc, (f, m)| (0..*m).fold(acc, |acc, _| &acc * f));
    let sign = if expanded.leading() == prim.leading() {
        Rational::one()
    } else {
        -Rational::one()
    };
    Ok(Factorization {
        content: &content * &sign,
        factors,
    })
}

fn factor_order(f: &Poly, g: &Poly) -> std::cmp::Ordering {
    f.degree().cmp(&g.degree()).then_with(|| {
        if f.degree() == Some(1) {
            let rf = -&(&f.coeff(0) / &f.coeff(1));
            let rg = -&(&g.coeff(0) / &g.coeff(1));
            rf.cmp(&rg)
        } else {
            f.coeffs().iter().rev().cmp(g.coeffs().iter().rev())
        }
    })
}

/// Yun's algorithm: `p = Π partᵏ` with square-free, pairwise coprime parts.
fn square_free_decomposition(p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative();
    let a = p.gcd(&dp);
    let mut b = p.div_rem(&a).0;
    let mut c = dp.div_rem(&a).0;
    let mut d = &c - &b.derivative();
    let mut k = 1;
    loop {
        let g = b.gcd(&d);
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.clone(), k));
        }
        b = b.div_rem(&g).0;
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        c = d.div_rem(&g).0;
        d = &c - &b.derivative();
        k += 1;
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= n {
        if (&n % &i).is_zero() {
            let j = &n / &i;
            if j != i {
                large.push(j);
            }
            small.push(i.clone());
        }
        i += 1u32;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct rational roots of an integer polynomial, ascending.
fn rational_roots(p: &Poly) -> Vec<Rational> {
    let mut roots = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let mut q = p.clone();
    if q.coeff(0).is_zero() {
        roots.push(Rational::zero());
        while q.coeff(0).is_zero() {
            q = q.div_rem(&Poly::var()).0;
        }
    }
    if q.degree().unwrap_or(0) > 0 {
        let a0 = q.coeff(0);
        let an = q.leading().unwrap().clone();
        for num in divisors(a0.numer()) {
            for den in divisors(an.numer()) {
                for sign in [1i64, -1] {
                    let r = Rational::from_bigints(&num * BigInt::from(sign), den.clone());
                    if !roots.contains(&r) && q.eval_rational(&r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

const KRONECKER_LIMIT: usize = 2_000_000;

/// Searches for a quadratic factor of an integer polynomial with no rational roots.
fn quadratic_factor(p: &Poly) -> Result<Option<Poly>, FieldError> {
    let points: Vec<Rational> = [0i64, 1, -1]
        .iter()
        .map(|&x| Rational::from(x))
        .collect();
    let values: Vec<Rational> = points.iter().map(|x| p.eval_rational(x)).collect();
    // no rational roots, so every value is a nonzero integer
    let divs: Vec<Vec<BigInt>> = values.iter().map(|v| divisors(v.numer())).collect();
    let work = divs.iter().map(Vec::len).product::<usize>() * 4;
    if work > KRONECKER_LIMIT {
        return Err(FieldError::UnsupportedDegree {
            degree: p.degree().unwrap_or(0),
        });
    }
    for d0 in &divs[0] {
        for d1 in &divs[1] {
            for s1 in [1i64, -1] {
                for d2 in &divs[2] {
                    for s2 in [1i64, -1] {
                        // g(0)=d0, g(1)=±d1, g(−1)=±d2  ⇒  g = c0 + c1 t + c2 t²
                        let g0 = Rational::from_bigint(d0.clone());
                        let g1 = Rational::from_bigint(d1 * BigInt::from(s1));
                        let g2 = Rational::from_bigint(d2 * BigInt::from(s2));
                        let half = Rational::new(1, 2);
                        let c2 = &(&(&g1 + &g2) * &half) - &g0;
                        let c1 = &(&g1 - &g2) * &half;
                        if c2.is_zero() || !c2.is_integer() || !c1.is_integer() {
                            continue;
                        }
                        let g = Poly::new(vec![g0, c1, c2]);
                        if g.divides(p) {
                            return Ok(Some(g.primitive()));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_with_repeated_root() {
        // t³ − 2t²
        let f = poly_reduce(&Poly::from_ints(&[0, 0, -2, 1])).unwrap();
        assert_eq!(
            f.factors,
            vec![(Poly::from_ints(&[0, 1]), 2), (Poly::from_ints(&[-2, 1]), 1)]
        );
        assert_eq!(f.content, Rational::one());
    }

    #[test]
    fn irreducible_quadratic_kept() {
        let p = Poly::from_ints(&[-1, -1, 1]);
        let f = poly_reduce(&p).unwrap();
        assert_eq!(f.factors, vec![(p.clone(), 1)]);
    }

    #[test]
    fn quartic_cyclotomic_unsupported() {
        // t⁵ + 1 = (t + 1)(t⁴ − t³ + t² − t + 1)
        let p = Poly::from_ints(&[1, 0, 0, 0, 0, 1]);
        assert!(matches!(
            poly_reduce(&p),
            Err(FieldError::UnsupportedDegree { degree: 4 })
        ));
    }

    #[test]
    fn product_of_two_quadratics_splits() {
        let a = Poly::from_ints(&[1, 0, 1]);
        let b = Poly::from_ints(&[-2, 0, 1]);
        let p = (&a * &b).scale(&Rational::new(-3, 2));
        let f = poly_reduce(&p).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn content_and_sign_recovered() {
        let p = Poly::from_ints(&[4, -4, -2]); // −2(t² + 2t − 2)
        let f = poly_reduce(&p).unwrap();
        assert_eq!(f.expand(), p);
        assert_eq!(f.content, Rational::from(-2));
    }

    #[test]
    fn cubic_without_rational_root_unsupported() {
        assert!(matches!(
            poly_reduce(&Poly::from_ints(&[-2, 0, 0, 1])),
            Err(FieldError::UnsupportedDegree { degree: 3 })
        ));
    }

    #[test]
    fn zero_rejected() {
        assert!(poly_reduce(&Poly::zero()).is_err());
    }

    #[test]
    fn gcd_and_display() {
        let a = &Poly::from_ints(&[-1, -1, 1]) * &Poly::from_ints(&[0, 1]);
        let b = &Poly::from_ints(&[-1, -1, 1]) * &Poly::from_ints(&[3, 2]);
        assert_eq!(a.gcd(&b), Poly::from_ints(&[-1, -1, 1]));
        assert_eq!(Poly::from_ints(&[1, -2, 2]).display_in("t"), "2t^2 - 2t + 1");
        assert_eq!(Poly::from_ints(&[1, -1, 1]).display_in("s"), "s^2 - s + 1");
        assert_eq!(Poly::new(vec![Rational::new(1, 2), Rational::one()]).to_string(), "t + 1/2");
    }
}
