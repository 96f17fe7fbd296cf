use std::collections::HashMap;

use crate::field::{format_scalar, FieldError, Poly, QuadScalar, RatFunc};
use crate::geometry::{intersect, join, Arrangement, GeomError, ProjLine, ProjPoint};

use super::{ConstructionPlan, ModuliError, Step};

/// Evaluates every step at `t0`. Requirements are not checked.
pub fn evaluate_plan(plan: &ConstructionPlan, t0: &QuadScalar) -> Result<Arrangement, ModuliError> {
    let at = || format_scalar(t0);
    let mut lines: Vec<Option<ProjLine>> = vec![None; plan.n()];
    let mut points: HashMap<&str, ProjPoint> = HashMap::new();
    for step in plan.steps() {
        match step {
            Step::Given { line, coeffs } => {
                let mut vals = Vec::with_capacity(3);
                for c in coeffs {
                    vals.push(c.eval(t0).map_err(|e| match e {
                        FieldError::Pole { .. } => ModuliError::Pole { line: *line, at: at() },
                        other => other.into(),
                    })?);
                }
                let raw: [QuadScalar; 3] = vals.try_into().expect("three coefficients");
                let l = ProjLine::from_triple(&raw).map_err(|e| match e {
                    GeomError::ZeroTriple => ModuliError::ZeroLine { line: *line, at: at() },
                    other => other.into(),
                })?;
                lines[line - 1] = Some(l);
            }
            Step::Meet { point, a, b } => {
                let la = lines[a - 1].as_ref().expect("validated plan");
                let lb = lines[b - 1].as_ref().expect("validated plan");
                let p = intersect(la, lb).map_err(|e| match e {
                    GeomError::IdenticalLines => ModuliError::DegenerateMeet {
                        point: point.clone(),
                        a: *a,
                        b: *b,
                        at: at(),
                    },
                    other => other.into(),
                })?;
                points.insert(point, p);
            }
            Step::Join { line, p, q } => {
                let l = join(&points[p.as_str()], &points[q.as_str()]).map_err(|e| match e {
                    GeomError::CoincidentPoints => ModuliError::DegenerateJoin {
                        line: *line,
                        p: p.clone(),
                        q: q.clone(),
                        at: at(),
                    },
                    other => other.into(),
                })?;
                lines[line - 1] = Some(l);
            }
            Step::Require { .. } => {}
        }
    }
    let lines = lines.into_iter().map(|l| l.expect("validated plan")).collect();
    Ok(Arrangement::new(plan.name(), t0.field(), lines)?)
}

pub(crate) type PolyTriple = [Poly; 3];

fn lcm(a: &Poly, b: &Poly) -> Poly {
    let g = a.gcd(b);
    (a * b).div_rem(&g).0
}

/// Clears denominators and common polynomial factors.
fn primitive_triple(t: &[RatFunc; 3]) -> PolyTriple {
    let den = t.iter().fold(Poly::one(), |acc, f| lcm(&acc, f.den()));
    let polys: Vec<Poly> = t
        .iter()
        .map(|f| f.num() * &den.div_rem(f.den()).0)
        .collect();
    reduce(polys.try_into().expect("three entries"))
}

fn reduce(t: PolyTriple) -> PolyTriple {
    let g = t.iter().filter(|p| !p.is_zero()).fold(Poly::zero(), |acc, p| {
        if acc.is_zero() {
            p.monic()
        } else {
            acc.gcd(p)
        }
    });
    if g.is_zero() || g.degree() == Some(0) {
        return t;
    }
    t.map(|p| p.div_rem(&g).0)
}

fn cross(u: &PolyTriple, v: &PolyTriple) -> PolyTriple {
    let m = |a: &Poly, b: &Poly, c: &Poly, d: &Poly| &(a * b) - &(c * d);
    [
        m(&u[1], &v[2], &u[2], &v[1]),
        m(&u[2], &v[0], &u[0], &v[2]),
        m(&u[0], &v[1], &u[1], &v[0]),
    ]
}

pub(crate) fn dot(u: &PolyTriple, v: &PolyTriple) -> Poly {
    &(&(&u[0] * &v[0]) + &(&u[1] * &v[1])) + &(&u[2] * &v[2])
}

/// Lines and points of the plan over ℚ(t), as polynomial triples without common factors.
pub(crate) struct Symbolic {
    pub lines: Vec<PolyTriple>,
    pub points: HashMap<String, PolyTriple>,
}

pub(crate) fn evaluate_symbolic(plan: &ConstructionPlan) -> Result<Symbolic, ModuliError> {
    let zero = || [Poly::zero(), Poly::zero(), Poly::zero()];
    let mut lines: Vec<PolyTriple> = (0..plan.n()).map(|_| zero()).collect();
    let mut points = HashMap::new();
    for step in plan.steps() {
        match step {
            Step::Given { line, coeffs } => lines[line - 1] = primitive_triple(coeffs),
            Step::Meet { point, a, b } => {
                let p = reduce(cross(&lines[a - 1], &lines[b - 1]));
                if p.iter().all(Poly::is_zero) {
                    return Err(ModuliError::GenericDegenerate(format!(
                        "lines {},{} coincide, so point {} is undefined",
                        a, b, point
                    )));
                }
                points.insert(point.clone(), p);
            }
            Step::Join { line, p, q } => {
                let l = reduce(cross(&points[p], &points[q]));
                if l.iter().all(Poly::is_zero) {
                    return Err(ModuliError::GenericDegenerate(format!(
                        "points {},{} coincide, so line {} is undefined",
                        p, q, line
                    )));
                }
                lines[line - 1] = l;
            }
            Step::Require { .. } => {}
        }
    }
    Ok(Symbolic { lines, points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{quad_roots, Rational};
    use crate::moduli::parse_plan;

    const PENCIL: &str = "\
plan pencil over t
lines 6
line 1 : 1 ; 0 ; 0
line 2 : 1 ; 0 ; -1
line 3 : 0 ; 1 ; 0
line 4 : 0 ; 1 ; -1
line 5 : 1 ; -1/t ; 0
point P : meet 2 3
point Q : meet 4 5
line 6 : join P Q
require P on 5
";

    #[test]
    fn evaluates_at_a_quadratic_root() {
        let plan = parse_plan(PENCIL).unwrap();
        let r = quad_roots(&Rational::from(1), &Rational::from(-1), &Rational::from(-1)).unwrap();
        let a = evaluate_plan(&plan, &r.plus).unwrap();
        assert_eq!(a.n(), 6);
        assert_eq!(a.field(), r.field);
        // line 5 is x = y/t
        assert_eq!(a.lines()[4].coeffs()[1], -&r.plus.inv().unwrap());
    }

    #[test]
    fn evaluation_errors() {
        let plan = parse_plan(PENCIL).unwrap();
        assert_eq!(
            evaluate_plan(&plan, &QuadScalar::from_int(0)),
            Err(ModuliError::Pole { line: 5, at: "0".into() })
        );
        // every step is defined at t = 1
        assert!(evaluate_plan(&plan, &QuadScalar::from_int(1)).is_ok());
        let meet_same = PENCIL.replace("line 5 : 1 ; -1/t ; 0", "line 5 : 0 ; 1 ; -t");
        let plan = parse_plan(&meet_same).unwrap();
        assert!(matches!(
            evaluate_plan(&plan, &QuadScalar::from_int(1)),
            Err(ModuliError::DegenerateMeet { a: 4, b: 5, .. })
        ));
    }

    #[test]
    fn symbolic_triples_are_primitive() {
        let plan = parse_plan(PENCIL).unwrap();
        let s = evaluate_symbolic(&plan).unwrap();
        // x - y/t  ~  t x - y
        assert_eq!(s.lines[4], [Poly::from_ints(&[0, 1]), Poly::from_ints(&[-1]), Poly::zero()]);
        let incidence = dot(&s.points["P"], &s.lines[4]);
        assert_eq!(incidence.degree(), Some(1));
    }
}
