use serde::Serialize;

use crate::combinatorics::ConfigTable;
use crate::field::{poly_reduce, quad_roots, FieldError, FieldSpec, Poly, QuadScalar, Rational};
use crate::geometry::{lattice_of, Arrangement};

use super::eval::{dot, evaluate_symbolic};
use super::{evaluate_plan, ConstructionPlan, ModuliError};

/// The incidence polynomial of one `require P on i` statement.
#[derive(Clone, Debug, PartialEq)]
pub struct Requirement {
    pub point: String,
    pub line: usize,
    /// Primitive integer polynomial; zero when the incidence holds identically.
    pub poly: Poly,
}

/// A factor that was set aside, with the reason.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Discarded {
    #[serde(serialize_with = "serialize_poly")]
    pub factor: Poly,
    pub reason: String,
}

fn serialize_poly<S: serde::Serializer>(p: &Poly, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// The admissible factor of the common incidence constraint and its roots.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuliConstraint {
    pub var: String,
    /// Primitive over ℤ with positive leading coefficient.
    pub poly: Poly,
    pub field: FieldSpec,
    pub plus: QuadScalar,
    pub minus: QuadScalar,
    pub discarded: Vec<Discarded>,
}

impl ModuliConstraint {
    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn display(&self) -> String {
        self.poly.display_in(&self.var)
    }
}

/// Incidence polynomials of every requirement, in plan order.
pub fn requirement_polys(plan: &ConstructionPlan) -> Result<Vec<Requirement>, ModuliError> {
    let sym = evaluate_symbolic(plan)?;
    Ok(plan
        .requirements()
        .map(|(point, line)| {
            let p = dot(&sym.points[point], &sym.lines[line - 1]);
            Requirement {
                point: point.to_string(),
                line,
                poly: if p.is_zero() { p } else { p.primitive() },
            }
        })
        .collect())
}

/// Why the arrangement at `root` does not realize `target`, if it does not.
fn reject_reason(plan: &ConstructionPlan, target: &ConfigTable, root: &QuadScalar) -> Option<String> {
    let arr = match evaluate_plan(plan, root) {
        Ok(a) => a,
        Err(ModuliError::Pole { .. } | ModuliError::ZeroLine { .. }) => return Some("pole".into()),
        Err(ModuliError::DegenerateMeet { a, b, .. }) => {
            return Some(format!("degenerate: lines {},{} coincide", a, b))
        }
        Err(ModuliError::DegenerateJoin { p, q, .. }) => {
            return Some(format!("degenerate: points {},{} coincide", p, q))
        }
        Err(e) => return Some(e.to_string()),
    };
    if let Some((i, j)) = arr.duplicate_pair() {
        return Some(format!("degenerate: lines {},{} coincide", i, j));
    }
    match lattice_of(&arr) {
        Ok((_, table)) if table.point_sets() == target.point_sets() => None,
        Ok(_) => Some("lattice mismatch".into()),
        Err(e) => Some(e.to_string()),
    }
}

fn roots_of(f: &Poly) -> Result<(FieldSpec, QuadScalar, QuadScalar), FieldError> {
    match f.degree() {
        Some(1) => {
            let r = QuadScalar::rational(-&(&f.coeff(0) / &f.coeff(1)));
            Ok((FieldSpec::Rational, r.clone(), r))
        }
        Some(2) => {
            let r = quad_roots(&f.coeff(2), &f.coeff(1), &f.coeff(0))?;
            Ok((r.field, r.plus, r.minus))
        }
        d => Err(FieldError::UnsupportedDegree { degree: d.unwrap_or(0) }),
    }
}

fn push_unique(list: &mut Vec<Discarded>, factor: Poly, reason: String) {
    if !list.iter().any(|d| d.factor == factor) {
        list.push(Discarded { factor, reason });
    }
}

/// Finds the unique factor of the common incidence constraint whose roots realize `target`.
///
/// The candidates are the irreducible factors of the gcd of all nonzero requirement
/// polynomials. Each is tested by exact evaluation at its roots and comparison of the
/// resulting lattice with `target` under the identity labelling. Factors appearing in only
/// some requirements are reported as discarded.
pub fn derive_constraint(plan: &ConstructionPlan, target: &ConfigTable) -> Result<ModuliConstraint, ModuliError> {
    if plan.n() != target.n() {
        return Err(ModuliError::SizeMismatch { plan: plan.n(), table: target.n() });
    }
    let reqs: Vec<Poly> = requirement_polys(plan)?
        .into_iter()
        .map(|r| r.poly)
        .filter(|p| !p.is_zero())
        .collect();
    if reqs.is_empty() {
        return Err(ModuliError::NoRequirements);
    }
    let common = reqs[1..].iter().fold(reqs[0].monic(), |acc, p| acc.gcd(p));

    let mut discarded = Vec::new();
    for r in &reqs {
        let mut rest = r.clone();
        loop {
            let g = rest.gcd(&common);
            if g.degree() == Some(0) {
                break;
            }
            rest = rest.div_rem(&g).0;
        }
        if rest.degree().unwrap_or(0) == 0 {
            continue;
        }
        match poly_reduce(&rest) {
            Ok(f) => {
                for (factor, _) in f.factors {
                    push_unique(&mut discarded, factor.primitive(), "not common to all requirements".into());
                }
            }
            Err(_) => push_unique(&mut discarded, rest.primitive(), "not common to all requirements".into()),
        }
    }

    let factors = if common.degree() == Some(0) {
        Vec::new()
    } else {
        poly_reduce(&common)?.factors
    };
    let mut admissible = Vec::new();
    for (factor, _) in factors {
        let factor = factor.primitive();
        let (field, plus, minus) = roots_of(&factor)?;
        let reason = reject_reason(plan, target, &plus).or_else(|| reject_reason(plan, target, &minus));
        match reason {
            Some(reason) => push_unique(&mut discarded, factor, reason),
            None => admissible.push((factor, field, plus, minus)),
        }
    }
    match admissible.len() {
        0 => Err(ModuliError::NoAdmissibleFactor {
            discarded: discarded
                .iter()
                .map(|d| format!("{}: {}", d.factor.display_in(plan.var()), d.reason))
                .collect(),
        }),
        1 => {
            let (poly, field, plus, minus) = admissible.pop().unwrap();
            Ok(ModuliConstraint {
                var: plan.var().to_string(),
                poly,
                field,
                plus,
                minus,
                discarded,
            })
        }
        _ => Err(ModuliError::AmbiguousConstraint {
            factors: admissible.iter().map(|a| a.0.display_in(plan.var())).collect(),
        }),
    }
}

/// The arrangements at the two roots of the constraint, named `<plan>+` and `<plan>-`.
pub fn realize_components(
    plan: &ConstructionPlan,
    constraint: &ModuliConstraint,
) -> Result<(Arrangement, Arrangement), ModuliError> {
    if constraint.degree() != 2 {
        return Err(ModuliError::NotDisconnected);
    }
    let plus = evaluate_plan(plan, &constraint.plus)?.with_name(format!("{}+", plan.name()));
    let minus = evaluate_plan(plan, &constraint.minus)?.with_name(format!("{}-", plan.name()));
    Ok((plus, minus))
}

/// `c / a` for `a t² + b t + c`: the product of the roots.
pub fn root_product(p: &Poly) -> Result<Rational, ModuliError> {
    match p.degree() {
        Some(2) => Ok(&p.coeff(0) / &p.coeff(2)),
        d => Err(ModuliError::WrongDegree { degree: d.unwrap_or(0) }),
    }
}
