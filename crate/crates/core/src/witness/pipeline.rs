use std::fmt::Write as _;

use serde::Serialize;

use crate::combinatorics::{automorphism_group, Permutation};
use crate::corpus::{get_case, CaseData};
use crate::field::format_scalar;
use crate::geometry::{grid_frame, Arrangement, GeomError};
use crate::moduli::{derive_constraint, realize_components, root_product, Discarded};

use super::{grid_candidates, verify_reflection, MapKind, Status, WitnessError};

/// Result of one (σ, grid, map) attempt.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Outcome {
    Verified,
    NotVerified { first_failure: usize },
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Attempt {
    pub case: String,
    pub sigma: Permutation,
    /// `(i, j, σ(i), σ(j))`.
    pub grid: [usize; 4],
    pub map: MapKind,
    pub constraint: String,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PipelineReport {
    pub case: String,
    pub aut_order: usize,
    pub group: String,
    pub involutions: Vec<Permutation>,
    pub constraint: Option<String>,
    pub field: Option<String>,
    pub roots: Option<(String, String)>,
    pub root_product: Option<String>,
    pub discarded: Vec<Discarded>,
    pub attempts: Vec<Attempt>,
    /// Whether the case's reference (σ, grid, map) is among the verified attempts.
    pub reference_verified: Option<bool>,
    pub status: Status,
}

impl PipelineReport {
    pub fn verified(&self) -> impl Iterator<Item = &Attempt> {
        self.attempts.iter().filter(|a| a.outcome == Outcome::Verified)
    }

    /// Human-readable summary; `all_attempts` lists every attempt instead of the verified ones.
    pub fn to_text(&self, all_attempts: bool) -> String {
        let mut s = String::new();
        writeln!(s, "case {}", self.case).unwrap();
        writeln!(s, "  automorphism group: order {} ({})", self.aut_order, self.group).unwrap();
        writeln!(s, "  involutions: {}", self.involutions.len()).unwrap();
        if let Some(c) = &self.constraint {
            writeln!(s, "  constraint: {} = 0 over {}", c, self.field.as_deref().unwrap_or("?")).unwrap();
        }
        if let Some((p, m)) = &self.roots {
            writeln!(s, "  roots: + = {}, - = {}", p, m).unwrap();
        }
        if let Some(rp) = &self.root_product {
            writeln!(s, "  root product: {}", rp).unwrap();
        }
        for d in &self.discarded {
            writeln!(s, "  discarded factor {}: {}", d.factor, d.reason).unwrap();
        }
        let count = |f: fn(&Outcome) -> bool| self.attempts.iter().filter(|a| f(&a.outcome)).count();
        writeln!(
            s,
            "  attempts: {} ({} verified, {} not verified, {} skipped)",
            self.attempts.len(),
            count(|o| *o == Outcome::Verified),
            count(|o| matches!(o, Outcome::NotVerified { .. })),
            count(|o| matches!(o, Outcome::Skipped { .. })),
        )
        .unwrap();
        for a in &self.attempts {
            if all_attempts || a.outcome == Outcome::Verified {
                let outcome = match &a.outcome {
                    Outcome::Verified => "verified".to_string(),
                    Outcome::NotVerified { first_failure } => format!("fails at line {}", first_failure),
                    Outcome::Skipped { reason } => format!("skipped: {}", reason),
                };
                writeln!(s, "    sigma {} grid {:?} map {}: {}", a.sigma, a.grid, a.map, outcome).unwrap();
            }
        }
        if let Some(r) = self.reference_verified {
            writeln!(s, "  reference choice verified: {}", if r { "yes" } else { "no" }).unwrap();
        }
        writeln!(s, "status: {}", self.status).unwrap();
        s
    }
}

fn frame_pair(plus: &Arrangement, minus: &Arrangement, grid: [usize; 4]) -> Result<Option<(Arrangement, Arrangement)>, WitnessError> {
    let framed = |a: &Arrangement| match grid_frame(a, grid) {
        Ok(f) => Ok(Some(f)),
        Err(GeomError::ConcurrentGrid { .. }) => Ok(None),
        Err(e) => Err(e),
    };
    Ok(match (framed(plus)?, framed(minus)?) {
        (Some(p), Some(m)) => Some((p, m)),
        _ => None,
    })
}

/// Runs the whole search for one case.
///
/// The constraint is derived once from the case's plan. For each involution of the
/// automorphism group and each admissible grid `(i, j)`, both components are moved to the
/// coordinates where lines `i, j, σ(i), σ(j)` are `x = 0, x = z, y = 0, y = z`, and each map
/// kind is checked. Conjugation is only tried over imaginary fields; over a real field
/// complex conjugation is trivial and the attempt is recorded as skipped.
pub fn run_pipeline(case: &CaseData) -> Result<PipelineReport, WitnessError> {
    let group = automorphism_group(&case.config);
    let involutions = group.involutions();
    let mut report = PipelineReport {
        case: case.name.clone(),
        aut_order: group.order(),
        group: group.label(),
        involutions: involutions.clone(),
        constraint: None,
        field: None,
        roots: None,
        root_product: None,
        discarded: Vec::new(),
        attempts: Vec::new(),
        reference_verified: None,
        status: Status::Inapplicable,
    };
    if involutions.is_empty() {
        return Ok(report);
    }

    let constraint = derive_constraint(&case.plan, &case.config)?;
    let (plus, minus) = realize_components(&case.plan, &constraint)?;
    let poly_text = constraint.display();
    report.constraint = Some(poly_text.clone());
    report.field = Some(constraint.field.to_string());
    report.roots = Some((format_scalar(&constraint.plus), format_scalar(&constraint.minus)));
    report.root_product = Some(root_product(&constraint.poly)?.to_string());
    report.discarded = constraint.discarded.clone();

    for sigma in &involutions {
        for (i, j) in grid_candidates(&case.config, sigma) {
            let grid = [i, j, sigma.apply(i - 1) + 1, sigma.apply(j - 1) + 1];
            let framed = frame_pair(&plus, &minus, grid)?;
            for map in [MapKind::SWAP, MapKind::SWAP_CONJUGATE] {
                let outcome = match &framed {
                    None => Outcome::Skipped { reason: "three grid lines are concurrent".into() },
                    Some(_) if map.conjugate && constraint.field.is_real() => Outcome::Skipped {
                        reason: "complex conjugation is trivial on a real field".into(),
                    },
                    Some((p, m)) => {
                        let w = verify_reflection(p, m, sigma, map)?;
                        match w.first_failure() {
                            None => Outcome::Verified,
                            Some(first_failure) => Outcome::NotVerified { first_failure },
                        }
                    }
                };
                report.attempts.push(Attempt {
                    case: case.name.clone(),
                    sigma: sigma.clone(),
                    grid,
                    map,
                    constraint: poly_text.clone(),
                    outcome,
                });
            }
        }
    }

    let reference = report
        .verified()
        .any(|a| a.sigma == case.sigma && a.grid == case.grid && a.map == case.map);
    report.reference_verified = Some(reference);
    report.status = if report.verified().next().is_some() {
        Status::Success
    } else {
        Status::Failure
    };
    Ok(report)
}

/// [`run_pipeline`] on a corpus case by name.
pub fn run_case(name: &str) -> Result<PipelineReport, WitnessError> {
    run_pipeline(&get_case(name)?)
}
