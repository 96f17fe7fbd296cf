//! Acceptance gate: one PASS/FAIL line per criterion; exits nonzero if any fails.
//!
//! Tolerances are pinned: every comparison is exact (integers, rationals, polynomials up to a
//! nonzero rational factor, field elements in normal form). No floating point is involved.

use linesym::combinatorics::{automorphism_group, is_lattice_isomorphism, Permutation};
use linesym::corpus::{get_case, list_cases, CaseData};
use linesym::field::{Poly, QuadScalar, Rational};
use linesym::geometry::{apply_coordinate_map, grid_frame, lattice_of, relabel, Arrangement};
use linesym::moduli::{derive_constraint, evaluate_plan, realize_components, root_product};
use linesym::witness::{extract_sigma, run_case, verify_reflection, Outcome, Status};

const POSITIVE: [&str; 8] = [
    "{1}",
    "{6}",
    "{7}",
    "maclane",
    "nazir-yoshinaga",
    "11.B.3.b.2.iii",
    "11.B.3.b.2.iv",
    "11.B.2.iv",
];

struct Gate {
    failed: usize,
}

impl Gate {
    fn record(&mut self, id: u32, title: &str, problems: Vec<String>) {
        let status = if problems.is_empty() { "PASS" } else { "FAIL" };
        let mut line = format!("{} criterion {}: {}", status, id, title);
        if !problems.is_empty() {
            self.failed += 1;
            line.push_str(&format!(" [{}]", problems.join("; ")));
        }
        println!("{}", line);
    }
}

/// Exact equality up to a nonzero rational factor.
fn proportional(p: &Poly, q: &Poly) -> bool {
    match (p.leading(), q.leading()) {
        (Some(a), Some(b)) => p.scale(b) == q.scale(a),
        _ => false,
    }
}

fn components(case: &CaseData) -> Result<(Arrangement, Arrangement), String> {
    let c = derive_constraint(&case.plan, &case.config).map_err(|e| e.to_string())?;
    realize_components(&case.plan, &c).map_err(|e| e.to_string())
}

fn criterion_1() -> Vec<String> {
    let expected = [
        ("{1}", 2),
        ("{6}", 2),
        ("{7}", 24),
        ("maclane", 48),
        ("nazir-yoshinaga", 6),
        ("11.B.3.b.2.iii", 2),
        ("11.B.3.b.2.iv", 2),
        ("11.B.2.iv", 2),
        ("falk-sturmfels", 4),
    ];
    let mut problems = Vec::new();
    for (name, order) in expected {
        let case = get_case(name).unwrap();
        let got = automorphism_group(&case.config).order();
        if got != order {
            problems.push(format!("{}: order {} instead of {}", name, got, order));
        }
    }
    problems
}

fn criterion_2() -> Vec<String> {
    let expected: [(&str, &[i64]); 7] = [
        ("{6}", &[-1, 1, 1]),
        ("{7}", &[-1, -1, 1]),
        ("maclane", &[1, -1, 1]),
        ("nazir-yoshinaga", &[1, -2, 2]),
        ("11.B.3.b.2.iii", &[1, -1, 1]),
        ("11.B.3.b.2.iv", &[1, 1, 1]),
        ("11.B.2.iv", &[1, -1, 1]),
    ];
    let mut problems = Vec::new();
    for (name, coeffs) in expected {
        let case = get_case(name).unwrap();
        match derive_constraint(&case.plan, &case.config) {
            Ok(c) if proportional(&c.poly, &Poly::from_ints(coeffs)) => {}
            Ok(c) => problems.push(format!("{}: derived {}", name, c.display())),
            Err(e) => problems.push(format!("{}: {}", name, e)),
        }
    }
    // {1} is pinned by its roots (1 ± √5)/2
    let case = get_case("{1}").unwrap();
    match derive_constraint(&case.plan, &case.config) {
        Ok(c) => {
            let half = Rational::new(1, 2);
            let field = linesym::field::FieldSpec::quadratic(5).unwrap();
            let plus = QuadScalar::new(half.clone(), half.clone(), field).unwrap();
            let minus = QuadScalar::new(half.clone(), -half, field).unwrap();
            let roots = [c.plus.clone(), c.minus.clone()];
            if !(roots.contains(&plus) && roots.contains(&minus)) {
                problems.push(format!("{{1}}: roots {} and {}", c.plus, c.minus));
            }
        }
        Err(e) => problems.push(format!("{{1}}: {}", e)),
    }
    problems
}

fn criterion_3() -> Vec<String> {
    let expected = [
        ("{1}", Rational::from_integer(-1)),
        ("{6}", Rational::from_integer(-1)),
        ("{7}", Rational::from_integer(-1)),
        ("maclane", Rational::one()),
        ("11.B.3.b.2.iii", Rational::one()),
        ("11.B.3.b.2.iv", Rational::one()),
        ("11.B.2.iv", Rational::one()),
        ("nazir-yoshinaga", Rational::new(1, 2)),
    ];
    let mut problems = Vec::new();
    for (name, product) in expected {
        let case = get_case(name).unwrap();
        let c = derive_constraint(&case.plan, &case.config).unwrap();
        let got = root_product(&c.poly).unwrap();
        // the product of the two exact roots, computed in the field
        let direct = c.plus.checked_mul(&c.minus).unwrap();
        if got != product || direct != QuadScalar::rational(product.clone()) {
            problems.push(format!("{}: product {} (direct {})", name, got, direct));
        }
    }
    problems
}

fn criterion_4() -> Vec<String> {
    let mut problems = Vec::new();
    for name in POSITIVE {
        let case = get_case(name).unwrap();
        let expected_map = if name == "maclane" { "swap+conjugate" } else { "swap" };
        if case.map.to_string() != expected_map {
            problems.push(format!("{}: reference map {}", name, case.map));
        }
        let verified = components(&case).and_then(|(p, m)| {
            let p = grid_frame(&p, case.grid).map_err(|e| e.to_string())?;
            let m = grid_frame(&m, case.grid).map_err(|e| e.to_string())?;
            verify_reflection(&p, &m, &case.sigma, case.map)
                .map(|w| w.verified)
                .map_err(|e| e.to_string())
        });
        match verified {
            Ok(true) => {}
            Ok(false) => problems.push(format!("{}: reference witness not verified", name)),
            Err(e) => problems.push(format!("{}: {}", name, e)),
        }
    }
    let report = run_case("falk-sturmfels").unwrap();
    let tried = report
        .attempts
        .iter()
        .filter(|a| !matches!(a.outcome, Outcome::Skipped { .. }))
        .count();
    if report.status != Status::Failure || report.verified().next().is_some() || tried == 0 {
        problems.push(format!("falk-sturmfels: {} with {} attempts tried", report.status, tried));
    }
    if report.involutions.len() != 1 {
        problems.push(format!("falk-sturmfels: {} involutions", report.involutions.len()));
    }
    problems
}

fn criterion_5() -> Vec<String> {
    let mut problems = Vec::new();
    for name in POSITIVE {
        let case = get_case(name).unwrap();
        let (plus, minus) = match components(&case) {
            Ok(pair) => pair,
            Err(e) => {
                problems.push(format!("{}: {}", name, e));
                continue;
            }
        };
        let n = case.config.n();
        let id = Permutation::identity(n);
        for a in [&plus, &minus] {
            let (lattice, table) = lattice_of(a).unwrap();
            if !is_lattice_isomorphism(&table, &case.config, &id).unwrap() {
                problems.push(format!("{}: lattice differs from the table", a.name()));
            }
            if lattice.pair_count() != n * (n - 1) / 2 {
                problems.push(format!("{}: {} pairs", a.name(), lattice.pair_count()));
            }
        }
    }
    let case = get_case("{1}").unwrap();
    let (plus, _) = components(&case).unwrap();
    let counts = lattice_of(&plus).unwrap().0.multiplicity_counts();
    let expected = [(2, 9), (3, 8), (4, 2)].into_iter().collect();
    if counts != expected {
        problems.push(format!("{{1}}+: multiplicities {:?}", counts));
    }
    problems
}

fn non_root_fails(case: &CaseData) -> Result<bool, String> {
    let roots = derive_constraint(&case.plan, &case.config).map_err(|e| e.to_string())?;
    for t0 in [2, 3, 5, 7, -2, -3, 11] {
        let t0 = QuadScalar::from_int(t0);
        if roots.poly.eval(&t0).is_zero() {
            continue;
        }
        let Ok(a) = evaluate_plan(&case.plan, &t0) else { continue };
        let Ok((_, table)) = lattice_of(&a) else { continue };
        let id = Permutation::identity(case.config.n());
        return Ok(!is_lattice_isomorphism(&table, &case.config, &id).map_err(|e| e.to_string())?);
    }
    Err("no admissible rational parameter".into())
}

fn criterion_6() -> Vec<String> {
    let mut problems = Vec::new();
    for name in list_cases() {
        let case = get_case(name).unwrap();
        let (plus, minus) = match components(&case) {
            Ok(pair) => pair,
            Err(e) => {
                problems.push(format!("{}: {}", name, e));
                continue;
            }
        };
        // involution laws
        if plus.galois_conjugate().galois_conjugate() != plus || plus.galois_conjugate() != minus.clone().with_name(plus.name()) {
            problems.push(format!("{}: galois conjugation", name));
        }
        for (swap, conjugate) in [(true, false), (false, true), (true, true)] {
            let twice = apply_coordinate_map(&apply_coordinate_map(&plus, swap, conjugate), swap, conjugate);
            if twice != plus {
                problems.push(format!("{}: map ({}, {}) is not an involution", name, swap, conjugate));
            }
        }
        // Vieta: a(t - r+)(t - r-) recomposes the constraint
        let c = derive_constraint(&case.plan, &case.config).unwrap();
        let a = QuadScalar::rational(c.poly.coeff(2));
        let sum = c.plus.checked_add(&c.minus).unwrap();
        let prod = c.plus.checked_mul(&c.minus).unwrap();
        let b = -(a.checked_mul(&sum).unwrap());
        let cc = a.checked_mul(&prod).unwrap();
        if b != QuadScalar::rational(c.poly.coeff(1)) || cc != QuadScalar::rational(c.poly.coeff(0)) {
            problems.push(format!("{}: Vieta", name));
        }
        // relabelling by a verified witness carries the lattice onto itself
        let p = grid_frame(&plus, case.grid).unwrap();
        let m = grid_frame(&minus, case.grid).unwrap();
        let w = verify_reflection(&p, &m, &case.sigma, case.map).unwrap();
        if w.verified {
            match extract_sigma(&p, &m, case.map) {
                Ok(Some(s)) if !s.is_identity() && s == case.sigma => {
                    let back = relabel(&apply_coordinate_map(&m, case.map.swap, case.map.conjugate), &s.inverse()).unwrap();
                    if back != p.clone().with_name(back.name()) {
                        problems.push(format!("{}: mapping back does not recover the + component", name));
                    }
                }
                other => problems.push(format!("{}: extraction gave {:?}", name, other.ok().flatten())),
            }
        }
        match non_root_fails(&case) {
            Ok(true) => {}
            Ok(false) => problems.push(format!("{}: non-root parameter satisfies the table", name)),
            Err(e) => problems.push(format!("{}: {}", name, e)),
        }
    }
    problems
}

fn criterion_7() -> Vec<String> {
    // topology is out of scope: nothing in the corpus or the reports claims it
    let mut problems = Vec::new();
    if get_case("rybnikov").is_ok() {
        problems.push("rybnikov should not be shipped".into());
    }
    let report = serde_json::to_value(run_case("{6}").unwrap()).unwrap();
    for key in ["homeomorphic", "fundamental_group", "zariski_pair"] {
        if report.get(key).is_some() {
            problems.push(format!("report claims {}", key));
        }
    }
    problems
}

fn main() {
    let mut gate = Gate { failed: 0 };
    gate.record(1, "automorphism group orders", criterion_1());
    gate.record(2, "derived constraints", criterion_2());
    gate.record(3, "root products", criterion_3());
    gate.record(4, "reference reflections verify, falk-sturmfels fails", criterion_4());
    gate.record(5, "lattice oracle at both roots", criterion_5());
    gate.record(6, "property checks on the corpus", criterion_6());
    gate.record(7, "topological claims stay out of scope", criterion_7());
    println!("acceptance: {} of 7 criteria passed", 7 - gate.failed);
    if gate.failed > 0 {
        std::process::exit(1);
    }
}
