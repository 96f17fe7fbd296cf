use std::collections::HashSet;

use crate::field::{QuadScalar, RatFunc};
use crate::geometry::GRID_LINES;

use super::expr::parse_ratfunc;
use super::ModuliError;

/// One statement of a construction plan. Line numbers are 1-based.
#[derive(Clone, Debug, PartialEq)]
pub enum Step {
    Given { line: usize, coeffs: [RatFunc; 3] },
    Meet { point: String, a: usize, b: usize },
    Join { line: usize, p: String, q: String },
    Require { point: String, line: usize },
}

/// A straight-line construction of an arrangement over ℚ(var), checked at parse time:
/// names are defined before use, every line exactly once, and the four grid lines
/// `x = 0`, `x = z`, `y = 0`, `y = z` are among the constant `given` lines.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionPlan {
    name: String,
    var: String,
    n: usize,
    steps: Vec<Step>,
    grid: [usize; 4],
}

impl ConstructionPlan {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Labels of the lines set to `x = 0`, `x = z`, `y = 0`, `y = z`.
    pub fn grid(&self) -> [usize; 4] {
        self.grid
    }

    pub fn requirements(&self) -> impl Iterator<Item = (&str, usize)> {
        self.steps.iter().filter_map(|s| match s {
            Step::Require { point, line } => Some((point.as_str(), *line)),
            _ => None,
        })
    }
}

fn grid_slot(coeffs: &[RatFunc; 3]) -> Option<usize> {
    let consts: Vec<QuadScalar> = coeffs
        .iter()
        .map(|c| c.as_constant().map(QuadScalar::rational))
        .collect::<Option<_>>()?;
    let raw: [QuadScalar; 3] = consts.try_into().ok()?;
    let line = crate::geometry::ProjLine::from_triple(&raw).ok()?;
    GRID_LINES.iter().position(|g| {
        crate::geometry::ProjLine::from_triple(&g.map(QuadScalar::from_int)).ok().as_ref() == Some(&line)
    })
}

/// Parses the `.plan` format:
///
/// ```text
/// plan <name> over <var>
/// lines <n>
/// line <i> : <rf> ; <rf> ; <rf>
/// point <P> : meet <i> <j>
/// line <i> : join <P> <Q>
/// require <P> on <i>
/// ```
pub fn parse_plan(text: &str) -> Result<ConstructionPlan, ModuliError> {
    let mut header: Option<(String, String)> = None;
    let mut n: Option<usize> = None;
    let mut steps = Vec::new();
    let mut lines_defined: HashSet<usize> = HashSet::new();
    let mut points_defined: HashSet<String> = HashSet::new();
    let mut grid: [Option<usize>; 4] = [None; 4];

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let syntax = |msg: String| ModuliError::Syntax { line: lineno, msg };
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        if keyword == "plan" {
            if header.is_some() {
                return Err(syntax("repeated 'plan' header".into()));
            }
            let (name, var) = rest
                .rsplit_once(" over ")
                .ok_or_else(|| syntax("expected 'plan <name> over <var>'".into()))?;
            let var = var.trim();
            if var.is_empty() || !var.chars().all(char::is_alphabetic) {
                return Err(syntax(format!("bad variable name {:?}", var)));
            }
            header = Some((name.trim().to_string(), var.to_string()));
            continue;
        }
        let Some((_, var)) = &header else {
            return Err(syntax("statement before 'plan' header".into()));
        };
        if keyword == "lines" {
            if n.is_some() {
                return Err(syntax("repeated 'lines' header".into()));
            }
            n = Some(rest.parse().map_err(|_| syntax("expected a line count".into()))?);
            continue;
        }
        let n = n.ok_or_else(|| syntax("statement before 'lines'".into()))?;
        let line_label = |s: &str| -> Result<usize, ModuliError> {
            let i: usize = s.parse().map_err(|_| syntax(format!("bad line label {:?}", s)))?;
            if i == 0 || i > n {
                return Err(syntax(format!("line {} outside 1..{}", i, n)));
            }
            Ok(i)
        };
        let defined_line = |i: usize| -> Result<(), ModuliError> {
            if lines_defined.contains(&i) {
                Ok(())
            } else {
                Err(ModuliError::UseBeforeDefine { name: format!("line {}", i), line: lineno })
            }
        };
        let defined_point = |p: &str| -> Result<(), ModuliError> {
            if points_defined.contains(p) {
                Ok(())
            } else {
                Err(ModuliError::UseBeforeDefine { name: format!("point {}", p), line: lineno })
            }
        };
        match keyword {
            "line" => {
                let (label, body) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax("expected 'line <i> : ...'".into()))?;
                let i = line_label(label.trim())?;
                let body = body.trim();
                let step = if let Some(args) = body.strip_prefix("join ") {
                    let names: Vec<&str> = args.split_whitespace().collect();
                    let [p, q] = names.as_slice() else {
                        return Err(syntax("expected 'join <P> <Q>'".into()));
                    };
                    defined_point(p)?;
                    defined_point(q)?;
                    if p == q {
                        return Err(syntax(format!("join of {} with itself", p)));
                    }
                    Step::Join { line: i, p: p.to_string(), q: q.to_string() }
                } else {
                    let parts: Vec<&str> = body.split(';').collect();
                    if parts.len() != 3 {
                        return Err(syntax(format!("expected 3 coefficients, found {}", parts.len())));
                    }
                    let coeffs: Vec<RatFunc> = parts
                        .iter()
                        .map(|p| parse_ratfunc(p, var).map_err(&syntax))
                        .collect::<Result<_, _>>()?;
                    if coeffs.iter().all(RatFunc::is_zero) {
                        return Err(syntax("all three coefficients are zero".into()));
                    }
                    let coeffs: [RatFunc; 3] = coeffs.try_into().expect("three parts");
                    if let Some(slot) = grid_slot(&coeffs) {
                        grid[slot].get_or_insert(i);
                    }
                    Step::Given { line: i, coeffs }
                };
                if !lines_defined.insert(i) {
                    return Err(ModuliError::Duplicate { name: format!("line {}", i), line: lineno });
                }
                steps.push(step);
            }
            "point" => {
                let (label, body) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax("expected 'point <P> : meet <i> <j>'".into()))?;
                let label = label.trim();
                if label.is_empty() || label.contains(char::is_whitespace) {
                    return Err(syntax("point name must be a single word".into()));
                }
                let words: Vec<&str> = body.split_whitespace().collect();
                let ["meet", a, b] = words.as_slice() else {
                    return Err(syntax("expected 'meet <i> <j>'".into()));
                };
                let (a, b) = (line_label(a)?, line_label(b)?);
                defined_line(a)?;
                defined_line(b)?;
                if a == b {
                    return Err(syntax(format!("meet of line {} with itself", a)));
                }
                if !points_defined.insert(label.to_string()) {
                    return Err(ModuliError::Duplicate { name: format!("point {}", label), line: lineno });
                }
                steps.push(Step::Meet { point: label.to_string(), a, b });
            }
            "require" => {
                let words: Vec<&str> = rest.split_whitespace().collect();
                let [p, "on", i] = words.as_slice() else {
                    return Err(syntax("expected 'require <P> on <i>'".into()));
                };
                let i = line_label(i)?;
                defined_point(p)?;
                defined_line(i)?;
                steps.push(Step::Require { point: p.to_string(), line: i });
            }
            other => return Err(syntax(format!("unknown keyword {:?}", other))),
        }
    }

    let (name, var) = header.ok_or(ModuliError::EmptyPlan)?;
    let n = n.ok_or(ModuliError::Syntax { line: 0, msg: "missing 'lines' header".into() })?;
    if let Some(missing) = (1..=n).find(|i| !lines_defined.contains(i)) {
        return Err(ModuliError::MissingLine(missing));
    }
    let names = ["x = 0", "x = z", "y = 0", "y = z"];
    let mut found = [0; 4];
    for (k, slot) in grid.iter().enumerate() {
        found[k] = slot.ok_or(ModuliError::MissingGrid(names[k]))?;
    }
    Ok(ConstructionPlan { name, var, n, steps, grid: found })
}
