use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use super::{CombError, Permutation};

/// A point of multiplicity ≥ 3 and the (1-based) lines through it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TablePoint {
    pub label: String,
    pub lines: BTreeSet<usize>,
}

impl TablePoint {
    pub fn multiplicity(&self) -> usize {
        self.lines.len()
    }
}

/// Configuration table: the multiple points of an arrangement of `n` lines labelled `1..=n`.
/// Double points are the line pairs not covered by any listed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigTable {
    name: String,
    n: usize,
    points: Vec<TablePoint>,
}

impl ConfigTable {
    pub fn new(
        name: impl Into<String>,
        n: usize,
        points: Vec<(String, Vec<usize>)>,
    ) -> Result<Self, CombError> {
        let mut pts = Vec::with_capacity(points.len());
        let mut labels = HashSet::new();
        for (label, lines) in points {
            if !labels.insert(label.clone()) {
                return Err(CombError::DuplicateLabel(label));
            }
            let mut set = BTreeSet::new();
            for &l in &lines {
                if l == 0 || l > n {
                    return Err(CombError::LabelOutOfRange { point: label, line: l, n });
                }
                if !set.insert(l) {
                    return Err(CombError::RepeatedLine { point: label, line: l });
                }
            }
            if set.len() < 3 {
                return Err(CombError::TooFewLines { point: label, count: set.len() });
            }
            pts.push(TablePoint { label, lines: set });
        }
        let table = ConfigTable {
            name: name.into(),
            n,
            points: pts,
        };
        table.check_pairs()?;
        Ok(table)
    }

    // two lines meet exactly once
    fn check_pairs(&self) -> Result<(), CombError> {
        let mut owner: HashMap<(usize, usize), &str> = HashMap::new();
        for p in &self.points {
            let lines: Vec<usize> = p.lines.iter().copied().collect();
            for (k, &a) in lines.iter().enumerate() {
                for &b in &lines[k + 1..] {
                    if let Some(prev) = owner.insert((a, b), &p.label) {
                        return Err(CombError::RepeatedPair {
                            a,
                            b,
                            first: prev.to_string(),
                            second: p.label.clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[TablePoint] {
        &self.points
    }

    /// Points keyed by their sorted line sets; labels play no role in structure.
    pub fn point_sets(&self) -> BTreeSet<Vec<usize>> {
        self.points
            .iter()
            .map(|p| p.lines.iter().copied().collect())
            .collect()
    }

    /// Number of double points: the pairs left over by the listed points.
    pub fn double_count(&self) -> usize {
        let covered: usize = self.points.iter().map(|p| choose2(p.multiplicity())).sum();
        choose2(self.n) - covered
    }

    /// Sorted multiplicities of the listed points on `line` (1-based).
    pub fn line_signature(&self, line: usize) -> Vec<usize> {
        let mut sig: Vec<usize> = self
            .points
            .iter()
            .filter(|p| p.lines.contains(&line))
            .map(TablePoint::multiplicity)
            .collect();
        sig.sort_unstable();
        sig
    }

    /// `w[i][j]` (0-based) = multiplicity of the point through lines i and j, 2 for a double.
    pub fn weight_matrix(&self) -> Vec<Vec<usize>> {
        let mut w = vec![vec![2; self.n]; self.n];
        for (i, row) in w.iter_mut().enumerate() {
            row[i] = 0;
        }
        for p in &self.points {
            for &a in &p.lines {
                for &b in &p.lines {
                    if a != b {
                        w[a - 1][b - 1] = p.multiplicity();
                    }
                }
            }
        }
        w
    }

    /// Serializes to the `.cfg` text format.
    pub fn to_cfg(&self) -> String {
        let mut out = String::new();
        writeln!(out, "arrangement {}", self.name).unwrap();
        writeln!(out, "lines {}", self.n).unwrap();
        for p in &self.points {
            let lines: Vec<String> = p.lines.iter().map(usize::to_string).collect();
            writeln!(out, "point {} : {}", p.label, lines.join(" ")).unwrap();
        }
        out
    }
}

pub(crate) fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Parses the line-oriented `.cfg` format:
///
/// ```text
/// arrangement <name>
/// lines <n>
/// point <label> : <i1> <i2> ... <ik>
/// ```
/// `#` starts a comment.
pub fn parse_config_table(text: &str) -> Result<ConfigTable, CombError> {
    let mut name: Option<String> = None;
    let mut n: Option<usize> = None;
    let mut points = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let syntax = |msg: &str| CombError::Syntax { line: lineno, msg: msg.to_string() };
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "arrangement" => {
                if name.is_some() {
                    return Err(syntax("repeated 'arrangement' header"));
                }
                if rest.is_empty() {
                    return Err(syntax("missing arrangement name"));
                }
                name = Some(rest.to_string());
            }
            "lines" => {
                if name.is_none() {
                    return Err(syntax("'lines' before 'arrangement'"));
                }
                if n.is_some() {
                    return Err(syntax("repeated 'lines' header"));
                }
                n = Some(rest.parse().map_err(|_| syntax("expected a line count"))?);
            }
            "point" => {
                if n.is_none() {
                    return Err(syntax("'point' before 'lines'"));
                }
                let (label, lines) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax("expected 'point <label> : <lines>'"))?;
                let label = label.trim();
                if label.is_empty() || label.contains(char::is_whitespace) {
                    return Err(syntax("point label must be a single word"));
                }
                let lines = lines
                    .split_whitespace()
                    .map(|s| s.parse::<usize>().map_err(|_| syntax("bad line label")))
                    .collect::<Result<Vec<_>, _>>()?;
                points.push((label.to_string(), lines));
            }
            other => return Err(syntax(&format!("unknown keyword {:?}", other))),
        }
    }
    let name = name.ok_or(CombError::Syntax { line: 0, msg: "missing 'arrangement' header".into() })?;
    let n = n.ok_or(CombError::Syntax { line: 0, msg: "missing 'lines' header".into() })?;
    ConfigTable::new(name, n, points)
}

/// True iff `tau` carries the multiple points of `a` exactly onto those of `b`.
pub fn is_lattice_isomorphism(
    a: &ConfigTable,
    b: &ConfigTable,
    tau: &Permutation,
) -> Result<bool, CombError> {
    if a.n() != b.n() || tau.degree() != a.n() {
        return Err(CombError::SizeMismatch {
            left: a.n(),
            right: b.n(),
            perm: tau.degree(),
        });
    }
    Ok(maps_points(a, b, tau))
}

pub(crate) fn maps_points(a: &ConfigTable, b: &ConfigTable, tau: &Permutation) -> bool {
    if a.points.len() != b.points.len() {
        return false;
    }
    let target = b.point_sets();
    a.points.iter().all(|p| {
        let mut img: Vec<usize> = p.lines.iter().map(|&l| tau.apply(l - 1) + 1).collect();
        img.sort_unstable();
        target.contains(&img)
    })
}
