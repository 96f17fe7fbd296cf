use std::fmt::Write as _;

use crate::combinatorics::Permutation;
use crate::field::{format_scalar, parse_scalar, FieldSpec, QuadScalar};

use super::{GeomError, ProjLine};

/// An ordered list of lines over one field; line `i` (1-based) is `lines()[i - 1]`.
///
/// Coincident lines are representable, so that degenerate specializations of a
/// construction can be inspected; [`Arrangement::check_distinct`] rejects them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    name: String,
    field: FieldSpec,
    lines: Vec<ProjLine>,
}

impl Arrangement {
    /// Homes every line in `field`; fails if a line needs a different quadratic field.
    pub fn new(name: impl Into<String>, field: FieldSpec, lines: Vec<ProjLine>) -> Result<Self, GeomError> {
        let lines = lines
            .iter()
            .map(|l| l.in_field(field))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Arrangement {
            name: name.into(),
            field,
            lines,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    /// Line `i`, 1-based.
    pub fn line(&self, i: usize) -> Result<&ProjLine, GeomError> {
        i.checked_sub(1)
            .and_then(|k| self.lines.get(k))
            .ok_or(GeomError::LineOutOfRange { line: i, n: self.n() })
    }

    /// First pair of coincident lines (1-based), if any.
    pub fn duplicate_pair(&self) -> Option<(usize, usize)> {
        let mut seen = std::collections::HashMap::new();
        for (k, l) in self.lines.iter().enumerate() {
            if let Some(&first) = seen.get(l) {
                return Some((first + 1, k + 1));
            }
            seen.insert(l, k);
        }
        None
    }

    pub fn check_distinct(&self) -> Result<(), GeomError> {
        match self.duplicate_pair() {
            Some((first, second)) => Err(GeomError::DuplicateLines { first, second }),
            None => Ok(()),
        }
    }

    pub fn galois_conjugate(&self) -> Self {
        Arrangement {
            name: self.name.clone(),
            field: self.field,
            lines: self.lines.iter().map(ProjLine::galois_conjugate).collect(),
        }
    }
}

/// `swap` sends `(A, B, C)` to `(B, A, C)`; `conjugate` applies Galois conjugation
/// coefficientwise. Labels are kept.
pub fn apply_coordinate_map(a: &Arrangement, swap: bool, conjugate: bool) -> Arrangement {
    let lines = a
        .lines
        .iter()
        .map(|l| {
            let l = if swap { l.swap_xy() } else { l.clone() };
            if conjugate {
                l.galois_conjugate()
            } else {
                l
            }
        })
        .collect();
    Arrangement {
        name: a.name.clone(),
        field: a.field,
        lines,
    }
}

/// The arrangement whose line `σ(i)` is `a`'s line `i`.
pub fn relabel(a: &Arrangement, sigma: &Permutation) -> Result<Arrangement, GeomError> {
    if sigma.degree() != a.n() {
        return Err(GeomError::SizeMismatch {
            left: a.n(),
            right: sigma.degree(),
        });
    }
    let mut lines = a.lines.clone();
    for (i, l) in a.lines.iter().enumerate() {
        lines[sigma.apply(i)] = l.clone();
    }
    Ok(Arrangement {
        name: a.name.clone(),
        field: a.field,
        lines,
    })
}

/// Parses the `.arr` format:
///
/// ```text
/// arrangement <name>
/// field sqrt <d>        # or: field rational
/// line <i> : <scalar> ; <scalar> ; <scalar>
/// ```
/// Lines must be numbered `1, 2, …` in order and be pairwise distinct.
pub fn parse_arrangement(text: &str) -> Result<Arrangement, GeomError> {
    let mut name: Option<String> = None;
    let mut field: Option<FieldSpec> = None;
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let syntax = |msg: String| GeomError::Syntax { line: lineno, msg };
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "arrangement" if name.is_none() && !rest.is_empty() => name = Some(rest.to_string()),
            "field" if name.is_some() && field.is_none() => {
                let words: Vec<&str> = rest.split_whitespace().collect();
                field = Some(match words.as_slice() {
                    ["rational"] => FieldSpec::Rational,
                    ["sqrt", d] => {
                        let d = d.parse().map_err(|_| syntax(format!("bad radicand {:?}", d)))?;
                        FieldSpec::quadratic(d)?
                    }
                    _ => return Err(syntax("expected 'field rational' or 'field sqrt <d>'".into())),
                });
            }
            "line" => {
                let field = field.ok_or_else(|| syntax("'line' before 'field'".into()))?;
                let (label, body) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax("expected 'line <i> : A ; B ; C'".into()))?;
                let label: usize = label
                    .trim()
                    .parse()
                    .map_err(|_| syntax(format!("bad line label {:?}", label.trim())))?;
                if label != lines.len() + 1 {
                    return Err(syntax(format!("expected line {}, found {}", lines.len() + 1, label)));
                }
                let parts: Vec<&str> = body.split(';').collect();
                if parts.len() != 3 {
                    return Err(syntax(format!("expected 3 coefficients, found {}", parts.len())));
                }
                let coeffs = parts
                    .iter()
                    .map(|p| parse_scalar(p, field))
                    .collect::<Result<Vec<QuadScalar>, _>>()?;
                let [a, b, c]: [QuadScalar; 3] = coeffs.try_into().expect("three parts");
                let l = ProjLine::new(a, b, c).map_err(|e| syntax(e.to_string()))?;
                lines.push(l);
            }
            other => return Err(syntax(format!("unexpected {:?}", other))),
        }
    }
    let missing = |what: &str| GeomError::Syntax {
        line: 0,
        msg: format!("missing '{}' header", what),
    };
    let name = name.ok_or_else(|| missing("arrangement"))?;
    let field = field.ok_or_else(|| missing("field"))?;
    let arr = Arrangement::new(name, field, lines)?;
    arr.check_distinct()?;
    Ok(arr)
}

/// Writes the `.arr` format with normalized coefficients.
pub fn format_arrangement(a: &Arrangement) -> String {
    let mut out = String::new();
    writeln!(out, "arrangement {}", a.name).unwrap();
    writeln!(out, "field {}", a.field).unwrap();
    for (k, l) in a.lines.iter().enumerate() {
        let c = l.coeffs();
        writeln!(
            out,
            "line {} : {} ; {} ; {}",
            k + 1,
            format_scalar(&c[0]),
            format_scalar(&c[1]),
            format_scalar(&c[2])
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
arrangement sample
field sqrt 5
line 1 : 1 ; 0 ; 0
line 2 : 0 ; 1 ; -1/2-1/2w
line 3 : 1 ; -1 ; 0
";

    #[test]
    fn arr_roundtrip() {
        let a = parse_arrangement(SAMPLE).unwrap();
        assert_eq!(a.n(), 3);
        assert_eq!(a.field(), FieldSpec::Quadratic { d: 5 });
        assert_eq!(format_arrangement(&a), SAMPLE);
    }

    #[test]
    fn arr_rejects_bad_input() {
        let dup = "arrangement x\nfield rational\nline 1 : 1 ; 0 ; 0\nline 2 : 2 ; 0 ; 0\n";
        assert_eq!(
            parse_arrangement(dup),
            Err(GeomError::DuplicateLines { first: 1, second: 2 })
        );
        let gap = "arrangement x\nfield rational\nline 2 : 1 ; 0 ; 0\n";
        assert!(matches!(parse_arrangement(gap), Err(GeomError::Syntax { line: 3, .. })));
        let w = "arrangement x\nfield rational\nline 1 : w ; 0 ; 0\n";
        assert!(parse_arrangement(w).is_err());
        let zero = "arrangement x\nfield rational\nline 1 : 0 ; 0 ; 0\n";
        assert!(parse_arrangement(zero).is_err());
        assert!(parse_arrangement("arrangement x\n").is_err());
    }

    #[test]
    fn swap_sends_x_axis_to_y_axis() {
        let a = parse_arrangement("arrangement x\nfield rational\nline 1 : 1 ; 0 ; 0\n").unwrap();
        let b = apply_coordinate_map(&a, true, false);
        assert_eq!(b.lines()[0].coeffs()[1], QuadScalar::from_int(1));
        assert_eq!(b.lines()[0].coeffs()[0], QuadScalar::from_int(0));
    }

    #[test]
    fn coordinate_maps_are_involutions() {
        let a = parse_arrangement(SAMPLE).unwrap();
        for (s, c) in [(true, false), (false, true), (true, true)] {
            let twice = apply_coordinate_map(&apply_coordinate_map(&a, s, c), s, c);
            assert_eq!(twice, a);
        }
    }

    #[test]
    fn relabel_laws() {
        let a = parse_arrangement(SAMPLE).unwrap();
        let id = Permutation::identity(3);
        assert_eq!(relabel(&a, &id).unwrap(), a);
        let s = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        let r = relabel(&a, &s).unwrap();
        assert_eq!(r.lines()[1], a.lines()[0]);
        assert_eq!(relabel(&r, &s.inverse()).unwrap(), a);
        assert!(relabel(&a, &Permutation::identity(2)).is_err());
    }
}
