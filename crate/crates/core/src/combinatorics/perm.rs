use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CombError;

/// A bijection of `{0, …, n−1}`, shown to users 1-based in cycle notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self, CombError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(CombError::BadPermutation(format!(
                    "{:?} is not a bijection of 1..{}",
                    images.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    n
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based images, the usual way to write a permutation down.
    pub fn from_one_based(images: &[usize]) -> Result<Self, CombError> {
        if images.contains(&0) {
            return Err(CombError::BadPermutation("labels start at 1".into()));
        }
        Permutation::from_images(images.iter().map(|i| i - 1).collect())
    }

    /// Parses cycle notation such as `(1 6)(2 5)(3 4)(7 8)`; `()` or `id` is the identity.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self, CombError> {
        let bad = |msg: String| CombError::BadPermutation(msg);
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        let trimmed = text.trim();
        if trimmed == "id" {
            return Ok(Permutation::identity(n));
        }
        let mut rest = trimmed;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| bad(format!("expected '(' in {:?}", text)))?;
            let close = body
                .find(')')
                .ok_or_else(|| bad(format!("unclosed cycle in {:?}", text)))?;
            let cycle: Vec<usize> = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    let s = s.trim_start_matches(|c: char| c.is_ascii_alphabetic());
                    s.parse::<usize>()
                        .map_err(|_| bad(format!("bad label {:?} in {:?}", s, text)))
                })
                .collect::<Result<_, _>>()?;
            for &c in &cycle {
                if c == 0 || c > n {
                    return Err(bad(format!("label {} out of range 1..{}", c, n)));
                }
                if moved[c - 1] {
                    return Err(bad(format!("label {} appears twice", c)));
                }
                moved[c - 1] = true;
            }
            for (k, &c) in cycle.iter().enumerate() {
                images[c - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut r = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            r[j] = i;
        }
        Permutation { images: r }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.compose(self).is_identity()
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .fold(1, |acc, c| num_integer::lcm(acc, c.len()))
    }

    /// Non-trivial cycles, 0-based, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Deserializes from `{ "degree": n, "cycles": "(1 2)" }`; cycle strings alone lack the degree.
impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            degree: usize,
            cycles: String,
        }
        let raw = Raw::deserialize(d)?;
        Permutation::parse_cycles(&raw.cycles, raw.degree).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_roundtrip() {
        let p = Permutation::parse_cycles("(1 6)(2 5)(3 4)(7 8)", 10).unwrap();
        assert_eq!(p.to_string(), "(1 6)(2 5)(3 4)(7 8)");
        assert_eq!(p.one_based(), vec![6, 5, 4, 3, 2, 1, 8, 7, 9, 10]);
        assert!(p.is_involution());
        assert_eq!(p.order(), 2);
    }

    #[test]
    fn accepts_labelled_cycles() {
        let p = Permutation::parse_cycles("(L1 L3 L2 L4)(L9)", 9).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.apply(0), 2);
    }

    #[test]
    fn compose_applies_right_first() {
        let a = Permutation::parse_cycles("(1 2)", 3).unwrap();
        let b = Permutation::parse_cycles("(2 3)", 3).unwrap();
        // (a∘b)(2) = a(3) = 3
        assert_eq!(a.compose(&b).apply(1), 2);
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::parse_cycles("(1 2", 3).is_err());
        assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::from_one_based(&[1, 1, 2]).is_err());
        assert!(Permutation::parse_cycles("()", 3).unwrap().is_identity());
    }
}
