use std::collections::HashMap;

use serde::{Serialize, Serializer};

use crate::combinatorics::{is_lattice_isomorphism, ConfigTable, Permutation};
use crate::field::{format_scalar, QuadScalar};
use crate::geometry::{apply_coordinate_map, lattice_of, proportionality, Arrangement, Triple};

use super::{MapKind, WitnessError};

/// Ordered pairs `(i, j)`, 1-based, with `i ≠ j`, `σ(i) ∉ {i, j}` and `σ(j) ≠ j`.
pub fn grid_candidates(table: &ConfigTable, sigma: &Permutation) -> Vec<(usize, usize)> {
    let n = table.n().min(sigma.degree());
    let s = |k: usize| sigma.apply(k - 1) + 1;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j && s(i) != i && s(i) != j && s(j) != j {
                out.push((i, j));
            }
        }
    }
    out
}

fn serialize_scalar<S: Serializer>(x: &Option<QuadScalar>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.serialize_some(&format_scalar(x)),
        None => s.serialize_none(),
    }
}

/// `map(L⁺ᵢ) = scalar · L⁻ⱼ` for `j = σ(i)`, both sides in normal form before the map;
/// `scalar` is absent when the lines differ.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LineCertificate {
    pub line: usize,
    pub target: usize,
    #[serde(serialize_with = "serialize_scalar")]
    pub scalar: Option<QuadScalar>,
}

/// The outcome of checking `map(L⁺ᵢ) ≐ L⁻_{σ(i)}` for every line.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReflectionWitness {
    pub case: String,
    pub sigma: Permutation,
    pub map: MapKind,
    pub verified: bool,
    pub per_line: Vec<LineCertificate>,
}

impl ReflectionWitness {
    /// First line (1-based) whose image is not the expected line.
    pub fn first_failure(&self) -> Option<usize> {
        self.per_line.iter().find(|c| c.scalar.is_none()).map(|c| c.line)
    }
}

fn mapped_triple(t: &Triple, map: MapKind) -> Triple {
    let mut out = t.clone();
    if map.swap {
        out.swap(0, 1);
    }
    if map.conjugate {
        out = out.map(|c| c.galois_conjugate());
    }
    out
}

fn check_pair(a: &Arrangement, b: &Arrangement) -> Result<(), WitnessError> {
    if a.n() != b.n() {
        return Err(WitnessError::SizeMismatch { left: a.n(), right: b.n() });
    }
    if a.field() != b.field() {
        return Err(WitnessError::FieldMismatch { left: a.field(), right: b.field() });
    }
    Ok(())
}

/// Checks line by line that `map` sends line `i` of `plus` to line `σ(i)` of `minus`.
pub fn verify_reflection(
    plus: &Arrangement,
    minus: &Arrangement,
    sigma: &Permutation,
    map: MapKind,
) -> Result<ReflectionWitness, WitnessError> {
    check_pair(plus, minus)?;
    if sigma.degree() != plus.n() {
        return Err(WitnessError::DegreeMismatch { degree: sigma.degree(), n: plus.n() });
    }
    let mut per_line = Vec::with_capacity(plus.n());
    for (i, line) in plus.lines().iter().enumerate() {
        let j = sigma.apply(i);
        let image = mapped_triple(line.coeffs(), map);
        let scalar = proportionality(&image, minus.lines()[j].coeffs()).map_err(crate::geometry::GeomError::from)?;
        per_line.push(LineCertificate { line: i + 1, target: j + 1, scalar });
    }
    Ok(ReflectionWitness {
        case: plus.name().trim_end_matches('+').to_string(),
        sigma: sigma.clone(),
        map,
        verified: per_line.iter().all(|c| c.scalar.is_some()),
        per_line,
    })
}

/// The relabelling `σ` with `map(Aᵢ) = B_{σ(i)}`, provided the mapped lines of `a` are
/// exactly the lines of `b` and `σ` is a lattice isomorphism between them.
pub fn extract_sigma(a: &Arrangement, b: &Arrangement, map: MapKind) -> Result<Option<Permutation>, WitnessError> {
    check_pair(a, b)?;
    let image = apply_coordinate_map(a, map.swap, map.conjugate);
    let position: HashMap<_, usize> = b.lines().iter().enumerate().map(|(k, l)| (l, k)).collect();
    let mut images = Vec::with_capacity(a.n());
    for l in image.lines() {
        match position.get(l) {
            Some(&k) => images.push(k),
            None => return Ok(None),
        }
    }
    let Ok(sigma) = Permutation::from_images(images) else {
        return Ok(None);
    };
    let (_, ta) = lattice_of(a)?;
    let (_, tb) = lattice_of(b)?;
    Ok(is_lattice_isomorphism(&ta, &tb, &sigma)?.then_some(sigma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::parse_config_table;
    use crate::field::FieldSpec;
    use crate::geometry::ProjLine;

    fn arr(triples: &[[i64; 3]]) -> Arrangement {
        let lines = triples
            .iter()
            .map(|t| ProjLine::from_triple(&t.map(QuadScalar::from_int)).unwrap())
            .collect();
        Arrangement::new("a", FieldSpec::Rational, lines).unwrap()
    }

    #[test]
    fn identity_has_no_grid() {
        let t = parse_config_table("arrangement g\nlines 4\n").unwrap();
        assert!(grid_candidates(&t, &Permutation::identity(4)).is_empty());
        let s = Permutation::parse_cycles("(1 2)(3 4)", 4).unwrap();
        let c = grid_candidates(&t, &s);
        assert!(c.contains(&(1, 3)));
        assert!(!c.contains(&(1, 2)));
    }

    #[test]
    fn swap_of_symmetric_arrangement() {
        let a = arr(&[[1, 0, 0], [0, 1, 0], [1, 0, -1], [0, 1, -1], [1, -1, 0]]);
        let s = Permutation::parse_cycles("(1 2)(3 4)", 5).unwrap();
        let w = verify_reflection(&a, &a, &s, MapKind::SWAP).unwrap();
        assert!(w.verified);
        assert_eq!(w.per_line[4].scalar, Some(QuadScalar::from_int(-1)));
        let id = verify_reflection(&a, &a, &Permutation::identity(5), MapKind::SWAP).unwrap();
        assert!(!id.verified);
        assert_eq!(id.first_failure(), Some(1));
        assert_eq!(extract_sigma(&a, &a, MapKind::SWAP).unwrap(), Some(s));
    }

    #[test]
    fn extraction_fails_on_different_unions() {
        let a = arr(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        let b = arr(&[[1, 0, 0], [0, 1, 0], [1, 1, 1]]);
        assert_eq!(extract_sigma(&a, &b, MapKind::SWAP).unwrap(), None);
        let mapped = apply_coordinate_map(&a, true, false);
        assert_eq!(extract_sigma(&a, &mapped, MapKind::SWAP).unwrap(), Some(Permutation::identity(3)));
        assert!(extract_sigma(&a, &arr(&[[1, 0, 0]]), MapKind::SWAP).is_err());
    }
}
