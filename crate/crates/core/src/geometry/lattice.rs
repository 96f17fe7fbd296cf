use std::collections::{BTreeSet, HashMap};

use crate::combinatorics::ConfigTable;

use super::{intersect, Arrangement, GeomError, ProjPoint};

/// A point of the arrangement together with the (1-based) lines through it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePoint {
    pub point: ProjPoint,
    pub incident: BTreeSet<usize>,
}

impl LatticePoint {
    pub fn multiplicity(&self) -> usize {
        self.incident.len()
    }
}

/// Every intersection point, each line pair covered by exactly one entry.
/// Points are sorted by incident set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionLattice {
    pub points: Vec<LatticePoint>,
}

impl IntersectionLattice {
    /// Number of points of each multiplicity.
    pub fn multiplicity_counts(&self) -> std::collections::BTreeMap<usize, usize> {
        let mut counts = std::collections::BTreeMap::new();
        for p in &self.points {
            *counts.entry(p.multiplicity()).or_insert(0) += 1;
        }
        counts
    }

    pub fn pair_count(&self) -> usize {
        self.points.iter().map(|p| p.multiplicity() * (p.multiplicity() - 1) / 2).sum()
    }
}

/// Groups all pairwise intersections by exact point equality. The derived table lists the
/// points of multiplicity ≥ 3, labelled `m1, m2, …` in incident-set order.
pub fn lattice_of(a: &Arrangement) -> Result<(IntersectionLattice, ConfigTable), GeomError> {
    a.check_distinct()?;
    let lines = a.lines();
    let mut groups: HashMap<ProjPoint, BTreeSet<usize>> = HashMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = intersect(&lines[i], &lines[j])?;
            let set = groups.entry(p).or_default();
            set.insert(i + 1);
            set.insert(j + 1);
        }
    }
    let mut points: Vec<LatticePoint> = groups
        .into_iter()
        .map(|(point, incident)| LatticePoint { point, incident })
        .collect();
    points.sort_by(|x, y| x.incident.cmp(&y.incident));
    let multiple: Vec<(String, Vec<usize>)> = points
        .iter()
        .filter(|p| p.multiplicity() >= 3)
        .enumerate()
        .map(|(k, p)| (format!("m{}", k + 1), p.incident.iter().copied().collect()))
        .collect();
    let table = ConfigTable::new(a.name(), a.n(), multiple)
        .expect("points of an arrangement satisfy the table axioms");
    Ok((IntersectionLattice { points }, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldSpec, QuadScalar};
    use crate::geometry::ProjLine;

    fn arr(triples: &[[i64; 3]]) -> Arrangement {
        let lines = triples
            .iter()
            .map(|t| {
                ProjLine::new(QuadScalar::from_int(t[0]), QuadScalar::from_int(t[1]), QuadScalar::from_int(t[2]))
                    .unwrap()
            })
            .collect();
        Arrangement::new("t", FieldSpec::Rational, lines).unwrap()
    }

    #[test]
    fn three_generic_lines() {
        let (lat, table) = lattice_of(&arr(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]])).unwrap();
        assert_eq!(lat.points.len(), 3);
        assert!(table.points().is_empty());
        assert_eq!(lat.pair_count(), 3);
    }

    #[test]
    fn pencil_and_a_transversal() {
        // three lines through the origin, one line off it
        let (lat, table) = lattice_of(&arr(&[[1, 0, 0], [0, 1, 0], [1, -1, 0], [0, 0, 1]])).unwrap();
        assert_eq!(table.points().len(), 1);
        assert_eq!(table.points()[0].label, "m1");
        assert_eq!(table.points()[0].lines, BTreeSet::from([1, 2, 3]));
        assert_eq!(lat.multiplicity_counts(), [(2, 3), (3, 1)].into());
        assert_eq!(lat.pair_count(), 6);
    }

    #[test]
    fn duplicates_rejected() {
        assert!(matches!(
            lattice_of(&arr(&[[1, 0, 0], [2, 0, 0], [0, 0, 1]])),
            Err(GeomError::DuplicateLines { first: 1, second: 2 })
        ));
    }
}
