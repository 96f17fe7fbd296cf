use std::collections::{BTreeMap, HashMap, HashSet};

use super::table::maps_points;
use super::{ConfigTable, Permutation};

/// The lattice automorphism group of a configuration table, fully enumerated.
#[derive(Clone, Debug, PartialEq)]
pub struct AutGroup {
    n: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl AutGroup {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements, ordered lexicographically by image sequence.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// Number of elements of each order.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for e in &self.elements {
            *h.entry(e.order()).or_insert(0) += 1;
        }
        h
    }

    /// Convenience name for the isomorphism type, from element-order statistics.
    /// Falls back to `order N` when the statistics do not single out a known group.
    pub fn label(&self) -> String {
        let order = self.order();
        let hist = self.order_histogram();
        let abelian = self.is_abelian();
        let matches = |want: &[(usize, usize)]| {
            hist.len() == want.len() && want.iter().all(|(o, c)| hist.get(o) == Some(c))
        };
        if order == 1 {
            return "trivial".into();
        }
        if hist.contains_key(&order) {
            return format!("Z{}", order);
        }
        if order > 48 {
            return format!("order {}", order);
        }
        if abelian && hist.keys().all(|&o| o <= 2) {
            return match order.trailing_zeros() {
                2 => "Z2xZ2".into(),
                k => format!("Z2^{}", k),
            };
        }
        if !abelian && order == 6 {
            return "S3".into();
        }
        if matches(&[(1, 1), (2, 7), (3, 2), (6, 2)]) {
            return "S3xZ2".into();
        }
        if matches(&[(1, 1), (2, 9), (3, 8), (4, 6)]) {
            return "S4".into();
        }
        if matches(&[(1, 1), (2, 13), (3, 8), (4, 6), (6, 8), (8, 12)]) {
            return "GL(2,F3)".into();
        }
        format!("order {}", order)
    }

    /// Non-identity elements of order 2, in element order.
    pub fn involutions(&self) -> Vec<Permutation> {
        involutions(self)
    }
}

/// Every lattice automorphism of `table`.
///
/// Backtracking over the complete graph on the lines weighted by the multiplicity of the
/// point each pair spans (2 for doubles). Lines are assigned rarest signature first, every
/// partial assignment must preserve weights, and a complete assignment is accepted only
/// after the full point-set check, since equal pair weights do not force equal points.
pub fn automorphism_group(table: &ConfigTable) -> AutGroup {
    let n = table.n();
    let weights = table.weight_matrix();
    let sigs: Vec<Vec<usize>> = (1..=n).map(|l| table.line_signature(l)).collect();
    let mut sig_count: HashMap<&Vec<usize>, usize> = HashMap::new();
    for s in &sigs {
        *sig_count.entry(s).or_insert(0) += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&l| (sig_count[&sigs[l]], l));

    let mut search = Search {
        table,
        weights: &weights,
        sigs: &sigs,
        order: &order,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        found: Vec::new(),
    };
    search.extend(0);
    let mut elements = search.found;
    elements.sort();
    let generators = greedy_generators(&elements);
    AutGroup {
        n,
        elements,
        generators,
    }
}

struct Search<'a> {
    table: &'a ConfigTable,
    weights: &'a [Vec<usize>],
    sigs: &'a [Vec<usize>],
    order: &'a [usize],
    image: Vec<usize>,
    used: Vec<bool>,
    found: Vec<Permutation>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) {
        if depth == self.order.len() {
            let perm = Permutation::from_images(self.image.clone()).expect("bijective by construction");
            if maps_points(self.table, self.table, &perm) {
                self.found.push(perm);
            }
            return;
        }
        let line = self.order[depth];
        for cand in 0..self.order.len() {
            if self.used[cand] || self.sigs[cand] != self.sigs[line] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&prev| {
                self.weights[prev][line] == self.weights[self.image[prev]][cand]
            });
            if !consistent {
                continue;
            }
            self.image[line] = cand;
            self.used[cand] = true;
            self.extend(depth + 1);
            self.used[cand] = false;
            self.image[line] = usize::MAX;
        }
    }
}

fn closure(gens: &[Permutation], n: usize) -> HashSet<Permutation> {
    let mut seen = HashSet::from([Permutation::identity(n)]);
    let mut frontier = vec![Permutation::identity(n)];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = g.compose(&p);
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen
}

fn greedy_generators(elements: &[Permutation]) -> Vec<Permutation> {
    let Some(first) = elements.first() else {
        return Vec::new();
    };
    let n = first.degree();
    let mut gens = Vec::new();
    let mut span = closure(&gens, n);
    // prefer high-order elements so that cyclic groups get a single generator
    let mut candidates: Vec<&Permutation> = elements.iter().filter(|p| !p.is_identity()).collect();
    candidates.sort_by_key(|p| std::cmp::Reverse(p.order()));
    for p in candidates {
        if span.len() == elements.len() {
            break;
        }
        if !span.contains(p) {
            gens.push(p.clone());
            span = closure(&gens, n);
        }
    }
    gens
}

/// Non-identity elements of order 2.
pub fn involutions(group: &AutGroup) -> Vec<Permutation> {
    group
        .elements
        .iter()
        .filter(|p| p.is_involution())
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::parse_config_table;

    #[test]
    fn empty_table_gives_symmetric_group() {
        let t = parse_config_table("arrangement G\nlines 4\n").unwrap();
        let g = automorphism_group(&t);
        assert_eq!(g.order(), 24);
        assert_eq!(g.label(), "S4");
        assert_eq!(g.involutions().len(), 9);
    }

    #[test]
    fn trivial_group_has_no_involutions() {
        let trivial = AutGroup {
            n: 3,
            elements: vec![Permutation::identity(3)],
            generators: vec![],
        };
        assert!(trivial.involutions().is_empty());
        assert_eq!(trivial.label(), "trivial");
    }

    #[test]
    fn cyclic_label() {
        let g = AutGroup {
            n: 4,
            elements: {
                let r = Permutation::parse_cycles("(1 2 3 4)", 4).unwrap();
                let mut v = vec![
                    Permutation::identity(4),
                    r.clone(),
                    r.compose(&r),
                    r.compose(&r).compose(&r),
                ];
                v.sort();
                v
            },
            generators: vec![],
        };
        assert_eq!(g.label(), "Z4");
        assert_eq!(g.involutions().len(), 1);
    }
}
