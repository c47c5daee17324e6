use super::fdigraph::{test_partition, ThresholdRepresentation};
use super::Partition;
use crate::digraph::Digraph;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Width {
    Exact { width: usize, partition: Partition, representation: ThresholdRepresentation },
    /// Larger than the bound that was searched.
    Exceeds(usize),
}

impl Width {
    pub fn value(&self) -> Option<usize> {
        match self {
            Width::Exact { width, .. } => Some(*width),
            Width::Exceeds(_) => None,
        }
    }

    /// Whether the width is at most `k`; only meaningful for `k` up to the
    /// searched bound.
    pub fn at_most(&self, k: usize) -> bool {
        self.value().is_some_and(|w| w <= k)
    }
}

/// Smallest `k ≤ max_k` such that `g` is a product of one-vertex factors over
/// some `k`-vertex digraph. The empty graph has width 1.
pub fn threshold_width(g: &Graph, max_k: usize) -> Width {
    let n = g.vertex_count();
    if n == 0 {
        if max_k == 0 {
            return Width::Exceeds(0);
        }
        let partition = Partition::new(0, vec![Vec::new()]).expect("empty part");
        let representation = ThresholdRepresentation { h: Digraph::new(1), order: Vec::new(), sequence: Vec::new() };
        return Width::Exact { width: 1, partition, representation };
    }
    for k in 1..=max_k.min(n) {
        if let Some((partition, representation)) = threshold_width_with(g, k) {
            return Width::Exact { width: k, partition, representation };
        }
    }
    Width::Exceeds(max_k)
}

/// First partition into exactly `k` nonempty cliques and independent sets,
/// in restricted-growth order, that passes [`test_partition`].
pub fn threshold_width_with(g: &Graph, k: usize) -> Option<(Partition, ThresholdRepresentation)> {
    let n = g.vertex_count();
    if k == 0 || k > n {
        return None;
    }
    let mut s = Blocks { g, k, assign: vec![0; n], members: vec![Vec::new(); k], clique: vec![true; k], indep: vec![true; k] };
    s.extend(0, 0)
}

struct Blocks<'a> {
    g: &'a Graph,
    k: usize,
    assign: Vec<usize>,
    members: Vec<Vec<usize>>,
    clique: Vec<bool>,
    indep: Vec<bool>,
}

impl Blocks<'_> {
    fn extend(&mut self, v: usize, used: usize) -> Option<(Partition, ThresholdRepresentation)> {
        let n = self.g.vertex_count();
        if v == n {
            if used < self.k {
                return None;
            }
            let p = Partition::from_assignment(self.k, &self.assign).expect("valid assignment");
            return test_partition(self.g, &p).ok().map(|rep| (p, rep));
        }
        if used + (n - v) < self.k {
            return None;
        }
        for b in 0..(used + 1).min(self.k) {
            let size = self.members[b].len();
            let adjacent = self.members[b].iter().filter(|&&u| self.g.has_edge(u, v)).count();
            let as_clique = self.clique[b] && adjacent == size;
            let as_indep = self.indep[b] && adjacent == 0;
            if !as_clique && !as_indep {
                continue;
            }
            let saved = (self.clique[b], self.indep[b]);
            self.clique[b] = as_clique;
            self.indep[b] = as_indep;
            self.members[b].push(v);
            self.assign[v] = b;
            let found = self.extend(v + 1, used.max(b + 1));
            self.members[b].pop();
            (self.clique[b], self.indep[b]) = saved;
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn small_widths() {
        assert_eq!(threshold_width(&named::complete(5), 3).value(), Some(1));
        assert_eq!(threshold_width(&Graph::new(4), 3).value(), Some(1));
        assert_eq!(threshold_width(&Graph::new(0), 3).value(), Some(1));
        assert_eq!(threshold_width(&named::path(4), 3).value(), Some(2));
        assert_eq!(threshold_width(&named::cycle(4), 3).value(), Some(2));
        assert_eq!(threshold_width(&named::cycle(5), 2), Width::Exceeds(2));
        match threshold_width(&named::cycle(5), 3) {
            Width::Exact { width, partition, representation } => {
                assert_eq!(width, 3);
                assert_eq!(partition.part_count(), 3);
                assert!(representation.verify(&named::cycle(5)));
                assert_eq!(representation.h.vertex_count(), 3);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn width_never_exceeds_vertex_count() {
        for g in [named::petersen().induced(&[0, 1, 2, 3, 4, 5, 6]), named::bull(), named::house()] {
            let n = g.vertex_count();
            let w = threshold_width(&g, n);
            assert!(w.at_most(n), "{w:?}");
            if let Width::Exact { representation, .. } = w {
                assert!(representation.verify(&g));
            }
        }
    }
}
