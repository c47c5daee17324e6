use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::digraph::Digraph;
use crate::graph::Graph;

/// Graph on positions `0..n` where `p < q` are adjacent iff
/// `(sequence[p], sequence[q])` is an arc of `h`. Classes are 1-based.
pub fn positional_graph(h: &Digraph, sequence: &[usize]) -> Graph {
    let n = sequence.len();
    let mut g = Graph::new(n);
    for p in 0..n {
        for q in p + 1..n {
            if h.has_arc(sequence[p] - 1, sequence[q] - 1) {
                g.add_edge(p, q);
            }
        }
    }
    g
}

/// Vertex `order[p]` of the input is placed at position `p` with 1-based
/// class `sequence[p]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HSequence {
    pub order: Vec<usize>,
    pub sequence: Vec<usize>,
}

/// A class sequence whose positional graph under `h` is `g`, if one exists.
///
/// Places vertices front to back. Choosing vertex `v` with class `c` first
/// forces its neighbours into the out-neighbourhood of `c` (with `c` itself
/// when `c` has a loop) and its non-neighbours outside it. Failing states are
/// memoised. Candidates are tried by ascending vertex id, then class.
///
/// # Panics
/// If `h` has more than 64 vertices.
pub fn is_h_threshold(g: &Graph, h: &Digraph) -> Option<HSequence> {
    let k = h.vertex_count();
    assert!(k <= 64, "at most 64 classes supported");
    let n = g.vertex_count();
    if n == 0 {
        return Some(HSequence { order: Vec::new(), sequence: Vec::new() });
    }
    if k == 0 {
        return None;
    }
    let all = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let out: Vec<u64> = (0..k).map(|c| h.successors(c).ones().fold(0, |m, j| m | 1 << j)).collect();
    let mut remaining = FixedBitSet::with_capacity(n);
    remaining.insert_range(..);
    let mut search = Search { g, out, all, failed: HashSet::new(), placed: Vec::with_capacity(n) };
    if search.run(remaining, vec![all; n]) {
        let (order, sequence) = search.placed.into_iter().map(|(v, c)| (v, c + 1)).unzip();
        Some(HSequence { order, sequence })
    } else {
        None
    }
}

struct Search<'a> {
    g: &'a Graph,
    out: Vec<u64>,
    all: u64,
    failed: HashSet<(FixedBitSet, Vec<u64>)>,
    placed: Vec<(usize, usize)>,
}

impl Search<'_> {
    fn run(&mut self, remaining: FixedBitSet, domains: Vec<u64>) -> bool {
        if remaining.is_clear() {
            return true;
        }
        let key = (remaining, domains);
        if self.failed.contains(&key) {
            return false;
        }
        let (remaining, domains) = &key;
        for v in remaining.ones() {
            let mut classes = domains[v];
            while classes != 0 {
                let c = classes.trailing_zeros() as usize;
                classes &= classes - 1;
                let mut next = domains.clone();
                next[v] = 0;
                let ok = remaining.ones().filter(|&w| w != v).all(|w| {
                    next[w] &= if self.g.has_edge(v, w) { self.out[c] } else { !self.out[c] & self.all };
                    next[w] != 0
                });
                if !ok {
                    continue;
                }
                let mut rest = remaining.clone();
                rest.set(v, false);
                self.placed.push((v, c));
                if self.run(rest, next) {
                    return true;
                }
                self.placed.pop();
            }
        }
        self.failed.insert(key);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn h0() -> Digraph {
        Digraph::from_arcs(2, &[(0, 0), (0, 1)]).unwrap()
    }

    fn check(g: &Graph, h: &Digraph) -> Option<HSequence> {
        let r = is_h_threshold(g, h);
        if let Some(s) = &r {
            assert_eq!(g.induced(&s.order), positional_graph(h, &s.sequence));
        }
        r
    }

    #[test]
    fn complete_bipartite_under_symmetric_digraph() {
        let h = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        let s = check(&named::complete_bipartite(2, 3), &h).unwrap();
        assert_eq!(s.sequence, vec![1, 1, 2, 2, 2]);
        assert_eq!(s.order, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn threshold_graphs_under_h0() {
        assert!(check(&named::star(3), &h0()).is_some());
        assert!(check(&named::complete(3), &h0()).is_some());
        assert!(check(&named::path(4), &h0()).is_none());
        assert!(check(&named::two_k2(), &h0()).is_none());
        assert!(check(&named::cycle(4), &h0()).is_none());
    }

    #[test]
    fn c5_needs_three_classes() {
        for mask in 0u32..16 {
            let mut h = Digraph::new(2);
            for b in 0..4 {
                if mask >> b & 1 == 1 {
                    h.add_arc(b / 2, b % 2);
                }
            }
            assert!(check(&named::cycle(5), &h).is_none());
        }
    }

    #[test]
    fn empty_graph_and_empty_digraph() {
        assert!(check(&Graph::new(0), &Digraph::new(0)).is_some());
        assert!(check(&Graph::new(1), &Digraph::new(0)).is_none());
    }
}
