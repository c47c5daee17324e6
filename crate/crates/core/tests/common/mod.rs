//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use hthresh::{Digraph, Graph, PartitionedGraph};

pub fn h0() -> Digraph {
    Digraph::from_arcs(2, &[(0, 0), (0, 1)]).unwrap()
}

pub fn h_diff() -> Digraph {
    Digraph::from_arcs(2, &[(0, 1)]).unwrap()
}

/// All `2^(k²)` digraphs on `k` vertices, loops allowed.
pub fn digraphs(k: usize) -> Vec<Digraph> {
    (0u32..1 << (k * k))
        .map(|mask| {
            let mut d = Digraph::new(k);
            for b in 0..k * k {
                if mask >> b & 1 == 1 {
                    d.add_arc(b / k, b % k);
                }
            }
            d
        })
        .collect()
}

fn split_ok(t: &PartitionedGraph, h: &Digraph, left: u32, right: u32) -> bool {
    let n = t.vertex_count();
    (0..n).filter(|&u| left >> u & 1 == 1).all(|u| {
        (0..n)
            .filter(|&v| right >> v & 1 == 1)
            .all(|v| t.graph().has_edge(u, v) == h.has_arc(t.class_of(u) - 1, t.class_of(v) - 1))
    })
}

/// Whether some ordered split into two nonempty parts satisfies the product equation.
pub fn has_split(t: &PartitionedGraph, h: &Digraph) -> bool {
    let full = (1u32 << t.vertex_count()) - 1;
    (1..full).any(|left| split_ok(t, h, left, full & !left))
}

/// Every factorisation into unsplittable parts, as ordered lists of vertex masks.
pub fn all_factorizations(t: &PartitionedGraph, h: &Digraph) -> BTreeSet<Vec<u32>> {
    fn go(
        t: &PartitionedGraph,
        h: &Digraph,
        mask: u32,
        memo: &mut HashMap<u32, BTreeSet<Vec<u32>>>,
    ) -> BTreeSet<Vec<u32>> {
        if let Some(r) = memo.get(&mask) {
            return r.clone();
        }
        let mut out = BTreeSet::new();
        let mut left = (mask - 1) & mask;
        while left != 0 {
            let right = mask & !left;
            if split_ok(t, h, left, right) {
                for l in go(t, h, left, memo) {
                    for r in go(t, h, right, memo) {
                        out.insert(l.iter().chain(&r).copied().collect());
                    }
                }
            }
            left = (left - 1) & mask;
        }
        if out.is_empty() {
            out.insert(vec![mask]);
        }
        memo.insert(mask, out.clone());
        out
    }
    go(t, h, (1u32 << t.vertex_count()) - 1, &mut HashMap::new())
}

pub fn mask_subgraph(t: &PartitionedGraph, mask: u32) -> PartitionedGraph {
    let vs: Vec<usize> = (0..t.vertex_count()).filter(|&v| mask >> v & 1 == 1).collect();
    t.induced(&vs)
}

/// Restricted growth strings of length `n` with at most `max_blocks` blocks.
pub fn set_partitions(n: usize, max_blocks: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max_blocks: usize, cur: &mut Vec<usize>, used: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..(used + 1).min(max_blocks) {
            cur.push(b);
            go(n, max_blocks, cur, used.max(b + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_blocks, &mut Vec::new(), 0, &mut out);
    out
}

/// Graph on positions from a 1-based class sequence, straight from the
/// positional rule.
pub fn positional(h: &Digraph, seq: &[usize]) -> Graph {
    let mut g = Graph::new(seq.len());
    for p in 0..seq.len() {
        for q in p + 1..seq.len() {
            if h.has_arc(seq[p] - 1, seq[q] - 1) {
                g.add_edge(p, q);
            }
        }
    }
    g
}

/// Whether the weak components of `a` and `b` agree and, on each, `b` is
/// either `a` or `a` reversed.
pub fn differ_by_component_reversal(a: &Digraph, b: &Digraph) -> bool {
    let k = a.vertex_count();
    let undirected = |d: &Digraph, u: usize, v: usize| d.has_arc(u, v) || d.has_arc(v, u);
    if (0..k).any(|u| (0..k).any(|v| undirected(a, u, v) != undirected(b, u, v))) {
        return false;
    }
    a.weak_components().iter().all(|comp| {
        let arcs: Vec<(usize, usize)> =
            a.arcs().filter(|(u, _)| comp.contains(u)).collect();
        arcs.iter().all(|&(u, v)| b.has_arc(u, v)) || arcs.iter().all(|&(u, v)| b.has_arc(v, u))
    })
}
