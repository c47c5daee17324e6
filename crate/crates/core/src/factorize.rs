//! Prime factorisation under `∘_H`.
//!
//! Put `u` before `v` in a split `t = L ∘_H R`. Then `u ∈ L`, `v ∈ R` forces
//! `uv ∈ E(t)` to match `(c(u), c(v)) ∈ A(H)`. Any mismatch becomes an
//! implication arc `u → v`: if `u` is in the left part, so is `v`. Valid splits
//! are exactly the closed sets of this relation, so its strongly connected
//! components are the prime factors.

use std::collections::BTreeSet;

use crate::algebra::{commute_unchecked, FactorSequence};
use crate::canon::{canonical_key_unbounded, CanonicalKey};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::partitioned::PartitionedGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicationDigraph {
    arcs: Digraph,
}

impl ImplicationDigraph {
    /// Arcs over the vertex ids of the input graph.
    pub fn digraph(&self) -> &Digraph {
        &self.arcs
    }

    pub fn implies(&self, u: usize, v: usize) -> bool {
        self.arcs.has_arc(u, v)
    }
}

pub fn build_implications(t: &PartitionedGraph, h: &Digraph) -> Result<ImplicationDigraph> {
    if t.class_count() != h.vertex_count() {
        return Err(Error::ClassCountMismatch { expected: h.vertex_count(), found: t.class_count() });
    }
    let n = t.vertex_count();
    let mut arcs = Digraph::new(n);
    for u in 0..n {
        let out = h.successors(t.class_of(u) - 1);
        for v in 0..n {
            if u != v && t.graph().has_edge(u, v) != out.contains(t.class_of(v) - 1) {
                arcs.add_arc(u, v);
            }
        }
    }
    Ok(ImplicationDigraph { arcs })
}

/// Prime factors together with the vertex set of `t` that each one came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sequence: FactorSequence,
    /// Ascending vertex ids of `t` per factor, in sequence order.
    pub vertex_sets: Vec<Vec<usize>>,
}

pub fn factorize(t: &PartitionedGraph, h: &Digraph) -> Result<FactorSequence> {
    factorize_with_vertices(t, h).map(|f| f.sequence)
}

pub fn factorize_with_vertices(t: &PartitionedGraph, h: &Digraph) -> Result<Factorization> {
    if t.vertex_count() == 0 {
        return Err(Error::Empty);
    }
    let imp = build_implications(t, h)?;
    let cond = imp.arcs.scc_condensation();
    let m = cond.component_count();
    let factors: Vec<PartitionedGraph> = cond.members.iter().map(|vs| t.induced(vs)).collect();
    let keys: Vec<CanonicalKey> = factors.iter().map(canonical_key_unbounded).collect();

    // A component may go once everything it implies is already placed.
    let mut pending: Vec<usize> = (0..m).map(|c| cond.dag.successors(c).count_ones(..)).collect();
    let mut ready: BTreeSet<(&CanonicalKey, usize)> =
        (0..m).filter(|&c| pending[c] == 0).map(|c| (&keys[c], c)).collect();
    let mut order = Vec::with_capacity(m);
    while let Some((_, c)) = ready.pop_first() {
        order.push(c);
        for p in 0..m {
            if cond.dag.has_arc(p, c) {
                pending[p] -= 1;
                if pending[p] == 0 {
                    ready.insert((&keys[p], p));
                }
            }
        }
    }
    debug_assert_eq!(order.len(), m);

    let vertex_sets = order.iter().map(|&c| cond.members[c].clone()).collect();
    let mut slots: Vec<Option<PartitionedGraph>> = factors.into_iter().map(Some).collect();
    let sequence = FactorSequence::new(
        h.clone(),
        order.iter().map(|&c| slots[c].take().expect("each component once")).collect(),
    )?;
    Ok(Factorization { sequence, vertex_sets })
}

/// Whether `t` admits no split into two nonempty factors.
pub fn is_prime(t: &PartitionedGraph, h: &Digraph) -> Result<bool> {
    if t.vertex_count() == 0 {
        return Err(Error::Empty);
    }
    Ok(build_implications(t, h)?.arcs.scc_condensation().component_count() == 1)
}

/// Canonical representative of the class of sequences reachable by swapping
/// adjacent commuting factors.
///
/// Builds the output left to right: at each step, among the remaining factors
/// that commute with every remaining factor before them, take the one with
/// the smallest canonical key (earliest on ties). Every step is a series of
/// adjacent commuting swaps, and no commuting adjacent pair of the result is
/// out of key order.
pub fn normalize(seq: &FactorSequence) -> FactorSequence {
    let h = seq.digraph();
    let mut rest: Vec<(CanonicalKey, PartitionedGraph)> =
        seq.factors().iter().map(|f| (canonical_key_unbounded(f), f.clone())).collect();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for i in 0..rest.len() {
            if !rest[..i].iter().all(|(_, g)| commute_unchecked(g, &rest[i].1, h)) {
                continue;
            }
            if best.is_none_or(|b| rest[i].0 < rest[b].0) {
                best = Some(i);
            }
        }
        out.push(rest.remove(best.expect("the first factor is always free")).1);
    }
    FactorSequence::new(h.clone(), out).expect("same digraph and factors")
}

/// Adjacent swaps of commuting, key-descending pairs until none remain.
/// Unlike [`normalize`] the result can depend on the starting order once
/// three or more factors interact.
pub fn bubble_normalize(seq: &FactorSequence) -> FactorSequence {
    let h = seq.digraph();
    let mut v: Vec<(CanonicalKey, PartitionedGraph)> =
        seq.factors().iter().map(|f| (canonical_key_unbounded(f), f.clone())).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 1..v.len() {
            if v[i].0 < v[i - 1].0 && commute_unchecked(&v[i - 1].1, &v[i].1, h) {
                v.swap(i - 1, i);
                changed = true;
            }
        }
    }
    FactorSequence::new(h.clone(), v.into_iter().map(|(_, f)| f).collect()).expect("same factors")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{factors_commute, product_chain};
    use crate::canon::canonical_key;
    use crate::graph::{named, Graph};
    use proptest::prelude::*;
    use std::collections::{BTreeSet, HashMap};

    fn h0() -> Digraph {
        Digraph::from_arcs(2, &[(0, 0), (0, 1)]).unwrap()
    }

    fn digraph_from_mask(mask: u32) -> Digraph {
        let mut d = Digraph::new(2);
        for b in 0..4 {
            if mask >> b & 1 == 1 {
                d.add_arc(b / 2, b % 2);
            }
        }
        d
    }

    fn keys(seq: &FactorSequence) -> Vec<CanonicalKey> {
        seq.factors().iter().map(|f| canonical_key(f).unwrap()).collect()
    }

    #[test]
    fn implication_examples() {
        let edge = PartitionedGraph::single_class(named::complete(2));
        let with_loop = Digraph::from_arcs(1, &[(0, 0)]).unwrap();
        assert_eq!(build_implications(&edge, &with_loop).unwrap().digraph().arc_count(), 0);
        let imp = build_implications(&edge, &Digraph::new(1)).unwrap();
        assert!(imp.implies(0, 1) && imp.implies(1, 0));

        let p3 = PartitionedGraph::new(named::star(2), 2, vec![1, 2, 2]).unwrap();
        let imp = build_implications(&p3, &h0()).unwrap();
        assert_eq!(imp.digraph().scc_condensation().component_count(), 3);
    }

    #[test]
    fn one_class_factors_are_components_or_cocomponents() {
        let g = named::path(3).disjoint_union(&named::complete(2)).disjoint_union(&Graph::new(1));
        let t = PartitionedGraph::single_class(g.clone());
        let seq = factorize(&t, &Digraph::new(1)).unwrap();
        let mut sizes: Vec<usize> = seq.factors().iter().map(|f| f.vertex_count()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);

        let t = PartitionedGraph::single_class(g.complement());
        let seq = factorize(&t, &Digraph::from_arcs(1, &[(0, 0)]).unwrap()).unwrap();
        assert_eq!(seq.len(), 3);
    }

    #[test]
    fn partitioned_p3_splits_into_singletons() {
        let p3 = PartitionedGraph::new(named::star(2), 2, vec![1, 2, 2]).unwrap();
        let seq = factorize(&p3, &h0()).unwrap();
        let classes: Vec<usize> = seq.factors().iter().map(|f| f.class_of(0)).collect();
        assert_eq!(classes, vec![1, 2, 2]);
        assert_eq!(canonical_key(&product_chain(&seq)).unwrap(), canonical_key(&p3).unwrap());
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(&PartitionedGraph::one_vertex(2, 2).unwrap(), &h0()).unwrap());
        assert!(is_prime(&PartitionedGraph::single_class(named::path(4)), &Digraph::new(1)).unwrap());
        assert_eq!(is_prime(&PartitionedGraph::single_class(Graph::new(0)), &Digraph::new(1)), Err(Error::Empty));
        // A class-2 vertex of C4 sees both class-1 vertices and not its twin,
        // so it peels off on the right.
        let c4 = PartitionedGraph::new(named::cycle(4), 2, vec![1, 2, 1, 2]).unwrap();
        assert_eq!(is_prime(&c4, &h0()).unwrap(), !brute_force_has_split(&c4, &h0()));
        assert!(!is_prime(&c4, &h0()).unwrap());
    }

    #[test]
    fn identical_factors_unchanged() {
        let f = PartitionedGraph::one_vertex(2, 2).unwrap();
        let seq = FactorSequence::new(h0(), vec![f.clone(), f]).unwrap();
        assert_eq!(normalize(&seq), seq);
    }

    #[test]
    fn commuting_factors_sorted_by_key() {
        let big = PartitionedGraph::new(Graph::new(2), 2, vec![2, 2]).unwrap();
        let small = PartitionedGraph::one_vertex(2, 2).unwrap();
        let seq = FactorSequence::new(h0(), vec![big.clone(), small.clone()]).unwrap();
        assert_eq!(normalize(&seq).factors(), &[small, big]);
    }

    #[test]
    fn greedy_is_order_independent_where_bubbling_is_not() {
        // Letters d < a < b by key; a commutes with b and d, b and d do not.
        let h = Digraph::from_arcs(3, &[(1, 2)]).unwrap();
        let d = PartitionedGraph::one_vertex(3, 2).unwrap();
        let a = PartitionedGraph::new(Graph::new(2), 3, vec![1, 1]).unwrap();
        let b = PartitionedGraph::new(Graph::new(3), 3, vec![3, 3, 3]).unwrap();
        assert!(canonical_key(&d).unwrap() < canonical_key(&a).unwrap());
        assert!(canonical_key(&a).unwrap() < canonical_key(&b).unwrap());
        assert!(factors_commute(&a, &b, &h).unwrap() && factors_commute(&a, &d, &h).unwrap());
        assert!(!factors_commute(&b, &d, &h).unwrap());

        let bda = FactorSequence::new(h.clone(), vec![b.clone(), d.clone(), a.clone()]).unwrap();
        let abd = FactorSequence::new(h.clone(), vec![a.clone(), b.clone(), d.clone()]).unwrap();
        assert_ne!(bubble_normalize(&bda), bubble_normalize(&abd));
        assert_eq!(normalize(&bda), normalize(&abd));
        assert_eq!(normalize(&bda).factors(), &[a, b, d]);
    }

    /// Does any ordered split `L, R` (both nonempty) satisfy the product equation?
    fn brute_force_has_split(t: &PartitionedGraph, h: &Digraph) -> bool {
        let n = t.vertex_count();
        (1u32..(1 << n) - 1).any(|left| split_ok(t, h, left, ((1 << n) - 1) & !left))
    }

    fn split_ok(t: &PartitionedGraph, h: &Digraph, left: u32, right: u32) -> bool {
        (0..t.vertex_count()).filter(|&u| left >> u & 1 == 1).all(|u| {
            (0..t.vertex_count())
                .filter(|&v| right >> v & 1 == 1)
                .all(|v| t.graph().has_edge(u, v) == h.has_arc(t.class_of(u) - 1, t.class_of(v) - 1))
        })
    }

    /// All factorisations of the vertex subset `mask` into primes, as ordered lists of masks.
    fn all_factorizations(
        t: &PartitionedGraph,
        h: &Digraph,
        mask: u32,
        memo: &mut HashMap<u32, BTreeSet<Vec<u32>>>,
    ) -> BTreeSet<Vec<u32>> {
        if let Some(r) = memo.get(&mask) {
            return r.clone();
        }
        let mut out = BTreeSet::new();
        let mut prime = true;
        let mut left = (mask - 1) & mask;
        while left != 0 {
            let right = mask & !left;
            if split_ok(t, h, left, right) {
                prime = false;
                for l in all_factorizations(t, h, left, memo) {
                    for r in all_factorizations(t, h, right, memo) {
                        out.insert(l.iter().chain(&r).copied().collect());
                    }
                }
            }
            left = (left - 1) & mask;
        }
        if prime {
            out.insert(vec![mask]);
        }
        memo.insert(mask, out.clone());
        out
    }

    fn subgraph(t: &PartitionedGraph, mask: u32) -> PartitionedGraph {
        let vs: Vec<usize> = (0..t.vertex_count()).filter(|&v| mask >> v & 1 == 1).collect();
        t.induced(&vs)
    }

    fn check_against_oracle(t: &PartitionedGraph, h: &Digraph) {
        let seq = factorize(t, h).unwrap();
        assert_eq!(canonical_key(&product_chain(&seq)).unwrap(), canonical_key(t).unwrap());
        for f in seq.factors() {
            assert!(is_prime(f, h).unwrap());
            assert!(!brute_force_has_split(f, h));
        }
        assert_eq!(is_prime(t, h).unwrap(), !brute_force_has_split(t, h));
        let expected = keys(&normalize(&seq));
        let n = t.vertex_count();
        let all = all_factorizations(t, h, (1 << n) - 1, &mut HashMap::new());
        for masks in all {
            let fs = masks.iter().map(|&m| subgraph(t, m)).collect();
            let other = FactorSequence::new(h.clone(), fs).unwrap();
            assert_eq!(keys(&normalize(&other)), expected);
        }
    }

    fn arb_partitioned(max_n: usize, k: usize) -> impl Strategy<Value = PartitionedGraph> {
        (1..=max_n).prop_flat_map(move |n| {
            (
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
                proptest::collection::vec(1..=k, n),
            )
                .prop_map(move |(bits, classes)| {
                    let mut g = Graph::new(n);
                    let mut b = bits.into_iter();
                    for j in 1..n {
                        for i in 0..j {
                            if b.next().unwrap() {
                                g.add_edge(i, j);
                            }
                        }
                    }
                    PartitionedGraph::new(g, k, classes).unwrap()
                })
        })
    }

    fn arb_digraph(k: usize) -> impl Strategy<Value = Digraph> {
        proptest::collection::vec(any::<bool>(), k * k).prop_map(move |bits| {
            let mut d = Digraph::new(k);
            for (b, on) in bits.into_iter().enumerate() {
                if on {
                    d.add_arc(b / k, b % k);
                }
            }
            d
        })
    }

    proptest! {
        #[test]
        fn agrees_with_oracle_two_classes(t in arb_partitioned(6, 2), mask in 0u32..16) {
            check_against_oracle(&t, &digraph_from_mask(mask));
        }

        #[test]
        fn agrees_with_oracle_three_classes(t in arb_partitioned(6, 3), h in arb_digraph(3)) {
            check_against_oracle(&t, &h);
        }

        #[test]
        fn incomparable_components_commute(t in arb_partitioned(7, 3), h in arb_digraph(3)) {
            let imp = build_implications(&t, &h).unwrap();
            let cond = imp.digraph().scc_condensation();
            let m = cond.component_count();
            // reach[a][b]: path from a to b in the condensation
            let mut reach = vec![vec![false; m]; m];
            for a in (0..m).rev() {
                reach[a][a] = true;
                for b in cond.dag.successors(a).ones() {
                    for c in 0..m {
                        if reach[b][c] {
                            reach[a][c] = true;
                        }
                    }
                }
            }
            for a in 0..m {
                for b in 0..m {
                    if !reach[a][b] && !reach[b][a] {
                        let fa = t.induced(&cond.members[a]);
                        let fb = t.induced(&cond.members[b]);
                        prop_assert!(factors_commute(&fa, &fb, &h).unwrap());
                    }
                }
            }
        }

        #[test]
        fn normalize_is_idempotent(t in arb_partitioned(6, 3), h in arb_digraph(3)) {
            let once = normalize(&factorize(&t, &h).unwrap());
            prop_assert_eq!(normalize(&once), once.clone());
            prop_assert_eq!(bubble_normalize(&once), once);
        }
    }
}
