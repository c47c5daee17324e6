use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canon::{canonical_key_unbounded, canonical_pair, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partitioned::PartitionedGraph;

/// Largest order accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, sorted by canonical key.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::TooLarge { vertex_count: n, limit: MAX_ENUMERATION_ORDER });
    }
    let mut level = vec![Graph::new(0)];
    for m in 1..=n {
        level = augment(&level, m - 1);
    }
    Ok(level)
}

/// Every way of adding a vertex `m` to each graph on `m` vertices, deduplicated.
fn augment(level: &[Graph], m: usize) -> Vec<Graph> {
    let found: BTreeMap<CanonicalKey, Graph> = level
        .par_iter()
        .flat_map_iter(|g| {
            (0u32..1 << m).map(move |mask| {
                let nbrs: Vec<usize> = (0..m).filter(|&v| mask >> v & 1 == 1).collect();
                canonical_pair(&g.with_vertex(&nbrs))
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    found.into_values().collect()
}

/// Every partitioned graph on `n` vertices with `k` classes, one per
/// class-preserving isomorphism class, sorted by canonical key.
pub fn enumerate_partitioned(n: usize, k: usize) -> Result<Vec<PartitionedGraph>> {
    if k == 0 {
        return Err(Error::InvalidClass { class: 0, class_count: 0 });
    }
    let graphs = enumerate_graphs(n)?;
    let assignments = k.checked_pow(n as u32).ok_or(Error::TooLarge { vertex_count: n, limit: n })?;
    let found: BTreeMap<CanonicalKey, PartitionedGraph> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            (0..assignments).map(move |code| {
                let mut c = code;
                let classes = (0..n)
                    .map(|_| {
                        let class = c % k + 1;
                        c /= k;
                        class
                    })
                    .collect();
                let t = PartitionedGraph::new(g.clone(), k, classes).expect("classes in range");
                (canonical_key_unbounded(&t), t)
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_up_to_six() {
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn limit() {
        assert_eq!(
            enumerate_graphs(9).unwrap_err(),
            Error::TooLarge { vertex_count: 9, limit: MAX_ENUMERATION_ORDER }
        );
    }

    #[test]
    fn partitioned_counts() {
        // Two classes on two vertices: the two vertices either share a class
        // (2 choices) or not (1 way), times edge or not.
        assert_eq!(enumerate_partitioned(2, 2).unwrap().len(), 6);
        assert_eq!(enumerate_partitioned(1, 3).unwrap().len(), 3);
        assert_eq!(enumerate_partitioned(0, 2).unwrap().len(), 1);
    }
}
