//! Canonical forms for small (partitioned) graphs.
//!
//! Classes seed the initial ordered colouring. The colouring is refined to an
//! equitable one, and an individualisation search visits every branch except
//! those that differ by swapping twin vertices. Each discrete leaf is scored
//! by its adjacency bit string, and the largest wins. Every step depends only
//! on isomorphism invariants, so two partitioned graphs get equal keys exactly
//! when some class-preserving bijection maps one onto the other.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partitioned::PartitionedGraph;

/// Default vertex limit of [`canonical_key`].
pub const DEFAULT_KEY_LIMIT: usize = 12;

/// Byte string identifying a partitioned graph up to class-preserving
/// isomorphism. Keys order first by vertex count, then class count.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

pub fn canonical_key(t: &PartitionedGraph) -> Result<CanonicalKey> {
    canonical_key_with_limit(t, DEFAULT_KEY_LIMIT)
}

pub fn canonical_key_with_limit(t: &PartitionedGraph, limit: usize) -> Result<CanonicalKey> {
    if t.vertex_count() > limit {
        return Err(Error::TooLarge { vertex_count: t.vertex_count(), limit });
    }
    Ok(canonical_key_unbounded(t))
}

/// [`canonical_key`] without the size guard. Running time grows quickly on
/// large graphs with many automorphisms.
pub fn canonical_key_unbounded(t: &PartitionedGraph) -> CanonicalKey {
    let order = canonical_order(t.graph(), t.classes());
    encode(t.graph(), t.class_count(), t.classes(), &order)
}

/// Key of a plain graph (all vertices in one class).
pub fn graph_key(g: &Graph) -> CanonicalKey {
    let classes = vec![1; g.vertex_count()];
    let order = canonical_order(g, &classes);
    encode(g, 1, &classes, &order)
}

/// Relabelled copy of `g` in canonical vertex order.
pub fn canonical_form(g: &Graph) -> Graph {
    let classes = vec![1; g.vertex_count()];
    g.induced(&canonical_order(g, &classes))
}

/// [`graph_key`] and [`canonical_form`] from a single search.
pub fn canonical_pair(g: &Graph) -> (CanonicalKey, Graph) {
    let classes = vec![1; g.vertex_count()];
    let order = canonical_order(g, &classes);
    (encode(g, 1, &classes, &order), g.induced(&order))
}

/// Canonical position order: entry `p` is the vertex placed at position `p`.
pub fn canonical_labeling(t: &PartitionedGraph) -> Vec<usize> {
    canonical_order(t.graph(), t.classes())
}

pub fn are_isomorphic(a: &PartitionedGraph, b: &PartitionedGraph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.class_count() == b.class_count()
        && a.graph().edge_count() == b.graph().edge_count()
        && canonical_key_unbounded(a) == canonical_key_unbounded(b)
}

fn encode(g: &Graph, class_count: usize, classes: &[usize], order: &[usize]) -> CanonicalKey {
    let n = g.vertex_count();
    let mut bytes = Vec::with_capacity(8 + 4 * n + n * n / 8 + 8);
    bytes.extend((n as u32).to_be_bytes());
    bytes.extend((class_count as u32).to_be_bytes());
    for &v in order {
        bytes.extend((classes[v] as u32).to_be_bytes());
    }
    for word in leaf_code(g, order) {
        bytes.extend(word.to_be_bytes());
    }
    CanonicalKey(bytes)
}

fn leaf_code(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut code = vec![0u64; bits.div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                code[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    code
}

fn canonical_order(g: &Graph, classes: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let max_class = classes.iter().copied().max().unwrap_or(0);
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); max_class + 1];
    for v in 0..n {
        cells[classes[v]].push(v);
    }
    cells.retain(|c| !c.is_empty());
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(g, cells, &mut best);
    best.map(|(_, order)| order).unwrap_or_default()
}

fn search(g: &Graph, mut cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    refine(g, &mut cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|&(i, c)| (c.len(), i))
        .map(|(i, _)| i);
    let Some(ci) = target else {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let code = leaf_code(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = cells[ci].clone();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        // Swapping twins is an automorphism fixing the current colouring.
        if tried.iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
        let mut next = cells.clone();
        next.splice(ci..=ci, [vec![v], rest]);
        search(g, next, best);
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let mut a = g.neighbors(u).clone();
    let mut b = g.neighbors(v).clone();
    a.set(v, false);
    b.set(u, false);
    a == b
}

/// Splits cells by neighbour counts into every cell until stable.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.vertex_count();
    let mut cell_of = vec![0usize; n];
    loop {
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let m = cells.len();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(m);
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut sigs: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut s = vec![0u32; m];
                    for w in g.neighbors(v).ones() {
                        s[cell_of[w]] += 1;
                    }
                    (s, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut start = 0;
            for i in 1..=sigs.len() {
                if i == sigs.len() || sigs[i].0 != sigs[start].0 {
                    next.push(sigs[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let done = next.len() == m;
        *cells = next;
        if done {
            return;
        }
    }
}
