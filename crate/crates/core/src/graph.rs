//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A simple undirected graph stored as one neighbour bitset per vertex.
///
/// The adjacency relation is kept symmetric and irreflexive by every
/// constructor and mutator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, vertex_count: n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Panics on a loop or an out-of-range id; use [`Graph::try_add_edge`] for
    /// untrusted input.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced by `vertices`; vertex `p` of the result is
    /// `vertices[p]` of `self`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (p, &u) in vertices.iter().enumerate() {
            for (q, &v) in vertices.iter().enumerate().skip(p + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(p, q);
                }
            }
        }
        g
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Graph with one extra vertex adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: &[usize]) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::new(n + 1);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for &u in neighbors {
            g.add_edge(u, n);
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.vertex_count();
        let mut g = Graph::new(off + other.vertex_count());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        g
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(p, &u)| set[p + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(p, &u)| set[p + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].ones() {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Proper 2-colouring, or an odd cycle as a closed vertex walk
    /// `c0 c1 .. c_{2m}` (consecutive vertices adjacent, last adjacent to first).
    pub fn two_color(&self) -> TwoColoring {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.adj[u].ones() {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            parent[v] = u;
                            depth[v] = depth[u] + 1;
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => {
                            return TwoColoring::OddCycle(odd_cycle(&parent, &depth, u, v));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        TwoColoring::Coloring(color.into_iter().map(|c| c.unwrap()).collect())
    }
}

// Both endpoints of the monochromatic edge `u v` climb the BFS tree to their
// common ancestor; the two tree paths plus the edge close an odd cycle.
fn odd_cycle(parent: &[usize], depth: &[usize], u: usize, v: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Outcome of [`Graph::two_color`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoColoring {
    /// `true`/`false` per vertex; adjacent vertices differ.
    Coloring(Vec<bool>),
    OddCycle(Vec<usize>),
}

impl TwoColoring {
    pub fn coloring(&self) -> Option<&[bool]> {
        match self {
            TwoColoring::Coloring(c) => Some(c),
            TwoColoring::OddCycle(_) => None,
        }
    }
}

/// Free-function form of [`Graph::two_color`].
pub fn two_color_bipartite(g: &Graph) -> TwoColoring {
    g.two_color()
}

pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.vertex_count())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Small named graphs used across tests, examples and the obstruction report.
pub mod named {
    use super::Graph;

    fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).expect("static edge list")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n).complement()
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n)
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        build(n, &edges)
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        build(n, &edges)
    }

    /// `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        build(leaves + 1, &edges)
    }

    /// `K_{m,n}` with sides `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Graph {
        let mut g = Graph::new(m + n);
        for u in 0..m {
            for v in m..m + n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Two disjoint edges.
    pub fn two_k2() -> Graph {
        build(4, &[(0, 1), (2, 3)])
    }

    /// Square 0-1-2-3 with the roof 4 on top of 0 and 1.
    pub fn house() -> Graph {
        build(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])
    }

    pub fn p3_union_p2() -> Graph {
        build(5, &[(0, 1), (1, 2), (3, 4)])
    }

    /// `C4` plus a hub adjacent to all four rim vertices.
    pub fn wheel4() -> Graph {
        build(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)])
    }

    /// Triangle 0-1-2 with pendant horns 3 (on 0) and 4 (on 1).
    pub fn bull() -> Graph {
        build(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])
    }

    pub fn petersen() -> Graph {
        build(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
    }
}
