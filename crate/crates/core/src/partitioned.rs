//! Graphs whose vertex set carries a total assignment to classes `1..=k`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph plus a class id in `1..=class_count` for every vertex.
/// Classes may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionedGraph {
    graph: Graph,
    class_count: usize,
    class_of: Vec<usize>,
}

impl PartitionedGraph {
    pub fn new(graph: Graph, class_count: usize, class_of: Vec<usize>) -> Result<Self> {
        if class_count == 0 {
            return Err(Error::InvalidClass { class: 0, class_count });
        }
        if class_of.len() != graph.vertex_count() {
            return Err(Error::NotAPartition(format!(
                "{} class ids for {} vertices",
                class_of.len(),
                graph.vertex_count()
            )));
        }
        if let Some(&class) = class_of.iter().find(|&&c| c == 0 || c > class_count) {
            return Err(Error::InvalidClass { class, class_count });
        }
        Ok(PartitionedGraph { graph, class_count, class_of })
    }

    /// Every vertex in class 1.
    pub fn single_class(graph: Graph) -> Self {
        let n = graph.vertex_count();
        PartitionedGraph { graph, class_count: 1, class_of: vec![1; n] }
    }

    /// `K^k_i`: one vertex, in class `i`.
    pub fn one_vertex(class_count: usize, class: usize) -> Result<Self> {
        PartitionedGraph::new(Graph::new(1), class_count, vec![class])
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn classes(&self) -> &[usize] {
        &self.class_of
    }

    /// Vertices of class `c` (1-based), ascending.
    pub fn class_members(&self, c: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.class_of[v] == c).collect()
    }

    /// Bit `c - 1` is set when class `c` is nonempty.
    pub fn occupied_classes(&self) -> Vec<bool> {
        let mut occ = vec![false; self.class_count];
        for &c in &self.class_of {
            occ[c - 1] = true;
        }
        occ
    }

    /// Same classes, complemented base graph.
    pub fn complement(&self) -> PartitionedGraph {
        PartitionedGraph {
            graph: self.graph.complement(),
            class_count: self.class_count,
            class_of: self.class_of.clone(),
        }
    }

    /// Induced partitioned subgraph; vertex `p` of the result is `vertices[p]`.
    pub fn induced(&self, vertices: &[usize]) -> PartitionedGraph {
        PartitionedGraph {
            graph: self.graph.induced(vertices),
            class_count: self.class_count,
            class_of: vertices.iter().map(|&v| self.class_of[v]).collect(),
        }
    }
}
