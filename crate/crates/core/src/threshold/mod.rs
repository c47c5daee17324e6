//! Threshold width: deciding whether a graph is a `∘_H` product of one-vertex
//! factors for some digraph `H` on `k` vertices.
//!
//! Class indices in this module are 0-based, matching digraph vertex ids.
//! Class sequences handed back to callers are 1-based, matching
//! [`PartitionedGraph`](crate::PartitionedGraph) and the text formats.

mod family;
mod fdigraph;
mod hthreshold;
mod ordering;
mod recognize;
mod width;

pub use family::{build_family, build_r, realizations, realize_family, Family, OddCycle};
pub use fdigraph::{build_f, test_partition, Failure, PartitionFailure, Stage, ThresholdRepresentation};
pub use hthreshold::{is_h_threshold, positional_graph, HSequence};
pub use ordering::{check_neighborhood_ordering, ordering_certificates, OrderingCertificate, OrderingFailure};
pub use recognize::{
    difference_bipartition, is_difference, is_threshold, recognize_width2, threshold_partition, Route, Width2,
};
pub use width::{threshold_width, threshold_width_with, Width};

use crate::error::{Error, Result};

/// Whether a part of the partition is a clique or an independent set.
/// Parts with fewer than two vertices count as independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Clique,
    Independent,
}

/// How the vertices of `V_i` see `V_j`, read along `ψ(i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `N_{V_j}` shrinks along `ψ(i)`.
    Descending,
    /// `N_{V_j}` grows along `ψ(i)`.
    Ascending,
    /// Every vertex of `V_i` is adjacent to every vertex of `V_j`.
    Full,
    /// No edges between `V_i` and `V_j` (also used when either part is empty).
    Empty,
}

impl Direction {
    pub fn is_trivial(self) -> bool {
        matches!(self, Direction::Full | Direction::Empty)
    }
}

/// An ordered partition `V_1, …, V_k` of `0..n`. Parts may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<Vec<usize>>,
    part_of: Vec<usize>,
}

impl Partition {
    pub fn new(vertex_count: usize, parts: Vec<Vec<usize>>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::NotAPartition("no parts".into()));
        }
        let mut part_of = vec![usize::MAX; vertex_count];
        let mut parts = parts;
        for (i, part) in parts.iter_mut().enumerate() {
            part.sort_unstable();
            for &v in part.iter() {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: v, vertex_count });
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::NotAPartition(format!("vertex {v} appears twice")));
                }
                part_of[v] = i;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
            return Err(Error::NotAPartition(format!("vertex {v} is in no part")));
        }
        Ok(Partition { parts, part_of })
    }

    /// From 0-based part ids per vertex.
    pub fn from_assignment(part_count: usize, part_of: &[usize]) -> Result<Self> {
        let mut parts = vec![Vec::new(); part_count];
        for (v, &p) in part_of.iter().enumerate() {
            if p >= part_count {
                return Err(Error::InvalidClass { class: p + 1, class_count: part_count });
            }
            parts[p].push(v);
        }
        Partition::new(part_of.len(), parts)
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.part_of.len()
    }

    pub fn part(&self, i: usize) -> &[usize] {
        &self.parts[i]
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    /// 1-based class id per vertex.
    pub fn classes(&self) -> Vec<usize> {
        self.part_of.iter().map(|&p| p + 1).collect()
    }
}
