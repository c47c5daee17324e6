use std::fmt;

use super::family::{realize_family, Family, OddCycle};
use super::hthreshold::positional_graph;
use super::ordering::{ordering_certificates, OrderingCertificate, OrderingFailure};
use super::{ClassKind, Direction, Partition};
use crate::algebra::FactorSequence;
use crate::digraph::{Digraph, TopoSort};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The build-order digraph on `V(g)`.
///
/// For an arc `(i, j)` of `d`, an edge `uv` with `u ∈ V_i`, `v ∈ V_j` becomes
/// `u → v` and a non-edge becomes `v → u`. Each part becomes a directed path
/// along `ψ(i)` when `X^i_1` is the out-neighbourhood of `i`, and along the
/// reverse of `ψ(i)` otherwise.
pub fn build_f(g: &Graph, cert: &OrderingCertificate, d: &Digraph) -> Result<Digraph> {
    let family = Family::from_certificate(cert);
    if let Some(i) = family.first_unrealized(d) {
        return Err(Error::NotARealization(i + 1));
    }
    let p = &cert.partition;
    let mut f = Digraph::new(g.vertex_count());
    for (i, j) in d.arcs() {
        for &u in p.part(i) {
            for &v in p.part(j) {
                if g.has_edge(u, v) {
                    f.add_arc(u, v);
                } else {
                    f.add_arc(v, u);
                }
            }
        }
    }
    for i in 0..p.part_count() {
        let path = &cert.psi[i];
        let forward = *family.set(i, 0) == d.out_neighborhood(i);
        for w in path.windows(2) {
            if forward {
                f.add_arc(w[0], w[1]);
            } else {
                f.add_arc(w[1], w[0]);
            }
        }
    }
    Ok(f)
}

/// `g` as `K_{i₁} ∘_H … ∘_H K_{iₙ}`: vertex `order[p]` sits at position `p`
/// and belongs to class `sequence[p]` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdRepresentation {
    pub h: Digraph,
    pub order: Vec<usize>,
    pub sequence: Vec<usize>,
}

impl ThresholdRepresentation {
    /// Graph on positions `0..n` defined by `h` and `sequence`.
    pub fn rebuild(&self) -> Graph {
        positional_graph(&self.h, &self.sequence)
    }

    /// Whether the representation reproduces `g` with its own vertex ids.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut sorted = self.order.clone();
        sorted.sort_unstable();
        sorted.iter().copied().eq(0..g.vertex_count()) && g.induced(&self.order) == self.rebuild()
    }

    pub fn factor_sequence(&self) -> Result<FactorSequence> {
        FactorSequence::one_vertex_chain(self.h.clone(), &self.sequence)
    }
}

/// Pipeline stages of [`test_partition`], in order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stage {
    Ordering,
    Digraphical,
    Acyclic,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Ordering => "neighbourhood ordering",
            Stage::Digraphical => "digraphical family",
            Stage::Acyclic => "acyclic F",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Ordering(OrderingFailure),
    NotDigraphical(OddCycle),
    /// A directed cycle of `F` as arcs between vertices of `g`.
    CyclicF(Vec<(usize, usize)>),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Ordering(e) => write!(f, "{e}"),
            Failure::NotDigraphical(c) => write!(f, "R(S) has an {c}"),
            Failure::CyclicF(arcs) => {
                let vs: Vec<String> = arcs.iter().map(|(u, _)| u.to_string()).collect();
                write!(f, "F has the directed cycle {}", vs.join(" -> "))
            }
        }
    }
}

/// The furthest stage any certificate of the partition reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionFailure {
    pub stage: Stage,
    pub failure: Failure,
}

impl fmt::Display for PartitionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "failed at {}: {}", self.stage, self.failure)
    }
}

/// Decides whether `g` is a product of one-vertex factors with classes given
/// by `p`, trying every neighbourhood-ordering certificate of `p`.
///
/// # Panics
/// If `p` does not partition `0..g.vertex_count()`.
pub fn test_partition(g: &Graph, p: &Partition) -> std::result::Result<ThresholdRepresentation, PartitionFailure> {
    assert_eq!(p.vertex_count(), g.vertex_count(), "partition and graph sizes differ");
    let certs = ordering_certificates(g, p)
        .map_err(|e| PartitionFailure { stage: Stage::Ordering, failure: Failure::Ordering(e) })?;
    let mut furthest: Option<PartitionFailure> = None;
    let mut note = |stage: Stage, failure: Failure| {
        if furthest.as_ref().is_none_or(|w| stage > w.stage) {
            furthest = Some(PartitionFailure { stage, failure });
        }
    };
    for cert in certs {
        let family = Family::from_certificate(&cert);
        let d = match realize_family(&family) {
            Ok(d) => d,
            Err(odd) => {
                note(Stage::Digraphical, Failure::NotDigraphical(odd));
                continue;
            }
        };
        let f = build_f(g, &cert, &d).expect("d realizes the family it came from");
        match f.topological_sort() {
            TopoSort::Order(order) => {
                let rep = synthesize(&cert, d, order);
                debug_assert!(rep.verify(g));
                return Ok(rep);
            }
            TopoSort::Cycle(arcs) => note(Stage::Acyclic, Failure::CyclicF(arcs)),
        }
    }
    Err(furthest.expect("at least one certificate"))
}

/// `H` is `d` plus loops on cliques and both arcs between fully joined parts.
fn synthesize(cert: &OrderingCertificate, d: Digraph, order: Vec<usize>) -> ThresholdRepresentation {
    let k = cert.part_count();
    let mut h = d;
    for i in 0..k {
        if cert.kinds[i] == ClassKind::Clique {
            h.add_arc(i, i);
        }
        for j in 0..k {
            if i != j && cert.directions[i][j] == Direction::Full {
                h.add_arc(i, j);
            }
        }
    }
    let sequence = order.iter().map(|&v| cert.partition.part_of(v) + 1).collect();
    ThresholdRepresentation { h, order, sequence }
}
