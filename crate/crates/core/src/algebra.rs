//! The product `t ∘_H s` of partitioned graphs and chained products.

use crate::canon::canonical_key_unbounded;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partitioned::PartitionedGraph;

/// Nonempty list of partitioned graphs read as `T₁ ∘_H … ∘_H T_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSequence {
    digraph: Digraph,
    factors: Vec<PartitionedGraph>,
}

impl FactorSequence {
    pub fn new(digraph: Digraph, factors: Vec<PartitionedGraph>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Empty);
        }
        for f in &factors {
            check_classes(f, &digraph)?;
        }
        Ok(FactorSequence { digraph, factors })
    }

    /// `K_{c₁} ∘_H K_{c₂} ∘_H …` for 1-based classes `cᵢ`.
    pub fn one_vertex_chain(digraph: Digraph, classes: &[usize]) -> Result<Self> {
        let k = digraph.vertex_count();
        let factors = classes
            .iter()
            .map(|&c| PartitionedGraph::one_vertex(k, c))
            .collect::<Result<_>>()?;
        FactorSequence::new(digraph, factors)
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn factors(&self) -> &[PartitionedGraph] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn into_factors(self) -> Vec<PartitionedGraph> {
        self.factors
    }
}

fn check_classes(t: &PartitionedGraph, h: &Digraph) -> Result<()> {
    if t.class_count() != h.vertex_count() {
        return Err(Error::ClassCountMismatch { expected: h.vertex_count(), found: t.class_count() });
    }
    Ok(())
}

/// `t ∘_H s`. Vertices of `t` keep their ids; those of `s` are shifted by `|t|`.
pub fn h_product(t: &PartitionedGraph, s: &PartitionedGraph, h: &Digraph) -> Result<PartitionedGraph> {
    check_classes(t, h)?;
    check_classes(s, h)?;
    Ok(product_unchecked(t, s, h))
}

fn product_unchecked(t: &PartitionedGraph, s: &PartitionedGraph, h: &Digraph) -> PartitionedGraph {
    let (nt, ns) = (t.vertex_count(), s.vertex_count());
    let mut g: Graph = t.graph().disjoint_union(s.graph());
    for x in 0..nt {
        let out = h.successors(t.class_of(x) - 1);
        for y in 0..ns {
            if out.contains(s.class_of(y) - 1) {
                g.add_edge(x, nt + y);
            }
        }
    }
    let classes = t.classes().iter().chain(s.classes()).copied().collect();
    PartitionedGraph::new(g, h.vertex_count(), classes).expect("classes validated")
}

/// Left fold of [`h_product`] over the sequence.
pub fn product_chain(seq: &FactorSequence) -> PartitionedGraph {
    let mut factors = seq.factors.iter();
    let first = factors.next().expect("nonempty").clone();
    factors.fold(first, |acc, f| product_unchecked(&acc, f, &seq.digraph))
}

/// Right fold, `T₁ ∘ (T₂ ∘ (… ∘ T_m))`.
pub fn product_chain_right(seq: &FactorSequence) -> PartitionedGraph {
    let mut factors = seq.factors.iter().rev();
    let last = factors.next().expect("nonempty").clone();
    factors.fold(last, |acc, f| product_unchecked(f, &acc, &seq.digraph))
}

/// Structural commutation test: for every arc `(i,j)` of `h` with `i ≠ j` whose
/// reverse is missing, `t` has nothing in class `i` or `s` nothing in class
/// `j`, and likewise with the roles of `i` and `j` exchanged.
///
/// This implies `t ∘ s ≅ s ∘ t`. The converse can fail when the two products
/// happen to be isomorphic through a bijection that mixes the operands; see
/// [`products_isomorphic`].
pub fn factors_commute(t: &PartitionedGraph, s: &PartitionedGraph, h: &Digraph) -> Result<bool> {
    check_classes(t, h)?;
    check_classes(s, h)?;
    Ok(commute_unchecked(t, s, h))
}

pub(crate) fn commute_unchecked(t: &PartitionedGraph, s: &PartitionedGraph, h: &Digraph) -> bool {
    let a = t.occupied_classes();
    let b = s.occupied_classes();
    h.arcs()
        .filter(|&(i, j)| i != j && !h.has_arc(j, i))
        .all(|(i, j)| (!a[i] || !b[j]) && (!a[j] || !b[i]))
}

/// Whether `t ∘_H s` and `s ∘_H t` are isomorphic as partitioned graphs.
pub fn products_isomorphic(t: &PartitionedGraph, s: &PartitionedGraph, h: &Digraph) -> Result<bool> {
    let ts = h_product(t, s, h)?;
    let st = h_product(s, t, h)?;
    Ok(canonical_key_unbounded(&ts) == canonical_key_unbounded(&st))
}
