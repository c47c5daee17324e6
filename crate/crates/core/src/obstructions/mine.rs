use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::enumerate_graphs;
use super::induced::contains_induced;
use crate::canon::{graph_key, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::{named, Graph};
use crate::graph6::write_graph6;
use crate::threshold::{recognize_width2, Width2};

/// Largest order accepted by the miner.
pub const MAX_MINING_ORDER: usize = 7;

/// Minimal graphs of threshold width above 2, closed under complementation.
#[derive(Debug, Clone, Serialize)]
pub struct ObstructionSet {
    pub max_n: usize,
    /// Number of classes modulo complementation.
    pub complement_classes: usize,
    pub obstructions: Vec<Obstruction>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Obstruction {
    #[serde(skip)]
    pub graph: Graph,
    pub graph6: String,
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
    pub complement_graph6: String,
    /// Index of the complement within the set.
    pub partner: Option<usize>,
    pub self_complementary: bool,
    pub name: String,
    /// How each one-vertex deletion was classified.
    pub deletions: Vec<Deletion>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Deletion {
    pub vertex: usize,
    pub width: String,
}

impl ObstructionSet {
    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.obstructions.iter().map(|o| &o.graph)
    }

    pub fn of_order(&self, n: usize) -> impl Iterator<Item = &Obstruction> {
        self.obstructions.iter().filter(move |o| o.order == n)
    }

    /// Whether `g` or its complement contains a member as an induced subgraph.
    pub fn occurs_in(&self, g: &Graph) -> bool {
        let co = g.complement();
        self.graphs().any(|o| contains_induced(g, o).is_some() || contains_induced(&co, o).is_some())
    }
}

/// `1`, `2 <route>` or `>2`.
pub fn width2_label(g: &Graph) -> Result<String> {
    Ok(match recognize_width2(g)? {
        Width2::One { .. } => "1".to_string(),
        Width2::Two { route, .. } => format!("2 {route}"),
        Width2::MoreThanTwo => ">2".to_string(),
    })
}

/// Named members of the forbidden list on five vertices, with their
/// complements.
pub fn named_obstructions() -> Vec<(&'static str, Graph)> {
    let p3p2 = named::p3_union_p2();
    let w4 = named::wheel4();
    vec![
        ("C5", named::cycle(5)),
        ("P5", named::path(5)),
        ("House", named::house()),
        ("P3+P2", p3p2.clone()),
        ("co-(P3+P2)", p3p2.complement()),
        ("W4", w4.clone()),
        ("co-W4", w4.complement()),
        ("Bull", named::bull()),
    ]
}

pub fn mine_minimal_obstructions(max_n: usize) -> Result<ObstructionSet> {
    if max_n > MAX_MINING_ORDER {
        return Err(Error::TooLarge { vertex_count: max_n, limit: MAX_MINING_ORDER });
    }
    let mut found: Vec<(Graph, Vec<Deletion>)> = Vec::new();
    for n in 1..=max_n {
        let graphs = enumerate_graphs(n)?;
        let hits: Vec<Option<(Graph, Vec<Deletion>)>> = graphs
            .par_iter()
            .map(minimal_witness)
            .collect::<Result<_>>()?;
        found.extend(hits.into_iter().flatten());
    }
    let names: Vec<(CanonicalKey, &str)> =
        named_obstructions().into_iter().map(|(name, g)| (graph_key(&g), name)).collect();
    let keys: Vec<CanonicalKey> = found.iter().map(|(g, _)| graph_key(g)).collect();
    let mut obstructions = Vec::with_capacity(found.len());
    for (idx, (g, deletions)) in found.into_iter().enumerate() {
        let co = g.complement();
        let co_key = graph_key(&co);
        let partner = keys.iter().position(|k| *k == co_key);
        let name = names
            .iter()
            .find(|(k, _)| *k == keys[idx])
            .map_or_else(|| "X/Y/Z candidate".to_string(), |(_, n)| n.to_string());
        obstructions.push(Obstruction {
            graph6: write_graph6(&g),
            order: g.vertex_count(),
            edges: g.edges().collect(),
            complement_graph6: write_graph6(&co),
            partner,
            self_complementary: partner == Some(idx),
            name,
            deletions,
            graph: g,
        });
    }
    let complement_classes = obstructions
        .iter()
        .enumerate()
        .filter(|(i, o)| o.partner.is_none_or(|p| p >= *i))
        .count();
    Ok(ObstructionSet { max_n, complement_classes, obstructions })
}

/// [`mine_minimal_obstructions`] on a dedicated pool of `jobs` threads.
pub fn mine_with_jobs(max_n: usize, jobs: usize) -> Result<ObstructionSet> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?
        .install(|| mine_minimal_obstructions(max_n))
}

fn minimal_witness(g: &Graph) -> Result<Option<(Graph, Vec<Deletion>)>> {
    if !matches!(recognize_width2(g)?, Width2::MoreThanTwo) {
        return Ok(None);
    }
    let mut deletions = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let width = width2_label(&g.remove_vertex(v))?;
        if width == ">2" {
            return Ok(None);
        }
        deletions.push(Deletion { vertex: v, width });
    }
    Ok(Some((g.clone(), deletions)))
}

/// First graph on at most `max_n` vertices where "width ≤ 2" and "no member
/// of `set` occurs in it or its complement" disagree.
pub fn equivalence_counterexample(set: &ObstructionSet, max_n: usize) -> Result<Option<Graph>> {
    for n in 0..=max_n {
        let graphs = enumerate_graphs(n)?;
        let bad: Vec<Option<Graph>> = graphs
            .par_iter()
            .map(|g| {
                let small = !matches!(recognize_width2(g)?, Width2::MoreThanTwo);
                Ok((small == set.occurs_in(g)).then(|| g.clone()))
            })
            .collect::<Result<_>>()?;
        if let Some(g) = bad.into_iter().flatten().next() {
            return Ok(Some(g));
        }
    }
    Ok(None)
}
