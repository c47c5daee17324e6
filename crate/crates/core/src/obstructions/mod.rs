//! Induced subgraph search, graph enumeration and the forbidden-subgraph
//! miner for threshold width at most 2.

mod enumerate;
mod induced;
mod mine;

pub use enumerate::{enumerate_graphs, enumerate_partitioned, MAX_ENUMERATION_ORDER};
pub use induced::contains_induced;
pub use mine::{
    equivalence_counterexample, mine_minimal_obstructions, mine_with_jobs, named_obstructions, width2_label,
    Deletion, Obstruction, ObstructionSet, MAX_MINING_ORDER,
};
