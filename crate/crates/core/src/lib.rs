//! Partitioned graphs, their products over a digraph, prime factorisation,
//! threshold width and forbidden induced subgraphs for small widths.

pub mod algebra;
pub mod canon;
pub mod digraph;
pub mod error;
pub mod factorize;
pub mod format;
pub mod graph;
pub mod graph6;
pub mod obstructions;
pub mod partitioned;
pub mod threshold;

pub use algebra::{factors_commute, h_product, product_chain, products_isomorphic, FactorSequence};
pub use canon::{canonical_key, canonical_key_with_limit, graph_key, CanonicalKey};
pub use digraph::Digraph;
pub use error::{Error, Graph6Error, Result};
pub use factorize::{build_implications, factorize, is_prime, normalize};
pub use graph::Graph;
pub use partitioned::PartitionedGraph;
