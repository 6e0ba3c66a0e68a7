//! Strong cliques in graphs.
//!
//! A strong clique is a clique meeting every maximal independent set. This
//! crate decides the six strong-clique problems (strong clique, existence,
//! vertex cover, edge cover, partition, partition existence) with
//! class-specialised polynomial algorithms, and ships exact exponential
//! oracles plus SAT-reduction instance generators to check them against.

pub mod generators;
pub mod graph;
pub mod linegraph;
pub mod matching;
pub mod oracle;
pub mod solvers;

pub use graph::{Graph, GraphError, NamedFamily, VertexSet};
