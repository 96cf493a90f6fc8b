//! Hypernetwork dismantling toolkit.
//!
//! Scores nodes of a hypergraph (hyper-degree, projected degree, collective
//! influence on the clique expansion, and the hypergraph-based collective
//! influence), removes them in batches, tracks giant-component connectivity
//! and reports the accumulated normalized connectivity (ANC).

#![forbid(unsafe_code)]

pub mod centrality;
pub mod dismantle;
pub mod error;
pub mod formats;
pub mod hypergraph;

pub use centrality::{rank, score_ci, score_hd, score_hhd, score_hyper_ci, CentralityScores};
pub use dismantle::{anc, compare, dismantle, l_sweep, NormMode, Protocol, StopCondition, Strategy};
pub use error::{Error, Result};
pub use hypergraph::{Component, DatasetStats, Hypergraph, Normalization};
