//! Ranking toolkit for heterogeneous scholarly networks.
//!
//! The network has four node kinds (articles, authors, journals, topics) and
//! typed edges between them. Articles receive authority scores through an
//! iterative hub/authority scheme combined with a weighted PageRank term;
//! citation edges carry a blended weight built from network similarity and
//! topic-overlap similarity, and every link is discounted by article age.
//!
//! Modules:
//! - [`graph`]: the immutable in-memory network with adjacency indices
//! - [`ingest`]: TSV corpus parsing, annotation filtering, fixture generation,
//!   and a rate-limited citation fetch client
//! - [`weighting`]: similarity measures, blended edge weights, time weights
//! - [`ranking`]: the fixed-point solver and the named coefficient presets
//! - [`eval`]: Spearman correlation, top-k overlap, comparison matrices

pub mod eval;
pub mod graph;
pub mod ingest;
pub mod ranking;
pub mod weighting;

pub use graph::{build_graph, Article, Author, EdgeRecords, Journal, ScholGraph, Topic};
pub use ranking::{load_preset, run_ranking, RankReport, Setting};
pub use weighting::{compute_edge_weights, EdgeWeights, SimilarityCoeffs, TimeParams};
