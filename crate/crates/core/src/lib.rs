//! Global defensive and offensive alliances on trees.
//!
//! The crate computes the alliance numbers `γ_a` and `γ_o` exactly, runs the
//! two constructions relating them (smaller color class; augmenting a
//! defensive alliance by a vertex cover of the rest), and checks the integer
//! inequality `6·γ_a + n − 6·γ_o − 2 >= 0` over exhaustive and random tree
//! corpora.

pub mod alliance;
pub mod canonical;
pub mod cli;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod harness;
pub mod pruefer;
pub mod solver;
pub mod tree;
pub mod vertex_set;

pub use alliance::{
    boundary, closed_neighborhood, is_defensive, is_dominating, is_global_defensive,
    is_global_offensive, is_offensive, NeighborhoodView,
};
pub use canonical::canonical_code;
pub use construct::{
    augment_to_offensive, defensive_certificate, edge_partition, min_vertex_cover_forest,
    smaller_side_offensive, Augmentation, CertificateReport, EdgePartition, Inequality,
};
pub use corpus::{
    enumerate_free_trees, enumerate_labeled_trees, random_tree, CorpusEntry, CorpusMode, CorpusSpec,
};
pub use error::{Error, Result};
pub use harness::{check_theorem, sweep, SweepRecord, SweepReport, TheoremRecord};
pub use pruefer::{from_pruefer, to_pruefer};
pub use solver::{gamma_a, gamma_o, solve, AllianceKind, SolveResult, DEFAULT_MAX_EXACT_N};
pub use tree::{bipartition, centers, parse_tree, Bipartition, Tree};
pub use vertex_set::VertexSet;
