//! (α, β)-modules: vertex sets that every outside vertex sees almost
//! completely (missing at most `α` edges) or almost not at all (at most `β`
//! edges).
//!
//! The crate provides the module predicate, modular closures, enumeration of
//! minimal modules, decomposition trees and cotrees, the one-sided theory for
//! bipartite graphs, k-splitter modules, and the `.g` file format used by the
//! `abmod` command-line tool.

pub mod abmodule;
pub mod bipartite;
pub mod bitset;
pub mod decomposition;
pub mod enumeration;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod ksplitter;

pub use abmodule::{
    alpha_neighbourhood, beta_non_neighbourhood, closure, closure_naive, closure_refined,
    is_ab_module, is_trivial_module, splitter_set, ClosureAlgorithm, ClosureTrace, SplitterReport,
};
pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{AbParams, Graph, TwinKind};
