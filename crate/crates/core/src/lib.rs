//! Polychromatic edge-colorings of complete graphs.
//!
//! An edge-coloring of `K_n` is *polychromatic* for a family of subgraphs when
//! every member of the family sees every color used anywhere in the graph.
//! This crate covers three families in depth (matchings spanning `n - q`
//! vertices, cycles of length `n - q`, and 2-regular subgraphs spanning at
//! least `n - q` vertices) plus `r`-regular families at small scale:
//!
//! - [`graph`]: colorings, subgraphs, family membership and inherited block
//!   sequences.
//! - [`constructions`]: the optimal simply-ordered and quasi-simply-ordered
//!   colorings, seed colorings for `r`-regular families and the bipartite
//!   two-color witnesses.
//! - [`structure`]: order detection, the prefix-count characterization of
//!   ordered polychromatic colorings, and block-shift normalization.
//! - [`oracle`]: exact deciders producing witnesses.
//! - [`numbers`]: closed forms for polychromatic numbers and cyclic Ramsey
//!   numbers, in exact integer arithmetic.
//! - [`search`]: greedy, exhaustive and full optimality searches.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod constructions;
mod error;
pub mod graph;
pub mod members;
pub mod numbers;
pub mod oracle;
pub mod search;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{
    colors_on, family_member, BlockSequence, Color, EdgeColoring, FamilyKind, FamilySpec,
    Subgraph, Verdict,
};
pub use oracle::Budget;
