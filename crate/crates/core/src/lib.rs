//! Anti-Ramsey numbers of small graphs.
//!
//! `AR(n, H)` is the largest number of colors an edge-coloring of `K_n` can
//! use without containing a rainbow copy of `H` (a copy whose edges all carry
//! distinct colors). This crate bundles:
//!
//! * [`model`]: edge indexing, patterns, colorings and witnesses,
//! * [`formulas`]: closed-form values from the literature with their validity
//!   domains,
//! * [`detect`]: rainbow-copy detection with certificates,
//! * [`construct`]: extremal colorings that realize the lower bounds,
//! * [`search`]: exact `AR(n, H)` by branch-and-bound over set partitions of
//!   the edge set,
//! * [`cli`]: the pattern language, the coloring file format and the
//!   subcommands behind the `antiramsey` binary.

pub mod cli;
pub mod construct;
pub mod detect;
mod error;
pub mod formulas;
pub mod model;
pub mod search;

pub use error::{Error, Result};
pub use model::{
    edge_endpoints, edge_index, pattern_stats, validate_coloring, Coloring, ColoringViolation,
    ComponentKind, EdgeId, EdgeSubset, PatternComponent, PatternSpec, VertexId, Witness,
};
