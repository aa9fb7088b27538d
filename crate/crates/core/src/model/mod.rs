//! Shared value types: edges of `K_n`, patterns, colorings and witnesses.

mod coloring;
mod edge;
mod pattern;
mod witness;

pub use coloring::{validate_coloring, Coloring, ColoringViolation};
pub use edge::{choose2, edge_count, edge_endpoints, edge_index, EdgeId, VertexId};
pub(crate) use edge::{colex, endpoints_unchecked};
pub use pattern::{pattern_stats, ComponentKind, EdgeSubset, PatternComponent, PatternSpec};
pub use witness::{Placement, Witness};
