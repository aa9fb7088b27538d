//! Rainbow-copy detection.
//!
//! [`find_rainbow`] places the pattern component by component while keeping
//! a mask of colors already used; a placement is abandoned as soon as an
//! edge repeats a color. When the search tree is exhausted without a
//! witness, the coloring is certified free of rainbow copies.

mod brute;
pub(crate) mod embed;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

pub use brute::{list_embeddings, Embedding, MAX_BRUTE_FORCE_N};
use embed::{placement_order, EdgeGate, Embedder, Finish};

use crate::model::{
    colex, edge_count, Coloring, EdgeId, PatternSpec, Placement, VertexId, Witness,
};
use crate::{Error, Result};

/// Largest host supported by the detector.
pub const MAX_DETECT_N: usize = 64;

/// Result of [`find_rainbow`].
///
/// `exhausted` is true iff the whole search tree was traversed, which only
/// happens when no witness exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetectOutcome {
    pub witness: Option<Witness>,
    pub exhausted: bool,
    pub nodes_explored: u64,
}

impl DetectOutcome {
    /// No witness and the search completed.
    pub fn is_rainbow_free(&self) -> bool {
        self.witness.is_none() && self.exhausted
    }
}

/// Fixed-size bit set over the colors of a coloring.
struct ColorGate<'a> {
    colors: &'a [u32],
    mask: Vec<u64>,
    free: usize,
}

impl<'a> ColorGate<'a> {
    fn new(c: &'a Coloring) -> Self {
        let bits = edge_count(c.n()).max(c.color_count()).max(1);
        Self {
            colors: c.colors(),
            mask: vec![0; bits.div_ceil(64)],
            free: c.color_count(),
        }
    }
}

impl EdgeGate for ColorGate<'_> {
    #[inline]
    fn admit(&mut self, edge: usize) -> bool {
        let c = self.colors[edge] as usize;
        let (w, b) = (c / 64, 1u64 << (c % 64));
        if self.mask[w] & b != 0 {
            return false;
        }
        self.mask[w] |= b;
        self.free -= 1;
        true
    }

    #[inline]
    fn release(&mut self, edge: usize) {
        let c = self.colors[edge] as usize;
        self.mask[c / 64] &= !(1u64 << (c % 64));
        self.free += 1;
    }

    fn has_room(&self, edges: usize) -> bool {
        self.free >= edges
    }
}

/// Searches `c` for a rainbow copy of `p`, visiting at most `budget` nodes
/// (one node per vertex placed).
///
/// The returned witness is the first one in the canonical traversal, so
/// repeated runs give identical results.
pub fn find_rainbow(c: &Coloring, p: &PatternSpec, budget: Option<u64>) -> Result<DetectOutcome> {
    c.validate()
        .map_err(|v| Error::InvalidColoring(v.to_string()))?;
    if c.n() > MAX_DETECT_N {
        return Err(Error::InvalidColoring(format!(
            "detection supports n <= {MAX_DETECT_N}, got {}",
            c.n()
        )));
    }
    if p.vertex_count() > c.n() {
        return Err(Error::InvalidPattern(format!(
            "{p} has {} vertices, more than K_{}",
            p.vertex_count(),
            c.n()
        )));
    }
    let comps = placement_order(p);
    let mut gate = ColorGate::new(c);
    let mut found: Option<Vec<Vec<usize>>> = None;
    let mut emb = Embedder::new(c.n(), &comps, &mut gate, budget, |tuples| {
        found = Some(tuples.to_vec());
        ControlFlow::Break(())
    });
    let finish = emb.run();
    let nodes = emb.nodes;
    let witness = found.map(|tuples| {
        let placements: Vec<Placement> = comps
            .iter()
            .zip(tuples)
            .map(|(&component, t)| Placement {
                component,
                vertices: t.into_iter().map(VertexId).collect(),
            })
            .collect();
        let covered_edges = placement_edges(&placements);
        Witness {
            placements,
            covered_edges,
        }
    });
    Ok(DetectOutcome {
        witness,
        exhausted: finish == Finish::Exhausted,
        nodes_explored: nodes,
    })
}

fn placement_edges(placements: &[Placement]) -> Vec<EdgeId> {
    placements
        .iter()
        .flat_map(|p| {
            let t: Vec<usize> = p.vertices.iter().map(|v| v.0).collect();
            p.component.edges_of(&t)
        })
        .map(|(u, v)| EdgeId(colex(u, v)))
        .collect()
}

/// Why a witness was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessDefect {
    /// The placed components are not the pattern's components.
    ComponentMismatch,
    WrongSize {
        placement: usize,
    },
    VertexOutOfRange {
        vertex: usize,
    },
    /// A vertex occurs twice inside one component.
    RepeatedVertex {
        vertex: usize,
    },
    /// Two components share a vertex.
    VertexOverlap {
        vertex: usize,
    },
    /// `covered_edges` is not the edge set spanned by the placements.
    EdgeMismatch,
    RepeatedColor {
        color: u32,
    },
}

impl fmt::Display for WitnessDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessDefect::ComponentMismatch => f.write_str("components differ from the pattern"),
            WitnessDefect::WrongSize { placement } => {
                write!(f, "placement {placement} has the wrong number of vertices")
            }
            WitnessDefect::VertexOutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            WitnessDefect::RepeatedVertex { vertex } => {
                write!(f, "vertex {vertex} repeated inside a component")
            }
            WitnessDefect::VertexOverlap { vertex } => {
                write!(f, "vertex overlap at {vertex}")
            }
            WitnessDefect::EdgeMismatch => f.write_str("covered edges do not match placements"),
            WitnessDefect::RepeatedColor { color } => write!(f, "repeated color {color}"),
        }
    }
}

/// Checks that `w` is a vertex-disjoint placement of `p` whose edges carry
/// pairwise distinct colors in `c`.
pub fn verify_witness(c: &Coloring, p: &PatternSpec, w: &Witness) -> Result<(), WitnessDefect> {
    let mut placed: Vec<_> = w.placements.iter().map(|pl| pl.component).collect();
    placed.sort();
    if placed != p.components() {
        return Err(WitnessDefect::ComponentMismatch);
    }
    let mut seen = BTreeSet::new();
    for (i, pl) in w.placements.iter().enumerate() {
        if pl.vertices.len() != pl.component.size() {
            return Err(WitnessDefect::WrongSize { placement: i });
        }
        let mut own = BTreeSet::new();
        for v in &pl.vertices {
            if v.0 >= c.n() {
                return Err(WitnessDefect::VertexOutOfRange { vertex: v.0 });
            }
            if !own.insert(v.0) {
                return Err(WitnessDefect::RepeatedVertex { vertex: v.0 });
            }
            if !seen.insert(v.0) {
                return Err(WitnessDefect::VertexOverlap { vertex: v.0 });
            }
        }
    }
    let edges = placement_edges(&w.placements);
    if edges != w.covered_edges {
        return Err(WitnessDefect::EdgeMismatch);
    }
    let mut colors = BTreeSet::new();
    for e in edges {
        let color = c.color(e);
        if !colors.insert(color) {
            return Err(WitnessDefect::RepeatedColor { color });
        }
    }
    Ok(())
}
