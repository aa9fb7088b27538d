use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A vertex of the ambient complete graph `K_n`, `0 <= index < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

/// An edge of `K_n` in colexicographic order: `{u, v}` with `u < v` has
/// index `v(v-1)/2 + u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// `C(n, 2)`.
#[inline]
pub const fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Number of edges of `K_n`.
#[inline]
pub const fn edge_count(n: usize) -> usize {
    choose2(n)
}

/// Colex index of `{u, v}` without range checks. Requires `u != v`.
#[inline]
pub(crate) fn colex(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    choose2(b) + a
}

/// Colex index of the edge `{u, v}` of `K_n`.
pub fn edge_index(u: VertexId, v: VertexId, n: usize) -> Result<EdgeId> {
    for w in [u, v] {
        if w.0 >= n {
            return Err(Error::InvalidVertex { vertex: w.0, n });
        }
    }
    if u == v {
        return Err(Error::InvalidEdge(format!("loop at vertex {}", u.0)));
    }
    Ok(EdgeId(colex(u.0, v.0)))
}

/// Endpoints `(u, v)`, `u < v`, of edge `id` of `K_n`.
pub fn edge_endpoints(id: EdgeId, n: usize) -> Result<(VertexId, VertexId)> {
    if id.0 >= edge_count(n) {
        return Err(Error::InvalidEdge(format!(
            "edge index {} out of range for K_{n} ({} edges)",
            id.0,
            edge_count(n)
        )));
    }
    let (u, v) = endpoints_unchecked(id.0);
    Ok((VertexId(u), VertexId(v)))
}

/// Inverse of [`colex`].
#[inline]
pub(crate) fn endpoints_unchecked(id: usize) -> (usize, usize) {
    // largest v with C(v, 2) <= id
    let mut v = ((1.0 + (1.0 + 8.0 * id as f64).sqrt()) / 2.0) as usize;
    while choose2(v) > id {
        v -= 1;
    }
    while choose2(v + 1) <= id {
        v += 1;
    }
    (id - choose2(v), v)
}
