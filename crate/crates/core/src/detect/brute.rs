//! Brute-force embedding enumeration, used as an independent oracle for the
//! detector.

use std::collections::BTreeSet;

use crate::model::{colex, PatternSpec, Placement, VertexId};
use crate::{Error, Result};

/// Hosts larger than this are refused by [`list_embeddings`].
pub const MAX_BRUTE_FORCE_N: usize = 8;

/// One placement per component.
pub type Embedding = Vec<Placement>;

/// Every embedding of `p` into `K_n` up to automorphisms of `p`.
///
/// All injective vertex maps are tried and two maps are identified when they
/// span the same edge set.
pub fn list_embeddings(n: usize, p: &PatternSpec) -> Result<impl Iterator<Item = Embedding>> {
    if n > MAX_BRUTE_FORCE_N {
        return Err(Error::BudgetExceeded(format!(
            "brute-force enumeration is limited to n <= {MAX_BRUTE_FORCE_N}"
        )));
    }
    let comps = p.components().to_vec();
    let k = p.vertex_count();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    if k <= n {
        let mut image = Vec::with_capacity(k);
        injections(n, k, &mut image, &mut |image: &[usize]| {
            let mut placements = Vec::with_capacity(comps.len());
            let mut edges = Vec::new();
            let mut offset = 0;
            for c in &comps {
                let t = &image[offset..offset + c.size()];
                offset += c.size();
                edges.extend(c.edges_of(t).into_iter().map(|(u, v)| colex(u, v)));
                placements.push(Placement {
                    component: *c,
                    vertices: t.iter().copied().map(VertexId).collect(),
                });
            }
            edges.sort_unstable();
            if seen.insert(edges) {
                out.push(placements);
            }
        });
    }
    Ok(out.into_iter())
}

fn injections(n: usize, k: usize, image: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if image.len() == k {
        f(image);
        return;
    }
    for v in 0..n {
        if !image.contains(&v) {
            image.push(v);
            injections(n, k, image, f);
            image.pop();
        }
    }
}
