//! Backtracking placement of a pattern into `K_n`, one subgraph per
//! automorphism class.
//!
//! Symmetry breaking: a path's first vertex is smaller than its last; a
//! cycle starts at its minimum vertex and its second vertex is smaller than
//! its last; a clique is listed in increasing order; and every vertex of a
//! component exceeds the minimum vertex of an identical component placed
//! just before it. Each edge set isomorphic to the pattern is therefore
//! visited exactly once.

use std::ops::ControlFlow;

use crate::model::{colex, ComponentKind, PatternComponent, PatternSpec};

/// Decides which edges may join the partial placement.
pub(crate) trait EdgeGate {
    /// Adds `edge` if allowed. A rejected edge leaves the gate unchanged.
    fn admit(&mut self, edge: usize) -> bool;
    fn release(&mut self, edge: usize);
    /// Whether `edges` more edges could still be admitted.
    fn has_room(&self, _edges: usize) -> bool {
        true
    }
}

/// Accepts every edge.
pub(crate) struct OpenGate;

impl EdgeGate for OpenGate {
    fn admit(&mut self, _edge: usize) -> bool {
        true
    }
    fn release(&mut self, _edge: usize) {}
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Finish {
    /// Every placement was visited.
    Exhausted,
    /// The visitor asked to stop.
    Stopped,
    /// The node budget ran out first.
    OutOfBudget,
}

/// Components in placement order: more edges first, identical components
/// adjacent.
pub(crate) fn placement_order(p: &PatternSpec) -> Vec<PatternComponent> {
    let mut comps = p.components().to_vec();
    comps.sort_by_key(|c| std::cmp::Reverse(c.edge_count()));
    comps
}

pub(crate) struct Embedder<'a, G: EdgeGate, F: FnMut(&[Vec<usize>]) -> ControlFlow<()>> {
    n: usize,
    comps: &'a [PatternComponent],
    gate: &'a mut G,
    visit: F,
    used: u64,
    tuples: Vec<Vec<usize>>,
    /// vertices and edges still to place after component `i` is complete
    vertices_after: Vec<usize>,
    edges_after: Vec<usize>,
    budget: Option<u64>,
    pub(crate) nodes: u64,
}

impl<'a, G, F> Embedder<'a, G, F>
where
    G: EdgeGate,
    F: FnMut(&[Vec<usize>]) -> ControlFlow<()>,
{
    /// `n <= 64`.
    pub(crate) fn new(
        n: usize,
        comps: &'a [PatternComponent],
        gate: &'a mut G,
        budget: Option<u64>,
        visit: F,
    ) -> Self {
        assert!(n <= 64, "placement supports at most 64 host vertices");
        let mut vertices_after = vec![0; comps.len()];
        let mut edges_after = vec![0; comps.len()];
        for i in (0..comps.len().saturating_sub(1)).rev() {
            vertices_after[i] = vertices_after[i + 1] + comps[i + 1].size();
            edges_after[i] = edges_after[i + 1] + comps[i + 1].edge_count();
        }
        Self {
            n,
            comps,
            gate,
            visit,
            used: 0,
            tuples: comps.iter().map(|c| Vec::with_capacity(c.size())).collect(),
            vertices_after,
            edges_after,
            budget,
            nodes: 0,
        }
    }

    pub(crate) fn run(&mut self) -> Finish {
        if self.comps.is_empty() {
            return match (self.visit)(&self.tuples) {
                ControlFlow::Break(()) => Finish::Stopped,
                ControlFlow::Continue(()) => Finish::Exhausted,
            };
        }
        match self.start_component(0) {
            ControlFlow::Continue(()) => Finish::Exhausted,
            ControlFlow::Break(f) => f,
        }
    }

    fn start_component(&mut self, ci: usize) -> ControlFlow<Finish> {
        if ci == self.comps.len() {
            return match (self.visit)(&self.tuples) {
                ControlFlow::Break(()) => ControlFlow::Break(Finish::Stopped),
                ControlFlow::Continue(()) => ControlFlow::Continue(()),
            };
        }
        let comp = self.comps[ci];
        let lb = if ci > 0 && self.comps[ci - 1] == comp {
            self.tuples[ci - 1].iter().copied().min().unwrap_or(0) + 1
        } else {
            0
        };
        let need_v = comp.size() + self.vertices_after[ci];
        let need_e = comp.edge_count() + self.edges_after[ci];
        // only this component's vertices are bound to be >= lb
        if !self.gate.has_room(need_e)
            || self.free_from(lb) < comp.size()
            || self.free_from(0) < need_v
        {
            return ControlFlow::Continue(());
        }
        for v in lb..self.n {
            if self.used & (1 << v) != 0 {
                continue;
            }
            let mut r = self.push(ci, v);
            if r.is_continue() {
                r = self.extend(ci, lb);
            }
            self.pop(ci);
            r?;
        }
        ControlFlow::Continue(())
    }

    /// Chooses the next vertex of component `ci`, which already has at
    /// least one vertex.
    fn extend(&mut self, ci: usize, lb: usize) -> ControlFlow<Finish> {
        let comp = self.comps[ci];
        let pos = self.tuples[ci].len();
        if pos == comp.size() {
            return self.start_component(ci + 1);
        }
        let first = self.tuples[ci][0];
        let last_pos = pos + 1 == comp.size();
        let lo = match comp.kind() {
            ComponentKind::Path => lb,
            ComponentKind::Cycle => first + 1,
            ComponentKind::Clique => self.tuples[ci][pos - 1] + 1,
        };
        let rest = comp.size() - pos;
        if self.free_from(lb) < rest || self.free_from(0) < rest + self.vertices_after[ci] {
            return ControlFlow::Continue(());
        }
        for w in lo..self.n {
            if self.used & (1 << w) != 0 {
                continue;
            }
            match comp.kind() {
                ComponentKind::Path if last_pos && w < first => continue,
                ComponentKind::Cycle if last_pos && w < self.tuples[ci][1] => continue,
                _ => {}
            }
            let Some(added) = self.admit_edges(ci, w) else {
                continue;
            };
            let mut r = self.push(ci, w);
            if r.is_continue() {
                r = self.extend(ci, lb);
            }
            self.pop(ci);
            for &e in added.iter().rev() {
                self.gate.release(e);
            }
            r?;
        }
        ControlFlow::Continue(())
    }

    /// Admits the edges that vertex `w` closes in component `ci`; on
    /// rejection nothing stays admitted.
    fn admit_edges(&mut self, ci: usize, w: usize) -> Option<Vec<usize>> {
        let comp = self.comps[ci];
        let tuple = &self.tuples[ci];
        let mut wanted: Vec<usize> = Vec::with_capacity(tuple.len());
        match comp.kind() {
            ComponentKind::Path => wanted.push(colex(tuple[tuple.len() - 1], w)),
            ComponentKind::Cycle => {
                wanted.push(colex(tuple[tuple.len() - 1], w));
                if tuple.len() + 1 == comp.size() {
                    wanted.push(colex(w, tuple[0]));
                }
            }
            ComponentKind::Clique => wanted.extend(tuple.iter().map(|&u| colex(u, w))),
        }
        for (i, &e) in wanted.iter().enumerate() {
            if !self.gate.admit(e) {
                for &done in wanted[..i].iter().rev() {
                    self.gate.release(done);
                }
                return None;
            }
        }
        Some(wanted)
    }

    fn push(&mut self, ci: usize, v: usize) -> ControlFlow<Finish> {
        self.nodes += 1;
        self.used |= 1 << v;
        self.tuples[ci].push(v);
        match self.budget {
            Some(b) if self.nodes > b => ControlFlow::Break(Finish::OutOfBudget),
            _ => ControlFlow::Continue(()),
        }
    }

    fn pop(&mut self, ci: usize) {
        let v = self.tuples[ci].pop().expect("pop on empty tuple");
        self.used &= !(1 << v);
    }

    /// Free vertices with label `>= lb`.
    fn free_from(&self, lb: usize) -> usize {
        if lb >= self.n {
            return 0;
        }
        let all = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let window = all & !((1u64 << lb) - 1);
        (window & !self.used).count_ones() as usize
    }
}

/// Every subgraph of `K_n` isomorphic to `p`, as sorted colex edge lists.
pub(crate) fn all_copies(n: usize, p: &PatternSpec) -> Vec<Vec<usize>> {
    let comps = placement_order(p);
    let mut out = Vec::new();
    let mut gate = OpenGate;
    let mut e = Embedder::new(n, &comps, &mut gate, None, |tuples| {
        let mut edges: Vec<usize> = comps
            .iter()
            .zip(tuples)
            .flat_map(|(c, t)| c.edges_of(t))
            .map(|(u, v)| colex(u, v))
            .collect();
        edges.sort_unstable();
        out.push(edges);
        ControlFlow::Continue(())
    });
    e.run();
    out
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::cli::parse_pattern;
    use crate::detect::list_embeddings;

    fn edge_sets(n: usize, p: &str) -> (BTreeSet<Vec<usize>>, usize) {
        let copies = all_copies(n, &parse_pattern(p).unwrap());
        let count = copies.len();
        (copies.into_iter().collect(), count)
    }

    #[test]
    fn copies_match_brute_force() {
        for p in [
            "P4", "2P3+P2", "2P3+2P2", "K3+2P2", "C4+P3", "2C3+P2", "3P2", "P5+P2", "K4",
        ] {
            let spec = parse_pattern(p).unwrap();
            for n in spec.vertex_count()..=8 {
                let (fast, count) = edge_sets(n, p);
                assert_eq!(count, fast.len(), "{p} on K_{n}: repeated copy");
                let slow: BTreeSet<Vec<usize>> = list_embeddings(n, &spec)
                    .unwrap()
                    .map(|emb| {
                        let mut edges: Vec<usize> = emb
                            .iter()
                            .flat_map(|pl| {
                                let t: Vec<usize> = pl.vertices.iter().map(|v| v.0).collect();
                                pl.component.edges_of(&t)
                            })
                            .map(|(u, v)| colex(u.min(v), u.max(v)))
                            .collect();
                        edges.sort_unstable();
                        edges
                    })
                    .collect();
                assert_eq!(fast, slow, "{p} on K_{n}");
            }
        }
    }
}
