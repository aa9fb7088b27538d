//! Depth-first walk over restricted-growth strings of the edge set.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::detect::embed::all_copies;
use crate::detect::find_rainbow;
use crate::model::{edge_count, Coloring, PatternSpec};

use super::{SearchOptions, SearchStats};

/// Copies of the pattern grouped by their largest edge; each copy is stored
/// as its remaining edges.
pub(crate) struct CopyTable {
    pub(crate) edges: usize,
    stride: usize,
    by_max: Vec<Vec<u8>>,
    /// copies ending at each edge; needed when `stride` is 0
    ending: Vec<u32>,
}

impl CopyTable {
    pub(crate) fn new(n: usize, p: &PatternSpec) -> Self {
        let edges = edge_count(n);
        let stride = p.edge_count() - 1;
        let mut by_max = vec![Vec::new(); edges];
        let mut ending = vec![0; edges];
        for copy in all_copies(n, p) {
            let (&last, rest) = copy.split_last().expect("patterns have edges");
            by_max[last].extend(rest.iter().map(|&e| e as u8));
            ending[last] += 1;
        }
        Self {
            edges,
            stride,
            by_max,
            ending,
        }
    }

    /// A table with no copies: every partition is admissible.
    pub(crate) fn empty(edges: usize) -> Self {
        Self {
            edges,
            stride: 1,
            by_max: vec![Vec::new(); edges],
            ending: vec![0; edges],
        }
    }

    /// Classes edge `j` may join without completing a rainbow copy, and
    /// whether it may open a new class.
    #[inline]
    fn allowed(&self, j: usize, colors: &[u8]) -> (u64, bool) {
        let mut allowed = !0u64;
        let mut fresh = true;
        let list = &self.by_max[j];
        if self.stride == 0 {
            return if self.ending[j] == 0 {
                (allowed, true)
            } else {
                (0, false)
            };
        }
        for copy in list.chunks_exact(self.stride) {
            let mut seen = 0u64;
            let mut rainbow = true;
            for &e in copy {
                let bit = 1u64 << colors[e as usize];
                if seen & bit != 0 {
                    rainbow = false;
                    break;
                }
                seen |= bit;
            }
            if rainbow {
                fresh = false;
                allowed &= seen;
                if allowed == 0 {
                    break;
                }
            }
        }
        (allowed, fresh)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Goal {
    /// Find the largest number of classes.
    Maximize,
    /// Stop at the first partition with at least this many classes.
    AtLeast(usize),
}

/// State shared by all workers of one search.
pub(crate) struct Shared {
    pub(crate) best: AtomicUsize,
    nodes: AtomicU64,
    budget: Option<u64>,
    pub(crate) stop: AtomicBool,
    pub(crate) out_of_budget: AtomicBool,
    pub(crate) witness: Mutex<Option<(usize, Vec<u8>)>>,
}

impl Shared {
    pub(crate) fn new(best: usize, budget: Option<u64>) -> Self {
        Self {
            best: AtomicUsize::new(best),
            nodes: AtomicU64::new(0),
            budget,
            stop: AtomicBool::new(false),
            out_of_budget: AtomicBool::new(false),
            witness: Mutex::new(None),
        }
    }

    fn offer(&self, classes: usize, colors: &[u8]) {
        let mut slot = self.witness.lock().expect("witness lock poisoned");
        if slot.as_ref().is_none_or(|(k, _)| classes > *k) {
            *slot = Some((classes, colors.to_vec()));
        }
    }
}

const FLUSH: u64 = 1024;

/// Leaf checks when the rainbow prune is off.
pub(crate) struct LeafCheck<'a> {
    pub(crate) n: usize,
    pub(crate) pattern: &'a PatternSpec,
}

pub(crate) struct Worker<'a> {
    table: &'a CopyTable,
    shared: &'a Shared,
    goal: Goal,
    opts: SearchOptions,
    leaf_check: Option<LeafCheck<'a>>,
    colors: Vec<u8>,
    unflushed: u64,
    flush_every: u64,
    pub(crate) stats: SearchStats,
    pub(crate) leaves: u64,
}

impl<'a> Worker<'a> {
    pub(crate) fn new(
        table: &'a CopyTable,
        shared: &'a Shared,
        goal: Goal,
        opts: SearchOptions,
        leaf_check: Option<LeafCheck<'a>>,
        single: bool,
    ) -> Self {
        Self {
            table,
            shared,
            goal,
            opts,
            leaf_check,
            colors: vec![0; table.edges],
            unflushed: 0,
            flush_every: if single { 1 } else { FLUSH },
            stats: SearchStats::default(),
            leaves: 0,
        }
    }

    /// Continues the walk below a prefix of `classes` classes.
    pub(crate) fn run_from(&mut self, prefix: &[u8], classes: usize) -> ControlFlow<()> {
        self.colors[..prefix.len()].copy_from_slice(prefix);
        let r = self.dfs(prefix.len(), classes);
        self.flush();
        r
    }

    fn flush(&mut self) {
        if self.unflushed > 0 {
            self.shared
                .nodes
                .fetch_add(self.unflushed, Ordering::Relaxed);
            self.unflushed = 0;
        }
    }

    /// Counts one node; breaks when the budget is spent or the search
    /// was stopped.
    #[inline]
    fn tick(&mut self) -> ControlFlow<()> {
        self.stats.nodes += 1;
        self.unflushed += 1;
        if self.unflushed >= self.flush_every {
            let total = self
                .shared
                .nodes
                .fetch_add(self.unflushed, Ordering::Relaxed)
                + self.unflushed;
            self.unflushed = 0;
            if self.shared.budget.is_some_and(|b| total > b) {
                self.shared.out_of_budget.store(true, Ordering::Relaxed);
                self.shared.stop.store(true, Ordering::Relaxed);
            }
            if self.shared.stop.load(Ordering::Relaxed) {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    }

    /// Whether a branch that can reach at most `reach` classes is hopeless.
    #[inline]
    fn hopeless(&self, reach: usize) -> bool {
        match self.goal {
            Goal::Maximize => reach <= self.shared.best.load(Ordering::Relaxed),
            Goal::AtLeast(m) => reach < m,
        }
    }

    fn dfs(&mut self, j: usize, classes: usize) -> ControlFlow<()> {
        if j == self.table.edges {
            return self.leaf(classes);
        }
        let remaining = self.table.edges - j - 1;
        if self.opts.bound_prune && self.hopeless(classes + 1 + remaining) {
            self.stats.prunes_by_bound += 1;
            return ControlFlow::Continue(());
        }
        let (allowed, fresh) = if self.opts.rainbow_prune {
            self.table.allowed(j, &self.colors)
        } else {
            (!0, true)
        };
        if fresh {
            self.tick()?;
            self.colors[j] = classes as u8;
            self.dfs(j + 1, classes + 1)?;
        } else {
            self.stats.prunes_by_rainbow += 1;
        }
        for c in 0..classes {
            if allowed & (1 << c) == 0 {
                self.stats.prunes_by_rainbow += 1;
                continue;
            }
            if self.opts.bound_prune && self.hopeless(classes + remaining) {
                self.stats.prunes_by_bound += 1;
                return ControlFlow::Continue(());
            }
            self.tick()?;
            self.colors[j] = c as u8;
            self.dfs(j + 1, classes)?;
        }
        ControlFlow::Continue(())
    }

    fn leaf(&mut self, classes: usize) -> ControlFlow<()> {
        self.leaves += 1;
        let target = match self.goal {
            Goal::Maximize => self.shared.best.load(Ordering::Relaxed) + 1,
            Goal::AtLeast(m) => m,
        };
        if classes < target {
            return ControlFlow::Continue(());
        }
        if let Some(check) = &self.leaf_check {
            let c = Coloring::from_labels(check.n, &to_u32(&self.colors))
                .expect("restricted-growth strings are valid colorings");
            let out = find_rainbow(&c, check.pattern, None).expect("n is within detector range");
            if !out.is_rainbow_free() {
                self.stats.prunes_by_rainbow += 1;
                return ControlFlow::Continue(());
            }
        }
        match self.goal {
            Goal::Maximize => {
                let prev = self.shared.best.fetch_max(classes, Ordering::Relaxed);
                if classes > prev {
                    self.shared.offer(classes, &self.colors);
                }
                if classes == self.table.edges {
                    self.shared.stop.store(true, Ordering::Relaxed);
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            }
            Goal::AtLeast(_) => {
                self.shared.offer(classes, &self.colors);
                self.shared.stop.store(true, Ordering::Relaxed);
                ControlFlow::Break(())
            }
        }
    }
}

pub(crate) fn to_u32(labels: &[u8]) -> Vec<u32> {
    labels.iter().map(|&c| c as u32).collect()
}

/// Admissible prefixes of length `depth` in walk order, with their class
/// counts.
pub(crate) fn prefixes(table: &CopyTable, depth: usize) -> Vec<(Vec<u8>, usize)> {
    fn go(
        table: &CopyTable,
        depth: usize,
        colors: &mut Vec<u8>,
        classes: usize,
        out: &mut Vec<(Vec<u8>, usize)>,
    ) {
        let j = colors.len();
        if j == depth {
            out.push((colors.clone(), classes));
            return;
        }
        colors.push(0);
        let (allowed, fresh) = {
            let mut padded = colors.clone();
            padded.resize(table.edges, 0);
            table.allowed(j, &padded)
        };
        if fresh {
            colors[j] = classes as u8;
            go(table, depth, colors, classes + 1, out);
        }
        for c in 0..classes {
            if allowed & (1 << c) != 0 {
                colors[j] = c as u8;
                go(table, depth, colors, classes, out);
            }
        }
        colors.pop();
    }
    let mut out = Vec::new();
    go(table, depth, &mut Vec::new(), 0, &mut out);
    out
}
