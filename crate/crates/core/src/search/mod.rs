//! Exact `AR(n, H)` for small hosts.
//!
//! Colorings are enumerated as set partitions of the edge set, written as
//! restricted-growth strings in colex edge order: edge `j` joins one of the
//! classes already opened or opens the next one. Two prunes cut the tree:
//!
//! * rainbow prune: when edge `j` is assigned, only copies of the pattern
//!   whose largest edge is `j` can have just become rainbow, and a rainbow
//!   copy among assigned edges never disappears;
//! * bound prune: a branch with `classes + unassigned` not above the
//!   incumbent cannot improve it.
//!
//! The incumbent starts at the best detector-certified construction.

mod engine;

use std::fmt;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::construct::{
    cover_rainbow_plus_one, extremal_for, matching_classes, rainbow_clique_plus_one, Verification,
};
use crate::detect::find_rainbow;
use crate::model::{edge_count, Coloring, PatternSpec};
use crate::{Error, Result};
use engine::{prefixes, to_u32, CopyTable, Goal, LeafCheck, Shared, Worker};

/// Largest host accepted by the search.
pub const MAX_SEARCH_N: usize = 10;

/// Largest item count accepted by [`count_partitions`].
pub const MAX_PARTITION_ITEMS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Node budget; `None` is unlimited.
    pub budget: Option<u64>,
    /// Worker threads. With one task the search is deterministic.
    pub tasks: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            budget: None,
            tasks: 1,
        }
    }
}

impl SearchLimits {
    pub fn with_budget(budget: u64) -> Self {
        Self {
            budget: Some(budget),
            ..Self::default()
        }
    }

    pub fn with_tasks(tasks: usize) -> Self {
        Self {
            tasks,
            ..Self::default()
        }
    }
}

/// Switches for testing the prunes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Without it, complete partitions are checked with the detector.
    pub rainbow_prune: bool,
    pub bound_prune: bool,
    /// Start from the best certified construction instead of zero.
    pub seed: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            rainbow_prune: true,
            bound_prune: true,
            seed: true,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes_by_rainbow: u64,
    pub prunes_by_bound: u64,
    pub elapsed: Duration,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.prunes_by_rainbow += other.prunes_by_rainbow;
        self.prunes_by_bound += other.prunes_by_bound;
    }
}

impl fmt::Display for SearchStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "nodes {}, rainbow prunes {}, bound prunes {}, {:.3} s",
            self.nodes,
            self.prunes_by_rainbow,
            self.prunes_by_bound,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Outcome of [`exact_ar`].
///
/// `value` is always a certified lower bound; when `exhausted` is set it is
/// the exact anti-Ramsey number. The witness is absent only when the value
/// is 0, i.e. the pattern is a single edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub value: usize,
    pub witness_coloring: Option<Coloring>,
    pub exhausted: bool,
    pub stats: SearchStats,
}

/// Outcome of [`decide_ar_at_least`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// A coloring with at least the requested number of colors and no
    /// rainbow copy.
    Witness(Coloring),
    /// The search was exhausted: `AR(n, p)` is below the requested value.
    Refuted,
    /// The budget ran out first.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub stats: SearchStats,
}

fn check_input(n: usize, p: &PatternSpec) -> Result<()> {
    if n > MAX_SEARCH_N {
        return Err(Error::BudgetExceeded(format!(
            "exact search supports n <= {MAX_SEARCH_N}, got {n}"
        )));
    }
    if p.vertex_count() > n {
        return Err(Error::InvalidPattern(format!(
            "{p} has {} vertices, more than K_{n}",
            p.vertex_count()
        )));
    }
    Ok(())
}

/// [`exact_ar_with`] with all prunes and seeding on.
pub fn exact_ar(n: usize, p: &PatternSpec, limits: SearchLimits) -> Result<SearchResult> {
    exact_ar_with(n, p, limits, SearchOptions::default())
}

pub fn exact_ar_with(
    n: usize,
    p: &PatternSpec,
    limits: SearchLimits,
    opts: SearchOptions,
) -> Result<SearchResult> {
    check_input(n, p)?;
    let start = Instant::now();
    let seed = if opts.seed {
        best_construction(n, p)?
    } else {
        None
    };
    let initial = seed.as_ref().map_or(0, Coloring::color_count);
    let (shared, mut stats) = drive(n, p, Goal::Maximize, limits, opts, initial);
    stats.elapsed = start.elapsed();
    let value = shared.best.load(Ordering::Relaxed);
    let found = shared.witness.into_inner().expect("witness lock poisoned");
    let witness_coloring = match found {
        Some((k, labels)) => {
            debug_assert_eq!(k, value);
            Some(Coloring::from_labels(n, &to_u32(&labels))?)
        }
        None => seed,
    };
    Ok(SearchResult {
        value,
        witness_coloring,
        exhausted: !shared.out_of_budget.into_inner(),
        stats,
    })
}

/// Whether some coloring of `K_n` with at least `m` colors has no rainbow
/// `p`.
pub fn decide_ar_at_least(
    n: usize,
    p: &PatternSpec,
    m: usize,
    limits: SearchLimits,
) -> Result<Decision> {
    check_input(n, p)?;
    if m < 1 || m > edge_count(n) {
        return Err(Error::InvalidArgument(format!(
            "color count {m} outside 1..={}",
            edge_count(n)
        )));
    }
    let start = Instant::now();
    let (shared, mut stats) = drive(n, p, Goal::AtLeast(m), limits, SearchOptions::default(), 0);
    stats.elapsed = start.elapsed();
    let found = shared.witness.into_inner().expect("witness lock poisoned");
    let verdict = match found {
        Some((_, labels)) => Verdict::Witness(Coloring::from_labels(n, &to_u32(&labels))?),
        None if shared.out_of_budget.into_inner() => Verdict::Inconclusive,
        None => Verdict::Refuted,
    };
    Ok(Decision { verdict, stats })
}

/// Number of set partitions of `j` items, counted as the leaves of the
/// unpruned restricted-growth walk. Equals the Bell number `B(j)`.
///
/// # Panics
///
/// If `j > MAX_PARTITION_ITEMS`.
pub fn count_partitions(j: usize) -> u64 {
    assert!(
        j <= MAX_PARTITION_ITEMS,
        "count_partitions supports j <= 12"
    );
    let table = CopyTable::empty(j);
    // an incumbent of j classes keeps every leaf from being recorded
    let shared = Shared::new(j, None);
    let opts = SearchOptions {
        rainbow_prune: false,
        bound_prune: false,
        seed: false,
    };
    let mut w = Worker::new(&table, &shared, Goal::Maximize, opts, None, true);
    let _ = w.run_from(&[], 0);
    w.leaves
}

fn drive(
    n: usize,
    p: &PatternSpec,
    goal: Goal,
    limits: SearchLimits,
    opts: SearchOptions,
    initial: usize,
) -> (Shared, SearchStats) {
    let table = CopyTable::new(n, p);
    let shared = Shared::new(initial, limits.budget);
    let leaf_check = || (!opts.rainbow_prune).then_some(LeafCheck { n, pattern: p });
    let tasks = limits.tasks.max(1);
    let mut stats = SearchStats::default();
    if tasks == 1 {
        let mut w = Worker::new(&table, &shared, goal, opts, leaf_check(), true);
        let _ = w.run_from(&[], 0);
        stats = w.stats;
        return (shared, stats);
    }
    let work = split(&table, tasks);
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..tasks)
            .map(|_| {
                s.spawn(|| {
                    let mut w = Worker::new(&table, &shared, goal, opts, leaf_check(), false);
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some((prefix, classes)) = work.get(i) else {
                            break;
                        };
                        if let ControlFlow::Break(()) = w.run_from(prefix, *classes) {
                            break;
                        }
                    }
                    w.stats
                })
            })
            .collect();
        for h in handles {
            stats.absorb(&h.join().expect("search worker panicked"));
        }
    });
    (shared, stats)
}

/// Shallowest prefix depth giving several subtrees per task.
fn split(table: &CopyTable, tasks: usize) -> Vec<(Vec<u8>, usize)> {
    let mut work = vec![(Vec::new(), 0)];
    for depth in 1..=table.edges.min(12) {
        work = prefixes(table, depth);
        if work.len() >= 8 * tasks {
            break;
        }
    }
    work
}

/// The construction with the most colors that the detector certifies free
/// of rainbow copies of `p`.
fn best_construction(n: usize, p: &PatternSpec) -> Result<Option<Coloring>> {
    let mut candidates = Vec::new();
    if let Ok(r) = extremal_for(n, p) {
        if r.verified == Verification::Verified {
            return Ok(Some(r.coloring));
        }
    }
    candidates.push(Coloring::monochromatic(n));
    candidates.extend((2..n).filter_map(|m| rainbow_clique_plus_one(n, m).ok()));
    candidates.extend((1..n.saturating_sub(1)).filter_map(|s| cover_rainbow_plus_one(n, s).ok()));
    candidates.extend(matching_classes(n).ok());
    candidates.sort_by_key(|c| std::cmp::Reverse(c.color_count()));
    for c in candidates {
        if find_rainbow(&c, p, None)?.is_rainbow_free() {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse_pattern;

    fn pat(s: &str) -> PatternSpec {
        parse_pattern(s).unwrap()
    }

    fn value(n: usize, p: &str) -> usize {
        let r = exact_ar(n, &pat(p), SearchLimits::default()).unwrap();
        assert!(r.exhausted);
        r.value
    }

    #[test]
    fn small_values() {
        assert_eq!(value(4, "P4"), 3);
        assert_eq!(value(5, "P4"), 2);
        assert_eq!(value(4, "2P2"), 3);
        assert_eq!(value(5, "2P2"), 1);
        assert_eq!(value(3, "C3"), 2);
        assert_eq!(value(4, "P3"), 1);
        assert_eq!(value(4, "P2"), 0);
    }

    #[test]
    fn single_edge_has_no_witness() {
        let r = exact_ar(4, &pat("P2"), SearchLimits::default()).unwrap();
        assert_eq!((r.value, r.witness_coloring), (0, None));
    }

    #[test]
    fn witness_is_certified() {
        for (n, p) in [(4, "P4"), (4, "2P2"), (5, "C3"), (5, "P3+P2")] {
            let p = pat(p);
            let r = exact_ar(n, &p, SearchLimits::default()).unwrap();
            let w = r.witness_coloring.unwrap();
            assert_eq!(w.color_count(), r.value);
            assert_eq!(w.validate(), Ok(()));
            assert!(find_rainbow(&w, &p, None).unwrap().is_rainbow_free());
        }
    }

    #[test]
    fn unseeded_and_unpruned_agree() {
        let bare = SearchOptions {
            rainbow_prune: false,
            bound_prune: false,
            seed: false,
        };
        for p in ["P4", "2P2", "C3", "C4", "P3", "K3"] {
            let p = pat(p);
            let full = exact_ar(4, &p, SearchLimits::default()).unwrap();
            let raw = exact_ar_with(4, &p, SearchLimits::default(), bare).unwrap();
            let unseeded = exact_ar_with(
                4,
                &p,
                SearchLimits::default(),
                SearchOptions {
                    seed: false,
                    ..SearchOptions::default()
                },
            )
            .unwrap();
            assert_eq!(full.value, raw.value, "{p}");
            assert_eq!(full.value, unseeded.value, "{p}");
        }
    }

    #[test]
    fn decisions() {
        let d = decide_ar_at_least(4, &pat("P4"), 3, SearchLimits::default()).unwrap();
        assert!(matches!(d.verdict, Verdict::Witness(ref c) if c.color_count() >= 3));
        let d = decide_ar_at_least(4, &pat("P4"), 4, SearchLimits::default()).unwrap();
        assert_eq!(d.verdict, Verdict::Refuted);
        assert!(decide_ar_at_least(4, &pat("P4"), 7, SearchLimits::default()).is_err());
    }

    #[test]
    fn budget_exhaustion() {
        let p = pat("3P2");
        let r = exact_ar(6, &p, SearchLimits::with_budget(10)).unwrap();
        assert!(!r.exhausted);
        assert!(r.value >= 1);
        let d = decide_ar_at_least(6, &p, 7, SearchLimits::with_budget(10)).unwrap();
        assert_eq!(d.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn guards() {
        assert!(matches!(
            exact_ar(11, &pat("P4"), SearchLimits::default()),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(exact_ar(4, &pat("3P2"), SearchLimits::default()).is_err());
    }

    #[test]
    fn bell_numbers() {
        let bell = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (j, &b) in bell.iter().enumerate() {
            assert_eq!(count_partitions(j), b);
        }
    }

    #[test]
    fn parallel_agrees() {
        for (n, p) in [(5, "P4"), (5, "C3"), (6, "2P2")] {
            let one = value(n, p);
            for tasks in [2, 4] {
                let r = exact_ar(n, &pat(p), SearchLimits::with_tasks(tasks)).unwrap();
                assert_eq!((r.value, r.exhausted), (one, true));
            }
        }
    }
}
