use super::{
    ar_cycle, ar_kp3_tp2, ar_kp4_tp2, ar_linear_forest, ar_matching, ar_misc_family, ar_p5_tp2,
    ar_path, CycleMode, DomainStatus, FormulaResult, Provenance,
};
use crate::model::{ComponentKind, PatternSpec};

/// [`ar_lookup_with`] using the default cycle mode.
pub fn ar_lookup(pattern: &PatternSpec, n: u64) -> FormulaResult {
    ar_lookup_with(pattern, n, CycleMode::default())
}

/// Routes `pattern` to the most specific applicable formula, preferring
/// proven values over large-`n` ones.
pub fn ar_lookup_with(pattern: &PatternSpec, n: u64, mode: CycleMode) -> FormulaResult {
    if pattern.vertex_count() as u64 > n {
        return FormulaResult::out_of_range();
    }
    let shape = Shape::of(pattern);
    let mut candidates = Vec::new();

    if let [(kind, size)] = shape.parts.as_slice() {
        let size = *size as u64;
        match kind {
            ComponentKind::Path => candidates.push(ar_path(n, size).expect("path of size >= 2")),
            ComponentKind::Cycle => {
                candidates.push(ar_cycle(n, size, mode).expect("cycle of size >= 3"))
            }
            ComponentKind::Clique => {}
        }
    }
    let (p2, p3, p4, p5) = (
        shape.paths(2),
        shape.paths(3),
        shape.paths(4),
        shape.paths(5),
    );
    let count = shape.parts.len() as u64;
    if p2 == count {
        candidates.push(ar_matching(n, p2));
    }
    if p4 >= 1 && p4 + p2 == count {
        candidates.push(ar_kp4_tp2(n, p4, p2));
    }
    if p3 >= 1 && p3 + p2 == count {
        candidates.push(ar_kp3_tp2(n, p3, p2));
    }
    if p5 == 1 && p5 + p2 == count {
        candidates.push(ar_p5_tp2(n, p2));
    }
    if count >= 2 && shape.parts.iter().all(|(k, _)| *k == ComponentKind::Path) {
        let orders: Vec<u64> = shape.parts.iter().map(|&(_, s)| s as u64).collect();
        candidates.push(ar_linear_forest(n, &orders).expect("paths of size >= 2"));
    }
    candidates.push(ar_misc_family(pattern, n));

    let proven: Vec<FormulaResult> = candidates
        .iter()
        .copied()
        .filter(|r| r.is_proven())
        .collect();
    if let Some(first) = proven.first() {
        for r in &proven[1..] {
            assert_eq!(
                r.value, first.value,
                "{:?} and {:?} disagree on AR({n}, {pattern})",
                r.provenance, first.provenance
            );
        }
        return *first;
    }
    if let Some(r) = candidates
        .iter()
        .find(|r| r.status == DomainStatus::AsymptoticUnverified)
    {
        return *r;
    }
    // K4 + tP2: the branch constant t_n is not available
    let k4 = shape
        .parts
        .iter()
        .filter(|&&p| p == (ComponentKind::Clique, 4))
        .count() as u64;
    if k4 == 1 && p2 >= 1 && k4 + p2 == count && n >= 7.max(2 * p2 + 4) {
        return FormulaResult::unknown_constant(Provenance::K4JinGu);
    }
    FormulaResult::out_of_range()
}

/// Component shapes with `K2 = P2` and `K3 = C3` identified.
struct Shape {
    parts: Vec<(ComponentKind, usize)>,
}

impl Shape {
    fn of(p: &PatternSpec) -> Self {
        let parts = p
            .components()
            .iter()
            .map(|c| match (c.kind(), c.size()) {
                (ComponentKind::Clique, 2) => (ComponentKind::Path, 2),
                (ComponentKind::Clique, 3) => (ComponentKind::Cycle, 3),
                (k, s) => (k, s),
            })
            .collect();
        Self { parts }
    }

    fn paths(&self, size: usize) -> u64 {
        self.parts
            .iter()
            .filter(|&&p| p == (ComponentKind::Path, size))
            .count() as u64
    }
}
