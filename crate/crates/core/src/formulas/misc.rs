use super::{half, to_value, FormulaResult, Provenance};
use crate::model::{ComponentKind, PatternSpec};

/// Families of the large-`n` list, with their parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum MiscFamily {
    /// `P_{k+1} + tP3`, `k >= 3`, `t >= 1`.
    LongPathP3s { k: u64, t: u64 },
    /// `kP3 + tP2`, `k, t >= 2`.
    P3sP2s { k: u64, t: u64 },
    /// `P2 + tP3`, `t >= 1`.
    EdgeP3s { t: u64 },
    /// `P3 + tP2`, `t >= 2`.
    P3Edges { t: u64 },
    /// `P4 + tP2`, `t >= 1`.
    P4Edges { t: u64 },
    /// `C3 + tP2`, `t >= 1`.
    TriangleEdges { t: u64 },
    /// `tP3`, `t >= 1`.
    P3s { t: u64 },
}

impl MiscFamily {
    pub(crate) fn classify(p: &PatternSpec) -> Option<Self> {
        let mut p2 = 0u64;
        let mut p3 = 0u64;
        let mut p4 = 0u64;
        let mut long_paths = Vec::new();
        let mut triangles = 0u64;
        for c in p.components() {
            match (c.kind(), c.size()) {
                (ComponentKind::Path, 2) | (ComponentKind::Clique, 2) => p2 += 1,
                (ComponentKind::Path, 3) => p3 += 1,
                (ComponentKind::Path, 4) => p4 += 1,
                (ComponentKind::Path, s) => long_paths.push(s as u64),
                (ComponentKind::Cycle, 3) | (ComponentKind::Clique, 3) => triangles += 1,
                _ => return None,
            }
        }
        let long = long_paths.len() as u64 + p4;
        match (p2, p3, long, triangles) {
            (0, t, 1, 0) if t >= 1 => {
                let size = long_paths.first().copied().unwrap_or(4);
                Some(Self::LongPathP3s { k: size - 1, t })
            }
            (t, k, 0, 0) if k >= 2 && t >= 2 => Some(Self::P3sP2s { k, t }),
            (1, t, 0, 0) if t >= 1 => Some(Self::EdgeP3s { t }),
            (t, 1, 0, 0) if t >= 2 => Some(Self::P3Edges { t }),
            (t, 0, 1, 0) if p4 == 1 && t >= 1 => Some(Self::P4Edges { t }),
            (t, 0, 0, 1) if t >= 1 => Some(Self::TriangleEdges { t }),
            (0, t, 0, 0) if t >= 1 => Some(Self::P3s { t }),
            _ => None,
        }
    }

    pub(crate) fn value(self, n: u64) -> u64 {
        let n = n as i128;
        // (a - 1)(n - a/2) + 1, the shape shared by most of the list
        let shifted = |a: i128| half((a - 1) * (2 * n - a)) + 1;
        let v = match self {
            Self::LongPathP3s { k, t } => {
                let a = t as i128 + (k / 2) as i128;
                shifted(a) + (k % 2) as i128
            }
            Self::P3sP2s { k, t } => shifted((k + t) as i128 - 1),
            Self::EdgeP3s { t } | Self::P3Edges { t } | Self::P3s { t } => shifted(t as i128),
            Self::P4Edges { t } | Self::TriangleEdges { t } => shifted(t as i128 + 1),
        };
        to_value(v)
    }
}

/// `AR(n, H)` from the large-`n` list of Gilboa and Roditty. Values carry
/// [`super::DomainStatus::AsymptoticUnverified`]: no explicit threshold is
/// available.
pub fn ar_misc_family(pattern: &PatternSpec, n: u64) -> FormulaResult {
    match MiscFamily::classify(pattern) {
        Some(f) if pattern.vertex_count() as u64 <= n => {
            FormulaResult::asymptotic(f.value(n), Provenance::GilboaRoditty)
        }
        _ => FormulaResult::out_of_range(),
    }
}
