//! Extremal colorings: many colors, no rainbow copy of the target pattern.
//!
//! Each generator is checked against its color-count identity; the reports
//! from [`extremal_for`] are additionally certified rainbow-free by the
//! detector when the host is small enough.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::detect::find_rainbow;
use crate::formulas::{ar_lookup, thresholds};
use crate::model::{
    choose2, edge_count, endpoints_unchecked, Coloring, ComponentKind, PatternSpec,
};
use crate::{Error, Result};

/// Default largest `n` at which constructions are verified.
pub const DEFAULT_VERIFY_BOUND: usize = 12;

/// Rainbow `K_m` on vertices `0..m`, every other edge in one extra color.
pub fn rainbow_clique_plus_one(n: usize, m: usize) -> Result<Coloring> {
    if m < 2 || m >= n {
        return Err(Error::InvalidConstruction(format!(
            "rainbow clique on {m} of {n} vertices needs 2 <= m < n"
        )));
    }
    let inner = choose2(m);
    // colex order lists the edges inside 0..m first
    let colors = (0..edge_count(n))
        .map(|e| if e < inner { e as u32 } else { inner as u32 })
        .collect();
    let c = Coloring::from_parts(n, colors, inner + 1);
    debug_assert_eq!(c.validate(), Ok(()));
    Ok(c)
}

/// Distinct colors on every edge meeting `0..s`, one shared color on the
/// edges inside `s..n`.
pub fn cover_rainbow_plus_one(n: usize, s: usize) -> Result<Coloring> {
    if s < 1 || s + 2 > n {
        return Err(Error::InvalidConstruction(format!(
            "cover set of size {s} on {n} vertices needs 1 <= s <= n - 2"
        )));
    }
    let mut next = 0u32;
    let mut colors = vec![u32::MAX; edge_count(n)];
    for (e, slot) in colors.iter_mut().enumerate() {
        let (u, _) = endpoints_unchecked(e);
        if u < s {
            *slot = next;
            next += 1;
        }
    }
    for slot in colors.iter_mut().filter(|c| **c == u32::MAX) {
        *slot = next;
    }
    let c = Coloring::from_parts(n, colors, next as usize + 1);
    debug_assert_eq!(c.color_count(), choose2(s) + s * (n - s) + 1);
    debug_assert_eq!(c.validate(), Ok(()));
    Ok(c)
}

/// One color per perfect matching of the round-robin 1-factorization of
/// `K_n`, `n` even.
pub fn matching_classes(n: usize) -> Result<Coloring> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidConstruction(format!(
            "a 1-factorization needs even n >= 4, got {n}"
        )));
    }
    let m = n - 1;
    let mut colors = vec![0u32; edge_count(n)];
    for round in 0..m {
        colors[crate::model::colex(round, m)] = round as u32;
        for i in 1..n / 2 {
            let a = (round + i) % m;
            let b = (round + m - i) % m;
            colors[crate::model::colex(a, b)] = round as u32;
        }
    }
    let c = Coloring::from_parts(n, colors, m);
    debug_assert_eq!(c.validate(), Ok(()));
    Ok(c)
}

/// Rainbow `K_{2t-3}` plus two colors for the spanning matching `tP2`
/// (`n = 2t`). With `x, y, z` the three outside vertices, color A goes to
/// the edges from `x` into the clique and to `yz`; color B to all other
/// outside edges. A perfect matching either uses three edges leaving the
/// clique or the pair (`yz`, `x`-clique) / (`xy`, `z`-clique) /
/// (`xz`, `y`-clique), and each option repeats a color.
pub fn clique_plus_two(n: usize) -> Result<Coloring> {
    if n % 2 == 1 || n < 6 {
        return Err(Error::InvalidConstruction(format!(
            "clique-plus-two needs even n >= 6, got {n}"
        )));
    }
    let m = n - 3;
    let inner = choose2(m);
    let (a, b) = (inner as u32, inner as u32 + 1);
    let (x, y, z) = (m, m + 1, m + 2);
    let colors = (0..edge_count(n))
        .map(|e| {
            let (u, v) = endpoints_unchecked(e);
            if v < m {
                e as u32
            } else if (v == x && u < m) || (u, v) == (y, z) {
                a
            } else {
                b
            }
        })
        .collect();
    let c = Coloring::from_parts(n, colors, inner + 2);
    debug_assert_eq!(c.validate(), Ok(()));
    Ok(c)
}

/// Outcome of the self-check of a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verification {
    /// The detector exhausted its search without finding a rainbow copy.
    Verified,
    /// The detector found a rainbow copy: the construction is wrong.
    Failed,
    /// `n` exceeded the verification bound.
    Skipped,
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verification::Verified => "verified",
            Verification::Failed => "failed",
            Verification::Skipped => "skipped",
        })
    }
}

/// Which generator produced a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionKind {
    Monochromatic,
    RainbowCliquePlusOne,
    CoverRainbowPlusOne,
    MatchingClasses,
    CliquePlusTwo,
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstructionKind::Monochromatic => "monochromatic",
            ConstructionKind::RainbowCliquePlusOne => "rainbow-clique-plus-one",
            ConstructionKind::CoverRainbowPlusOne => "cover-rainbow-plus-one",
            ConstructionKind::MatchingClasses => "matching-classes",
            ConstructionKind::CliquePlusTwo => "clique-plus-two",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub coloring: Coloring,
    pub claimed_colors: usize,
    pub verified: Verification,
    pub target_pattern: PatternSpec,
    pub kind: ConstructionKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalOptions {
    /// Verify with the detector when `n <= verify_bound`.
    pub verify_bound: usize,
    /// Allow [`clique_plus_two`] for spanning matchings with `t >= 7`.
    pub spanning_two_colors: bool,
}

impl Default for ExtremalOptions {
    fn default() -> Self {
        Self {
            verify_bound: DEFAULT_VERIFY_BOUND,
            spanning_two_colors: false,
        }
    }
}

/// [`extremal_for_with`] with default options.
pub fn extremal_for(n: usize, p: &PatternSpec) -> Result<ConstructionReport> {
    extremal_for_with(n, p, ExtremalOptions::default())
}

/// A coloring of `K_n` with `AR(n, p)` colors and no rainbow `p`, for the
/// patterns whose proven value has a known matching construction.
pub fn extremal_for_with(
    n: usize,
    p: &PatternSpec,
    opts: ExtremalOptions,
) -> Result<ConstructionReport> {
    let not_constructible = || Error::NotConstructible {
        pattern: p.to_string(),
        n,
    };
    let lookup = ar_lookup(p, n as u64);
    let claimed = match lookup.value {
        Some(v) if lookup.is_proven() => v as usize,
        _ => return Err(not_constructible()),
    };
    let (kind, coloring) = choose(n, p, opts).ok_or_else(not_constructible)?;
    if coloring.color_count() != claimed {
        return Err(Error::InvalidConstruction(format!(
            "{kind} gives {} colors but AR({n}, {p}) = {claimed}",
            coloring.color_count()
        )));
    }
    let verified = if n <= opts.verify_bound {
        if find_rainbow(&coloring, p, None)?.is_rainbow_free() {
            Verification::Verified
        } else {
            Verification::Failed
        }
    } else {
        Verification::Skipped
    };
    Ok(ConstructionReport {
        coloring,
        claimed_colors: claimed,
        verified,
        target_pattern: p.clone(),
        kind,
    })
}

fn choose(
    n: usize,
    p: &PatternSpec,
    opts: ExtremalOptions,
) -> Option<(ConstructionKind, Coloring)> {
    let count = p.components().len();
    let p4 = p.count_of(ComponentKind::Path, 4);
    let p2 = p.count_of(ComponentKind::Path, 2) + p.count_of(ComponentKind::Clique, 2);
    if p4 + p2 != count {
        return None;
    }
    let (k, t) = (p4, p2);
    match (k, t) {
        (1, 0) if n == 4 => Some((ConstructionKind::MatchingClasses, matching_classes(4).ok()?)),
        (1, 0) if n >= 5 => Some((
            ConstructionKind::RainbowCliquePlusOne,
            rainbow_clique_plus_one(n, 2).ok()?,
        )),
        (k, 0) if k >= 2 && n == 4 * k => Some((
            ConstructionKind::RainbowCliquePlusOne,
            rainbow_clique_plus_one(n, 4 * k - 2).ok()?,
        )),
        (0, t) => matching_construction(n, t, opts),
        // the reductions to (2k + t)P2: a coloring without a rainbow
        // (2k + t)P2 has no rainbow kP4 + tP2 either
        (k, t) => matching_construction(n, 2 * k + t, opts),
    }
}

/// Extremal coloring for the matching `tP2`.
fn matching_construction(
    n: usize,
    t: usize,
    opts: ExtremalOptions,
) -> Option<(ConstructionKind, Coloring)> {
    if t < 2 || n < 2 * t {
        return None;
    }
    if n == 2 * t {
        return match t {
            2 => Some((ConstructionKind::MatchingClasses, matching_classes(4).ok()?)),
            3..=6 => Some((
                ConstructionKind::CoverRainbowPlusOne,
                cover_rainbow_plus_one(n, t - 2).ok()?,
            )),
            t if t >= 7 && opts.spanning_two_colors => {
                Some((ConstructionKind::CliquePlusTwo, clique_plus_two(n).ok()?))
            }
            _ => None,
        };
    }
    if t == 2 {
        return Some((ConstructionKind::Monochromatic, Coloring::monochromatic(n)));
    }
    if thresholds::le(n as i128, thresholds::matching(t as i128)) {
        Some((
            ConstructionKind::RainbowCliquePlusOne,
            rainbow_clique_plus_one(n, 2 * t - 3).ok()?,
        ))
    } else {
        Some((
            ConstructionKind::CoverRainbowPlusOne,
            cover_rainbow_plus_one(n, t - 2).ok()?,
        ))
    }
}
