//! Closed-form anti-Ramsey values with validity domains and provenance.
//!
//! Every evaluator is a pure function of its arguments. Results never panic
//! on out-of-domain input; they come back with [`DomainStatus::OutOfRange`]
//! instead. Thresholds are compared as exact rationals.

mod cycle;
mod forests;
mod kp3;
mod lookup;
mod matching;
mod misc;
pub mod thresholds;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use cycle::{ar_cycle, CycleMode};
pub use forests::{ar_kp4_tp2, ar_linear_forest, ar_p5_tp2, ar_path};
pub use kp3::ar_kp3_tp2;
pub use lookup::{ar_lookup, ar_lookup_with};
pub use matching::ar_matching;
pub use misc::ar_misc_family;

/// How much a returned value can be trusted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainStatus {
    /// Exact value inside a domain with an explicit bound.
    Proven,
    /// Valid "for sufficiently large n" without an explicit threshold.
    AsymptoticUnverified,
    OutOfRange,
    /// The formula depends on a constant that is not available here.
    UnknownConstant,
}

impl fmt::Display for DomainStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DomainStatus::Proven => "proven",
            DomainStatus::AsymptoticUnverified => "asymptotic_unverified",
            DomainStatus::OutOfRange => "out_of_range",
            DomainStatus::UnknownConstant => "unknown_constant",
        })
    }
}

/// Which published result a value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// `AR(n, P2) = 0`: any colored edge is a rainbow `P2`.
    SingleEdge,
    /// `tP2` with `n >= 2t + 1` (Chen et al.; Fujita et al.).
    MatchingLargeN,
    /// `tP2` with `n = 2t` (Haas and Young).
    MatchingSpanning,
    /// `P4` and `P4 + P2` (Bialostocki et al.).
    P4Small,
    /// `P3 + P2` and `P3 + 2P2` (Bialostocki et al.).
    P3Small,
    /// `kP4 + tP2 -> (2k+t)P2` for `t >= k+1 >= 2`, `n >= 8k+2t-4`.
    Kp4ReductionLargeN,
    /// `kP4 + tP2 -> (2k+t)P2` for `k, t >= 1`, `n = 4k+2t`.
    Kp4ReductionSpanning,
    /// `P4 + tP2 -> (t+2)P2` for `t >= 1`, `n >= 2t+4`.
    P4Reduction,
    /// `kP4` on `K_{4k}`: `(2k-1)(4k-3) + 1`.
    Kp4Spanning,
    /// Paths for large `n` (Simonovits and Sós).
    PathSimonovitsSos,
    /// Cycles (Montellano-Ballesteros and Neumann-Lara).
    CycleMontellanoNeumannLara,
    /// `P3 + tP2` (He and Jin).
    P3HeJin,
    /// `2P3 + tP2` (He and Jin).
    TwoP3HeJin,
    /// `kP3 + tP2` (Jie et al.).
    Kp3Jie,
    /// Spanning `kP3 + tP2`, `n = 2t + 3k`.
    Kp3Spanning,
    /// Large-`n` list of Gilboa and Roditty.
    GilboaRoditty,
    /// `P5 + tP2`.
    P5Forest,
    /// Linear forests with an even component (Xie et al.).
    LinearForestXie,
    /// `K4 + tP2` (Jin and Gu).
    K4JinGu,
}

impl Provenance {
    pub fn label(self) -> &'static str {
        match self {
            Provenance::SingleEdge => "single-edge",
            Provenance::MatchingLargeN => "matching-large-n",
            Provenance::MatchingSpanning => "matching-spanning",
            Provenance::P4Small => "p4-bialostocki",
            Provenance::P3Small => "p3-bialostocki",
            Provenance::Kp4ReductionLargeN => "kp4-reduction-large-n",
            Provenance::Kp4ReductionSpanning => "kp4-reduction-spanning",
            Provenance::P4Reduction => "p4-reduction",
            Provenance::Kp4Spanning => "kp4-spanning",
            Provenance::PathSimonovitsSos => "path-simonovits-sos",
            Provenance::CycleMontellanoNeumannLara => "cycle-montellano-neumann-lara",
            Provenance::P3HeJin => "p3-he-jin",
            Provenance::TwoP3HeJin => "2p3-he-jin",
            Provenance::Kp3Jie => "kp3-jie",
            Provenance::Kp3Spanning => "kp3-spanning",
            Provenance::GilboaRoditty => "gilboa-roditty",
            Provenance::P5Forest => "p5-forest",
            Provenance::LinearForestXie => "linear-forest-xie",
            Provenance::K4JinGu => "k4-jin-gu",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A formula evaluation: `value` is present iff the status is
/// [`DomainStatus::Proven`] or [`DomainStatus::AsymptoticUnverified`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FormulaResult {
    pub value: Option<u64>,
    pub provenance: Option<Provenance>,
    pub status: DomainStatus,
}

impl FormulaResult {
    pub fn proven(value: u64, provenance: Provenance) -> Self {
        Self {
            value: Some(value),
            provenance: Some(provenance),
            status: DomainStatus::Proven,
        }
    }

    pub fn asymptotic(value: u64, provenance: Provenance) -> Self {
        Self {
            value: Some(value),
            provenance: Some(provenance),
            status: DomainStatus::AsymptoticUnverified,
        }
    }

    pub fn out_of_range() -> Self {
        Self {
            value: None,
            provenance: None,
            status: DomainStatus::OutOfRange,
        }
    }

    pub fn unknown_constant(provenance: Provenance) -> Self {
        Self {
            value: None,
            provenance: Some(provenance),
            status: DomainStatus::UnknownConstant,
        }
    }

    pub fn is_proven(&self) -> bool {
        self.status == DomainStatus::Proven
    }

    /// Same value and status, attributed to `provenance`.
    pub(crate) fn attributed(self, provenance: Provenance) -> Self {
        if self.value.is_some() {
            Self {
                provenance: Some(provenance),
                ..self
            }
        } else {
            self
        }
    }
}

impl fmt::Display for FormulaResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.value, self.provenance) {
            (Some(v), Some(p)) => write!(f, "{v} ({p}, {})", self.status),
            (None, Some(p)) => write!(f, "{} ({p})", self.status),
            _ => write!(f, "{}", self.status),
        }
    }
}

/// Exact `x / 2`; the formulas only ever halve even numbers.
pub(crate) fn half(x: i128) -> i128 {
    assert!(x % 2 == 0, "odd numerator {x} in an exact halving");
    x / 2
}

pub(crate) fn choose2(x: i128) -> i128 {
    if x < 2 {
        0
    } else {
        x * (x - 1) / 2
    }
}

pub(crate) fn to_value(x: i128) -> u64 {
    u64::try_from(x).unwrap_or_else(|_| panic!("formula produced {x}, not a non-negative u64"))
}
