use super::thresholds::{self, at_least_ceil, at_most_floor};
use super::{ar_matching, choose2, to_value, FormulaResult, Provenance};
use crate::{Error, Result};

/// `AR(n, kP4 + tP2)`.
///
/// Cases are tried in order: pure matchings; a single `P4`; `kP4` on
/// `K_{4k}`; then the three reductions to the matching `(2k+t)P2`
/// (`k = 1` with `n >= 2t+4`, the spanning case `n = 4k+2t`, and
/// `t >= k+1 >= 2` with `n >= 8k+2t-4`).
pub fn ar_kp4_tp2(n: u64, k: u64, t: u64) -> FormulaResult {
    if k == 0 {
        return ar_matching(n, t);
    }
    let (ni, ki, ti) = (n as i128, k as i128, t as i128);
    if t == 0 {
        if k == 1 {
            return match n {
                4 => FormulaResult::proven(3, Provenance::P4Small),
                n if n >= 5 => FormulaResult::proven(2, Provenance::P4Small),
                _ => FormulaResult::out_of_range(),
            };
        }
        if ni == 4 * ki {
            let v = (2 * ki - 1) * (4 * ki - 3) + 1;
            return FormulaResult::proven(to_value(v), Provenance::Kp4Spanning);
        }
        return FormulaResult::out_of_range();
    }
    let reduced = || ar_matching(n, 2 * k + t);
    if k == 1 && ni >= 2 * ti + 4 {
        return reduced().attributed(Provenance::P4Reduction);
    }
    if ni == 4 * ki + 2 * ti {
        return reduced().attributed(Provenance::Kp4ReductionSpanning);
    }
    if ti > ki && ni >= 8 * ki + 2 * ti - 4 {
        return reduced().attributed(Provenance::Kp4ReductionLargeN);
    }
    FormulaResult::out_of_range()
}

/// `AR(n, P_l)`.
///
/// `P2` is exact (0) and `P4` is exact from `n >= 4`; other lengths use the
/// large-`n` path formula, which has no explicit threshold.
pub fn ar_path(n: u64, l: u64) -> Result<FormulaResult> {
    if l < 2 {
        return Err(Error::InvalidPattern(format!(
            "P{l} has fewer than 2 vertices"
        )));
    }
    if n < l {
        return Ok(FormulaResult::out_of_range());
    }
    match l {
        2 => return Ok(FormulaResult::proven(0, Provenance::SingleEdge)),
        4 => return Ok(ar_kp4_tp2(n, 1, 0)),
        _ => {}
    }
    let (n, l) = (n as i128, l as i128);
    let q = (l - 1) / 2;
    let eps = i128::from(l % 2 == 0);
    let v = choose2(q) + (q - 1) * (n - q + 1) + 1 + eps;
    Ok(FormulaResult::asymptotic(
        to_value(v),
        Provenance::PathSimonovitsSos,
    ))
}

/// `AR(n, P5 + tP2)`; `t = 0` falls back to [`ar_path`].
pub fn ar_p5_tp2(n: u64, t: u64) -> FormulaResult {
    if t == 0 {
        return ar_path(n, 5).expect("P5 is a valid path");
    }
    let (n, t) = (n as i128, t as i128);
    let large = || t * (n - t) + choose2(t) + 1;
    let v = if t == 1 && n >= 7 {
        n + 1
    } else if (2..=4).contains(&t) && n >= 2 * t + 6 {
        large()
    } else if t >= 5 && n >= 2 * t + 6 && at_most_floor(n, thresholds::p5_forest(t)) {
        (t + 1) * (2 * t + 1) + 1
    } else if t >= 5 && at_least_ceil(n, thresholds::p5_forest(t)) {
        large()
    } else {
        return FormulaResult::out_of_range();
    };
    FormulaResult::proven(to_value(v), Provenance::P5Forest)
}

/// `AR(n, F)` for a linear forest `F` with component orders `parts`, at
/// least two components and at least one of even order. Valid for large `n`;
/// the spanning case `n = sum(parts)` is excluded.
pub fn ar_linear_forest(n: u64, parts: &[u64]) -> Result<FormulaResult> {
    if let Some(p) = parts.iter().find(|&&p| p < 2) {
        return Err(Error::InvalidPattern(format!(
            "P{p} has fewer than 2 vertices"
        )));
    }
    let evens = parts.iter().filter(|&&p| p % 2 == 0).count();
    let order: u64 = parts.iter().sum();
    if parts.len() < 2 || evens == 0 || n <= order {
        return Ok(FormulaResult::out_of_range());
    }
    let s: i128 = parts.iter().map(|&p| (p / 2) as i128).sum();
    let n = n as i128;
    let eps = i128::from(evens == 1);
    let v = choose2(s - 2) + (s - 2) * (n - s + 2) + 1 + eps;
    Ok(FormulaResult::asymptotic(
        to_value(v),
        Provenance::LinearForestXie,
    ))
}
