use super::misc::MiscFamily;
use super::thresholds::{self, at_least_ceil, at_most_floor};
use super::{ar_matching, half, to_value, FormulaResult, Provenance};

/// `AR(n, kP3 + tP2)`.
///
/// Every exact result whose domain contains `(n, k, t)` is evaluated and
/// the values are required to agree. Without an exact result the large-`n`
/// list is used.
pub fn ar_kp3_tp2(n: u64, k: u64, t: u64) -> FormulaResult {
    if k == 0 {
        return ar_matching(n, t);
    }
    if n < 3 * k + 2 * t {
        return FormulaResult::out_of_range();
    }
    let proven = proven_values(n as i128, k as i128, t as i128);
    if let Some(&(first, prov)) = proven.first() {
        for &(v, p) in &proven[1..] {
            assert_eq!(v, first, "{p} and {prov} disagree on AR({n}, {k}P3+{t}P2)");
        }
        return FormulaResult::proven(to_value(first), prov);
    }
    let family = match (k, t) {
        (k, 0) => MiscFamily::P3s { t: k },
        (k, 1) => MiscFamily::EdgeP3s { t: k },
        (1, t) => MiscFamily::P3Edges { t },
        (k, t) => MiscFamily::P3sP2s { k, t },
    };
    FormulaResult::asymptotic(family.value(n), Provenance::GilboaRoditty)
}

fn proven_values(n: i128, k: i128, t: i128) -> Vec<(i128, Provenance)> {
    let mut out = Vec::new();
    let spanning = half((3 * k + 2 * t - 3) * (3 * k + 2 * t - 4)) + 1;
    if t >= 2 && n == 2 * t + 3 * k {
        out.push((spanning, Provenance::Kp3Spanning));
    }
    if k == 1 && t >= 2 && n >= 2 * t + 3 {
        let x = thresholds::p3_he_jin(t);
        if at_most_floor(n, x) {
            out.push((t * (2 * t - 1) + 1, Provenance::P3HeJin));
        } else if at_least_ceil(n, x) {
            out.push((half((t - 1) * (2 * n - t)) + 1, Provenance::P3HeJin));
        }
    }
    if k == 2 && t >= 2 && n >= 2 * t + 7 {
        let x = thresholds::two_p3_he_jin(t);
        if at_most_floor(n, x) {
            out.push(((t + 1) * (2 * t + 3) + 1, Provenance::TwoP3HeJin));
        } else if at_least_ceil(n, x) {
            out.push((half(t * (2 * n - t - 1)) + 1, Provenance::TwoP3HeJin));
        }
    }
    // t >= (k^2 - k + 4) / 2
    if k >= 2 && 2 * t >= k * k - k + 4 && n > 3 * k + 2 * t {
        let x = thresholds::kp3_jie(k, t);
        if at_most_floor(n, x) {
            out.push((spanning, Provenance::Kp3Jie));
        } else if at_least_ceil(n, x) {
            out.push((
                half((k + t - 2) * (2 * n - k - t + 1)) + 1,
                Provenance::Kp3Jie,
            ));
        }
    }
    if k == 1 && t == 1 && n >= 5 {
        out.push((2, Provenance::P3Small));
    }
    if k == 1 && t == 2 && n >= 7 {
        out.push((n, Provenance::P3Small));
    }
    out
}
