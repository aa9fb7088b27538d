use super::thresholds::{self, le};
use super::{half, to_value, FormulaResult, Provenance};

/// `AR(n, tP2)`.
///
/// `t = 1` is 0 (every colored edge is a rainbow `P2`), `n = 2t` uses the
/// spanning formula and `n >= 2t + 1` the two-branch large-`n` formula.
pub fn ar_matching(n: u64, t: u64) -> FormulaResult {
    let (n, t) = (n as i128, t as i128);
    if t == 0 || n < 2 * t {
        return FormulaResult::out_of_range();
    }
    if t == 1 {
        return FormulaResult::proven(0, Provenance::SingleEdge);
    }
    let value = if n == 2 * t {
        let v = match t {
            2 => 3,
            3..=6 => half((t - 2) * (3 * t + 1)) + 1,
            _ => (t - 2) * (2 * t - 3) + 2,
        };
        return FormulaResult::proven(to_value(v), Provenance::MatchingSpanning);
    } else if le(n, thresholds::matching(t)) {
        (t - 2) * (2 * t - 3) + 1
    } else {
        half((t - 2) * (2 * n - t + 1)) + 1
    };
    FormulaResult::proven(to_value(value), Provenance::MatchingLargeN)
}
