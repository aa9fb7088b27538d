//! Branch thresholds as exact rationals.
//!
//! A threshold is only ever compared against integer `n`, so `n <= floor(x)`
//! and `n >= ceil(x)` are evaluated on the exact value.

use num_rational::Ratio;

pub type Threshold = Ratio<i128>;

fn int(x: i128) -> Threshold {
    Threshold::from_integer(x)
}

/// `(5t - 7) / 2`: switch point of the large-`n` matching formula.
pub fn matching(t: i128) -> Threshold {
    Threshold::new(5 * t - 7, 2)
}

/// `(5t + 2) / 2 + 1 / (t - 1)` for `P3 + tP2`, `t >= 2`.
pub fn p3_he_jin(t: i128) -> Threshold {
    Threshold::new(5 * t + 2, 2) + Threshold::new(1, t - 1)
}

/// `(5t + 11) / 2 + 3 / t` for `2P3 + tP2`, `t >= 1`.
pub fn two_p3_he_jin(t: i128) -> Threshold {
    Threshold::new(5 * t + 11, 2) + Threshold::new(3, t)
}

/// `lambda = (9k + 5t - 7) / 2 + k(k+1) / (2(k + t - 2))` for `kP3 + tP2`.
pub fn kp3_jie(k: i128, t: i128) -> Threshold {
    Threshold::new(9 * k + 5 * t - 7, 2) + Threshold::new(k * (k + 1), 2 * (k + t - 2))
}

/// `n0(t) = (5t + 7) / 2 + 1 / t` for `P5 + tP2`, `t >= 1`.
pub fn p5_forest(t: i128) -> Threshold {
    Threshold::new(5 * t + 7, 2) + Threshold::new(1, t)
}

/// `n <= floor(x)`.
pub fn at_most_floor(n: i128, x: Threshold) -> bool {
    n <= x.floor().to_integer()
}

/// `n >= ceil(x)`.
pub fn at_least_ceil(n: i128, x: Threshold) -> bool {
    n >= x.ceil().to_integer()
}

/// `n <= x` on the exact rational.
pub fn le(n: i128, x: Threshold) -> bool {
    int(n) <= x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(matching(3), int(4));
        assert_eq!(matching(4), Threshold::new(13, 2));
        assert_eq!(p3_he_jin(2), int(7));
        assert_eq!(two_p3_he_jin(2), int(12));
        assert_eq!(kp3_jie(2, 3), int(14));
        assert_eq!(p5_forest(5), Threshold::new(81, 5));
        assert!(at_most_floor(16, p5_forest(5)));
        assert!(!at_least_ceil(16, p5_forest(5)));
        assert!(at_least_ceil(17, p5_forest(5)));
    }
}
