use serde::{Deserialize, Serialize};

use super::{choose2, to_value, FormulaResult, Provenance};
use crate::{Error, Result};

/// Which form of the cycle formula to evaluate.
///
/// `AsPrinted` is the expression as it is usually quoted; exhaustive search
/// shows it overshoots by one (e.g. it gives 4 for `C3` on `K4`, whose true
/// value is 3). `OracleCorrected` subtracts that one and is the default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleMode {
    AsPrinted,
    #[default]
    OracleCorrected,
}

/// `AR(n, C_l)` for `n >= l >= 3`.
pub fn ar_cycle(n: u64, l: u64, mode: CycleMode) -> Result<FormulaResult> {
    if l < 3 {
        return Err(Error::InvalidPattern(format!("C{l} is not a cycle")));
    }
    if n < l {
        return Ok(FormulaResult::out_of_range());
    }
    let (n, l) = (n as i128, l as i128);
    let d = l - 1;
    let printed = choose2(d) * (n / d) + (n + d - 1) / d + choose2(n % d);
    let value = match mode {
        CycleMode::AsPrinted => printed,
        CycleMode::OracleCorrected => printed - 1,
    };
    Ok(FormulaResult::proven(
        to_value(value),
        Provenance::CycleMontellanoNeumannLara,
    ))
}
