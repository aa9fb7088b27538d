use std::io::Write;
use std::path::Path;

use serde_json::json;

use super::{exit, parse_pattern, read_coloring, write_coloring, Family};
use crate::construct::{extremal_for_with, ExtremalOptions, Verification};
use crate::detect::find_rainbow;
use crate::formulas::{ar_lookup, ar_lookup_with, CycleMode, FormulaResult};
use crate::model::PatternSpec;
use crate::search::{decide_ar_at_least, exact_ar, SearchLimits, Verdict};
use crate::{Error, Result};

pub(super) struct Ctx<'a> {
    pub(super) out: &'a mut dyn Write,
    pub(super) err: &'a mut dyn Write,
    pub(super) json: bool,
}

impl Ctx<'_> {
    /// Writes `text` or `value` to standard output, depending on the format.
    fn emit(&mut self, text: &str, value: serde_json::Value) -> Result<()> {
        let r = if self.json {
            writeln!(self.out, "{value}")
        } else {
            writeln!(self.out, "{text}")
        };
        r.map_err(|e| Error::Io(e.to_string()))
    }

    fn note(&mut self, text: &str) {
        let _ = writeln!(self.err, "{text}");
    }
}

pub(super) fn formula(ctx: &mut Ctx, pattern: &str, n: u64, mode: CycleMode) -> Result<i32> {
    let p = parse_pattern(pattern)?;
    let r = ar_lookup_with(&p, n, mode);
    ctx.emit(
        &r.to_string(),
        json!({ "pattern": p.to_string(), "n": n, "result": r }),
    )?;
    Ok(if r.value.is_some() {
        exit::OK
    } else {
        exit::NO_VALUE
    })
}

pub(super) fn construct(
    ctx: &mut Ctx,
    pattern: &str,
    n: usize,
    out: &Path,
    opts: ExtremalOptions,
    allow_skip: bool,
) -> Result<i32> {
    let p = parse_pattern(pattern)?;
    let report = match extremal_for_with(n, &p, opts) {
        Ok(r) => r,
        Err(e @ Error::NotConstructible { .. }) => {
            ctx.note(&format!("error: {e}"));
            return Ok(exit::NOT_CONSTRUCTIBLE);
        }
        Err(e @ Error::InvalidConstruction(_)) => {
            ctx.note(&format!("error: {e}"));
            return Ok(exit::CONSTRUCTION_FAILED);
        }
        Err(e) => return Err(e),
    };
    write_coloring(out, &report.coloring)?;
    ctx.emit(
        &format!(
            "{} colors ({}), {}",
            report.claimed_colors, report.kind, report.verified
        ),
        json!({
            "pattern": p.to_string(),
            "n": n,
            "colors": report.claimed_colors,
            "construction": report.kind,
            "verified": report.verified,
            "out": out.display().to_string(),
        }),
    )?;
    Ok(match report.verified {
        Verification::Verified => exit::OK,
        Verification::Failed => {
            ctx.note("error: the construction contains a rainbow copy");
            exit::CONSTRUCTION_FAILED
        }
        Verification::Skipped if allow_skip => exit::OK,
        Verification::Skipped => {
            ctx.note(&format!(
                "verification skipped: n = {n} is above the verify bound {}; pass --allow-skip to accept",
                opts.verify_bound
            ));
            exit::INCONCLUSIVE
        }
    })
}

pub(super) fn detect(
    ctx: &mut Ctx,
    coloring: &Path,
    pattern: &str,
    budget: Option<u64>,
) -> Result<i32> {
    let c = read_coloring(coloring)?;
    let p = parse_pattern(pattern)?;
    let r = find_rainbow(&c, &p, budget)?;
    let text = match (&r.witness, r.exhausted) {
        (Some(w), _) => format!("rainbow {p}: {w}"),
        (None, true) => format!("no rainbow {p} ({} nodes)", r.nodes_explored),
        (None, false) => format!("inconclusive after {} nodes", r.nodes_explored),
    };
    ctx.emit(&text, json!({ "pattern": p.to_string(), "outcome": r }))?;
    Ok(match (&r.witness, r.exhausted) {
        (Some(_), _) => exit::OK,
        (None, true) => exit::NO_RAINBOW,
        (None, false) => exit::INCONCLUSIVE,
    })
}

pub(super) fn search(
    ctx: &mut Ctx,
    pattern: &str,
    n: usize,
    at_least: Option<usize>,
    tasks: usize,
    budget: Option<u64>,
    out: Option<&Path>,
) -> Result<i32> {
    let p = parse_pattern(pattern)?;
    let limits = SearchLimits { budget, tasks };
    if let Some(m) = at_least {
        let d = decide_ar_at_least(n, &p, m, limits)?;
        let (text, code) = match &d.verdict {
            Verdict::Witness(c) => {
                if let Some(path) = out {
                    write_coloring(path, c)?;
                }
                (
                    format!(
                        "AR({n}, {p}) >= {m}: witness with {} colors",
                        c.color_count()
                    ),
                    exit::OK,
                )
            }
            Verdict::Refuted => (format!("AR({n}, {p}) < {m}: refuted"), exit::OK),
            Verdict::Inconclusive => (
                format!("AR({n}, {p}) >= {m}: inconclusive"),
                exit::INCONCLUSIVE,
            ),
        };
        ctx.emit(
            &format!("{text}\n{}", d.stats),
            json!({ "pattern": p.to_string(), "n": n, "at_least": m, "decision": d }),
        )?;
        return Ok(code);
    }
    let r = exact_ar(n, &p, limits)?;
    if let (Some(path), Some(c)) = (out, &r.witness_coloring) {
        write_coloring(path, c)?;
    }
    let text = if r.exhausted {
        format!("AR({n}, {p}) = {} (exhausted)\n{}", r.value, r.stats)
    } else {
        format!("AR({n}, {p}) >= {} (inconclusive)\n{}", r.value, r.stats)
    };
    ctx.emit(
        &text,
        json!({ "pattern": p.to_string(), "n": n, "result": r }),
    )?;
    Ok(if r.exhausted {
        exit::OK
    } else {
        exit::INCONCLUSIVE
    })
}

fn show(v: Option<usize>) -> String {
    v.map_or_else(|| "n/a".to_string(), |v| v.to_string())
}

pub(super) fn verify(
    ctx: &mut Ctx,
    pattern: &str,
    n: usize,
    mode: CycleMode,
    tasks: usize,
    budget: Option<u64>,
) -> Result<i32> {
    let p = parse_pattern(pattern)?;
    let f = ar_lookup_with(&p, n as u64, mode);
    let formula = f.value.filter(|_| f.is_proven()).map(|v| v as usize);
    let s = exact_ar(n, &p, SearchLimits { budget, tasks })?;
    let searched = s.exhausted.then_some(s.value);
    let built = extremal_for_with(n, &p, ExtremalOptions::default()).ok();
    let construction = built
        .as_ref()
        .filter(|r| r.verified == Verification::Verified)
        .map(|r| r.claimed_colors);
    let failed = built
        .as_ref()
        .is_some_and(|r| r.verified == Verification::Failed);

    let values: Vec<usize> = [formula, searched, construction]
        .into_iter()
        .flatten()
        .collect();
    let agree = !failed && values.windows(2).all(|w| w[0] == w[1]);
    let detail = format!(
        "formula {}, search {}, construction {}",
        if formula.is_some() {
            show(formula)
        } else {
            format!("n/a ({f})")
        },
        if s.exhausted {
            show(searched)
        } else {
            format!(">= {} (inconclusive)", s.value)
        },
        match (&built, construction) {
            (_, Some(v)) => v.to_string(),
            (Some(r), None) => format!("{} ({})", r.claimed_colors, r.verified),
            (None, None) => "n/a".to_string(),
        }
    );
    let (verdict, code) = if !agree {
        ("mismatch", exit::MISMATCH)
    } else if !s.exhausted {
        ("inconclusive", exit::INCONCLUSIVE)
    } else {
        ("agree", exit::OK)
    };
    ctx.emit(
        &format!("{verdict}: {detail}"),
        json!({
            "pattern": p.to_string(),
            "n": n,
            "verdict": verdict,
            "formula": f,
            "search": s.exhausted.then_some(s.value),
            "search_lower_bound": s.value,
            "construction": built.as_ref().map(|r| json!({
                "colors": r.claimed_colors,
                "verified": r.verified,
            })),
        }),
    )?;
    if code == exit::MISMATCH && mode == CycleMode::AsPrinted {
        let corrected = ar_lookup_with(&p, n as u64, CycleMode::OracleCorrected);
        if corrected != f {
            ctx.note(&format!(
                "note: the corrected cycle formula gives {corrected}"
            ));
        }
    }
    Ok(code)
}

fn family_patterns(family: Family, n: u64) -> Vec<PatternSpec> {
    let n = n as usize;
    let mut out = Vec::new();
    match family {
        Family::Matching => {
            for t in 2..=n / 2 {
                out.extend(PatternSpec::kp4_tp2(0, t));
            }
        }
        Family::Kp4tp2 => {
            for k in 1..=n / 4 {
                for t in 0..=(n - 4 * k) / 2 {
                    out.extend(PatternSpec::kp4_tp2(k, t));
                }
            }
        }
        Family::Kp3tp2 => {
            for k in 1..=n / 3 {
                for t in 0..=(n - 3 * k) / 2 {
                    out.extend(kp3_tp2(k, t));
                }
            }
        }
        Family::P5tp2 => {
            if n >= 5 {
                for t in 0..=(n - 5) / 2 {
                    out.extend(p5_tp2(t));
                }
            }
        }
    }
    out
}

fn kp3_tp2(k: usize, t: usize) -> Result<PatternSpec> {
    use crate::model::ComponentKind::Path;
    PatternSpec::from_groups(&[(Path, 3, k), (Path, 2, t)])
}

fn p5_tp2(t: usize) -> Result<PatternSpec> {
    use crate::model::ComponentKind::Path;
    PatternSpec::from_groups(&[(Path, 5, 1), (Path, 2, t)])
}

pub(super) fn table(ctx: &mut Ctx, family: Family, max_n: u64) -> Result<i32> {
    let mut text = String::from("n\tpattern\tvalue\tstatus\tprovenance");
    let mut rows = Vec::new();
    for n in 2..=max_n {
        for p in family_patterns(family, n) {
            let r: FormulaResult = ar_lookup(&p, n);
            text.push_str(&format!(
                "\n{n}\t{p}\t{}\t{}\t{}",
                r.value.map_or_else(|| "-".to_string(), |v| v.to_string()),
                r.status,
                r.provenance
                    .map_or_else(|| "-".to_string(), |p| p.to_string()),
            ));
            rows.push(json!({ "n": n, "pattern": p.to_string(), "result": r }));
        }
    }
    ctx.emit(&text, serde_json::Value::Array(rows))?;
    Ok(exit::OK)
}
