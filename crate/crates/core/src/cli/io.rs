//! The coloring file format.
//!
//! ```text
//! antiramsey-coloring v1
//! n 4 colors 3
//! 0 1 0
//! 0 2 1
//! ...
//! ```
//!
//! One line per edge `u v c` with `u < v`, written in colex order. Lines
//! starting with `#` are comments.

use std::fmt::Write as _;
use std::path::Path;

use crate::model::{colex, edge_count, endpoints_unchecked, Coloring};
use crate::{Error, Result};

pub const HEADER: &str = "antiramsey-coloring v1";

/// Largest host a coloring file may declare.
pub const MAX_FILE_N: usize = 4096;

pub fn serialize_coloring(c: &Coloring) -> String {
    let mut s = String::with_capacity(16 * c.colors().len() + 64);
    s.push_str(HEADER);
    s.push('\n');
    let _ = writeln!(s, "n {} colors {}", c.n(), c.color_count());
    for (e, col) in c.colors().iter().enumerate() {
        let (u, v) = endpoints_unchecked(e);
        let _ = writeln!(s, "{u} {v} {col}");
    }
    s
}

fn malformed(line: usize, what: impl std::fmt::Display) -> Error {
    Error::InvalidColoring(format!("line {line}: {what}"))
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    match lines.next() {
        Some((_, HEADER)) => {}
        Some((no, other)) => {
            return Err(malformed(
                no,
                format!("expected `{HEADER}`, found `{other}`"),
            ))
        }
        None => return Err(Error::InvalidColoring("empty file".into())),
    }
    let (no, sizes) = lines
        .next()
        .ok_or_else(|| Error::InvalidColoring("missing `n <n> colors <m>` line".into()))?;
    let fields: Vec<&str> = sizes.split_whitespace().collect();
    let (n, m) = match fields.as_slice() {
        ["n", n, "colors", m] => (
            n.parse::<usize>()
                .map_err(|_| malformed(no, "bad vertex count"))?,
            m.parse::<usize>()
                .map_err(|_| malformed(no, "bad color count"))?,
        ),
        _ => return Err(malformed(no, "expected `n <n> colors <m>`")),
    };
    if n > MAX_FILE_N {
        return Err(malformed(no, format!("n = {n} exceeds {MAX_FILE_N}")));
    }

    let edges = edge_count(n);
    let mut colors = vec![u32::MAX; edges];
    let mut seen = 0usize;
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v, c] = fields.as_slice() else {
            return Err(malformed(no, "expected `<u> <v> <color>`"));
        };
        let parse = |s: &str, what: &str| {
            s.parse::<usize>()
                .map_err(|_| malformed(no, format!("bad {what} `{s}`")))
        };
        let (u, v, c) = (parse(u, "vertex")?, parse(v, "vertex")?, parse(c, "color")?);
        if u >= v || v >= n {
            return Err(malformed(no, format!("edge ({u}, {v}) needs u < v < {n}")));
        }
        if c >= m {
            return Err(malformed(no, format!("color {c} not below {m}")));
        }
        let e = colex(u, v);
        if colors[e] != u32::MAX {
            return Err(malformed(no, format!("duplicate edge ({u}, {v})")));
        }
        colors[e] = c as u32;
        seen += 1;
    }
    if seen != edges {
        let missing = colors.iter().position(|&c| c == u32::MAX).unwrap_or(0);
        let (u, v) = endpoints_unchecked(missing);
        return Err(Error::InvalidColoring(format!(
            "expected {edges} edges, found {seen}; missing edge ({u}, {v})"
        )));
    }
    let mut used = vec![false; m];
    for &c in &colors {
        used[c as usize] = true;
    }
    if let Some(unused) = used.iter().position(|&u| !u) {
        return Err(Error::InvalidColoring(format!(
            "color {unused} of {m} is never used"
        )));
    }
    Ok(Coloring::from_parts(n, colors, m))
}

pub fn read_coloring(path: impl AsRef<Path>) -> Result<Coloring> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_coloring(&text)
}

pub fn write_coloring(path: impl AsRef<Path>, c: &Coloring) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, serialize_coloring(c))
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
