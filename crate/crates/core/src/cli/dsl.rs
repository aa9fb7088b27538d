//! The pattern language: `term ('+' term)*` with `term = [count] kind size`,
//! kind one of `P`, `C`, `K`. Blanks around terms are ignored.

use crate::model::{ComponentKind, PatternComponent, PatternSpec};
use crate::{Error, Result};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn skip_blanks(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Result<Option<usize>> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        self.text[start..self.pos]
            .parse()
            .map(Some)
            .map_err(|_| syntax(start, "number too large"))
    }
}

fn syntax(offset: usize, what: &str) -> Error {
    Error::InvalidPattern(format!("syntax error at byte {offset}: {what}"))
}

/// Parses a pattern such as `2P4+3P2` or `K4 + 2P2` into normalized form.
pub fn parse_pattern(text: &str) -> Result<PatternSpec> {
    let mut cur = Cursor { text, pos: 0 };
    let mut components = Vec::new();
    loop {
        cur.skip_blanks();
        let start = cur.pos;
        let count = cur.number()?;
        let kind = match cur.peek() {
            Some(b'P') => ComponentKind::Path,
            Some(b'C') => ComponentKind::Cycle,
            Some(b'K') => ComponentKind::Clique,
            Some(_) => return Err(syntax(cur.pos, "expected P, C or K")),
            None => return Err(syntax(cur.pos, "unexpected end of pattern")),
        };
        cur.pos += 1;
        let size = cur
            .number()?
            .ok_or_else(|| syntax(cur.pos, "expected a component size"))?;
        let count = count.unwrap_or(1);
        if count == 0 {
            return Err(Error::InvalidPattern(format!(
                "term at byte {start} has count 0"
            )));
        }
        let component = PatternComponent::new(kind, size)?;
        components.extend(std::iter::repeat_n(component, count));
        cur.skip_blanks();
        match cur.peek() {
            None => break,
            Some(b'+') => cur.pos += 1,
            Some(_) => return Err(syntax(cur.pos, "expected '+' or end of pattern")),
        }
    }
    PatternSpec::new(components)
}

/// The canonical text of a pattern; `parse_pattern(&render_pattern(p)) == p`.
pub fn render_pattern(p: &PatternSpec) -> String {
    p.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        let p = parse_pattern("3P2+2P4").unwrap();
        assert_eq!(p.to_string(), "2P4+3P2");
        assert_eq!(p.count_of(ComponentKind::Path, 4), 2);
        let p = parse_pattern(" 2P2 + K4 ").unwrap();
        assert_eq!(p.to_string(), "K4+2P2");
        assert_eq!(parse_pattern("P2+P2").unwrap().to_string(), "2P2");
    }

    #[test]
    fn semantic_errors() {
        for bad in ["P1", "C2", "K1", "0P3"] {
            assert!(
                matches!(parse_pattern(bad), Err(Error::InvalidPattern(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let cases = [
            ("", 0),
            ("P", 1),
            ("2X3", 1),
            ("P4+", 3),
            ("P4 P2", 3),
            ("P4++P2", 3),
        ];
        for (text, offset) in cases {
            match parse_pattern(text) {
                Err(Error::InvalidPattern(msg)) => {
                    assert!(msg.contains(&format!("byte {offset}")), "{text}: {msg}")
                }
                other => panic!("{text}: {other:?}"),
            }
        }
    }
}
