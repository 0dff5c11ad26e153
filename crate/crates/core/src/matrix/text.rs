//! Line-oriented matrix files:
//!
//! ```text
//! field gf4
//! n 3
//! 1 z w
//! z 1 0
//! w 0 1
//! ```
//!
//! Lines starting with `#` before the `field` line are comments (the witness
//! writer puts its recipe there). Anything else that deviates is rejected
//! with a 1-based line and column.

use std::fmt;
use std::str::FromStr;

use super::SymMatrix;
use crate::error::{Error, Result};
use crate::field::Field;

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

impl SymMatrix {
    /// Renders the matrix file format. Fails only for fields without
    /// element symbols (degree 3 and up).
    pub fn to_text(&self) -> Result<String> {
        let name = self
            .field
            .name()
            .ok_or_else(|| Error::Unsupported(format!("no text format for {}", self.field)))?;
        Ok(self.to_string_unchecked(name))
    }

    fn to_string_unchecked(&self, name: &str) -> String {
        let mut out = format!("field {name}\nn {}\n", self.order);
        for i in 0..self.order {
            let row: Vec<&str> = (0..self.order)
                .map(|j| self.field.symbol(self.get(i, j)).unwrap_or("?"))
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<SymMatrix> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).peekable();
        while let Some((_, l)) = lines.peek() {
            if l.starts_with('#') {
                lines.next();
            } else {
                break;
            }
        }

        let (ln, header) = lines.next().ok_or_else(|| parse_err(1, 1, "missing `field` line"))?;
        let field = match header.strip_prefix("field ") {
            Some(name) => Field::from_name(name)
                .ok_or_else(|| parse_err(ln, 7, format!("unknown field {name:?}, expected gf2 or gf4")))?,
            None => return Err(parse_err(ln, 1, "expected `field gf2` or `field gf4`")),
        };

        let (ln, size) = lines.next().ok_or_else(|| parse_err(ln + 1, 1, "missing `n` line"))?;
        let n: usize = match size.strip_prefix("n ") {
            Some(v) if !v.is_empty() && v.bytes().all(|b| b.is_ascii_digit()) => {
                v.parse().map_err(|_| parse_err(ln, 3, format!("bad order {v:?}")))?
            }
            Some(v) => return Err(parse_err(ln, 3, format!("bad order {v:?}"))),
            None => return Err(parse_err(ln, 1, "expected `n <order>`")),
        };

        let mut grid = Vec::with_capacity(n);
        let first_row_line = ln + 1;
        let mut last = ln;
        for r in 0..n {
            let (ln, row) = lines
                .next()
                .ok_or_else(|| parse_err(last + 1, 1, format!("missing matrix row {}", r + 1)))?;
            last = ln;
            let mut entries = Vec::with_capacity(n);
            let mut col = 1;
            for (k, tok) in row.split(' ').enumerate() {
                if k >= n {
                    return Err(parse_err(ln, col, format!("row has more than {n} entries")));
                }
                let v = field
                    .parse_symbol(tok)
                    .map_err(|_| parse_err(ln, col, format!("bad entry {tok:?} for {field}")))?;
                entries.push(v);
                col += tok.len() + 1;
            }
            if entries.len() != n {
                return Err(parse_err(
                    ln,
                    row.len() + 1,
                    format!("row has {} entries, expected {n}", entries.len()),
                ));
            }
            grid.push(entries);
        }
        if let Some((ln, extra)) = lines.find(|(_, l)| !l.is_empty()) {
            return Err(parse_err(ln, 1, format!("unexpected trailing line {extra:?}")));
        }
        // An asymmetric pair is reported at its lower-triangle entry.
        SymMatrix::new(field, grid).map_err(|e| match e {
            Error::Asymmetric { row, col } => parse_err(
                first_row_line + col,
                2 * row + 1,
                format!("entry ({}, {}) differs from its mirror", col + 1, row + 1),
            ),
            other => other,
        })
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.field.name().unwrap_or("?");
        f.write_str(&self.to_string_unchecked(name))
    }
}

impl FromStr for SymMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<SymMatrix> {
        SymMatrix::from_text(s)
    }
}
