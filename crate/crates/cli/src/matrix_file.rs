//! The `q=<int> rank=<int>` matrix file format.
//!
//! ```text
//! # trefoil
//! q=1 rank=2
//! -1 0
//! 1 -1
//! ```
//!
//! Lines whose first non-blank character is `#` and blank lines are ignored.

use std::fmt;

use knotforms::seifert::SeifertMatrix;
use knotforms::{Int, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn header_field<T: std::str::FromStr>(tok: Option<&str>, name: &str, line: usize) -> Result<T, ParseError> {
    let tok = tok.ok_or_else(|| err(line, format!("header is missing `{name}=`")))?;
    let value = tok
        .strip_prefix(name)
        .and_then(|s| s.strip_prefix('='))
        .ok_or_else(|| err(line, format!("expected `{name}=<int>`, found `{tok}`")))?;
    value.parse().map_err(|_| err(line, format!("`{name}` is not a non-negative integer: `{value}`")))
}

pub fn parse(src: &str) -> Result<SeifertMatrix, ParseError> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| err(src.lines().count().max(1), "missing header `q=<int> rank=<int>`"))?;
    let mut toks = header.split_whitespace();
    let q: u32 = header_field(toks.next(), "q", hline)?;
    let rank: usize = header_field(toks.next(), "rank", hline)?;
    if let Some(extra) = toks.next() {
        return Err(err(hline, format!("unexpected token `{extra}` in header")));
    }
    if q == 0 {
        return Err(err(hline, "q must be at least 1"));
    }

    let mut data = Vec::with_capacity(rank * rank);
    let mut rows = 0;
    let mut last = hline;
    for (n, line) in lines {
        last = n;
        if rows == rank {
            return Err(err(n, format!("extra row; rank is {rank}")));
        }
        let row: Vec<Int> = line
            .split_whitespace()
            .map(|t| t.parse::<Int>().map_err(|_| err(n, format!("invalid integer `{t}`"))))
            .collect::<Result<_, _>>()?;
        if row.len() != rank {
            return Err(err(n, format!("row has {} entries, expected {rank}", row.len())));
        }
        data.extend(row);
        rows += 1;
    }
    if rows < rank {
        return Err(err(last, format!("found {rows} rows, expected {rank}")));
    }
    let a = IntMatrix::new(rank, rank, data).expect("row lengths checked");
    Ok(SeifertMatrix::new(a, q).expect("square"))
}

pub fn render(s: &SeifertMatrix) -> String {
    let mut out = format!("q={} rank={}\n", s.q(), s.rank());
    for row in s.matrix().row_iter() {
        let cells: Vec<String> = row.iter().map(Int::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
