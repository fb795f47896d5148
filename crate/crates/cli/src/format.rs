//! Plain-text file formats.
//!
//! Sequence file:
//!
//! ```text
//! # comment
//! 4 3
//! 0 0 1 3
//! ```
//!
//! Hypertournament file: a `n k` header followed by one arc per line, `k`
//! vertex ids with the loser last, in canonical subset order. Lines whose
//! first non-blank character is `#` and blank lines are ignored.

use std::fmt::{self, Write as _};

use hypertournament::{Arc, Hypertournament, ModelError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    /// Malformed text; `line` is 1-based.
    Parse { line: usize, msg: String },
    /// Well-formed text describing an invalid hypertournament.
    Structure(ModelError),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Parse { line, msg } => write!(f, "line {line}: {msg}"),
            FormatError::Structure(e) => write!(f, "structural violation: {e}"),
        }
    }
}

impl std::error::Error for FormatError {}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        msg: msg.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, t))
    })
}

fn parse_ints<T: std::str::FromStr>(line: usize, text: &str) -> Result<Vec<T>, FormatError> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| parse_err(line, format!("not an integer: {tok:?}")))
        })
        .collect()
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<(usize, usize), FormatError> {
    let (no, text) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `n k` header"))?;
    let v: Vec<usize> = parse_ints(no, text)?;
    let [n, k] = v[..] else {
        return Err(parse_err(no, "header must be `n k`"));
    };
    if k < 2 {
        return Err(parse_err(no, format!("arity k={k} must be at least 2")));
    }
    if n == 0 || n > MAX_VERTICES {
        return Err(parse_err(no, format!("n={n} outside 1..={MAX_VERTICES}")));
    }
    Ok((n, k))
}

/// A sequence with its arity. Entries are kept signed so that negative
/// values reach the checker as verdicts instead of parse errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceFile {
    pub k: usize,
    pub entries: Vec<i64>,
}

impl SequenceFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut lines = content_lines(text);
        let (n, k) = parse_header(&mut lines)?;
        let (no, body) = lines
            .next()
            .ok_or_else(|| parse_err(2, "missing sequence line"))?;
        let entries: Vec<i64> = parse_ints(no, body)?;
        if entries.len() != n {
            return Err(parse_err(
                no,
                format!("header declares n={n}, found {} entries", entries.len()),
            ));
        }
        if let Some((no, _)) = lines.next() {
            return Err(parse_err(no, "unexpected extra line"));
        }
        Ok(SequenceFile { k, entries })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Entries as unsigned values, or `None` if any is negative.
    pub fn unsigned(&self) -> Option<Vec<u64>> {
        self.entries
            .iter()
            .map(|&x| u64::try_from(x).ok())
            .collect()
    }

    pub fn render(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.k);
        out.push_str(&join(self.entries.iter()));
        out.push('\n');
        out
    }
}

pub fn parse_hypertournament(text: &str) -> Result<Hypertournament, FormatError> {
    let mut lines = content_lines(text);
    let (n, k) = parse_header(&mut lines)?;
    let mut arcs = Vec::new();
    for (no, body) in lines {
        let entries: Vec<usize> = parse_ints(no, body)?;
        if entries.len() != k {
            return Err(parse_err(
                no,
                format!("arc has {} entries, expected k={k}", entries.len()),
            ));
        }
        arcs.push(Arc::new(entries).map_err(FormatError::Structure)?);
    }
    Hypertournament::new(n, k, arcs).map_err(FormatError::Structure)
}

pub fn render_hypertournament(h: &Hypertournament) -> String {
    let mut out = format!("{} {}\n", h.n(), h.k());
    for a in h.arcs() {
        writeln!(out, "{a}").expect("writing to a String");
    }
    out
}

pub fn join<T: fmt::Display>(items: impl Iterator<Item = T>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
