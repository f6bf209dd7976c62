//! Line-oriented data formats: `.grp` group specifications and `.ctb` character tables.
//!
//! Both formats are ASCII, one keyword per line, with `#` starting a comment.

mod ctb;
mod grp;

pub use ctb::{emit_table, parse_table, TableFile};
pub use grp::{parse_group_spec, GroupBody, GroupSpec};

use std::fmt;

/// A diagnostic pointing at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {kind}")]
pub struct FormatError {
    pub line: usize,
    pub col: usize,
    pub kind: FormatErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatErrorKind {
    UnknownKeyword(String),
    UnknownKind(String),
    DuplicateField(String),
    MissingField(String),
    BadNumber(String),
    PointOutOfRange { point: usize, degree: usize },
    BadCycle(String),
    NotInvertible,
    MatrixShape(String),
    Arity { what: String, found: usize, expected: usize },
    SizeSum { sum: String, order: u64 },
    IndexOutOfRange { index: i64, classes: usize },
    BadValue(String),
    BadIndicator(String),
    Table(String),
}

impl fmt::Display for FormatErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FormatErrorKind::*;
        match self {
            UnknownKeyword(k) => write!(f, "unknown keyword `{k}`"),
            UnknownKind(k) => write!(f, "unknown kind `{k}` (expected perm or mat)"),
            DuplicateField(k) => write!(f, "duplicate field `{k}`"),
            MissingField(k) => write!(f, "missing field `{k}`"),
            BadNumber(t) => write!(f, "expected a number, found `{t}`"),
            PointOutOfRange { point, degree } => write!(f, "point {point} out of range for degree {degree}"),
            BadCycle(m) => write!(f, "malformed cycle: {m}"),
            NotInvertible => write!(f, "matrix generator is not invertible"),
            MatrixShape(m) => write!(f, "matrix shape: {m}"),
            Arity { what, found, expected } => write!(f, "{what} has {found} entries, expected {expected}"),
            SizeSum { sum, order } => write!(f, "class sizes sum to {sum}, not the order {order}"),
            IndexOutOfRange { index, classes } => write!(f, "class index {index} outside 1..{classes}"),
            BadValue(m) => write!(f, "{m}"),
            BadIndicator(t) => write!(f, "indicator `{t}` is not one of + - o"),
            Table(m) => write!(f, "{m}"),
        }
    }
}

/// A non-comment line split into its keyword and the remaining tokens with their columns.
pub(crate) struct Line<'a> {
    pub number: usize,
    pub keyword: &'a str,
    pub keyword_col: usize,
    pub rest: &'a str,
    pub rest_col: usize,
}

impl Line<'_> {
    pub fn err(&self, col: usize, kind: FormatErrorKind) -> FormatError {
        FormatError { line: self.number, col, kind }
    }

    /// Whitespace-separated tokens of the remainder with 1-based columns.
    pub fn tokens(&self) -> Vec<(usize, &str)> {
        let mut out = Vec::new();
        let bytes = self.rest.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let start = i;
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            out.push((self.rest_col + start, &self.rest[start..i]));
        }
        out
    }
}

/// Split text into keyword lines, stripping comments; leading comment lines are returned
/// separately so they can be preserved.
pub(crate) fn lines(text: &str) -> (Vec<String>, Vec<Line<'_>>) {
    let mut header = Vec::new();
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let trimmed = raw.trim_start();
        if trimmed.starts_with('#') && out.is_empty() {
            header.push(raw.trim_end().to_string());
            continue;
        }
        let content = raw.split('#').next().unwrap_or("");
        let lead = content.len() - content.trim_start().len();
        let body = content.trim();
        if body.is_empty() {
            continue;
        }
        let kw_end = body.find(char::is_whitespace).unwrap_or(body.len());
        let keyword = &body[..kw_end];
        let rest_raw = &body[kw_end..];
        let rest_lead = rest_raw.len() - rest_raw.trim_start().len();
        out.push(Line {
            number: i + 1,
            keyword,
            keyword_col: lead + 1,
            rest: rest_raw.trim_start(),
            rest_col: lead + kw_end + rest_lead + 1,
        });
    }
    (header, out)
}

pub(crate) fn parse_u64(tok: &str, line: &Line, col: usize) -> Result<u64, FormatError> {
    tok.parse().map_err(|_| line.err(col, FormatErrorKind::BadNumber(tok.to_string())))
}
