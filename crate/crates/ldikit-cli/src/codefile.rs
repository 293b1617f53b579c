//! Line-oriented code files.
//!
//! ```text
//! # optional comments
//! mod <q|inf>
//! origin <q>        (required iff mod = inf)
//! n <registers>
//! rows <count>
//! <2n signed integers per row, optional literal | between the halves>
//! ```
//!
//! `#` starts a comment anywhere on a line; blank lines are skipped. Saving
//! emits a canonical layout (with the `|` separator), so save∘load∘save is
//! byte-identical.

use ldikit::ldi::{LdiCode, LdiError};
use ldikit::stab::{CodeError, StabilizerCode};
use std::fmt::Write as _;

/// Parse-layer failure, tagged with the 1-based line it happened on.
#[derive(Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug)]
pub enum LoadError {
    Parse(ParseError),
    Code(CodeError),
    Ldi(LdiError),
}

impl std::fmt::Display for LoadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LoadError::Parse(e) => write!(f, "{e}"),
            LoadError::Code(e) => write!(f, "{e}"),
            LoadError::Ldi(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for LoadError {}

/// A parsed and validated code file.
#[derive(Debug, Clone)]
pub enum CodeFile {
    Stabilizer(StabilizerCode),
    Ldi(LdiCode),
}

/// Syntactically valid file content before any code-level validation;
/// `inspect` audits these directly so uncertified matrices still report.
#[derive(Debug, Clone)]
pub struct RawFile {
    pub is_ldi: bool,
    /// Modulus, or the origin modulus for `mod inf` files.
    pub q: u64,
    pub n: usize,
    pub rows: Vec<Vec<i64>>,
}

/// Entries are capped well inside i64 so downstream exact arithmetic can
/// never overflow.
const MAX_ENTRY: i64 = 1 << 40;
const MAX_REGISTERS: usize = 4096;

struct Cursor<'a> {
    /// (1-based line number, significant content)
    lines: Vec<(usize, &'a str)>,
    at: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let mut lines = Vec::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            last_line = i + 1;
            let significant = raw.split('#').next().unwrap_or("").trim();
            if !significant.is_empty() {
                lines.push((i + 1, significant));
            }
        }
        Cursor {
            lines,
            at: 0,
            last_line,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        let item = self.lines.get(self.at).copied().ok_or(ParseError {
            line: self.last_line + 1,
            message: format!("unexpected end of file, expected {what}"),
        })?;
        self.at += 1;
        Ok(item)
    }
}

fn header_value<'a>(line: &'a str, key: &str, lineno: usize) -> Result<&'a str, ParseError> {
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(k), Some(v), None) if k == key => Ok(v),
        _ => Err(ParseError {
            line: lineno,
            message: format!("expected `{key} <value>`, found `{line}`"),
        }),
    }
}

fn parse_u64(text: &str, what: &str, lineno: usize) -> Result<u64, ParseError> {
    text.parse().map_err(|_| ParseError {
        line: lineno,
        message: format!("{what} `{text}` is not an unsigned integer"),
    })
}

pub fn parse_raw(text: &str) -> Result<RawFile, ParseError> {
    let mut cursor = Cursor::new(text);

    let (lineno, line) = cursor.next("`mod` header")?;
    let modulus = header_value(line, "mod", lineno)?;
    let (is_ldi, q) = if modulus == "inf" {
        let (lineno, line) = cursor.next("`origin` header")?;
        let origin = header_value(line, "origin", lineno)?;
        (true, parse_u64(origin, "origin", lineno)?)
    } else {
        (false, parse_u64(modulus, "modulus", lineno)?)
    };

    let (lineno, line) = cursor.next("`n` header")?;
    let n = parse_u64(header_value(line, "n", lineno)?, "n", lineno)? as usize;
    if n == 0 || n > MAX_REGISTERS {
        return Err(ParseError {
            line: lineno,
            message: format!("n must be between 1 and {MAX_REGISTERS}"),
        });
    }

    let (lineno, line) = cursor.next("`rows` header")?;
    let row_count = parse_u64(header_value(line, "rows", lineno)?, "rows", lineno)? as usize;
    if row_count > 2 * n {
        return Err(ParseError {
            line: lineno,
            message: format!("row count {row_count} exceeds 2n = {}", 2 * n),
        });
    }

    let mut rows = Vec::with_capacity(row_count);
    for _ in 0..row_count {
        let (lineno, line) = cursor.next("a generator row")?;
        let mut entries = Vec::with_capacity(2 * n);
        for token in line.split_whitespace() {
            if token == "|" {
                continue;
            }
            let value: i64 = token.parse().map_err(|_| ParseError {
                line: lineno,
                message: format!("`{token}` is not an integer"),
            })?;
            if value.abs() > MAX_ENTRY {
                return Err(ParseError {
                    line: lineno,
                    message: format!("entry {value} exceeds the supported magnitude"),
                });
            }
            entries.push(value);
        }
        if entries.len() != 2 * n {
            return Err(ParseError {
                line: lineno,
                message: format!("row has {} entries, expected {}", entries.len(), 2 * n),
            });
        }
        rows.push(entries);
    }

    if let Some(&(lineno, extra)) = cursor.lines.get(cursor.at) {
        return Err(ParseError {
            line: lineno,
            message: format!("unexpected trailing content `{extra}`"),
        });
    }

    Ok(RawFile { is_ldi, q, n, rows })
}

pub fn parse(text: &str) -> Result<CodeFile, LoadError> {
    let raw = parse_raw(text).map_err(LoadError::Parse)?;
    if raw.is_ldi {
        LdiCode::new(raw.rows, raw.n, raw.q)
            .map(CodeFile::Ldi)
            .map_err(LoadError::Ldi)
    } else {
        StabilizerCode::new(raw.rows, raw.n, raw.q)
            .map(CodeFile::Stabilizer)
            .map_err(LoadError::Code)
    }
}

fn render(header: &str, n: usize, rows: &[Vec<i64>]) -> String {
    let mut out = String::new();
    out.push_str(header);
    let _ = writeln!(out, "n {n}");
    let _ = writeln!(out, "rows {}", rows.len());
    for row in rows {
        let xs: Vec<String> = row[..n].iter().map(i64::to_string).collect();
        let zs: Vec<String> = row[n..].iter().map(i64::to_string).collect();
        let _ = writeln!(out, "{} | {}", xs.join(" "), zs.join(" "));
    }
    out
}

/// Canonical bytes for a stabilizer code; the value is re-validated so an
/// unverified matrix can never be emitted.
pub fn render_stabilizer(code: &StabilizerCode) -> String {
    StabilizerCode::new(code.rows(), code.n(), code.q()).expect("saved code re-validates");
    render(&format!("mod {}\n", code.q()), code.n(), &code.rows())
}

/// Canonical bytes for a certified integer form, re-verified before emit.
pub fn render_ldi(code: &LdiCode) -> String {
    LdiCode::new(code.rows(), code.n(), code.origin_q()).expect("saved code re-verifies");
    render(
        &format!("mod inf\norigin {}\n", code.origin_q()),
        code.n(),
        &code.rows(),
    )
}

pub fn render_file(file: &CodeFile) -> String {
    match file {
        CodeFile::Stabilizer(code) => render_stabilizer(code),
        CodeFile::Ldi(code) => render_ldi(code),
    }
}
