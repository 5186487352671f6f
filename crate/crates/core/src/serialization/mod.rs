//! Reading and writing graphs as N-Triples and a Turtle subset.
//!
//! Parsers are strict and fail on the first problem, reporting where it was
//! found. Serialization is canonical: triples come out sorted and deduped,
//! so equal graphs always produce byte-identical output.

pub(crate) mod cursor;
mod ntriples;
mod turtle;

pub use ntriples::{parse_ntriples, serialize_ntriples};
pub use turtle::parse_turtle;

use std::fmt;

/// How bad a diagnostic is. Parsing currently stops at the first problem,
/// so everything reported is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
}

/// A parse problem with its position (1-based line and column).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub line: usize,
    pub column: usize,
    pub severity: Severity,
    pub message: String,
}

impl ParseDiagnostic {
    pub fn error(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseDiagnostic { line, column, severity: Severity::Error, message: message.into() }
    }
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseDiagnostic {}
