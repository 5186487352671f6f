//! A SPARQL subset: SELECT queries over one basic graph pattern, with
//! PREFIX declarations and the `a` shorthand.
//!
//! Results use set semantics. Rows are deduplicated and sorted by the
//! rendered text of their bindings, so equal queries over equal stores give
//! byte-identical output in every format.

mod eval;
mod parser;

pub use eval::{evaluate, evaluate_in_source_order, plan_bgp};
pub use parser::parse_query;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::model::{PrefixMap, Term};
use crate::OutputFormat;

/// One position of a query pattern: a named variable or a fixed term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternTerm {
    Variable(String),
    Concrete(Term),
}

impl PatternTerm {
    pub fn variable(&self) -> Option<&str> {
        match self {
            PatternTerm::Variable(name) => Some(name),
            PatternTerm::Concrete(_) => None,
        }
    }
}

/// A triple pattern inside a WHERE clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryPattern {
    pub subject: PatternTerm,
    pub predicate: PatternTerm,
    pub object: PatternTerm,
}

impl QueryPattern {
    pub fn new(subject: PatternTerm, predicate: PatternTerm, object: PatternTerm) -> Self {
        QueryPattern { subject, predicate, object }
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        [&self.subject, &self.predicate, &self.object]
            .into_iter()
            .filter_map(PatternTerm::variable)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("empty projection: SELECT needs at least one variable")]
    EmptyProjection,
    #[error("duplicate variable in projection: ?{0}")]
    DuplicateProjection(String),
    #[error("projected variable ?{0} does not appear in the where clause")]
    UnboundProjection(String),
    #[error("invalid variable name: {0:?}")]
    InvalidVariableName(String),
}

/// Checks the `[A-Za-z][A-Za-z0-9_]*` variable naming rule.
pub(crate) fn valid_variable_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A parsed SELECT query: prefix bindings, a projection, and a basic graph
/// pattern. Construction checks that the projection is sane; extra pattern
/// variables beyond the projection are allowed and act as joins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    prefixes: PrefixMap,
    projection: Vec<String>,
    patterns: Vec<QueryPattern>,
}

impl Query {
    pub fn new(
        prefixes: PrefixMap,
        projection: Vec<String>,
        patterns: Vec<QueryPattern>,
    ) -> Result<Self, QueryError> {
        if projection.is_empty() {
            return Err(QueryError::EmptyProjection);
        }
        let pattern_vars = patterns.iter().flat_map(QueryPattern::variables);
        for name in projection.iter().map(String::as_str).chain(pattern_vars) {
            if !valid_variable_name(name) {
                return Err(QueryError::InvalidVariableName(name.to_string()));
            }
        }
        let mut seen = Vec::new();
        for name in &projection {
            if seen.contains(&name) {
                return Err(QueryError::DuplicateProjection(name.clone()));
            }
            seen.push(name);
        }
        for name in &projection {
            if !patterns.iter().any(|p| p.variables().any(|v| v == name)) {
                return Err(QueryError::UnboundProjection(name.clone()));
            }
        }
        Ok(Query { prefixes, projection, patterns })
    }

    pub fn prefixes(&self) -> &PrefixMap {
        &self.prefixes
    }

    pub fn projection(&self) -> &[String] {
        &self.projection
    }

    pub fn patterns(&self) -> &[QueryPattern] {
        &self.patterns
    }
}

/// One result row; binds exactly the projected variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    bindings: BTreeMap<String, Term>,
}

impl Solution {
    pub fn get(&self, variable: &str) -> Option<&Term> {
        self.bindings.get(variable)
    }
}

/// All rows for a query, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSequence {
    variables: Vec<String>,
    rows: Vec<Solution>,
}

impl SolutionSequence {
    pub(crate) fn from_rows(variables: Vec<String>, ordered: Vec<Vec<Term>>) -> Self {
        let rows = ordered
            .into_iter()
            .map(|terms| Solution {
                bindings: variables.iter().cloned().zip(terms).collect(),
            })
            .collect();
        SolutionSequence { variables, rows }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn rows(&self) -> &[Solution] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

#[derive(Serialize)]
struct JsonTerm<'a> {
    #[serde(rename = "type")]
    kind: &'static str,
    value: &'a str,
}

#[derive(Serialize)]
struct JsonSolutions<'a> {
    vars: &'a [String],
    rows: Vec<BTreeMap<&'a str, JsonTerm<'a>>>,
}

fn json_term(term: &Term) -> JsonTerm<'_> {
    let kind = match term {
        Term::Iri(_) => "iri",
        Term::Literal(_) => "literal",
        Term::Blank(_) => "blank",
    };
    JsonTerm { kind, value: term.value_text() }
}

/// Renders a solution sequence as an aligned table, a JSON document, or
/// CSV. Cell values are the bare term values (IRI text, literal lexical
/// form, blank label).
pub fn format_solutions(solutions: &SolutionSequence, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => format_table(solutions),
        OutputFormat::Json => format_json(solutions),
        OutputFormat::Csv => format_csv(solutions),
    }
}

fn format_table(solutions: &SolutionSequence) -> String {
    let vars = solutions.variables();
    let mut widths: Vec<usize> = vars.iter().map(String::len).collect();
    let rows: Vec<Vec<&str>> = solutions
        .rows()
        .iter()
        .map(|row| {
            vars.iter()
                .map(|v| row.get(v).map_or("", Term::value_text))
                .collect()
        })
        .collect();
    for row in &rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }

    let render_row = |cells: Vec<&str>| -> String {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < cells.len() {
                line.push_str(&" ".repeat(widths[i].saturating_sub(cell.len())));
            }
        }
        line.push('\n');
        line
    };

    let dashes: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    let mut out = render_row(vars.iter().map(String::as_str).collect());
    out.push_str(&render_row(dashes.iter().map(String::as_str).collect()));
    for row in rows {
        out.push_str(&render_row(row));
    }
    out
}

fn format_json(solutions: &SolutionSequence) -> String {
    let rows = solutions
        .rows()
        .iter()
        .map(|row| {
            solutions
                .variables()
                .iter()
                .filter_map(|v| row.get(v).map(|t| (v.as_str(), json_term(t))))
                .collect()
        })
        .collect();
    let doc = JsonSolutions { vars: solutions.variables(), rows };
    let mut text = serde_json::to_string_pretty(&doc).expect("solutions serialize");
    text.push('\n');
    text
}

pub(crate) fn csv_escape(value: &str) -> String {
    if value.contains(['"', ',', '\n', '\r']) {
        format!("\"{}\"", value.replace('"', "\"\""))
    } else {
        value.to_string()
    }
}

fn format_csv(solutions: &SolutionSequence) -> String {
    let mut out = String::new();
    let header: Vec<String> = solutions.variables().iter().map(|v| csv_escape(v)).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in solutions.rows() {
        let cells: Vec<String> = solutions
            .variables()
            .iter()
            .map(|v| csv_escape(row.get(v).map_or("", Term::value_text)))
            .collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
