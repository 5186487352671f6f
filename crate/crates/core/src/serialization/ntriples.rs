//! Line-oriented N-Triples reading and canonical writing.

use crate::model::{Term, Triple};
use crate::serialization::cursor::Cursor;
use crate::serialization::ParseDiagnostic;

/// Parses an N-Triples document: one triple per line, `#` comment lines and
/// blank lines ignored. Stops at the first malformed line.
pub fn parse_ntriples(input: &str) -> Result<Vec<Triple>, ParseDiagnostic> {
    let mut triples = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        if let Some(triple) = parse_line(line, idx + 1)? {
            triples.push(triple);
        }
    }
    Ok(triples)
}

fn parse_line(line: &str, number: usize) -> Result<Option<Triple>, ParseDiagnostic> {
    let mut cur = Cursor::for_line(line, number);
    cur.skip_inline_ws();
    if matches!(cur.peek(), None | Some('#')) {
        return Ok(None);
    }

    let subject_at = cur.position();
    let subject = scan_term(&mut cur, "subject")?;
    let predicate_at = cur.position();
    let predicate = scan_term(&mut cur, "predicate")?;
    let object = scan_term(&mut cur, "object")?;

    cur.skip_inline_ws();
    if !cur.eat('.') {
        return Err(cur.diag("expected '.' after object"));
    }
    cur.skip_inline_ws();
    if !matches!(cur.peek(), None | Some('#')) {
        return Err(cur.diag("unexpected content after '.'"));
    }

    let triple = Triple::new(subject, predicate, object).map_err(|e| {
        use crate::model::TermError::*;
        let at = match e {
            LiteralSubject => subject_at,
            _ => predicate_at,
        };
        cur.diag_at(at, e.to_string())
    })?;
    Ok(Some(triple))
}

fn scan_term(cur: &mut Cursor, role: &str) -> Result<Term, ParseDiagnostic> {
    cur.skip_inline_ws();
    let at = cur.position();
    match cur.peek() {
        None => Err(cur.diag_at(at, format!("expected {role}, found end of line"))),
        Some('<') => Ok(Term::Iri(cur.scan_iriref()?)),
        Some('"') => Ok(Term::Literal(cur.scan_literal(None)?)),
        Some('_') => Ok(Term::blank(cur.scan_blank()?)),
        Some('.') => Err(cur.diag_at(at, format!("expected {role}, found '.'"))),
        Some(c) => Err(cur.diag_at(at, format!("expected {role}, found {c:?}"))),
    }
}

/// Writes triples as N-Triples in canonical form: sorted by rendered
/// (subject, predicate, object) text, duplicates removed, one statement per
/// line. An empty graph serializes to an empty string.
pub fn serialize_ntriples<'a, I>(triples: I) -> String
where
    I: IntoIterator<Item = &'a Triple>,
{
    let mut sorted: Vec<&Triple> = triples.into_iter().collect();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = String::new();
    for triple in sorted {
        out.push_str(&triple.to_string());
        out.push('\n');
    }
    out
}
