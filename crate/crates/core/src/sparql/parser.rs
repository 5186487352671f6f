//! Text form of the query language:
//!
//! ```text
//! PREFIX foaf: <http://xmlns.com/foaf/0.1/>
//! SELECT ?name ?college
//! WHERE { ?x foaf:name ?name . ?x foaf:college ?college }
//! ```
//!
//! Keywords are case-insensitive. Patterns are separated by '.', with an
//! optional trailing '.' before '}'.

use crate::model::{PrefixMap, Term};
use crate::serialization::cursor::Cursor;
use crate::serialization::ParseDiagnostic;
use crate::sparql::{valid_variable_name, PatternTerm, Query, QueryPattern};
use crate::vocab;

pub fn parse_query(input: &str) -> Result<Query, ParseDiagnostic> {
    let mut cur = Cursor::new(input);
    let mut prefixes = PrefixMap::new();

    loop {
        cur.skip_ws_and_comments();
        let at = cur.position();
        let keyword = cur.scan_word();
        match keyword.to_ascii_lowercase().as_str() {
            "prefix" => parse_prefix(&mut cur, &mut prefixes)?,
            "select" => break,
            _ => return Err(cur.diag_at(at, format!("expected PREFIX or SELECT, found {keyword:?}"))),
        }
    }

    let mut projection: Vec<(String, (usize, usize))> = Vec::new();
    loop {
        cur.skip_ws_and_comments();
        if cur.peek() != Some('?') {
            break;
        }
        let at = cur.position();
        cur.bump();
        let name = scan_variable_name(&mut cur, at)?;
        if projection.iter().any(|(seen, _)| *seen == name) {
            return Err(cur.diag_at(at, format!("duplicate variable in projection: ?{name}")));
        }
        projection.push((name, at));
    }
    if projection.is_empty() {
        return Err(cur.diag("empty projection: SELECT needs at least one variable"));
    }

    let at = cur.position();
    let keyword = cur.scan_word();
    if !keyword.eq_ignore_ascii_case("where") {
        return Err(cur.diag_at(at, format!("expected WHERE, found {keyword:?}")));
    }
    cur.skip_ws_and_comments();
    if !cur.eat('{') {
        return Err(cur.diag("expected '{' after WHERE"));
    }

    let mut patterns = Vec::new();
    loop {
        cur.skip_ws_and_comments();
        if cur.eat('}') {
            break;
        }
        if cur.at_eof() {
            return Err(cur.diag("expected '}' before end of query"));
        }
        let subject = parse_pattern_term(&mut cur, &prefixes, Role::Subject)?;
        let predicate = parse_pattern_term(&mut cur, &prefixes, Role::Predicate)?;
        let object = parse_pattern_term(&mut cur, &prefixes, Role::Object)?;
        patterns.push(QueryPattern::new(subject, predicate, object));

        cur.skip_ws_and_comments();
        if cur.eat('.') {
            continue;
        }
        if cur.eat('}') {
            break;
        }
        return Err(cur.diag("expected '.' or '}' after pattern"));
    }

    cur.skip_ws_and_comments();
    if !cur.at_eof() {
        return Err(cur.diag("unexpected content after '}'"));
    }

    // check each projected variable is grounded somewhere in the pattern
    for (name, at) in &projection {
        if !patterns.iter().any(|p| p.variables().any(|v| v == name)) {
            return Err(ParseDiagnostic::error(
                at.0,
                at.1,
                format!("projected variable ?{name} does not appear in the where clause"),
            ));
        }
    }
    let names = projection.into_iter().map(|(name, _)| name).collect();
    Query::new(prefixes, names, patterns)
        .map_err(|e| ParseDiagnostic::error(1, 1, e.to_string()))
}

fn parse_prefix(cur: &mut Cursor, prefixes: &mut PrefixMap) -> Result<(), ParseDiagnostic> {
    cur.skip_ws_and_comments();
    let mut prefix = String::new();
    while let Some(c) = cur.peek() {
        if c.is_ascii_alphanumeric() || matches!(c, '_' | '-') {
            prefix.push(c);
            cur.bump();
        } else {
            break;
        }
    }
    if !cur.eat(':') {
        return Err(cur.diag("expected ':' after prefix name"));
    }
    cur.skip_ws_and_comments();
    if cur.peek() != Some('<') {
        return Err(cur.diag("expected namespace IRI after prefix name"));
    }
    let namespace = cur.scan_iriref()?;
    prefixes.bind(prefix, namespace);
    Ok(())
}

fn scan_variable_name(cur: &mut Cursor, at: (usize, usize)) -> Result<String, ParseDiagnostic> {
    let mut name = String::new();
    while let Some(c) = cur.peek() {
        if c.is_ascii_alphanumeric() || c == '_' {
            name.push(c);
            cur.bump();
        } else {
            break;
        }
    }
    if !valid_variable_name(&name) {
        return Err(cur.diag_at(at, format!("invalid variable name: ?{name}")));
    }
    Ok(name)
}

#[derive(Clone, Copy, PartialEq)]
enum Role {
    Subject,
    Predicate,
    Object,
}

impl Role {
    fn describe(self) -> &'static str {
        match self {
            Role::Subject => "subject",
            Role::Predicate => "predicate",
            Role::Object => "object",
        }
    }
}

fn parse_pattern_term(
    cur: &mut Cursor,
    prefixes: &PrefixMap,
    role: Role,
) -> Result<PatternTerm, ParseDiagnostic> {
    cur.skip_ws_and_comments();
    let at = cur.position();
    match cur.peek() {
        Some('?') => {
            cur.bump();
            Ok(PatternTerm::Variable(scan_variable_name(cur, at)?))
        }
        Some('<') => Ok(PatternTerm::Concrete(Term::Iri(cur.scan_iriref()?))),
        Some('"') => {
            if role == Role::Subject {
                return Err(cur.diag_at(at, "subject of a pattern cannot be a literal"));
            }
            if role == Role::Predicate {
                return Err(cur.diag_at(at, "predicate of a pattern must be an IRI or 'a'"));
            }
            Ok(PatternTerm::Concrete(Term::Literal(cur.scan_literal(Some(prefixes))?)))
        }
        Some('_') if cur.at_blank_start() => {
            Err(cur.diag_at(at, "blank nodes are not supported in query patterns"))
        }
        Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == ':' => {
            let name = cur.scan_name()?;
            if name == "a" {
                if role == Role::Predicate {
                    return Ok(PatternTerm::Concrete(Term::Iri(vocab::rdf_type())));
                }
                return Err(cur.diag_at(at, "'a' is only valid as a predicate"));
            }
            if !name.contains(':') {
                return Err(cur.diag_at(at, format!("expected ':' in prefixed name {name:?}")));
            }
            let iri = prefixes.expand(&name).map_err(|e| cur.diag_at(at, e.to_string()))?;
            Ok(PatternTerm::Concrete(Term::Iri(iri)))
        }
        Some(c) => Err(cur.diag_at(at, format!("expected {}, found {c:?}", role.describe()))),
        None => Err(cur.diag_at(at, format!("expected {}, found end of query", role.describe()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Iri;

    const FOAF_QUERY: &str = "PREFIX foaf: <http://xmlns.com/foaf/0.1/>\n\
                              SELECT ?name ?college\n\
                              WHERE { ?x foaf:name ?name . ?x foaf:universtity ?college }";

    #[test]
    fn parses_prefixed_two_pattern_query() {
        let query = parse_query(FOAF_QUERY).unwrap();
        assert_eq!(query.projection(), ["name", "college"]);
        assert_eq!(query.patterns().len(), 2);
        assert_eq!(
            query.patterns()[0].predicate,
            PatternTerm::Concrete(Term::iri("http://xmlns.com/foaf/0.1/name").unwrap())
        );
        assert_eq!(query.patterns()[1].subject, PatternTerm::Variable("x".into()));
        assert_eq!(
            query.prefixes().get("foaf"),
            Some(&Iri::new("http://xmlns.com/foaf/0.1/").unwrap())
        );
    }

    #[test]
    fn keywords_are_case_insensitive() {
        let query = parse_query("select ?s where { ?s <http://e/p> \"x\" }").unwrap();
        assert_eq!(query.projection(), ["s"]);
    }

    #[test]
    fn accepts_trailing_dot_and_a_keyword() {
        let query =
            parse_query("PREFIX e: <http://e/> SELECT ?s WHERE { ?s a e:College . }").unwrap();
        assert_eq!(
            query.patterns()[0].predicate,
            PatternTerm::Concrete(Term::Iri(vocab::rdf_type()))
        );
    }

    #[test]
    fn empty_projection_is_rejected() {
        let err = parse_query("SELECT WHERE { ?s ?p ?o }").unwrap_err();
        assert!(err.message.contains("projection"), "message: {}", err.message);
    }

    #[test]
    fn unknown_prefix_is_positioned() {
        let err = parse_query("SELECT ?s WHERE { ?s foaf:name ?n }").unwrap_err();
        assert!(err.message.contains("unknown prefix"));
        assert_eq!(err.line, 1);
        assert_eq!(err.column, 22);
    }

    #[test]
    fn projected_variable_must_occur() {
        let err = parse_query("SELECT ?ghost WHERE { ?s <http://e/p> ?o }").unwrap_err();
        assert!(err.message.contains("?ghost"));
        assert_eq!(err.column, 8);
    }

    #[test]
    fn literal_subject_is_rejected() {
        let err = parse_query("SELECT ?o WHERE { \"x\" <http://e/p> ?o }").unwrap_err();
        assert!(err.message.contains("literal"));
    }

    #[test]
    fn blank_nodes_are_rejected() {
        let err = parse_query("SELECT ?o WHERE { _:b <http://e/p> ?o }").unwrap_err();
        assert!(err.message.contains("blank"));
    }

    #[test]
    fn missing_brace_is_reported() {
        let err = parse_query("SELECT ?s WHERE { ?s <http://e/p> ?o").unwrap_err();
        assert!(err.message.contains("'}'") || err.message.contains("'.'"));
    }

    #[test]
    fn broken_syntax_reports_position() {
        // '}' appears where the object should be
        let err = parse_query("SELECT ?s WHERE { ?s <http://e/p> }").unwrap_err();
        assert_eq!((err.line, err.column), (1, 35));
        assert!(err.message.contains("object"));
    }
}
