//! A Turtle subset: `@prefix` directives, prefixed names, the `a` keyword,
//! and `;` / `,` predicate and object lists. Every N-Triples document is
//! also accepted.

use crate::model::{PrefixMap, Term, Triple};
use crate::serialization::cursor::Cursor;
use crate::serialization::ParseDiagnostic;
use crate::vocab;

pub fn parse_turtle(input: &str) -> Result<Vec<Triple>, ParseDiagnostic> {
    let mut cur = Cursor::new(input);
    let mut prefixes = PrefixMap::new();
    let mut triples = Vec::new();
    loop {
        cur.skip_ws_and_comments();
        if cur.at_eof() {
            return Ok(triples);
        }
        if cur.peek() == Some('@') {
            parse_prefix_directive(&mut cur, &mut prefixes)?;
        } else {
            parse_statement(&mut cur, &prefixes, &mut triples)?;
        }
    }
}

fn parse_prefix_directive(
    cur: &mut Cursor,
    prefixes: &mut PrefixMap,
) -> Result<(), ParseDiagnostic> {
    let at = cur.position();
    cur.bump(); // '@'
    let word = cur.scan_word();
    if word != "prefix" {
        return Err(cur.diag_at(at, format!("unknown directive '@{word}'")));
    }
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

    cur.skip_ws_and_comments();
    if !cur.eat('.') {
        return Err(cur.diag("expected '.' after @prefix directive"));
    }
    prefixes.bind(prefix, namespace);
    Ok(())
}

fn parse_statement(
    cur: &mut Cursor,
    prefixes: &PrefixMap,
    triples: &mut Vec<Triple>,
) -> Result<(), ParseDiagnostic> {
    let subject = parse_subject(cur, prefixes)?;
    loop {
        cur.skip_ws_and_comments();
        let predicate_at = cur.position();
        let predicate = parse_predicate(cur, prefixes)?;
        loop {
            cur.skip_ws_and_comments();
            let object = parse_object(cur, prefixes)?;
            let triple = Triple::new(subject.clone(), predicate.clone(), object)
                .map_err(|e| cur.diag_at(predicate_at, e.to_string()))?;
            triples.push(triple);

            cur.skip_ws_and_comments();
            if cur.eat(',') {
                continue;
            }
            break;
        }

        let mut ended_list = false;
        while cur.eat(';') {
            ended_list = true;
            cur.skip_ws_and_comments();
        }
        if cur.eat('.') {
            return Ok(());
        }
        if !ended_list {
            return Err(cur.diag("expected ',', ';', or '.' after object"));
        }
        // after ';' either another predicate follows or the statement ends
        if cur.eat('.') {
            return Ok(());
        }
    }
}

fn parse_subject(cur: &mut Cursor, prefixes: &PrefixMap) -> Result<Term, ParseDiagnostic> {
    let at = cur.position();
    match cur.peek() {
        Some('<') => Ok(Term::Iri(cur.scan_iriref()?)),
        Some('_') if cur.at_blank_start() => Ok(Term::blank(cur.scan_blank()?)),
        Some('"') => Err(cur.diag_at(at, "subject of a triple cannot be a literal")),
        Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == ':' => {
            expand_name(cur, prefixes, false)
        }
        Some(c) => Err(cur.diag_at(at, format!("expected subject, found {c:?}"))),
        None => Err(cur.diag_at(at, "expected subject, found end of input")),
    }
}

fn parse_predicate(cur: &mut Cursor, prefixes: &PrefixMap) -> Result<Term, ParseDiagnostic> {
    let at = cur.position();
    match cur.peek() {
        Some('<') => Ok(Term::Iri(cur.scan_iriref()?)),
        Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == ':' => {
            expand_name(cur, prefixes, true)
        }
        Some(c) => Err(cur.diag_at(at, format!("expected predicate, found {c:?}"))),
        None => Err(cur.diag_at(at, "expected predicate, found end of input")),
    }
}

fn parse_object(cur: &mut Cursor, prefixes: &PrefixMap) -> Result<Term, ParseDiagnostic> {
    let at = cur.position();
    match cur.peek() {
        Some('<') => Ok(Term::Iri(cur.scan_iriref()?)),
        Some('_') if cur.at_blank_start() => Ok(Term::blank(cur.scan_blank()?)),
        Some('"') => Ok(Term::Literal(cur.scan_literal(Some(prefixes))?)),
        Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == ':' => {
            expand_name(cur, prefixes, false)
        }
        Some(c) => Err(cur.diag_at(at, format!("expected object, found {c:?}"))),
        None => Err(cur.diag_at(at, "expected object, found end of input")),
    }
}

/// Reads a prefixed name and expands it. In predicate position the bare
/// keyword `a` stands for `rdf:type`.
fn expand_name(
    cur: &mut Cursor,
    prefixes: &PrefixMap,
    allow_a: bool,
) -> Result<Term, ParseDiagnostic> {
    let at = cur.position();
    let name = cur.scan_name()?;
    if name == "a" {
        if allow_a {
            return Ok(Term::Iri(vocab::rdf_type()));
        }
        return Err(cur.diag_at(at, "'a' is only valid as a predicate"));
    }
    if !name.contains(':') {
        return Err(cur.diag_at(at, format!("expected ':' in prefixed name {name:?}")));
    }
    let iri = prefixes.expand(&name).map_err(|e| cur.diag_at(at, e.to_string()))?;
    Ok(Term::Iri(iri))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::serialization::ntriples::tests::arb_triple;
    use crate::serialization::serialize_ntriples;
    use proptest::prelude::*;

    #[test]
    fn parses_prefixed_statement() {
        let doc = "@prefix info: <http://bvcoend.ac.in/info#> .\n\
                   info:BhartiVidyapeeth info:student \"Rohan Sharma\" .\n";
        let triples = parse_turtle(doc).unwrap();
        assert_eq!(triples.len(), 1);
        assert_eq!(
            triples[0].subject(),
            &Term::iri("http://bvcoend.ac.in/info#BhartiVidyapeeth").unwrap()
        );
        assert_eq!(
            triples[0].predicate(),
            &Term::iri("http://bvcoend.ac.in/info#student").unwrap()
        );
        assert_eq!(triples[0].object(), &Term::literal("Rohan Sharma"));
    }

    #[test]
    fn prefix_only_document_is_empty() {
        let triples = parse_turtle("@prefix info: <http://bvcoend.ac.in/info#> .").unwrap();
        assert!(triples.is_empty());
    }

    #[test]
    fn unknown_prefix_is_reported() {
        let err = parse_turtle("info:x info:y \"z\" .").unwrap_err();
        assert!(err.message.contains("unknown prefix"), "message: {}", err.message);
        assert_eq!(err.line, 1);
    }

    #[test]
    fn expands_semicolon_and_comma_lists() {
        let doc = "@prefix e: <http://e/> .\n\
                   e:s e:p \"x\", \"y\" ;\n\
                       e:q \"z\" .\n";
        let triples = parse_turtle(doc).unwrap();
        assert_eq!(triples.len(), 3);
        assert!(triples.iter().all(|t| t.subject() == &Term::iri("http://e/s").unwrap()));
        let objects: Vec<&str> = triples.iter().map(|t| t.object().value_text()).collect();
        assert_eq!(objects, vec!["x", "y", "z"]);
    }

    #[test]
    fn trailing_semicolon_is_tolerated() {
        let doc = "@prefix e: <http://e/> .\ne:s e:p e:o ; .";
        assert_eq!(parse_turtle(doc).unwrap().len(), 1);
    }

    #[test]
    fn keyword_a_expands_to_rdf_type() {
        let doc = "@prefix e: <http://e/> .\ne:BVCOE a e:College .";
        let triples = parse_turtle(doc).unwrap();
        assert_eq!(triples[0].predicate(), &Term::Iri(vocab::rdf_type()));
    }

    #[test]
    fn keyword_a_rejected_outside_predicate_position() {
        let doc = "@prefix e: <http://e/> .\na e:p e:o .";
        let err = parse_turtle(doc).unwrap_err();
        assert!(err.message.contains("'a'"));
    }

    #[test]
    fn statement_terminator_can_touch_a_name() {
        let doc = "@prefix e: <http://e/> .\ne:s e:p e:o.";
        let triples = parse_turtle(doc).unwrap();
        assert_eq!(triples[0].object(), &Term::iri("http://e/o").unwrap());
    }

    #[test]
    fn default_prefix_is_usable() {
        let doc = "@prefix : <http://e/> .\n:s :p :o .";
        let triples = parse_turtle(doc).unwrap();
        assert_eq!(triples[0].subject(), &Term::iri("http://e/s").unwrap());
    }

    #[test]
    fn datatype_qname_is_expanded() {
        let doc = "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n\
                   @prefix e: <http://e/> .\n\
                   e:s e:p \"42\"^^xsd:integer .";
        let triples = parse_turtle(doc).unwrap();
        let lit = triples[0].object().as_literal().unwrap();
        assert_eq!(lit.datatype().unwrap().as_str(), "http://www.w3.org/2001/XMLSchema#integer");
    }

    proptest! {
        // Both parsers agree on the shared subset: any canonical N-Triples
        // document parses identically as Turtle.
        #[test]
        fn agrees_with_ntriples_on_shared_subset(
            triples in proptest::collection::vec(arb_triple(), 0..30),
        ) {
            let text = serialize_ntriples(&triples);
            let as_turtle = parse_turtle(&text).unwrap();
            let as_ntriples = crate::serialization::parse_ntriples(&text).unwrap();
            prop_assert_eq!(as_turtle, as_ntriples);
        }
    }
}
