//! Core RDF vocabulary: terms, triples, and namespace prefix maps.
//!
//! Everything here is immutable after construction and cheap to clone.
//! Ordering of terms and triples follows their N-Triples rendering so that
//! sorted collections and serialized output agree on one canonical order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Errors raised while constructing terms, triples, or expanding qnames.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("IRI is empty")]
    EmptyIri,
    #[error("IRI contains whitespace: {0:?}")]
    WhitespaceInIri(String),
    #[error("IRI has no scheme: {0:?}")]
    MissingScheme(String),
    #[error("unknown prefix: {0:?}")]
    UnknownPrefix(String),
    #[error("malformed qname (expected exactly one ':'): {0:?}")]
    MalformedQName(String),
    #[error("subject of a triple cannot be a literal")]
    LiteralSubject,
    #[error("predicate of a triple must be an IRI")]
    NonIriPredicate,
}

/// An absolute IRI, stored verbatim once validated.
///
/// Validation is shallow: the text must be non-empty, contain no whitespace,
/// and carry a non-empty scheme before a ':'. Two IRIs are equal iff their
/// texts are byte-identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Iri {
    value: String,
}

impl Iri {
    pub fn new(text: impl Into<String>) -> Result<Self, TermError> {
        let value = text.into();
        if value.is_empty() {
            return Err(TermError::EmptyIri);
        }
        if value.chars().any(char::is_whitespace) {
            return Err(TermError::WhitespaceInIri(value));
        }
        match value.find(':') {
            Some(0) | None => Err(TermError::MissingScheme(value)),
            Some(_) => Ok(Iri { value }),
        }
    }

    pub fn as_str(&self) -> &str {
        &self.value
    }

    /// The text after the last '#', or after the last '/' when there is no
    /// fragment. Falls back to the whole IRI.
    pub fn local_name(&self) -> &str {
        if let Some(i) = self.value.rfind('#') {
            &self.value[i + 1..]
        } else if let Some(i) = self.value.rfind('/') {
            &self.value[i + 1..]
        } else {
            &self.value
        }
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.value)
    }
}

/// A literal value: lexical text plus at most one of a datatype IRI or a
/// language tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Literal {
    lexical: String,
    datatype: Option<Iri>,
    language: Option<String>,
}

impl Literal {
    pub fn plain(lexical: impl Into<String>) -> Self {
        Literal { lexical: lexical.into(), datatype: None, language: None }
    }

    pub fn with_language(lexical: impl Into<String>, tag: impl Into<String>) -> Self {
        Literal { lexical: lexical.into(), datatype: None, language: Some(tag.into()) }
    }

    pub fn with_datatype(lexical: impl Into<String>, datatype: Iri) -> Self {
        Literal { lexical: lexical.into(), datatype: Some(datatype), language: None }
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn datatype(&self) -> Option<&Iri> {
        self.datatype.as_ref()
    }

    pub fn language(&self) -> Option<&str> {
        self.language.as_deref()
    }
}

/// A blank node with a graph-local label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlankNode {
    label: String,
}

impl BlankNode {
    pub fn new(label: impl Into<String>) -> Self {
        BlankNode { label: label.into() }
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// An RDF term: exactly one of an IRI, a literal, or a blank node.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Iri(Iri),
    Literal(Literal),
    Blank(BlankNode),
}

impl Term {
    pub fn iri(text: impl Into<String>) -> Result<Self, TermError> {
        Ok(Term::Iri(Iri::new(text)?))
    }

    pub fn literal(lexical: impl Into<String>) -> Self {
        Term::Literal(Literal::plain(lexical))
    }

    pub fn blank(label: impl Into<String>) -> Self {
        Term::Blank(BlankNode::new(label))
    }

    pub fn is_iri(&self) -> bool {
        matches!(self, Term::Iri(_))
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Term::Literal(_))
    }

    pub fn is_blank(&self) -> bool {
        matches!(self, Term::Blank(_))
    }

    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Term::Literal(lit) => Some(lit),
            _ => None,
        }
    }

    /// The bare value of the term: IRI text, literal lexical form, or blank
    /// node label. Used by display-oriented output formats.
    pub fn value_text(&self) -> &str {
        match self {
            Term::Iri(iri) => iri.as_str(),
            Term::Literal(lit) => lit.lexical(),
            Term::Blank(b) => b.label(),
        }
    }

    /// The N-Triples rendering of the term.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl From<Iri> for Term {
    fn from(iri: Iri) -> Self {
        Term::Iri(iri)
    }
}

impl From<Literal> for Term {
    fn from(lit: Literal) -> Self {
        Term::Literal(lit)
    }
}

impl From<BlankNode> for Term {
    fn from(b: BlankNode) -> Self {
        Term::Blank(b)
    }
}

/// Escapes a literal's lexical text for N-Triples output. Only `"`, `\`,
/// newline, and tab are escaped; every other character passes through.
pub fn escape_literal(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            _ => out.push(c),
        }
    }
    out
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(iri) => write!(f, "<{}>", iri.as_str()),
            Term::Blank(b) => write!(f, "_:{}", b.label()),
            Term::Literal(lit) => {
                write!(f, "\"{}\"", escape_literal(lit.lexical()))?;
                if let Some(tag) = lit.language() {
                    write!(f, "@{tag}")?;
                } else if let Some(dt) = lit.datatype() {
                    write!(f, "^^<{}>", dt.as_str())?;
                }
                Ok(())
            }
        }
    }
}

// Terms order by their rendered text. The rendering is injective, so this
// order is consistent with structural equality.
impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.render().cmp(&other.render())
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// One RDF statement. The subject is an IRI or blank node and the predicate
/// is always an IRI; both are enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    subject: Term,
    predicate: Term,
    object: Term,
}

impl Triple {
    pub fn new(subject: Term, predicate: Term, object: Term) -> Result<Self, TermError> {
        if subject.is_literal() {
            return Err(TermError::LiteralSubject);
        }
        if !predicate.is_iri() {
            return Err(TermError::NonIriPredicate);
        }
        Ok(Triple { subject, predicate, object })
    }

    pub fn subject(&self) -> &Term {
        &self.subject
    }

    pub fn predicate(&self) -> &Term {
        &self.predicate
    }

    pub fn object(&self) -> &Term {
        &self.object
    }

    pub fn into_parts(self) -> (Term, Term, Term) {
        (self.subject, self.predicate, self.object)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} .", self.subject, self.predicate, self.object)
    }
}

/// Namespace prefix bindings. Rebinding a prefix replaces the old binding.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrefixMap {
    bindings: BTreeMap<String, Iri>,
}

impl PrefixMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(&mut self, prefix: impl Into<String>, namespace: Iri) {
        self.bindings.insert(prefix.into(), namespace);
    }

    pub fn get(&self, prefix: &str) -> Option<&Iri> {
        self.bindings.get(prefix)
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Iri)> {
        self.bindings.iter().map(|(p, iri)| (p.as_str(), iri))
    }

    /// Expands `prefix:local` against the bound namespaces. The qname must
    /// contain exactly one ':'.
    pub fn expand(&self, qname: &str) -> Result<Iri, TermError> {
        let mut parts = qname.splitn(2, ':');
        let prefix = parts.next().unwrap_or("");
        let local = match parts.next() {
            Some(l) if !l.contains(':') => l,
            _ => return Err(TermError::MalformedQName(qname.to_string())),
        };
        let namespace = self
            .bindings
            .get(prefix)
            .ok_or_else(|| TermError::UnknownPrefix(prefix.to_string()))?;
        Iri::new(format!("{}{}", namespace.as_str(), local))
    }
}
