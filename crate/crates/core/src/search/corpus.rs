//! Keyword corpora: documents reduced to normalized keyword sets, plus an
//! inverted index kept in lockstep for candidate retrieval.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::model::Term;
use crate::ontology::{Ontology, PropertyKind};
use crate::serialization::ParseDiagnostic;

/// Lowercases, trims, and dedups raw keywords, dropping empties.
pub fn normalize_keywords<I, S>(raw: I) -> BTreeSet<String>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    raw.into_iter()
        .map(|s| s.as_ref().trim().to_lowercase())
        .filter(|s| !s.is_empty())
        .collect()
}

/// Splits free text on every non-alphanumeric character and normalizes the
/// pieces. "Indian Universities" and "indian,universities" tokenize alike.
pub fn tokenize(text: &str) -> BTreeSet<String> {
    normalize_keywords(text.split(|c: char| !c.is_alphanumeric()))
}

/// One document reduced to its keyword set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeywordSet {
    id: String,
    keywords: BTreeSet<String>,
}

impl KeywordSet {
    /// Builds a keyset, normalizing the keywords.
    pub fn new<I, S>(id: impl Into<String>, keywords: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        KeywordSet { id: id.into(), keywords: normalize_keywords(keywords) }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn keywords(&self) -> &BTreeSet<String> {
        &self.keywords
    }

    pub fn contains(&self, keyword: &str) -> bool {
        self.keywords.contains(keyword)
    }
}

#[derive(Serialize, Deserialize)]
struct DocLine {
    id: String,
    keywords: Vec<String>,
}

/// A set of keysets addressed by document id, with a keyword-to-documents
/// transpose maintained on every change.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    documents: BTreeMap<String, KeywordSet>,
    postings: BTreeMap<String, BTreeSet<String>>,
}

impl Corpus {
    pub fn new() -> Self {
        Corpus::default()
    }

    pub fn from_keysets(keysets: impl IntoIterator<Item = KeywordSet>) -> Self {
        let mut corpus = Corpus::new();
        for ks in keysets {
            corpus.insert(ks);
        }
        corpus
    }

    /// Adds a document, replacing any existing one with the same id.
    pub fn insert(&mut self, keyset: KeywordSet) {
        if let Some(old) = self.documents.remove(keyset.id()) {
            for keyword in old.keywords() {
                if let Some(ids) = self.postings.get_mut(keyword) {
                    ids.remove(old.id());
                    if ids.is_empty() {
                        self.postings.remove(keyword);
                    }
                }
            }
        }
        for keyword in keyset.keywords() {
            self.postings.entry(keyword.clone()).or_default().insert(keyset.id().to_string());
        }
        self.documents.insert(keyset.id().to_string(), keyset);
    }

    pub fn get(&self, id: &str) -> Option<&KeywordSet> {
        self.documents.get(id)
    }

    pub fn documents(&self) -> impl Iterator<Item = &KeywordSet> {
        self.documents.values()
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.documents.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    /// Ids of the documents containing a keyword, straight from the
    /// inverted index.
    pub fn postings(&self, keyword: &str) -> Option<&BTreeSet<String>> {
        self.postings.get(keyword)
    }

    pub fn vocabulary(&self) -> impl Iterator<Item = &str> {
        self.postings.keys().map(String::as_str)
    }

    /// Confirms the inverted index is exactly the transpose of the
    /// documents.
    pub fn check_postings(&self) -> bool {
        let mut rebuilt: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        for doc in self.documents.values() {
            for keyword in doc.keywords() {
                rebuilt.entry(keyword.clone()).or_default().insert(doc.id().to_string());
            }
        }
        rebuilt == self.postings
    }

    /// Reads a line-delimited JSON corpus: one `{"id": ..., "keywords":
    /// [...]}` object per line. Blank lines are skipped; later duplicate
    /// ids replace earlier ones.
    pub fn from_jsonl(text: &str) -> Result<Self, ParseDiagnostic> {
        let mut corpus = Corpus::new();
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let doc: DocLine = serde_json::from_str(line)
                .map_err(|e| ParseDiagnostic::error(idx + 1, e.column().max(1), e.to_string()))?;
            corpus.insert(KeywordSet::new(doc.id, doc.keywords));
        }
        Ok(corpus)
    }

    /// Writes the corpus back out as line-delimited JSON, sorted by id.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for doc in self.documents.values() {
            let line = DocLine {
                id: doc.id().to_string(),
                keywords: doc.keywords().iter().cloned().collect(),
            };
            out.push_str(&serde_json::to_string(&line).expect("corpus lines serialize"));
            out.push('\n');
        }
        out
    }
}

/// Derives a keyset per ontology individual: its id is the individual's
/// IRI, its keywords come from the IRI's local name plus every literal
/// value of a datatype property.
pub fn keysets_from_ontology(ontology: &Ontology) -> Corpus {
    let datatype_properties: BTreeSet<_> = ontology
        .properties()
        .filter(|p| p.kind == PropertyKind::Datatype)
        .map(|p| p.name.clone())
        .collect();
    let mut corpus = Corpus::new();
    for individual in ontology.individuals() {
        let mut keywords = tokenize(individual.name.local_name());
        for (property, value) in &individual.values {
            if datatype_properties.contains(property) {
                if let Term::Literal(lit) = value {
                    keywords.extend(tokenize(lit.lexical()));
                }
            }
        }
        corpus.insert(KeywordSet::new(individual.name.as_str(), keywords));
    }
    corpus
}

/// The five-query demo corpus used by `--fixture` search runs: each
/// document is one search's keyword set.
pub fn fixture_corpus() -> Corpus {
    Corpus::from_keysets([
        KeywordSet::new(
            "search1",
            ["indian", "courses", "aiu", "universities", "ugc", "top", "colleges", "states"],
        ),
        KeywordSet::new(
            "search2",
            ["indian", "ugc", "aiu", "list", "exams", "top", "universities"],
        ),
        KeywordSet::new(
            "search3",
            ["universities", "ugc", "colleges", "top", "indian", "ranking"],
        ),
        KeywordSet::new(
            "search4",
            ["indian", "states", "aiu", "universities", "questions", "ranking"],
        ),
        KeywordSet::new(
            "search5",
            ["indian", "courses", "ranking", "ugc", "states", "universities"],
        ),
    ])
}
