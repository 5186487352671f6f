//! Keyword co-occurrence search.
//!
//! A query's keywords select candidate documents; every other keyword those
//! candidates mention is counted across the candidate set and ranked. The
//! ranked expansion then re-scores the candidates themselves, and an
//! optional discard step estimates how many of a larger result population
//! survive a bottom-fraction cut.

mod corpus;

pub use corpus::{fixture_corpus, keysets_from_ontology, normalize_keywords, tokenize, Corpus, KeywordSet};

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::OutputFormat;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("discard fraction must be within [0, 1], got {0}")]
    FractionOutOfRange(f64),
}

/// How often a pool keyword occurs across the candidate documents. Query
/// keywords are excluded from counting rather than counted at zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Occurrence {
    Excluded,
    Count(u64),
}

/// Occurrence data for every keyword in the pool.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OccurrenceTable {
    entries: BTreeMap<String, Occurrence>,
}

impl OccurrenceTable {
    pub fn get(&self, keyword: &str) -> Option<Occurrence> {
        self.entries.get(keyword).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Occurrence)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

/// One expansion keyword with its count and 1-based rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankedKeyword {
    pub keyword: String,
    pub count: u64,
    pub rank: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SearchOptions {
    pub total_pages: Option<u64>,
    pub discard_fraction: Option<f64>,
    pub top_k: Option<usize>,
}

/// Everything one search run produced.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub query: BTreeSet<String>,
    pub candidates: BTreeSet<String>,
    pub pool: BTreeSet<String>,
    pub expansion: Vec<RankedKeyword>,
    pub documents: Vec<(String, u64)>,
    pub retained_estimate: Option<u64>,
}

/// Documents sharing at least one query keyword, found by merging inverted
/// index rows rather than scanning the corpus.
pub fn collect_candidates(query: &BTreeSet<String>, corpus: &Corpus) -> BTreeSet<String> {
    let mut candidates = BTreeSet::new();
    for keyword in query {
        if let Some(ids) = corpus.postings(keyword) {
            candidates.extend(ids.iter().cloned());
        }
    }
    candidates
}

/// The keyword pool: every keyword mentioned by any candidate document.
pub fn union_pool(candidates: &BTreeSet<String>, corpus: &Corpus) -> BTreeSet<String> {
    let mut pool = BTreeSet::new();
    for id in candidates {
        if let Some(doc) = corpus.get(id) {
            pool.extend(doc.keywords().iter().cloned());
        }
    }
    pool
}

/// Counts, for each pool keyword, how many candidate documents mention it.
/// Query keywords are marked excluded instead of counted. `pool` is
/// expected to be `union_pool(candidates)`.
pub fn occurrence_counts(
    pool: &BTreeSet<String>,
    query: &BTreeSet<String>,
    candidates: &BTreeSet<String>,
    corpus: &Corpus,
) -> OccurrenceTable {
    let mut entries = BTreeMap::new();
    for keyword in pool {
        let occurrence = if query.contains(keyword) {
            Occurrence::Excluded
        } else {
            let count = corpus
                .postings(keyword)
                .map_or(0, |ids| ids.intersection(candidates).count());
            Occurrence::Count(count as u64)
        };
        entries.insert(keyword.clone(), occurrence);
    }
    OccurrenceTable { entries }
}

/// Orders the counted keywords by descending count, ties alphabetical, and
/// assigns 1-based ranks.
pub fn rank_expansion(table: &OccurrenceTable) -> Vec<RankedKeyword> {
    let mut counted: Vec<(&str, u64)> = table
        .iter()
        .filter_map(|(keyword, occurrence)| match occurrence {
            Occurrence::Count(count) => Some((keyword, count)),
            Occurrence::Excluded => None,
        })
        .collect();
    counted.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    counted
        .into_iter()
        .enumerate()
        .map(|(i, (keyword, count))| RankedKeyword {
            keyword: keyword.to_string(),
            count,
            rank: i + 1,
        })
        .collect()
}

/// Pages retained after discarding a fraction of the total, rounded to the
/// nearest whole page.
pub fn apply_discard(total_pages: u64, fraction: f64) -> Result<u64, SearchError> {
    if !(0.0..=1.0).contains(&fraction) {
        return Err(SearchError::FractionOutOfRange(fraction));
    }
    Ok((total_pages as f64 * (1.0 - fraction)).round() as u64)
}

/// Scores each candidate by summing the counts of the expansion keywords it
/// contains, highest first, ties by id.
pub fn rerank_documents(
    candidates: &BTreeSet<String>,
    expansion: &[RankedKeyword],
    corpus: &Corpus,
) -> Vec<(String, u64)> {
    let mut scored: Vec<(String, u64)> = candidates
        .iter()
        .map(|id| {
            let score = corpus.get(id).map_or(0, |doc| {
                expansion
                    .iter()
                    .filter(|entry| doc.contains(&entry.keyword))
                    .map(|entry| entry.count)
                    .sum()
            });
            (id.clone(), score)
        })
        .collect();
    scored.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    scored
}

/// Fraction of candidates whose expansion keywords all sit in the lowest
/// count tier. Informational only; `None` when there is nothing to measure.
pub fn bottom_tier_only_fraction(result: &SearchResult, corpus: &Corpus) -> Option<f64> {
    let bottom = result.expansion.iter().map(|e| e.count).min()?;
    if result.candidates.is_empty() {
        return None;
    }
    let counts: BTreeMap<&str, u64> =
        result.expansion.iter().map(|e| (e.keyword.as_str(), e.count)).collect();
    let only_bottom = result
        .candidates
        .iter()
        .filter(|id| {
            let Some(doc) = corpus.get(id) else { return false };
            let expansion_keywords: Vec<u64> = doc
                .keywords()
                .iter()
                .filter_map(|k| counts.get(k.as_str()).copied())
                .collect();
            !expansion_keywords.is_empty() && expansion_keywords.iter().all(|c| *c == bottom)
        })
        .count();
    Some(only_bottom as f64 / result.candidates.len() as f64)
}

/// Runs the whole pipeline over free query text.
pub fn search(
    query_text: &str,
    corpus: &Corpus,
    options: &SearchOptions,
) -> Result<SearchResult, SearchError> {
    if let Some(fraction) = options.discard_fraction {
        if !(0.0..=1.0).contains(&fraction) {
            return Err(SearchError::FractionOutOfRange(fraction));
        }
    }
    let query = tokenize(query_text);
    let candidates = collect_candidates(&query, corpus);
    let pool = union_pool(&candidates, corpus);
    let table = occurrence_counts(&pool, &query, &candidates, corpus);
    let expansion = rank_expansion(&table);
    let mut documents = rerank_documents(&candidates, &expansion, corpus);
    if let Some(k) = options.top_k {
        documents.truncate(k);
    }
    let retained_estimate = match (options.total_pages, options.discard_fraction) {
        (Some(total), Some(fraction)) => Some(apply_discard(total, fraction)?),
        _ => None,
    };
    Ok(SearchResult { query, candidates, pool, expansion, documents, retained_estimate })
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    id: &'a str,
    score: u64,
}

#[derive(Serialize)]
struct JsonResult<'a> {
    query: &'a BTreeSet<String>,
    candidates: &'a BTreeSet<String>,
    pool_size: usize,
    expansion: &'a [RankedKeyword],
    documents: Vec<JsonDocument<'a>>,
    retained_estimate: Option<u64>,
}

impl SearchResult {
    pub fn to_json(&self) -> String {
        let doc = JsonResult {
            query: &self.query,
            candidates: &self.candidates,
            pool_size: self.pool.len(),
            expansion: &self.expansion,
            documents: self
                .documents
                .iter()
                .map(|(id, score)| JsonDocument { id, score: *score })
                .collect(),
            retained_estimate: self.retained_estimate,
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("search results serialize");
        text.push('\n');
        text
    }
}

/// Renders a search result for people (table), machines (json), or
/// spreadsheets (csv of the document scores).
pub fn format_search_result(result: &SearchResult, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => result.to_json(),
        OutputFormat::Csv => {
            let mut out = String::from("id,score\n");
            for (id, score) in &result.documents {
                out.push_str(&format!("{},{score}\n", crate::sparql::csv_escape(id)));
            }
            out
        }
        OutputFormat::Table => {
            let list = |set: &BTreeSet<String>| set.iter().cloned().collect::<Vec<_>>().join(", ");
            let mut out = String::new();
            out.push_str(&format!("query: {}\n", list(&result.query)));
            out.push_str(&format!(
                "candidates ({}): {}\n",
                result.candidates.len(),
                list(&result.candidates)
            ));
            out.push_str(&format!("pool size: {}\n", result.pool.len()));
            out.push_str("\nrank  count  keyword\n");
            for entry in &result.expansion {
                out.push_str(&format!("{:<4}  {:<5}  {}\n", entry.rank, entry.count, entry.keyword));
            }
            out.push_str("\nscore  document\n");
            for (id, score) in &result.documents {
                out.push_str(&format!("{score:<5}  {id}\n"));
            }
            if let Some(retained) = result.retained_estimate {
                out.push_str(&format!("\nretained estimate: {retained}\n"));
            }
            out
        }
    }
}
