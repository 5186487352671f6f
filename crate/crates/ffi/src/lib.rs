//! C interface over the toolkit: opaque handles, integer status codes, and
//! UTF-8 strings the caller owns.
//!
//! Conventions, in full:
//! - Handles come from `semkit_*_new`/`semkit_*_fixture`/`semkit_*_from_*`
//!   constructors and are released with the matching `semkit_*_free`. A null
//!   handle is never dereferenced; passing one yields
//!   `SEMKIT_STATUS_NULL_ARGUMENT`, a zero count, or a null result.
//! - Returned `char*` values are heap copies. Free them (and nothing else)
//!   with `semkit_string_free`.
//! - Fallible calls either return a `SemkitStatus` or a nullable pointer.
//!   After a failure, `semkit_last_error_message` copies a human-readable
//!   description of what went wrong on the current thread.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use semkit::ontology::{universities_fixture, Ontology};
use semkit::search::{fixture_corpus, keysets_from_ontology, search, Corpus, SearchOptions};
use semkit::serialization::{parse_ntriples, parse_turtle, serialize_ntriples};
use semkit::sparql::{evaluate, format_solutions, parse_query, SolutionSequence};
use semkit::store::Store;
use semkit::OutputFormat;

/// What a fallible call reports.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemkitStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    QueryError = 4,
    SearchError = 5,
    OntologyError = 6,
}

/// Accepted values for the `format` argument of the formatting calls.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemkitFormat {
    Table = 0,
    Json = 1,
    Csv = 2,
}

/// An RDF graph with its three permutation indexes.
pub struct SemkitStore {
    inner: Store,
}

/// The rows a query produced.
pub struct SemkitSolutions {
    inner: SolutionSequence,
}

/// A keyword-search corpus with its inverted index.
pub struct SemkitCorpus {
    inner: Corpus,
}

/// A class hierarchy with properties and individuals.
pub struct SemkitOntology {
    inner: Ontology,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    let text = CString::new(text).expect("NUL bytes were replaced");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

/// Copies the message of the last failed call on this thread, or returns
/// null when no call has failed since the last success. Free the copy with
/// `semkit_string_free`.
#[no_mangle]
pub extern "C" fn semkit_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(text) => text.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `text` must be a pointer previously returned by a `semkit_*` call and
/// not freed already.
#[no_mangle]
pub unsafe extern "C" fn semkit_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

unsafe fn text_arg<'a>(text: *const c_char) -> Result<&'a str, SemkitStatus> {
    if text.is_null() {
        set_last_error("null string argument");
        return Err(SemkitStatus::NullArgument);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_last_error("string argument is not valid UTF-8");
        SemkitStatus::InvalidUtf8
    })
}

fn string_out(text: String) -> *mut c_char {
    match CString::new(text) {
        Ok(owned) => {
            clear_last_error();
            owned.into_raw()
        }
        Err(_) => {
            set_last_error("output contains a NUL byte and cannot cross the C boundary");
            ptr::null_mut()
        }
    }
}

fn format_from(format: c_int) -> Option<OutputFormat> {
    match format {
        0 => Some(OutputFormat::Table),
        1 => Some(OutputFormat::Json),
        2 => Some(OutputFormat::Csv),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Stores and queries.

/// Creates an empty store. Free with `semkit_store_free`.
#[no_mangle]
pub extern "C" fn semkit_store_new() -> *mut SemkitStore {
    Box::into_raw(Box::new(SemkitStore { inner: Store::new() }))
}

/// Releases a store. Null is ignored.
///
/// # Safety
/// `store` must come from `semkit_store_new` and not be freed already.
#[no_mangle]
pub unsafe extern "C" fn semkit_store_free(store: *mut SemkitStore) {
    if !store.is_null() {
        drop(Box::from_raw(store));
    }
}

unsafe fn load_text(store: *mut SemkitStore, text: *const c_char, turtle: bool) -> SemkitStatus {
    let Some(store) = store.as_mut() else {
        set_last_error("null store handle");
        return SemkitStatus::NullArgument;
    };
    let text = match text_arg(text) {
        Ok(text) => text,
        Err(status) => return status,
    };
    let parsed = if turtle { parse_turtle(text) } else { parse_ntriples(text) };
    match parsed {
        Ok(triples) => {
            store.inner.extend(triples);
            clear_last_error();
            SemkitStatus::Ok
        }
        Err(diagnostic) => {
            set_last_error(diagnostic.to_string());
            SemkitStatus::ParseError
        }
    }
}

/// Parses N-Triples text and adds every triple to the store. On a parse
/// error the store is left unchanged.
///
/// # Safety
/// `store` must be a live store handle and `text` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn semkit_store_load_ntriples(
    store: *mut SemkitStore,
    text: *const c_char,
) -> SemkitStatus {
    load_text(store, text, false)
}

/// Parses Turtle text and adds every triple to the store. On a parse error
/// the store is left unchanged.
///
/// # Safety
/// `store` must be a live store handle and `text` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn semkit_store_load_turtle(
    store: *mut SemkitStore,
    text: *const c_char,
) -> SemkitStatus {
    load_text(store, text, true)
}

/// Number of distinct triples held. Null reports 0.
///
/// # Safety
/// `store` must be a live store handle or null.
#[no_mangle]
pub unsafe extern "C" fn semkit_store_len(store: *const SemkitStore) -> usize {
    store.as_ref().map_or(0, |s| s.inner.len())
}

/// Serializes the whole store as canonical N-Triples: sorted, deduplicated,
/// byte-stable. Free the result with `semkit_string_free`.
///
/// # Safety
/// `store` must be a live store handle or null (which yields null).
#[no_mangle]
pub unsafe extern "C" fn semkit_store_to_ntriples(store: *const SemkitStore) -> *mut c_char {
    let Some(store) = store.as_ref() else {
        set_last_error("null store handle");
        return ptr::null_mut();
    };
    let triples: Vec<_> = store.inner.iter().collect();
    string_out(serialize_ntriples(&triples))
}

/// Parses and runs a SELECT query against the store. Returns null and sets
/// the last error when the query text is invalid. Free the result with
/// `semkit_solutions_free`.
///
/// # Safety
/// `store` must be a live store handle and `query` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn semkit_store_query(
    store: *const SemkitStore,
    query: *const c_char,
) -> *mut SemkitSolutions {
    let Some(store) = store.as_ref() else {
        set_last_error("null store handle");
        return ptr::null_mut();
    };
    let text = match text_arg(query) {
        Ok(text) => text,
        Err(_) => return ptr::null_mut(),
    };
    match parse_query(text) {
        Ok(parsed) => {
            let solutions = evaluate(&parsed, &store.inner);
            clear_last_error();
            Box::into_raw(Box::new(SemkitSolutions { inner: solutions }))
        }
        Err(diagnostic) => {
            set_last_error(diagnostic.to_string());
            ptr::null_mut()
        }
    }
}

/// Releases a solution set. Null is ignored.
///
/// # Safety
/// `solutions` must come from `semkit_store_query` and not be freed already.
#[no_mangle]
pub unsafe extern "C" fn semkit_solutions_free(solutions: *mut SemkitSolutions) {
    if !solutions.is_null() {
        drop(Box::from_raw(solutions));
    }
}

/// Number of result rows. Null reports 0.
///
/// # Safety
/// `solutions` must be a live solutions handle or null.
#[no_mangle]
pub unsafe extern "C" fn semkit_solutions_row_count(solutions: *const SemkitSolutions) -> usize {
    solutions.as_ref().map_or(0, |s| s.inner.len())
}

/// Number of projected variables. Null reports 0.
///
/// # Safety
/// `solutions` must be a live solutions handle or null.
#[no_mangle]
pub unsafe extern "C" fn semkit_solutions_variable_count(
    solutions: *const SemkitSolutions,
) -> usize {
    solutions.as_ref().map_or(0, |s| s.inner.variables().len())
}

/// Renders the rows in the requested format (a `SemkitFormat` value). Free
/// the result with `semkit_string_free`.
///
/// # Safety
/// `solutions` must be a live solutions handle or null (which yields null).
#[no_mangle]
pub unsafe extern "C" fn semkit_solutions_format(
    solutions: *const SemkitSolutions,
    format: c_int,
) -> *mut c_char {
    let Some(solutions) = solutions.as_ref() else {
        set_last_error("null solutions handle");
        return ptr::null_mut();
    };
    let Some(format) = format_from(format) else {
        set_last_error(format!("unknown format code {format}"));
        return ptr::null_mut();
    };
    string_out(format_solutions(&solutions.inner, format))
}

// ---------------------------------------------------------------------------
// Corpora and search.

/// The five-document corpus used throughout the documentation. Free with
/// `semkit_corpus_free`.
#[no_mangle]
pub extern "C" fn semkit_corpus_fixture() -> *mut SemkitCorpus {
    Box::into_raw(Box::new(SemkitCorpus { inner: fixture_corpus() }))
}

/// Builds a corpus from line-delimited JSON, one `{"id": ..., "keywords":
/// [...]}` document per line. Returns null and sets the last error on
/// malformed input. Free with `semkit_corpus_free`.
///
/// # Safety
/// `text` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn semkit_corpus_from_jsonl(text: *const c_char) -> *mut SemkitCorpus {
    let text = match text_arg(text) {
        Ok(text) => text,
        Err(_) => return ptr::null_mut(),
    };
    match Corpus::from_jsonl(text) {
        Ok(corpus) => {
            clear_last_error();
            Box::into_raw(Box::new(SemkitCorpus { inner: corpus }))
        }
        Err(diagnostic) => {
            set_last_error(diagnostic.to_string());
            ptr::null_mut()
        }
    }
}

/// Releases a corpus. Null is ignored.
///
/// # Safety
/// `corpus` must come from a corpus constructor and not be freed already.
#[no_mangle]
pub unsafe extern "C" fn semkit_corpus_free(corpus: *mut SemkitCorpus) {
    if !corpus.is_null() {
        drop(Box::from_raw(corpus));
    }
}

/// Number of documents. Null reports 0.
///
/// # Safety
/// `corpus` must be a live corpus handle or null.
#[no_mangle]
pub unsafe extern "C" fn semkit_corpus_len(corpus: *const SemkitCorpus) -> usize {
    corpus.as_ref().map_or(0, |c| c.inner.len())
}

/// Runs a keyword search and returns the full result as a JSON document.
/// Negative `total_pages`, `discard_fraction`, or `top_k` mean "not set";
/// `discard_fraction` must otherwise lie within [0, 1]. Free the result
/// with `semkit_string_free`.
///
/// # Safety
/// `corpus` must be a live corpus handle and `query` a NUL-terminated
/// string.
#[no_mangle]
pub unsafe extern "C" fn semkit_search_json(
    corpus: *const SemkitCorpus,
    query: *const c_char,
    total_pages: i64,
    discard_fraction: f64,
    top_k: i64,
) -> *mut c_char {
    let Some(corpus) = corpus.as_ref() else {
        set_last_error("null corpus handle");
        return ptr::null_mut();
    };
    let query = match text_arg(query) {
        Ok(text) => text,
        Err(_) => return ptr::null_mut(),
    };
    let options = SearchOptions {
        total_pages: u64::try_from(total_pages).ok(),
        discard_fraction: (discard_fraction >= 0.0).then_some(discard_fraction),
        top_k: usize::try_from(top_k).ok(),
    };
    match search(query, &corpus.inner, &options) {
        Ok(result) => string_out(result.to_json()),
        Err(error) => {
            set_last_error(error.to_string());
            ptr::null_mut()
        }
    }
}

// ---------------------------------------------------------------------------
// Ontologies.

/// The Indian-universities example ontology. Free with
/// `semkit_ontology_free`.
#[no_mangle]
pub extern "C" fn semkit_ontology_fixture() -> *mut SemkitOntology {
    Box::into_raw(Box::new(SemkitOntology { inner: universities_fixture() }))
}

/// Rebuilds an ontology from N-Triples text, the inverse of
/// `semkit_ontology_to_ntriples`. Returns null and sets the last error when
/// the text does not parse or does not describe a well-formed ontology.
/// Free with `semkit_ontology_free`.
///
/// # Safety
/// `text` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn semkit_ontology_from_ntriples(text: *const c_char) -> *mut SemkitOntology {
    let text = match text_arg(text) {
        Ok(text) => text,
        Err(_) => return ptr::null_mut(),
    };
    let triples = match parse_ntriples(text) {
        Ok(triples) => triples,
        Err(diagnostic) => {
            set_last_error(diagnostic.to_string());
            return ptr::null_mut();
        }
    };
    match Ontology::from_triples(&triples) {
        Ok(ontology) => {
            clear_last_error();
            Box::into_raw(Box::new(SemkitOntology { inner: ontology }))
        }
        Err(error) => {
            set_last_error(error.to_string());
            ptr::null_mut()
        }
    }
}

/// Releases an ontology. Null is ignored.
///
/// # Safety
/// `ontology` must come from an ontology constructor and not be freed
/// already.
#[no_mangle]
pub unsafe extern "C" fn semkit_ontology_free(ontology: *mut SemkitOntology) {
    if !ontology.is_null() {
        drop(Box::from_raw(ontology));
    }
}

/// Flattens the ontology to canonical N-Triples. Free the result with
/// `semkit_string_free`.
///
/// # Safety
/// `ontology` must be a live ontology handle or null (which yields null).
#[no_mangle]
pub unsafe extern "C" fn semkit_ontology_to_ntriples(
    ontology: *const SemkitOntology,
) -> *mut c_char {
    let Some(ontology) = ontology.as_ref() else {
        set_last_error("null ontology handle");
        return ptr::null_mut();
    };
    string_out(serialize_ntriples(&ontology.inner.to_triples()))
}

/// Renders the class hierarchy as GraphViz DOT, optionally with individuals
/// as boxed nodes. Free the result with `semkit_string_free`.
///
/// # Safety
/// `ontology` must be a live ontology handle or null (which yields null).
#[no_mangle]
pub unsafe extern "C" fn semkit_ontology_to_dot(
    ontology: *const SemkitOntology,
    include_individuals: bool,
) -> *mut c_char {
    let Some(ontology) = ontology.as_ref() else {
        set_last_error("null ontology handle");
        return ptr::null_mut();
    };
    string_out(ontology.inner.export_dot(include_individuals))
}

/// Renders the class hierarchy as an indented text tree. Free the result
/// with `semkit_string_free`.
///
/// # Safety
/// `ontology` must be a live ontology handle or null (which yields null).
#[no_mangle]
pub unsafe extern "C" fn semkit_ontology_class_tree(
    ontology: *const SemkitOntology,
) -> *mut c_char {
    let Some(ontology) = ontology.as_ref() else {
        set_last_error("null ontology handle");
        return ptr::null_mut();
    };
    string_out(ontology.inner.class_tree())
}

/// Derives a search corpus from the ontology's individuals: one document
/// per individual, keyed by its datatype property values. Free with
/// `semkit_corpus_free`.
///
/// # Safety
/// `ontology` must be a live ontology handle or null (which yields null).
#[no_mangle]
pub unsafe extern "C" fn semkit_ontology_corpus(
    ontology: *const SemkitOntology,
) -> *mut SemkitCorpus {
    let Some(ontology) = ontology.as_ref() else {
        set_last_error("null ontology handle");
        return ptr::null_mut();
    };
    clear_last_error();
    Box::into_raw(Box::new(SemkitCorpus { inner: keysets_from_ontology(&ontology.inner) }))
}
