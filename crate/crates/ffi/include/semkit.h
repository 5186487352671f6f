/* C interface for the semkit RDF and keyword-search toolkit. */

#ifndef SEMKIT_H
#define SEMKIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * What a fallible call reports.
 */
typedef enum SemkitStatus {
  SEMKIT_STATUS_OK = 0,
  SEMKIT_STATUS_NULL_ARGUMENT = 1,
  SEMKIT_STATUS_INVALID_UTF8 = 2,
  SEMKIT_STATUS_PARSE_ERROR = 3,
  SEMKIT_STATUS_QUERY_ERROR = 4,
  SEMKIT_STATUS_SEARCH_ERROR = 5,
  SEMKIT_STATUS_ONTOLOGY_ERROR = 6,
} SemkitStatus;

/**
 * Accepted values for the `format` argument of the formatting calls.
 */
typedef enum SemkitFormat {
  SEMKIT_FORMAT_TABLE = 0,
  SEMKIT_FORMAT_JSON = 1,
  SEMKIT_FORMAT_CSV = 2,
} SemkitFormat;

/**
 * A keyword-search corpus with its inverted index.
 */
typedef struct SemkitCorpus SemkitCorpus;

/**
 * A class hierarchy with properties and individuals.
 */
typedef struct SemkitOntology SemkitOntology;

/**
 * The rows a query produced.
 */
typedef struct SemkitSolutions SemkitSolutions;

/**
 * An RDF graph with its three permutation indexes.
 */
typedef struct SemkitStore SemkitStore;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the message of the last failed call on this thread, or returns
 * null when no call has failed since the last success. Free the copy with
 * `semkit_string_free`.
 */
char *semkit_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `text` must be a pointer previously returned by a `semkit_*` call and
 * not freed already.
 */
void semkit_string_free(char *text);

/**
 * Creates an empty store. Free with `semkit_store_free`.
 */
struct SemkitStore *semkit_store_new(void);

/**
 * Releases a store. Null is ignored.
 *
 * # Safety
 * `store` must come from `semkit_store_new` and not be freed already.
 */
void semkit_store_free(struct SemkitStore *store);

/**
 * Parses N-Triples text and adds every triple to the store. On a parse
 * error the store is left unchanged.
 *
 * # Safety
 * `store` must be a live store handle and `text` a NUL-terminated string.
 */
enum SemkitStatus semkit_store_load_ntriples(struct SemkitStore *store, const char *text);

/**
 * Parses Turtle text and adds every triple to the store. On a parse error
 * the store is left unchanged.
 *
 * # Safety
 * `store` must be a live store handle and `text` a NUL-terminated string.
 */
enum SemkitStatus semkit_store_load_turtle(struct SemkitStore *store, const char *text);

/**
 * Number of distinct triples held. Null reports 0.
 *
 * # Safety
 * `store` must be a live store handle or null.
 */
uintptr_t semkit_store_len(const struct SemkitStore *store);

/**
 * Serializes the whole store as canonical N-Triples: sorted, deduplicated,
 * byte-stable. Free the result with `semkit_string_free`.
 *
 * # Safety
 * `store` must be a live store handle or null (which yields null).
 */
char *semkit_store_to_ntriples(const struct SemkitStore *store);

/**
 * Parses and runs a SELECT query against the store. Returns null and sets
 * the last error when the query text is invalid. Free the result with
 * `semkit_solutions_free`.
 *
 * # Safety
 * `store` must be a live store handle and `query` a NUL-terminated string.
 */
struct SemkitSolutions *semkit_store_query(const struct SemkitStore *store, const char *query);

/**
 * Releases a solution set. Null is ignored.
 *
 * # Safety
 * `solutions` must come from `semkit_store_query` and not be freed already.
 */
void semkit_solutions_free(struct SemkitSolutions *solutions);

/**
 * Number of result rows. Null reports 0.
 *
 * # Safety
 * `solutions` must be a live solutions handle or null.
 */
uintptr_t semkit_solutions_row_count(const struct SemkitSolutions *solutions);

/**
 * Number of projected variables. Null reports 0.
 *
 * # Safety
 * `solutions` must be a live solutions handle or null.
 */
uintptr_t semkit_solutions_variable_count(const struct SemkitSolutions *solutions);

/**
 * Renders the rows in the requested format (a `SemkitFormat` value). Free
 * the result with `semkit_string_free`.
 *
 * # Safety
 * `solutions` must be a live solutions handle or null (which yields null).
 */
char *semkit_solutions_format(const struct SemkitSolutions *solutions, int format);

/**
 * The five-document corpus used throughout the documentation. Free with
 * `semkit_corpus_free`.
 */
struct SemkitCorpus *semkit_corpus_fixture(void);

/**
 * Builds a corpus from line-delimited JSON, one `{"id": ..., "keywords":
 * [...]}` document per line. Returns null and sets the last error on
 * malformed input. Free with `semkit_corpus_free`.
 *
 * # Safety
 * `text` must be a NUL-terminated string.
 */
struct SemkitCorpus *semkit_corpus_from_jsonl(const char *text);

/**
 * Releases a corpus. Null is ignored.
 *
 * # Safety
 * `corpus` must come from a corpus constructor and not be freed already.
 */
void semkit_corpus_free(struct SemkitCorpus *corpus);

/**
 * Number of documents. Null reports 0.
 *
 * # Safety
 * `corpus` must be a live corpus handle or null.
 */
uintptr_t semkit_corpus_len(const struct SemkitCorpus *corpus);

/**
 * Runs a keyword search and returns the full result as a JSON document.
 * Negative `total_pages`, `discard_fraction`, or `top_k` mean "not set";
 * `discard_fraction` must otherwise lie within [0, 1]. Free the result
 * with `semkit_string_free`.
 *
 * # Safety
 * `corpus` must be a live corpus handle and `query` a NUL-terminated
 * string.
 */
char *semkit_search_json(const struct SemkitCorpus *corpus,
                         const char *query,
                         int64_t total_pages,
                         double discard_fraction,
                         int64_t top_k);

/**
 * The Indian-universities example ontology. Free with
 * `semkit_ontology_free`.
 */
struct SemkitOntology *semkit_ontology_fixture(void);

/**
 * Rebuilds an ontology from N-Triples text, the inverse of
 * `semkit_ontology_to_ntriples`. Returns null and sets the last error when
 * the text does not parse or does not describe a well-formed ontology.
 * Free with `semkit_ontology_free`.
 *
 * # Safety
 * `text` must be a NUL-terminated string.
 */
struct SemkitOntology *semkit_ontology_from_ntriples(const char *text);

/**
 * Releases an ontology. Null is ignored.
 *
 * # Safety
 * `ontology` must come from an ontology constructor and not be freed
 * already.
 */
void semkit_ontology_free(struct SemkitOntology *ontology);

/**
 * Flattens the ontology to canonical N-Triples. Free the result with
 * `semkit_string_free`.
 *
 * # Safety
 * `ontology` must be a live ontology handle or null (which yields null).
 */
char *semkit_ontology_to_ntriples(const struct SemkitOntology *ontology);

/**
 * Renders the class hierarchy as GraphViz DOT, optionally with individuals
 * as boxed nodes. Free the result with `semkit_string_free`.
 *
 * # Safety
 * `ontology` must be a live ontology handle or null (which yields null).
 */
char *semkit_ontology_to_dot(const struct SemkitOntology *ontology, bool include_individuals);

/**
 * Renders the class hierarchy as an indented text tree. Free the result
 * with `semkit_string_free`.
 *
 * # Safety
 * `ontology` must be a live ontology handle or null (which yields null).
 */
char *semkit_ontology_class_tree(const struct SemkitOntology *ontology);

/**
 * Derives a search corpus from the ontology's individuals: one document
 * per individual, keyed by its datatype property values. Free with
 * `semkit_corpus_free`.
 *
 * # Safety
 * `ontology` must be a live ontology handle or null (which yields null).
 */
struct SemkitCorpus *semkit_ontology_corpus(const struct SemkitOntology *ontology);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEMKIT_H */
