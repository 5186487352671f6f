//! Semantic data toolkit: an RDF triple store with permutation indexes, a
//! SPARQL-subset query engine, N-Triples/Turtle serialization, a small
//! class-tree ontology with a bundled universities knowledge base, and
//! keyword co-occurrence search with query expansion.
//!
//! Everything is deterministic: equal inputs give byte-identical output,
//! whatever the insertion order.

pub mod model;
pub mod ontology;
pub mod search;
pub mod serialization;
pub mod sparql;
pub mod store;
pub mod vocab;

/// Output styles shared by the query and search renderers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}
