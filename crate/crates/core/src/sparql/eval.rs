//! Pattern evaluation: greedy selectivity ordering followed by an
//! index-nested-loop join.

use std::collections::{BTreeMap, BTreeSet};

use crate::model::Term;
use crate::sparql::{PatternTerm, Query, QueryPattern, SolutionSequence};
use crate::store::{Store, TriplePattern};

/// Orders the basic graph pattern for evaluation: cheapest pattern first,
/// judged by how many triples each would match on its own with variables as
/// wildcards. Ties keep their written order. Reordering never changes the
/// result set, only the work done to produce it.
pub fn plan_bgp(query: &Query, store: &Store) -> Vec<QueryPattern> {
    let mut ordered: Vec<(usize, &QueryPattern)> = query
        .patterns()
        .iter()
        .map(|p| (store.count_matching(&bind(p, &BTreeMap::new())), p))
        .collect();
    ordered.sort_by_key(|(estimate, _)| *estimate);
    ordered.into_iter().map(|(_, p)| p.clone()).collect()
}

/// Runs the query with the planner's pattern order.
pub fn evaluate(query: &Query, store: &Store) -> SolutionSequence {
    join(query, store, &plan_bgp(query, store))
}

/// Runs the query with patterns exactly as written. Exists so tests can
/// check the planner is an optimization and nothing more.
pub fn evaluate_in_source_order(query: &Query, store: &Store) -> SolutionSequence {
    join(query, store, query.patterns())
}

/// Substitutes a partial binding into a pattern; unbound variables become
/// wildcards.
fn bind(pattern: &QueryPattern, binding: &BTreeMap<String, Term>) -> TriplePattern {
    let slot = |term: &PatternTerm| match term {
        PatternTerm::Concrete(t) => Some(t.clone()),
        PatternTerm::Variable(v) => binding.get(v).cloned(),
    };
    TriplePattern::new(slot(&pattern.subject), slot(&pattern.predicate), slot(&pattern.object))
}

fn join(query: &Query, store: &Store, patterns: &[QueryPattern]) -> SolutionSequence {
    let mut bindings: Vec<BTreeMap<String, Term>> = vec![BTreeMap::new()];
    for pattern in patterns {
        let mut extended = Vec::new();
        for binding in &bindings {
            for triple in store.triples_matching(&bind(pattern, binding)) {
                let positions = [
                    (&pattern.subject, triple.subject()),
                    (&pattern.predicate, triple.predicate()),
                    (&pattern.object, triple.object()),
                ];
                let mut candidate = binding.clone();
                // a variable repeated within one pattern must match one term
                let consistent = positions.into_iter().all(|(slot, term)| match slot {
                    PatternTerm::Concrete(_) => true,
                    PatternTerm::Variable(v) => match candidate.get(v) {
                        Some(bound) => bound == term,
                        None => {
                            candidate.insert(v.clone(), term.clone());
                            true
                        }
                    },
                });
                if consistent {
                    extended.push(candidate);
                }
            }
        }
        bindings = extended;
        if bindings.is_empty() {
            break;
        }
    }

    // set semantics: project, dedup, and order by rendered binding text
    let projected: BTreeSet<Vec<Term>> = bindings
        .into_iter()
        .map(|binding| {
            query
                .projection()
                .iter()
                .map(|v| binding.get(v).expect("projected variables are bound").clone())
                .collect()
        })
        .collect();
    SolutionSequence::from_rows(query.projection().to_vec(), projected.into_iter().collect())
}
