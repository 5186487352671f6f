//! In-memory triple store indexed three ways.
//!
//! Every triple is held in SPO, POS, and OSP permutation indexes built from
//! nested ordered maps, so any pattern of bound and wildcard positions is
//! answered with one prefix scan of the best-fitting index. Results always
//! come back in canonical (subject, predicate, object) order.

use std::collections::{BTreeMap, BTreeSet};

use crate::model::{Term, Triple};

type Index = BTreeMap<Term, BTreeMap<Term, BTreeSet<Term>>>;

/// A match pattern: `None` in a position is a wildcard.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TriplePattern {
    pub subject: Option<Term>,
    pub predicate: Option<Term>,
    pub object: Option<Term>,
}

impl TriplePattern {
    pub fn new(subject: Option<Term>, predicate: Option<Term>, object: Option<Term>) -> Self {
        TriplePattern { subject, predicate, object }
    }

    /// The all-wildcard pattern, matching every triple.
    pub fn any() -> Self {
        TriplePattern::default()
    }

    pub fn matches(&self, triple: &Triple) -> bool {
        fn check(slot: &Option<Term>, term: &Term) -> bool {
            slot.as_ref().map_or(true, |t| t == term)
        }
        check(&self.subject, triple.subject())
            && check(&self.predicate, triple.predicate())
            && check(&self.object, triple.object())
    }
}

/// Which permutation index answers a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexOrder {
    Spo,
    Pos,
    Osp,
}

#[derive(Debug, Clone, Default)]
pub struct Store {
    spo: Index,
    pos: Index,
    osp: Index,
    len: usize,
}

fn index_insert(index: &mut Index, a: &Term, b: &Term, c: &Term) {
    index
        .entry(a.clone())
        .or_default()
        .entry(b.clone())
        .or_default()
        .insert(c.clone());
}

fn index_remove(index: &mut Index, a: &Term, b: &Term, c: &Term) {
    if let Some(middle) = index.get_mut(a) {
        if let Some(leaf) = middle.get_mut(b) {
            leaf.remove(c);
            if leaf.is_empty() {
                middle.remove(b);
            }
        }
        if middle.is_empty() {
            index.remove(a);
        }
    }
}

impl Store {
    pub fn new() -> Self {
        Store::default()
    }

    pub fn from_triples(triples: impl IntoIterator<Item = Triple>) -> Self {
        let mut store = Store::new();
        store.extend(triples);
        store
    }

    pub fn extend(&mut self, triples: impl IntoIterator<Item = Triple>) {
        for t in triples {
            self.insert(t);
        }
    }

    /// Inserts a triple into all three indexes. Returns false if it was
    /// already present.
    pub fn insert(&mut self, triple: Triple) -> bool {
        if self.contains(&triple) {
            return false;
        }
        let (s, p, o) = triple.into_parts();
        index_insert(&mut self.spo, &s, &p, &o);
        index_insert(&mut self.pos, &p, &o, &s);
        index_insert(&mut self.osp, &o, &s, &p);
        self.len += 1;
        true
    }

    /// Removes a triple from all three indexes. Returns false if absent.
    pub fn remove(&mut self, triple: &Triple) -> bool {
        if !self.contains(triple) {
            return false;
        }
        let (s, p, o) = (triple.subject(), triple.predicate(), triple.object());
        index_remove(&mut self.spo, s, p, o);
        index_remove(&mut self.pos, p, o, s);
        index_remove(&mut self.osp, o, s, p);
        self.len -= 1;
        true
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.contains_terms(triple.subject(), triple.predicate(), triple.object())
    }

    /// Membership check on raw terms. Unlike `contains` this asks nothing of
    /// the roles, so patterns with terms no triple could hold (a literal
    /// subject, say) simply report false.
    fn contains_terms(&self, s: &Term, p: &Term, o: &Term) -> bool {
        self.spo
            .get(s)
            .and_then(|m| m.get(p))
            .is_some_and(|leaf| leaf.contains(o))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// All triples in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = Triple> + '_ {
        self.spo.iter().flat_map(|(s, middle)| {
            middle.iter().flat_map(move |(p, leaf)| {
                leaf.iter().map(move |o| rebuild(s, p, o))
            })
        })
    }

    /// All triples matching the pattern, in canonical order. Picks the index
    /// whose key order turns the bound positions into a prefix scan.
    pub fn triples_matching(&self, pattern: &TriplePattern) -> Vec<Triple> {
        let mut found = match (&pattern.subject, &pattern.predicate, &pattern.object) {
            (Some(s), Some(p), Some(o)) => {
                if self.contains_terms(s, p, o) {
                    vec![rebuild(s, p, o)]
                } else {
                    vec![]
                }
            }
            (Some(s), Some(p), None) => lookup2(&self.spo, s, p)
                .map(|o| rebuild(s, p, o))
                .collect(),
            (Some(s), None, Some(o)) => lookup2(&self.osp, o, s)
                .map(|p| rebuild(s, p, o))
                .collect(),
            (None, Some(p), Some(o)) => lookup2(&self.pos, p, o)
                .map(|s| rebuild(s, p, o))
                .collect(),
            (Some(s), None, None) => lookup1(&self.spo, s)
                .map(|(p, o)| rebuild(s, p, o))
                .collect(),
            (None, Some(p), None) => lookup1(&self.pos, p)
                .map(|(o, s)| rebuild(s, p, o))
                .collect(),
            (None, None, Some(o)) => lookup1(&self.osp, o)
                .map(|(s, p)| rebuild(s, p, o))
                .collect(),
            (None, None, None) => self.iter().collect(),
        };
        found.sort_unstable();
        found
    }

    /// How many triples match, without materializing them.
    pub fn count_matching(&self, pattern: &TriplePattern) -> usize {
        match (&pattern.subject, &pattern.predicate, &pattern.object) {
            (Some(s), Some(p), Some(o)) => usize::from(self.contains_terms(s, p, o)),
            (Some(s), Some(p), None) => lookup2(&self.spo, s, p).count(),
            (Some(s), None, Some(o)) => lookup2(&self.osp, o, s).count(),
            (None, Some(p), Some(o)) => lookup2(&self.pos, p, o).count(),
            (Some(s), None, None) => sum_leaves(&self.spo, s),
            (None, Some(p), None) => sum_leaves(&self.pos, p),
            (None, None, Some(o)) => sum_leaves(&self.osp, o),
            (None, None, None) => self.len,
        }
    }

    /// Answers a pattern by scanning one nominated index in full and
    /// filtering. Exists so tests can check that all three indexes hold the
    /// same data; `triples_matching` is the fast path.
    pub fn match_via(&self, pattern: &TriplePattern, order: IndexOrder) -> Vec<Triple> {
        let index = match order {
            IndexOrder::Spo => &self.spo,
            IndexOrder::Pos => &self.pos,
            IndexOrder::Osp => &self.osp,
        };
        let mut found = Vec::new();
        for (a, middle) in index {
            for (b, leaf) in middle {
                for c in leaf {
                    let triple = match order {
                        IndexOrder::Spo => rebuild(a, b, c),
                        IndexOrder::Pos => rebuild(c, a, b),
                        IndexOrder::Osp => rebuild(b, c, a),
                    };
                    if pattern.matches(&triple) {
                        found.push(triple);
                    }
                }
            }
        }
        found.sort_unstable();
        found
    }

    /// Verifies that the three indexes hold identical triple sets and that
    /// the cached length matches.
    pub fn check_consistency(&self) -> bool {
        let via_spo = self.match_via(&TriplePattern::any(), IndexOrder::Spo);
        let via_pos = self.match_via(&TriplePattern::any(), IndexOrder::Pos);
        let via_osp = self.match_via(&TriplePattern::any(), IndexOrder::Osp);
        via_spo.len() == self.len && via_spo == via_pos && via_pos == via_osp
    }
}

fn rebuild(s: &Term, p: &Term, o: &Term) -> Triple {
    Triple::new(s.clone(), p.clone(), o.clone()).expect("stored triples are valid")
}

fn lookup1<'a>(index: &'a Index, a: &Term) -> impl Iterator<Item = (&'a Term, &'a Term)> {
    index
        .get(a)
        .into_iter()
        .flat_map(|middle| middle.iter().flat_map(|(b, leaf)| leaf.iter().map(move |c| (b, c))))
}

fn lookup2<'a>(index: &'a Index, a: &Term, b: &Term) -> impl Iterator<Item = &'a Term> {
    index
        .get(a)
        .and_then(|middle| middle.get(b))
        .into_iter()
        .flatten()
}

fn sum_leaves(index: &Index, a: &Term) -> usize {
    index
        .get(a)
        .map_or(0, |middle| middle.values().map(BTreeSet::len).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Term;
    use proptest::prelude::*;

    fn iri(text: &str) -> Term {
        Term::iri(text).unwrap()
    }

    fn student_triples() -> (Triple, Triple) {
        let sentence1 = Triple::new(
            iri("http://bvcoend.ac.in/info#BhartiVidyapeeth"),
            iri("http://bvcoend.ac.in/info#student"),
            Term::literal("Rohan Sharma"),
        )
        .unwrap();
        let sentence2 = Triple::new(
            iri("http://bvcoend.ac.in/info#RohanSharma"),
            iri("http://bvcoend.ac.in/info#nickname"),
            Term::literal("Rohan"),
        )
        .unwrap();
        (sentence1, sentence2)
    }

    #[test]
    fn insert_is_idempotent() {
        let (t, _) = student_triples();
        let mut store = Store::new();
        assert!(store.insert(t.clone()));
        assert!(!store.insert(t));
        assert_eq!(store.len(), 1);
    }

    #[test]
    fn bound_predicate_scan_finds_one_statement() {
        let (sentence1, sentence2) = student_triples();
        let store = Store::from_triples([sentence1.clone(), sentence2]);
        let pattern = TriplePattern::new(
            None,
            Some(iri("http://bvcoend.ac.in/info#student")),
            None,
        );
        assert_eq!(store.triples_matching(&pattern), vec![sentence1]);
    }

    #[test]
    fn wildcard_scan_returns_everything_in_order() {
        let (sentence1, sentence2) = student_triples();
        let store = Store::from_triples([sentence1.clone(), sentence2.clone()]);
        // canonical order sorts by rendered subject text
        assert_eq!(store.triples_matching(&TriplePattern::any()), vec![sentence1, sentence2]);
    }

    #[test]
    fn fully_bound_pattern_is_membership_test() {
        let (sentence1, sentence2) = student_triples();
        let store = Store::from_triples([sentence1.clone()]);
        let hit = TriplePattern::new(
            Some(sentence1.subject().clone()),
            Some(sentence1.predicate().clone()),
            Some(sentence1.object().clone()),
        );
        assert_eq!(store.triples_matching(&hit), vec![sentence1]);
        let miss = TriplePattern::new(
            Some(sentence2.subject().clone()),
            Some(sentence2.predicate().clone()),
            Some(sentence2.object().clone()),
        );
        assert!(store.triples_matching(&miss).is_empty());
    }

    #[test]
    fn empty_store_matches_nothing() {
        let store = Store::new();
        assert!(store.triples_matching(&TriplePattern::any()).is_empty());
        assert_eq!(store.len(), 0);
        assert!(store.is_empty());
    }

    #[test]
    fn remove_unindexes_everywhere() {
        let (t, _) = student_triples();
        let mut store = Store::from_triples([t.clone()]);
        assert!(store.remove(&t));
        assert!(!store.remove(&t));
        assert_eq!(store.len(), 0);
        assert!(store.triples_matching(&TriplePattern::any()).is_empty());
        assert!(store.check_consistency());
    }

    // Dense little alphabet so random patterns actually collide.
    fn arb_term() -> impl Strategy<Value = Term> {
        prop_oneof![
            "[a-d]".prop_map(|s| Term::iri(format!("http://t/{s}")).unwrap()),
            "[a-b]".prop_map(Term::literal),
            Just(Term::blank("n1")),
        ]
    }

    fn arb_pred() -> impl Strategy<Value = Term> {
        "[p-r]".prop_map(|s| Term::iri(format!("http://t/{s}")).unwrap())
    }

    fn arb_store_triple() -> impl Strategy<Value = Triple> {
        (arb_term().prop_filter("subject", |t| !t.is_literal()), arb_pred(), arb_term())
            .prop_map(|(s, p, o)| Triple::new(s, p, o).unwrap())
    }

    fn arb_pattern() -> impl Strategy<Value = TriplePattern> {
        (
            proptest::option::of(arb_term()),
            proptest::option::of(arb_pred()),
            proptest::option::of(arb_term()),
        )
            .prop_map(|(s, p, o)| TriplePattern::new(s, p, o))
    }

    proptest! {
        #[test]
        fn matching_agrees_with_linear_scan(
            triples in proptest::collection::vec(arb_store_triple(), 0..60),
            pattern in arb_pattern(),
        ) {
            let store = Store::from_triples(triples.clone());

            // brute-force oracle over the raw input, bypassing the indexes
            let mut expected: Vec<Triple> = triples
                .iter()
                .filter(|t| {
                    pattern.subject.as_ref().map_or(true, |s| s == t.subject())
                        && pattern.predicate.as_ref().map_or(true, |p| p == t.predicate())
                        && pattern.object.as_ref().map_or(true, |o| o == t.object())
                })
                .cloned()
                .collect();
            expected.sort_unstable();
            expected.dedup();

            prop_assert_eq!(store.triples_matching(&pattern), expected.clone());
            prop_assert_eq!(store.count_matching(&pattern), expected.len());

            // every index answers every shape identically
            prop_assert_eq!(store.match_via(&pattern, IndexOrder::Spo), expected.clone());
            prop_assert_eq!(store.match_via(&pattern, IndexOrder::Pos), expected.clone());
            prop_assert_eq!(store.match_via(&pattern, IndexOrder::Osp), expected);
        }

        #[test]
        fn inserts_and_removes_keep_indexes_aligned(
            triples in proptest::collection::vec(arb_store_triple(), 0..40),
            removals in proptest::collection::vec(arb_store_triple(), 0..20),
        ) {
            let mut store = Store::new();
            let mut reference: BTreeSet<Triple> = BTreeSet::new();
            for t in triples {
                prop_assert_eq!(store.insert(t.clone()), reference.insert(t));
            }
            for t in &removals {
                prop_assert_eq!(store.remove(t), reference.remove(t));
            }
            prop_assert_eq!(store.len(), reference.len());
            prop_assert!(store.check_consistency());
            let all: Vec<Triple> = reference.into_iter().collect();
            prop_assert_eq!(store.triples_matching(&TriplePattern::any()), all);
        }
    }
}
