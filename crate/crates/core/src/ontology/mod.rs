//! A small class-tree ontology: named classes under a single root, typed
//! properties with domains, and individuals with property values.
//!
//! The class hierarchy is a forest rooted at `owl:Thing`. Parents must be
//! declared before their children, so the only cycle that could ever form
//! is a class naming itself.

mod fixture;

pub use fixture::{universities_fixture, FIXTURE_IRI};

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::model::{Iri, Term, Triple};
use crate::vocab;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OntologyError {
    #[error("class is already declared: {0}")]
    DuplicateClass(Iri),
    #[error("parent class is not declared: {0}")]
    UnknownParent(Iri),
    #[error("class cannot be its own ancestor: {0}")]
    CycleWouldForm(Iri),
    #[error("property domain is not a declared class: {0}")]
    UnknownDomainClass(Iri),
    #[error("property is already declared: {0}")]
    DuplicateProperty(Iri),
    #[error("class is not declared: {0}")]
    UnknownClass(Iri),
    #[error("property is not declared: {0}")]
    UnknownProperty(Iri),
    #[error("property {property} does not apply to class {class}")]
    DomainViolation { property: Iri, class: Iri },
    #[error("no ontology header triple found")]
    MissingOntologyHeader,
    #[error("property has no domain: {0}")]
    MissingDomain(Iri),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OntClass {
    pub name: Iri,
    /// `None` means the class sits directly under the root.
    pub parent: Option<Iri>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropertyKind {
    Object,
    Datatype,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertyRange {
    Class(Iri),
    Datatype(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OntProperty {
    pub name: Iri,
    pub kind: PropertyKind,
    pub domain: Iri,
    /// Recorded but not enforced on values.
    pub range: Option<PropertyRange>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Individual {
    pub name: Iri,
    pub class: Iri,
    /// Property values in assertion order; values are stored as given.
    pub values: Vec<(Iri, Term)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ontology {
    iri: Iri,
    classes: BTreeMap<Iri, OntClass>,
    properties: BTreeMap<Iri, OntProperty>,
    individuals: BTreeMap<Iri, Individual>,
}

impl Ontology {
    pub fn new(iri: Iri) -> Self {
        Ontology {
            iri,
            classes: BTreeMap::new(),
            properties: BTreeMap::new(),
            individuals: BTreeMap::new(),
        }
    }

    pub fn iri(&self) -> &Iri {
        &self.iri
    }

    /// The implicit root every class hangs under.
    pub fn root() -> Iri {
        vocab::owl_thing()
    }

    /// Declares a class. `parent` must already be declared; `None` (or the
    /// root itself) parents the class directly under the root.
    pub fn define_class(
        &mut self,
        name: Iri,
        parent: Option<Iri>,
    ) -> Result<(), OntologyError> {
        let parent = parent.filter(|p| *p != Self::root());
        if parent.as_ref() == Some(&name) {
            return Err(OntologyError::CycleWouldForm(name));
        }
        if self.classes.contains_key(&name) {
            return Err(OntologyError::DuplicateClass(name));
        }
        if let Some(p) = &parent {
            if !self.classes.contains_key(p) {
                return Err(OntologyError::UnknownParent(p.clone()));
            }
        }
        self.classes.insert(name.clone(), OntClass { name, parent });
        Ok(())
    }

    pub fn add_property(&mut self, property: OntProperty) -> Result<(), OntologyError> {
        if self.properties.contains_key(&property.name) {
            return Err(OntologyError::DuplicateProperty(property.name));
        }
        if !self.classes.contains_key(&property.domain) {
            return Err(OntologyError::UnknownDomainClass(property.domain));
        }
        self.properties.insert(property.name.clone(), property);
        Ok(())
    }

    /// Adds an individual. Its class and every property used must be
    /// declared, and each property's domain must be the individual's class
    /// or one of that class's ancestors. Re-asserting a name replaces the
    /// previous individual.
    pub fn assert_individual(&mut self, individual: Individual) -> Result<(), OntologyError> {
        if !self.classes.contains_key(&individual.class) {
            return Err(OntologyError::UnknownClass(individual.class));
        }
        let compatible: BTreeSet<&Iri> = std::iter::once(&individual.class)
            .chain(self.ancestors(&individual.class))
            .collect();
        for (property, _) in &individual.values {
            let declared = self
                .properties
                .get(property)
                .ok_or_else(|| OntologyError::UnknownProperty(property.clone()))?;
            if !compatible.contains(&declared.domain) {
                return Err(OntologyError::DomainViolation {
                    property: property.clone(),
                    class: individual.class.clone(),
                });
            }
        }
        self.individuals.insert(individual.name.clone(), individual);
        Ok(())
    }

    pub fn classes(&self) -> impl Iterator<Item = &OntClass> {
        self.classes.values()
    }

    pub fn class(&self, name: &Iri) -> Option<&OntClass> {
        self.classes.get(name)
    }

    pub fn properties(&self) -> impl Iterator<Item = &OntProperty> {
        self.properties.values()
    }

    pub fn individuals(&self) -> impl Iterator<Item = &Individual> {
        self.individuals.values()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn property_count(&self, kind: PropertyKind) -> usize {
        self.properties.values().filter(|p| p.kind == kind).count()
    }

    pub fn individual_count(&self) -> usize {
        self.individuals.len()
    }

    /// Declared ancestors of a class, nearest first, excluding the root.
    fn ancestors<'a>(&'a self, class: &Iri) -> impl Iterator<Item = &'a Iri> {
        let mut current = self.classes.get(class).and_then(|c| c.parent.as_ref());
        std::iter::from_fn(move || {
            let found = current?;
            current = self.classes.get(found).and_then(|c| c.parent.as_ref());
            Some(found)
        })
    }

    /// Every class strictly below `class`, however deep. The root is a
    /// valid starting point.
    pub fn subclasses_transitive(&self, class: &Iri) -> Result<BTreeSet<Iri>, OntologyError> {
        self.require_class_or_root(class)?;
        let mut found = BTreeSet::new();
        let mut frontier = vec![class.clone()];
        while let Some(current) = frontier.pop() {
            let at_root = current == Self::root();
            for child in self.classes.values() {
                let is_child = match &child.parent {
                    Some(p) => *p == current,
                    None => at_root,
                };
                if is_child && found.insert(child.name.clone()) {
                    frontier.push(child.name.clone());
                }
            }
        }
        Ok(found)
    }

    /// Individuals of `class`: only direct assertions, or (with `inferred`)
    /// assertions to any transitive subclass as well.
    pub fn instances_of(
        &self,
        class: &Iri,
        inferred: bool,
    ) -> Result<BTreeSet<Iri>, OntologyError> {
        self.require_class_or_root(class)?;
        let mut accepted: BTreeSet<Iri> = BTreeSet::new();
        if inferred {
            accepted = self.subclasses_transitive(class)?;
        }
        accepted.insert(class.clone());
        Ok(self
            .individuals
            .values()
            .filter(|i| accepted.contains(&i.class))
            .map(|i| i.name.clone())
            .collect())
    }

    fn require_class_or_root(&self, class: &Iri) -> Result<(), OntologyError> {
        if *class == Self::root() || self.classes.contains_key(class) {
            Ok(())
        } else {
            Err(OntologyError::UnknownClass(class.clone()))
        }
    }

    /// Flattens the ontology to triples: a header, then classes, properties,
    /// and individuals, each block in name order. `from_triples` inverts
    /// this exactly.
    pub fn to_triples(&self) -> Vec<Triple> {
        let mut out = Vec::new();
        let triple = |s: &Iri, p: Iri, o: Term| {
            Triple::new(Term::Iri(s.clone()), Term::Iri(p), o).expect("ontology terms are valid")
        };

        out.push(triple(&self.iri, vocab::rdf_type(), Term::Iri(vocab::owl_ontology())));

        for class in self.classes.values() {
            out.push(triple(&class.name, vocab::rdf_type(), Term::Iri(vocab::owl_class())));
            let parent = class.parent.clone().unwrap_or_else(Self::root);
            out.push(triple(&class.name, vocab::rdfs_sub_class_of(), Term::Iri(parent)));
        }

        for property in self.properties.values() {
            let kind = match property.kind {
                PropertyKind::Object => vocab::owl_object_property(),
                PropertyKind::Datatype => vocab::owl_datatype_property(),
            };
            out.push(triple(&property.name, vocab::rdf_type(), Term::Iri(kind)));
            out.push(triple(
                &property.name,
                vocab::rdfs_domain(),
                Term::Iri(property.domain.clone()),
            ));
            match &property.range {
                Some(PropertyRange::Class(c)) => {
                    out.push(triple(&property.name, vocab::rdfs_range(), Term::Iri(c.clone())));
                }
                Some(PropertyRange::Datatype(d)) => {
                    out.push(triple(&property.name, vocab::rdfs_range(), Term::literal(d)));
                }
                None => {}
            }
        }

        for individual in self.individuals.values() {
            out.push(triple(
                &individual.name,
                vocab::rdf_type(),
                Term::Iri(individual.class.clone()),
            ));
            for (property, value) in &individual.values {
                out.push(triple(&individual.name, property.clone(), value.clone()));
            }
        }
        out
    }

    /// Rebuilds an ontology from its triple form. Subjects typed to classes
    /// that are not IRIs, and extra `rdf:type` assertions beyond the first
    /// per individual, are ignored.
    pub fn from_triples(triples: &[Triple]) -> Result<Self, OntologyError> {
        let rdf_type = Term::Iri(vocab::rdf_type());
        let sub_class_of = Term::Iri(vocab::rdfs_sub_class_of());
        let domain_p = Term::Iri(vocab::rdfs_domain());
        let range_p = Term::Iri(vocab::rdfs_range());

        let typed = |kind: &Iri| -> Vec<&Iri> {
            let mut named: Vec<&Iri> = triples
                .iter()
                .filter(|t| *t.predicate() == rdf_type && *t.object() == Term::Iri(kind.clone()))
                .filter_map(|t| t.subject().as_iri())
                .collect();
            named.sort_unstable();
            named.dedup();
            named
        };
        let one_object = |s: &Iri, p: &Term| -> Option<&Term> {
            triples
                .iter()
                .find(|t| t.subject().as_iri() == Some(s) && t.predicate() == p)
                .map(Triple::object)
        };

        let header = typed(&vocab::owl_ontology());
        let iri = header.first().ok_or(OntologyError::MissingOntologyHeader)?;
        let mut ontology = Ontology::new((*iri).clone());

        // insert classes parents-first
        let mut pending: Vec<&Iri> = typed(&vocab::owl_class());
        while !pending.is_empty() {
            let before = pending.len();
            pending.retain(|name| {
                let parent = one_object(name, &sub_class_of)
                    .and_then(Term::as_iri)
                    .filter(|p| **p != Self::root());
                let ready = parent.map_or(true, |p| ontology.classes.contains_key(p));
                if ready {
                    ontology
                        .define_class((*name).clone(), parent.cloned())
                        .expect("deduped class list cannot collide");
                }
                !ready
            });
            if pending.len() == before {
                let stuck = pending[0];
                let parent = one_object(stuck, &sub_class_of)
                    .and_then(Term::as_iri)
                    .expect("stuck class has an unresolved parent");
                if parent == stuck {
                    return Err(OntologyError::CycleWouldForm(parent.clone()));
                }
                return Err(OntologyError::UnknownParent(parent.clone()));
            }
        }

        for (kind_iri, kind) in [
            (vocab::owl_object_property(), PropertyKind::Object),
            (vocab::owl_datatype_property(), PropertyKind::Datatype),
        ] {
            for name in typed(&kind_iri) {
                let domain = one_object(name, &domain_p)
                    .and_then(Term::as_iri)
                    .ok_or_else(|| OntologyError::MissingDomain(name.clone()))?;
                let range = one_object(name, &range_p).map(|term| match term {
                    Term::Iri(r) => PropertyRange::Class(r.clone()),
                    other => PropertyRange::Datatype(other.value_text().to_string()),
                });
                ontology.add_property(OntProperty {
                    name: name.clone(),
                    kind,
                    domain: domain.clone(),
                    range,
                })?;
            }
        }

        let class_names: Vec<Iri> = ontology.classes.keys().cloned().collect();
        let mut seen = BTreeSet::new();
        for class in &class_names {
            for name in typed(class) {
                if !seen.insert(name.clone()) {
                    continue;
                }
                let values: Vec<(Iri, Term)> = triples
                    .iter()
                    .filter(|t| t.subject().as_iri() == Some(name))
                    .filter_map(|t| {
                        let p = t.predicate().as_iri()?;
                        ontology.properties.contains_key(p).then(|| (p.clone(), t.object().clone()))
                    })
                    .collect();
                ontology.assert_individual(Individual {
                    name: name.clone(),
                    class: class.clone(),
                    values,
                })?;
            }
        }
        Ok(ontology)
    }

    /// GraphViz rendering of the class tree, edges running parent to child.
    /// Individuals appear as boxes on dashed edges when requested.
    pub fn export_dot(&self, include_individuals: bool) -> String {
        let mut out = String::from("digraph ontology {\n");
        out.push_str("  \"owl:Thing\" [shape=ellipse];\n");
        for class in self.classes.values() {
            out.push_str(&format!("  \"{}\" [shape=ellipse];\n", class.name.local_name()));
        }
        for class in self.classes.values() {
            let parent = class
                .parent
                .as_ref()
                .map_or("owl:Thing".to_string(), |p| p.local_name().to_string());
            out.push_str(&format!("  \"{}\" -> \"{}\";\n", parent, class.name.local_name()));
        }
        if include_individuals {
            for individual in self.individuals.values() {
                out.push_str(&format!("  \"{}\" [shape=box];\n", individual.name.local_name()));
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\" [style=dashed];\n",
                    individual.class.local_name(),
                    individual.name.local_name()
                ));
            }
        }
        out.push_str("}\n");
        out
    }

    /// Indented text rendering of the class tree under the root.
    pub fn class_tree(&self) -> String {
        fn descend(ontology: &Ontology, parent: Option<&Iri>, depth: usize, out: &mut String) {
            for class in ontology.classes.values() {
                if class.parent.as_ref() == parent {
                    out.push_str(&"  ".repeat(depth));
                    out.push_str(class.name.local_name());
                    out.push('\n');
                    descend(ontology, Some(&class.name), depth + 1, out);
                }
            }
        }
        let mut out = String::from("owl:Thing\n");
        descend(self, None, 1, &mut out);
        out
    }
}
