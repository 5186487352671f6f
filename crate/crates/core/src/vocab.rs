//! Well-known RDF, RDFS, and OWL term IRIs.

use crate::model::Iri;

pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
pub const RDFS_SUB_CLASS_OF: &str = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
pub const RDFS_DOMAIN: &str = "http://www.w3.org/2000/01/rdf-schema#domain";
pub const RDFS_RANGE: &str = "http://www.w3.org/2000/01/rdf-schema#range";
pub const OWL_THING: &str = "http://www.w3.org/2002/07/owl#Thing";
pub const OWL_CLASS: &str = "http://www.w3.org/2002/07/owl#Class";
pub const OWL_OBJECT_PROPERTY: &str = "http://www.w3.org/2002/07/owl#ObjectProperty";
pub const OWL_DATATYPE_PROPERTY: &str = "http://www.w3.org/2002/07/owl#DatatypeProperty";
pub const OWL_ONTOLOGY: &str = "http://www.w3.org/2002/07/owl#Ontology";

fn known(text: &str) -> Iri {
    Iri::new(text).expect("well-known IRI is valid")
}

pub fn rdf_type() -> Iri {
    known(RDF_TYPE)
}

pub fn rdfs_sub_class_of() -> Iri {
    known(RDFS_SUB_CLASS_OF)
}

pub fn rdfs_domain() -> Iri {
    known(RDFS_DOMAIN)
}

pub fn rdfs_range() -> Iri {
    known(RDFS_RANGE)
}

pub fn owl_thing() -> Iri {
    known(OWL_THING)
}

pub fn owl_class() -> Iri {
    known(OWL_CLASS)
}

pub fn owl_object_property() -> Iri {
    known(OWL_OBJECT_PROPERTY)
}

pub fn owl_datatype_property() -> Iri {
    known(OWL_DATATYPE_PROPERTY)
}

pub fn owl_ontology() -> Iri {
    known(OWL_ONTOLOGY)
}
