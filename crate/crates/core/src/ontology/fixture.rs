//! The bundled universities ontology: a small knowledge base of Indian
//! universities, their colleges, courses, and states. Used by the CLI's
//! `--fixture` flags and throughout the tests as known data.

use crate::model::{Iri, Term};
use crate::ontology::{Individual, OntProperty, Ontology, PropertyKind};

pub const FIXTURE_IRI: &str = "http://www.indianuniversities/ourontology1.owl";

fn entity(local: &str) -> Iri {
    Iri::new(format!("{FIXTURE_IRI}#{local}")).expect("fixture IRIs are valid")
}

pub fn universities_fixture() -> Ontology {
    let mut ont = Ontology::new(Iri::new(FIXTURE_IRI).expect("fixture IRI is valid"));

    let universities = entity("Universities");
    let colleges = entity("Colleges");
    let courses = entity("Courses");
    let states = entity("States");
    ont.define_class(universities.clone(), None).expect("fixture classes");
    ont.define_class(courses.clone(), None).expect("fixture classes");
    ont.define_class(states.clone(), None).expect("fixture classes");
    ont.define_class(colleges.clone(), Some(universities.clone())).expect("fixture classes");

    let object_properties = [
        ("hasChiefMinister", &states),
        ("hasColleges", &universities),
        ("hasCourses", &universities),
        ("hasPrincipal", &colleges),
        ("hasViceChancellor", &universities),
    ];
    for (name, domain) in object_properties {
        ont.add_property(OntProperty {
            name: entity(name),
            kind: PropertyKind::Object,
            domain: domain.clone(),
            range: None,
        })
        .expect("fixture properties");
    }

    let datatype_properties = [
        ("hasUniversityName", &universities),
        ("hasCollegeName", &colleges),
        ("hasCourseName", &courses),
        ("hasStateName", &states),
        ("hasPhoneNumber", &universities),
    ];
    for (name, domain) in datatype_properties {
        ont.add_property(OntProperty {
            name: entity(name),
            kind: PropertyKind::Datatype,
            domain: domain.clone(),
            range: None,
        })
        .expect("fixture properties");
    }

    let members: [(&Iri, &str, &str, &str); 19] = [
        (&universities, "IP_University", "hasUniversityName", "IP University"),
        (&universities, "Delhi_University", "hasUniversityName", "Delhi University"),
        (&universities, "IIT", "hasUniversityName", "IIT"),
        (&colleges, "BVCOE", "hasCollegeName", "BVCOE"),
        (&colleges, "DCE", "hasCollegeName", "DCE"),
        (&colleges, "IIT_Chennai", "hasCollegeName", "IIT Chennai"),
        (&colleges, "IIT_Delhi", "hasCollegeName", "IIT Delhi"),
        (&colleges, "IIT_Mumbai", "hasCollegeName", "IIT Mumbai"),
        (&colleges, "MAIT", "hasCollegeName", "MAIT"),
        (&colleges, "NSIT", "hasCollegeName", "NSIT"),
        (&courses, "BTECH", "hasCourseName", "BTECH"),
        (&courses, "MTECH", "hasCourseName", "MTECH"),
        (&courses, "MBA", "hasCourseName", "MBA"),
        (&courses, "MCA", "hasCourseName", "MCA"),
        (&courses, "MEDICAL", "hasCourseName", "MEDICAL"),
        (&states, "New_Delhi", "hasStateName", "New Delhi"),
        (&states, "Mumbai", "hasStateName", "Mumbai"),
        (&states, "Chennai", "hasStateName", "Chennai"),
        (&states, "Kolkata", "hasStateName", "Kolkata"),
    ];
    for (class, local, name_property, display_name) in members {
        ont.assert_individual(Individual {
            name: entity(local),
            class: class.clone(),
            values: vec![(entity(name_property), Term::literal(display_name))],
        })
        .expect("fixture individuals");
    }

    ont
}
