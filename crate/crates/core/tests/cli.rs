//! Drives the compiled binary end to end: argument handling, output
//! formats, stdin piping, and the exit-code contract (0 success, 1 bad
//! data, 2 bad usage).

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn semkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn semkit_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_semkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().expect("binary exits")
}

fn stdout_of(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn write_file(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

const STUDENT_GRAPH: &str = "\
<http://e/RohanSharma> <http://e/name> \"Rohan Sharma\" .\n\
<http://e/RohanSharma> <http://e/college> <http://e/BVCOE> .\n\
<http://e/MeeraIyer> <http://e/name> \"Meera Iyer\" .\n\
<http://e/MeeraIyer> <http://e/college> <http://e/BVCOE> .\n";

#[test]
fn load_prints_summary_counts() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_file(dir.path(), "students.nt", STUDENT_GRAPH);
    let out = stdout_of(&semkit(&["load", &graph]));
    assert_eq!(out, "triples: 4\nsubjects: 2\npredicates: 2\nobjects: 3\n");
}

#[test]
fn load_formats_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_file(dir.path(), "students.nt", STUDENT_GRAPH);

    let json = stdout_of(&semkit(&["load", &graph, "--format", "json"]));
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["triples"], serde_json::json!(4));

    let csv = stdout_of(&semkit(&["load", &graph, "--format", "csv"]));
    assert_eq!(csv, "triples,subjects,predicates,objects\n4,2,2,3\n");
}

#[test]
fn load_reads_stdin_when_no_files_given() {
    let out = semkit_with_stdin(&["load"], STUDENT_GRAPH);
    assert!(stdout_of(&out).contains("triples: 4"));

    let dash = semkit_with_stdin(&["load", "-"], STUDENT_GRAPH);
    assert!(stdout_of(&dash).contains("triples: 4"));
}

#[test]
fn load_reports_malformed_data_as_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_file(
        dir.path(),
        "broken.nt",
        "<http://e/a> <http://e/b> <http://e/c> .\n<http://e/a> <http://e/b> .\n",
    );
    let out = semkit(&["load", &graph]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("broken.nt:2:"), "stderr: {stderr}");
}

#[test]
fn load_reports_missing_file_as_exit_1() {
    let out = semkit(&["load", "/no/such/file.nt"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sparql_joins_over_shared_variables() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_file(dir.path(), "students.nt", STUDENT_GRAPH);
    let out = stdout_of(&semkit(&[
        "sparql",
        "--query",
        "PREFIX e: <http://e/> SELECT ?name ?college \
         WHERE { ?x e:name ?name . ?x e:college ?college }",
        &graph,
        "--format",
        "csv",
    ]));
    assert_eq!(
        out,
        "name,college\nMeera Iyer,http://e/BVCOE\nRohan Sharma,http://e/BVCOE\n"
    );
}

#[test]
fn sparql_reads_query_from_file_and_turtle_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_file(
        dir.path(),
        "college.ttl",
        "@prefix e: <http://e/> .\n\
         e:BVCOE a e:College ;\n\
             e:principal \"Anita Rao\" .\n",
    );
    let query = write_file(
        dir.path(),
        "college.rq",
        "PREFIX e: <http://e/>\nSELECT ?who WHERE { ?who a e:College }\n",
    );
    let out = stdout_of(&semkit(&["sparql", "--query-file", &query, &graph, "--format", "csv"]));
    assert_eq!(out, "who\nhttp://e/BVCOE\n");
}

#[test]
fn sparql_emits_json_rows() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_file(dir.path(), "students.nt", STUDENT_GRAPH);
    let out = stdout_of(&semkit(&[
        "sparql",
        "--query",
        "SELECT ?n WHERE { <http://e/RohanSharma> <http://e/name> ?n }",
        &graph,
        "--format",
        "json",
    ]));
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["vars"], serde_json::json!(["n"]));
    assert_eq!(value["rows"][0]["n"]["type"], serde_json::json!("literal"));
    assert_eq!(value["rows"][0]["n"]["value"], serde_json::json!("Rohan Sharma"));
}

#[test]
fn sparql_rejects_broken_query_as_exit_2() {
    let out = semkit(&["sparql", "--query", "SELECT ?s WHERE { ?s <http://e/p> }"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("query:1:35"), "stderr: {stderr}");
}

#[test]
fn sparql_requires_a_query_source() {
    let out = semkit(&["sparql"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sparql_reports_unreadable_graph_as_exit_1() {
    let out = semkit(&[
        "sparql",
        "--query",
        "SELECT ?s WHERE { ?s <http://e/p> ?o }",
        "/no/such/graph.nt",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_fixture_emits_ranked_json() {
    let out = stdout_of(&semkit(&["search", "Indian Universities", "--fixture", "--format", "json"]));
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["candidates"].as_array().unwrap().len(), 5);
    assert_eq!(value["pool_size"], serde_json::json!(12));
    assert_eq!(value["expansion"][0]["keyword"], serde_json::json!("ugc"));
    assert_eq!(value["documents"][0]["id"], serde_json::json!("search1"));
    assert_eq!(value["documents"][0]["score"], serde_json::json!(17));
    assert_eq!(value["retained_estimate"], serde_json::Value::Null);
}

#[test]
fn search_reads_corpus_files() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = write_file(
        dir.path(),
        "docs.jsonl",
        "{\"id\":\"a\",\"keywords\":[\"rdf\",\"store\"]}\n\
         {\"id\":\"b\",\"keywords\":[\"rdf\",\"query\"]}\n",
    );
    let out = stdout_of(&semkit(&["search", "rdf", "--corpus", &corpus, "--format", "json"]));
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["candidates"], serde_json::json!(["a", "b"]));
}

#[test]
fn search_reports_bad_corpus_as_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = write_file(dir.path(), "docs.jsonl", "{\"id\":\"a\"\n");
    let out = semkit(&["search", "rdf", "--corpus", &corpus]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("docs.jsonl:1:"), "stderr: {stderr}");
}

#[test]
fn search_rejects_out_of_range_fraction_as_exit_2() {
    let out = semkit(&["search", "x", "--fixture", "--discard-fraction", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_requires_a_corpus_source() {
    let out = semkit(&["search", "x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_top_k_truncates_the_document_list() {
    let out = stdout_of(&semkit(&[
        "search",
        "Indian Universities",
        "--fixture",
        "--top-k",
        "2",
        "--format",
        "json",
    ]));
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["documents"].as_array().unwrap().len(), 2);
}

#[test]
fn ontology_show_prints_tree_and_counts() {
    let out = stdout_of(&semkit(&["ontology", "show", "--fixture"]));
    assert_eq!(
        out,
        "owl:Thing\n  Courses\n  States\n  Universities\n    Colleges\n\n\
         classes: 4\nobject properties: 5\ndatatype properties: 5\nindividuals: 19\n"
    );
}

#[test]
fn ontology_dot_lists_edges_and_optional_instances() {
    let plain = stdout_of(&semkit(&["ontology", "dot", "--fixture"]));
    assert!(plain.starts_with("digraph"));
    assert!(plain.contains("\"Universities\" -> \"Colleges\";"));
    assert!(!plain.contains("BVCOE"));

    let boxed = stdout_of(&semkit(&["ontology", "dot", "--fixture", "--instances"]));
    assert!(boxed.contains("\"BVCOE\" [shape=box];"));
    assert!(boxed.contains("\"Colleges\" -> \"BVCOE\" [style=dashed];"));
}

#[test]
fn ontology_triples_round_trip_through_load_and_show() {
    let triples = stdout_of(&semkit(&["ontology", "triples", "--fixture"]));
    assert_eq!(triples.lines().count(), 67);

    // canonical N-Triples feed straight back into `load` over stdin
    let loaded = semkit_with_stdin(&["load"], &triples);
    assert!(stdout_of(&loaded).contains("triples: 67"));

    // and a file of them rebuilds the same ontology
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "fixture.nt", &triples);
    let shown = stdout_of(&semkit(&["ontology", "show", &path]));
    assert!(shown.contains("individuals: 19"), "output: {shown}");
}

#[test]
fn ontology_requires_a_source() {
    let out = semkit(&["ontology", "show"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_exit_2() {
    let out = semkit(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
