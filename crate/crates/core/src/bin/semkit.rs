//! Command line front end: load graphs, query them, search a keyword
//! corpus, and inspect the bundled ontology.
//!
//! Exit codes: 0 on success, 1 for unreadable or malformed data files, 2
//! for usage errors (bad flags, broken query text).

use std::collections::BTreeSet;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use semkit::model::Triple;
use semkit::ontology::{universities_fixture, Ontology};
use semkit::search::{format_search_result, search, Corpus, SearchOptions};
use semkit::serialization::{parse_ntriples, parse_turtle, serialize_ntriples};
use semkit::sparql::{evaluate, format_solutions, parse_query};
use semkit::store::Store;
use semkit::OutputFormat;

#[derive(Parser)]
#[command(
    name = "semkit",
    version,
    about = "RDF graphs, SPARQL-subset queries, ontology inspection, and keyword search"
)]
struct Cli {
    /// Output format for load, sparql, and search results
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(arg: FormatArg) -> Self {
        match arg {
            FormatArg::Table => OutputFormat::Table,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Load graph files and print a summary
    Load {
        /// Graph files (.nt or .ttl); '-' or no files reads N-Triples from stdin
        paths: Vec<PathBuf>,
    },
    /// Run a SELECT query over graph files
    #[command(group = ArgGroup::new("query_source").required(true).args(["query", "query_file"]))]
    Sparql {
        /// Query text given inline
        #[arg(long)]
        query: Option<String>,
        /// File containing the query
        #[arg(long)]
        query_file: Option<PathBuf>,
        /// Graph files to query
        graphs: Vec<PathBuf>,
    },
    /// Keyword co-occurrence search over a corpus
    #[command(group = ArgGroup::new("corpus_source").required(true).args(["fixture", "corpus"]))]
    Search {
        /// Free-text query, e.g. "Indian Universities"
        query: String,
        /// Search the bundled five-document corpus
        #[arg(long)]
        fixture: bool,
        /// Line-delimited JSON corpus file
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Population size used for the discard estimate
        #[arg(long)]
        total_pages: Option<u64>,
        /// Fraction of the population to discard, within [0, 1]
        #[arg(long, value_parser = parse_fraction)]
        discard_fraction: Option<f64>,
        /// Keep only the K best documents
        #[arg(long)]
        top_k: Option<usize>,
    },
    /// Inspect an ontology
    Ontology {
        #[command(subcommand)]
        action: OntologyAction,
    },
}

#[derive(Subcommand)]
enum OntologyAction {
    /// Print the class tree and entity counts
    Show {
        #[command(flatten)]
        source: OntologySource,
    },
    /// Export the class tree as GraphViz DOT
    Dot {
        #[command(flatten)]
        source: OntologySource,
        /// Include individuals as boxed nodes
        #[arg(long)]
        instances: bool,
    },
    /// Flatten the ontology to N-Triples
    Triples {
        #[command(flatten)]
        source: OntologySource,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct OntologySource {
    /// Use the bundled universities ontology
    #[arg(long)]
    fixture: bool,
    /// Rebuild the ontology from a triples file (.nt or .ttl)
    path: Option<PathBuf>,
}

fn parse_fraction(text: &str) -> Result<f64, String> {
    let value: f64 = text.parse().map_err(|_| format!("not a number: {text:?}"))?;
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(format!("must be within [0, 1], got {value}"))
    }
}

/// A failed run: data problems exit 1, usage problems exit 2.
enum Failure {
    Data(String),
    Usage(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Data(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = OutputFormat::from(cli.format);
    match cli.command {
        Command::Load { paths } => cmd_load(&paths, format),
        Command::Sparql { query, query_file, graphs } => {
            cmd_sparql(query, query_file, &graphs, format)
        }
        Command::Search { query, fixture, corpus, total_pages, discard_fraction, top_k } => {
            let options = SearchOptions { total_pages, discard_fraction, top_k };
            cmd_search(&query, fixture, corpus, &options, format)
        }
        Command::Ontology { action } => cmd_ontology(action),
    }
}

fn read_stdin() -> Result<String, Failure> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Failure::Data(format!("stdin: {e}")))?;
    Ok(text)
}

/// Reads one graph file, picking the parser by extension: `.ttl` is
/// Turtle, anything else N-Triples.
fn load_graph_file(path: &Path) -> Result<Vec<Triple>, Failure> {
    let (name, text) = if path == Path::new("-") {
        ("stdin".to_string(), read_stdin()?)
    } else {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
        (path.display().to_string(), text)
    };
    let is_turtle = path.extension().and_then(|e| e.to_str()) == Some("ttl");
    let parsed = if is_turtle { parse_turtle(&text) } else { parse_ntriples(&text) };
    parsed.map_err(|d| Failure::Data(format!("{name}:{}:{}: {}", d.line, d.column, d.message)))
}

fn load_store(paths: &[PathBuf]) -> Result<Store, Failure> {
    let mut store = Store::new();
    if paths.is_empty() {
        let text = read_stdin()?;
        let triples = parse_ntriples(&text)
            .map_err(|d| Failure::Data(format!("stdin:{}:{}: {}", d.line, d.column, d.message)))?;
        store.extend(triples);
        return Ok(store);
    }
    for path in paths {
        store.extend(load_graph_file(path)?);
    }
    Ok(store)
}

fn cmd_load(paths: &[PathBuf], format: OutputFormat) -> Result<(), Failure> {
    let store = load_store(paths)?;
    let mut subjects = BTreeSet::new();
    let mut predicates = BTreeSet::new();
    let mut objects = BTreeSet::new();
    for triple in store.iter() {
        subjects.insert(triple.subject().clone());
        predicates.insert(triple.predicate().clone());
        objects.insert(triple.object().clone());
    }
    let counts = [
        ("triples", store.len()),
        ("subjects", subjects.len()),
        ("predicates", predicates.len()),
        ("objects", objects.len()),
    ];
    match format {
        OutputFormat::Table => {
            for (label, n) in counts {
                println!("{label}: {n}");
            }
        }
        OutputFormat::Json => {
            let map: serde_json::Map<String, serde_json::Value> = counts
                .iter()
                .map(|(label, n)| (label.to_string(), serde_json::json!(n)))
                .collect();
            println!("{}", serde_json::to_string_pretty(&map).expect("summary serializes"));
        }
        OutputFormat::Csv => {
            let labels: Vec<&str> = counts.iter().map(|(l, _)| *l).collect();
            let values: Vec<String> = counts.iter().map(|(_, n)| n.to_string()).collect();
            println!("{}", labels.join(","));
            println!("{}", values.join(","));
        }
    }
    Ok(())
}

fn cmd_sparql(
    query: Option<String>,
    query_file: Option<PathBuf>,
    graphs: &[PathBuf],
    format: OutputFormat,
) -> Result<(), Failure> {
    let text = match (query, query_file) {
        (Some(text), None) => text,
        (None, Some(path)) => std::fs::read_to_string(&path)
            .map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?,
        _ => unreachable!("clap enforces exactly one query source"),
    };
    let parsed = parse_query(&text)
        .map_err(|d| Failure::Usage(format!("query:{}:{}: {}", d.line, d.column, d.message)))?;
    let mut store = Store::new();
    for path in graphs {
        store.extend(load_graph_file(path)?);
    }
    print!("{}", format_solutions(&evaluate(&parsed, &store), format));
    Ok(())
}

fn cmd_search(
    query: &str,
    fixture: bool,
    corpus_path: Option<PathBuf>,
    options: &SearchOptions,
    format: OutputFormat,
) -> Result<(), Failure> {
    let corpus = if fixture {
        semkit::search::fixture_corpus()
    } else {
        let path = corpus_path.expect("clap enforces a corpus source");
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
        Corpus::from_jsonl(&text).map_err(|d| {
            Failure::Data(format!("{}:{}:{}: {}", path.display(), d.line, d.column, d.message))
        })?
    };
    let result = search(query, &corpus, options).map_err(|e| Failure::Usage(e.to_string()))?;
    print!("{}", format_search_result(&result, format));
    Ok(())
}

fn cmd_ontology(action: OntologyAction) -> Result<(), Failure> {
    match action {
        OntologyAction::Show { source } => {
            let ont = resolve_ontology(&source)?;
            print!("{}", ont.class_tree());
            println!();
            println!("classes: {}", ont.class_count());
            println!(
                "object properties: {}",
                ont.property_count(semkit::ontology::PropertyKind::Object)
            );
            println!(
                "datatype properties: {}",
                ont.property_count(semkit::ontology::PropertyKind::Datatype)
            );
            println!("individuals: {}", ont.individual_count());
        }
        OntologyAction::Dot { source, instances } => {
            let ont = resolve_ontology(&source)?;
            print!("{}", ont.export_dot(instances));
        }
        OntologyAction::Triples { source } => {
            let ont = resolve_ontology(&source)?;
            print!("{}", serialize_ntriples(&ont.to_triples()));
        }
    }
    Ok(())
}

fn resolve_ontology(source: &OntologySource) -> Result<Ontology, Failure> {
    if source.fixture {
        return Ok(universities_fixture());
    }
    let path = source.path.as_ref().expect("clap enforces an ontology source");
    let triples = load_graph_file(path)?;
    Ontology::from_triples(&triples)
        .map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}
