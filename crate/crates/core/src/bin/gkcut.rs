//! Command-line front end. Every command prints JSON (or DOT for `gk --dot`)
//! on stdout. Exit status: 0 on success, 1 when a lemma check reports FAIL,
//! 2 on any error, with `{"error": {"kind", "message"}}` on stdout.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use gkcut::arith::rationality_methods;
use gkcut::dsl::eval_word;
use gkcut::lab::{
    check_lemma, check_lemma_timed, default_catalog, explicit_computations, gk_realizability_scan,
    run_catalog, Catalog, LemmaId, LemmaInstance,
};
use gkcut::{construct, Bounds, Classification, Error, GkGraph, GroupSpec, Result};

#[derive(Parser)]
#[command(
    name = "gkcut",
    version,
    about = "Prime graphs, cut groups and lemma checks on explicit finite groups"
)]
struct Cli {
    /// Maximum number of enumerated group elements.
    #[arg(long, global = true, value_name = "N")]
    bound: Option<usize>,
    /// Seed for randomized search steps.
    #[arg(long, global = true, value_name = "S")]
    seed: Option<u64>,
    /// Also write the JSON output to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Record per-check wall time (output is then not reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Prime graph of a group.
    Gk {
        spec: String,
        /// Print Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Order, solvability, Fitting length, rationality and cut verdicts.
    Classify { spec: String },
    /// Rationality verdict of one element, given as a generator word.
    Rationality {
        spec: String,
        #[arg(long, value_name = "WORD")]
        element: String,
    },
    /// Check one lemma instance read from a JSON file.
    Verify {
        lemma_id: String,
        #[arg(long, value_name = "FILE")]
        instance: PathBuf,
    },
    /// Run a catalog (the built-in one by default) against registry entries.
    Catalog {
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        /// `all`, or a comma-separated list of ids or id prefixes.
        #[arg(long, default_value = "all")]
        lemmas: String,
    },
    /// Group a catalog's solvable cut groups by prime graph.
    Realizability {
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
    },
    /// Fixed matrix-order and inequality computations.
    Explicit,
}

struct Output {
    json: Value,
    /// Text printed instead of the JSON, when the command has another format.
    text: Option<String>,
    failed: bool,
}

impl Output {
    fn of<T: Serialize>(v: &T, failed: bool) -> Self {
        Self {
            json: serde_json::to_value(v).expect("plain data serializes"),
            text: None,
            failed,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_catalog(file: Option<&Path>) -> Result<Catalog> {
    match file {
        Some(p) => Catalog::parse(&read(p)?),
        None => Ok(default_catalog()),
    }
}

fn load_instance(lemma_id: &str, path: &Path) -> Result<LemmaInstance> {
    let id: LemmaId = lemma_id.parse()?;
    let mut v: Value = serde_json::from_str(&read(path)?)
        .map_err(|e| Error::InvalidInstance(format!("instance JSON: {e}")))?;
    let obj = v
        .as_object_mut()
        .ok_or_else(|| Error::InvalidInstance("instance must be a JSON object".into()))?;
    match obj.get("lemma_id") {
        None => {
            obj.insert("lemma_id".into(), Value::String(id.name()));
        }
        Some(Value::String(s)) if *s == id.name() => {}
        Some(other) => {
            return Err(Error::InvalidInstance(format!(
                "instance is for {other}, command asked for {id}"
            )))
        }
    }
    serde_json::from_value(v).map_err(|e| Error::InvalidInstance(e.to_string()))
}

fn run(cli: &Cli, bounds: &Bounds) -> Result<Output> {
    let build = |spec: &str| -> Result<(GroupSpec, gkcut::FiniteGroup)> {
        let s: GroupSpec = spec.parse()?;
        let g = construct(&s, bounds)?;
        Ok((s, g))
    };
    Ok(match &cli.command {
        Command::Gk { spec, dot } => {
            let (_, g) = build(spec)?;
            let graph = GkGraph::of_group(&g);
            let mut out = Output::of(&graph, false);
            if *dot {
                out.text = Some(graph.to_dot());
            }
            out
        }
        Command::Classify { spec } => {
            let (s, g) = build(spec)?;
            Output::of(&Classification::of(s.to_string(), &g), false)
        }
        Command::Rationality { spec, element } => {
            let (s, g) = build(spec)?;
            let i = eval_word(&g, element)?;
            let (by_class, by_index) = rationality_methods(&g, i, bounds.rationality_index_bound);
            if by_index.is_some_and(|v| v != by_class) {
                return Err(Error::KindPreconditionViolated {
                    kind: "rationality".into(),
                    reason: "class and index criteria disagree".into(),
                });
            }
            let mut v = serde_json::to_value(by_class).expect("plain data serializes");
            let obj = v.as_object_mut().expect("struct serializes to an object");
            obj.insert("spec".into(), json!(s.to_string()));
            obj.insert("element".into(), json!(element));
            obj.insert("order".into(), json!(g.element_order(i)));
            obj.insert("index_method_checked".into(), json!(by_index.is_some()));
            Output {
                json: v,
                text: None,
                failed: false,
            }
        }
        Command::Verify { lemma_id, instance } => {
            let inst = load_instance(lemma_id, instance)?;
            let r = if cli.timing {
                check_lemma_timed(&inst, bounds)?
            } else {
                check_lemma(&inst, bounds)?
            };
            Output::of(&r, r.is_fail())
        }
        Command::Catalog { file, lemmas } => {
            let catalog = load_catalog(file.as_deref())?;
            let ids = LemmaId::select(lemmas)?;
            let r = run_catalog(&catalog, &ids, bounds, cli.timing);
            Output::of(&r, r.has_failures())
        }
        Command::Realizability { file } => {
            let catalog = load_catalog(file.as_deref())?;
            let r = gk_realizability_scan(&catalog.groups, bounds);
            let failed = !r.errors.is_empty() || !r.violations.is_empty();
            Output::of(&r, failed)
        }
        Command::Explicit => {
            let r = explicit_computations();
            Output::of(&r, r.is_fail())
        }
    })
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

/// Writes one line to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn error_json(kind: &str, message: &str) -> Value {
    json!({ "error": { "kind": kind, "message": message } })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            emit(&pretty(&error_json("Usage", e.render().to_string().trim())));
            return ExitCode::from(2);
        }
    };
    let mut bounds = Bounds::default();
    if let Some(n) = cli.bound {
        bounds.element_bound = n;
    }
    if let Some(s) = cli.seed {
        bounds.seed = s;
    }
    match run(&cli, &bounds) {
        Ok(out) => {
            let body = pretty(&out.json);
            emit(out.text.as_deref().unwrap_or(&body));
            if let Some(path) = &cli.json {
                if let Err(e) = std::fs::write(path, format!("{body}\n")) {
                    let msg = format!("{}: {e}", path.display());
                    emit(&pretty(&error_json("Io", &msg)));
                    return ExitCode::from(2);
                }
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            emit(&pretty(&error_json(e.kind(), &e.to_string())));
            ExitCode::from(2)
        }
    }
}
