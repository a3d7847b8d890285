//! Command-line front end.
//!
//! Exit codes: 0 ok, 1 fixture failure, 2 unreadable or invalid input,
//! 3 bundle not big, 4 canonical class pseudo-effective, 5 internal error.

pub mod model_file;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fixtures::{self, Fixture, FixtureReport};
use crate::toric::FanChecks;
use model_file::ModelFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FIXTURE_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_BIG: i32 = 3;
pub const EXIT_K_PSEUDO_EFFECTIVE: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotBig | Error::BigFailureOnY { .. } => EXIT_NOT_BIG,
        Error::KPseudoEffective { .. } => EXIT_K_PSEUDO_EFFECTIVE,
        Error::Parse(_)
        | Error::InvalidModel(_)
        | Error::InvalidFan(_)
        | Error::IncompleteFan(_)
        | Error::NonSimplicialCone(_)
        | Error::DegreeOutOfRange(_)
        | Error::Linalg(_)
        | Error::UnknownFixture(_)
        | Error::Fixture(_)
        | Error::NotPseudoEffective
        | Error::RigidityUndecidable => EXIT_PARSE,
        _ => EXIT_INTERNAL,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "fujita",
    version,
    about = "Exact Fujita and b-invariants of polarized varieties"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for batches of files or fixtures.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Exact fan completeness and terminality checks.
    #[arg(long, global = true)]
    pub strict_fan: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// a, b, minimal face and rigidity for the line bundle.
    Invariants { files: Vec<PathBuf> },
    /// Balance verdict for each listed subvariety.
    Balanced { files: Vec<PathBuf> },
    /// Zariski decomposition of `divisor` (or the line bundle).
    Zariski { files: Vec<PathBuf> },
    /// The example catalog.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum FixturesAction {
    List,
    /// Runs the given fixtures, or all of them.
    Run {
        ids: Vec<String>,
    },
}

fn error_json(err: &Error) -> Value {
    json!({ "error": err.kind(), "message": err.to_string() })
}

fn print_error(cli: &Cli, out: &mut dyn Write, err: &Error) -> i32 {
    let _ = if cli.json {
        writeln!(out, "{}", error_json(err))
    } else {
        write!(out, "{}", render_text(&error_json(err)))
    };
    exit_code(err)
}

fn read_model_file(path: &Path) -> Result<ModelFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    ModelFile::parse(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
    {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Text rendering: one `key: value` line per top-level entry.
fn render_text(value: &Value) -> String {
    match value {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}\n"),
                Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
                    let mut s = format!("{k}:\n");
                    for item in items {
                        s.push_str("  - ");
                        s.push_str(&serde_json::to_string(item).expect("json"));
                        s.push('\n');
                    }
                    s
                }
                other => format!("{k}: {other}\n"),
            })
            .collect(),
        other => format!("{other}\n"),
    }
}

fn run_files(
    cli: &Cli,
    files: &[PathBuf],
    compute: fn(&ModelFile, FanChecks) -> Result<Value>,
    out: &mut dyn Write,
) -> i32 {
    let checks = FanChecks {
        strict: cli.strict_fan,
    };
    if files.is_empty() {
        return print_error(cli, out, &Error::Parse("no input files".into()));
    }
    let results: Vec<Result<Value>> = in_pool(cli.jobs, || {
        files
            .par_iter()
            .map(|path| read_model_file(path).and_then(|f| compute(&f, checks)))
            .collect()
    });
    let code = results
        .iter()
        .find_map(|r| r.as_ref().err().map(exit_code))
        .unwrap_or(EXIT_OK);
    let rendered: Vec<Value> = results
        .iter()
        .map(|r| match r {
            Ok(v) => v.clone(),
            Err(e) => error_json(e),
        })
        .collect();
    if cli.json {
        let doc = if files.len() == 1 {
            rendered.into_iter().next().expect("one file")
        } else {
            Value::Array(
                files
                    .iter()
                    .zip(rendered)
                    .map(|(p, r)| json!({ "file": p.display().to_string(), "report": r }))
                    .collect(),
            )
        };
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"));
    } else {
        for (path, r) in files.iter().zip(&rendered) {
            if files.len() > 1 {
                let _ = writeln!(out, "== {}", path.display());
            }
            let _ = write!(out, "{}", render_text(r));
        }
    }
    code
}

fn fixture_report_json(r: &FixtureReport) -> Value {
    json!({
        "id": r.id,
        "passed": r.passed(),
        "error": r.error,
        "expectations": r.expectations.iter().map(|e| json!({
            "key": e.key,
            "expected": e.expected,
            "actual": e.actual,
            "passed": e.passed(),
        })).collect::<Vec<_>>(),
    })
}

fn run_fixtures(cli: &Cli, action: &FixturesAction, out: &mut dyn Write) -> i32 {
    let catalog = match fixtures::catalog() {
        Ok(c) => c,
        Err(e) => return print_error(cli, out, &e),
    };
    match action {
        FixturesAction::List => {
            if cli.json {
                let list: Vec<Value> = catalog
                    .iter()
                    .map(|f| json!({"id": f.id, "anchor": f.anchor(), "description": f.description()}))
                    .collect();
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&list).expect("json")
                );
            } else {
                let width = catalog.iter().map(|f| f.id.len()).max().unwrap_or(0);
                for f in &catalog {
                    let _ = writeln!(out, "{:width$}  {}", f.id, f.anchor());
                }
            }
            EXIT_OK
        }
        FixturesAction::Run { ids } => {
            let selected: Vec<&Fixture> = if ids.is_empty() {
                catalog.iter().collect()
            } else {
                match ids.iter().map(|id| fixtures::find(&catalog, id)).collect() {
                    Ok(s) => s,
                    Err(e) => return print_error(cli, out, &e),
                }
            };
            let checks = FanChecks {
                strict: cli.strict_fan,
            };
            let reports: Vec<FixtureReport> = in_pool(cli.jobs, || {
                selected
                    .par_iter()
                    .map(|f| fixtures::run(f, checks))
                    .collect()
            });
            if cli.json {
                let doc: Vec<Value> = reports.iter().map(fixture_report_json).collect();
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"));
            } else {
                for r in &reports {
                    let status = if r.passed() { "PASS" } else { "FAIL" };
                    let _ = writeln!(
                        out,
                        "{status}  {}  ({}/{} expectations)",
                        r.id,
                        r.passed_count(),
                        r.expectations.len()
                    );
                    if let Some(e) = &r.error {
                        let _ = writeln!(out, "      error: {e}");
                    }
                    for e in r.expectations.iter().filter(|e| !e.passed()) {
                        let actual = e
                            .actual
                            .as_ref()
                            .map_or("missing".to_string(), Value::to_string);
                        let _ = writeln!(
                            out,
                            "      {}: expected {}, got {actual}",
                            e.key, e.expected
                        );
                    }
                }
            }
            if reports.iter().all(FixtureReport::passed) {
                EXIT_OK
            } else {
                EXIT_FIXTURE_FAILURE
            }
        }
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match &cli.command {
        Command::Invariants { files } => run_files(&cli, files, report::invariants_report, out),
        Command::Balanced { files } => run_files(&cli, files, report::balanced_report, out),
        Command::Zariski { files } => run_files(&cli, files, report::zariski_report, out),
        Command::Fixtures { action } => run_fixtures(&cli, action, out),
    }
}
