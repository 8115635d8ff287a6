//! Command-line front end. [`run`] executes a parsed [`Cli`] against
//! arbitrary streams and returns the process exit code: 0 on success, 1 when
//! verification fails or a requested removal is impossible, 2 on usage or
//! parse errors.

pub mod document;
pub mod dot;

use std::collections::BTreeSet;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use document::DecompositionDocument;

use crate::constructions::{construct, construction_name};
use crate::enumeration::{enumerate_decompositions, EnumerationConfig};
use crate::error::Error;
use crate::graph::{verify_decomposition, Edge, Violation};
use crate::removal::{path_ends_feasible, remove_star, remove_tadpole, trim_path_ends};
use document::{checked_edge, edge_pairs, removal_metadata};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "gallai",
    version,
    about = "Path decompositions of complete graphs within the Gallai bound"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decompose K_n into ⌊(n+1)/2⌋ paths.
    Construct {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a decomposition document; exit 1 if any check fails.
    Verify {
        /// Document path; standard input when absent or `-`.
        input: Option<PathBuf>,
        /// Report format; plain text when omitted.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Delete a star or a tadpole from K_n and decompose what is left.
    Remove {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Trim edges off path ends, in the given order.
    Trim {
        input: Option<PathBuf>,
        /// Comma-separated edges such as `1-7,2-7`.
        #[arg(long)]
        edges: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Search for a decomposition of K_n whose path ends can absorb the edges.
    Feasible {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        edges: String,
        /// Largest n searched; defaults to GALLAI_ENUM_CAP or 8.
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List the decompositions of K_n up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
        /// Time budget in seconds; allows n up to 9.
        #[arg(long, value_parser = parse_seconds)]
        budget: Option<Duration>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// With `--format dot`, emit one graph per path.
    #[arg(long)]
    pub split: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Star,
    Tadpole,
}

fn parse_seconds(s: &str) -> Result<Duration, String> {
    s.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite() && *x >= 0.0)
        .map(Duration::from_secs_f64)
        .ok_or_else(|| format!("{s:?} is not a number of seconds"))
}

/// Parses `1-2,3-4` (spaces allowed) into edges of `K_n`.
pub fn parse_edges(s: &str, n: usize) -> Result<Vec<Edge>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let bad = || Error::InvalidParameter(format!("{t:?} is not an edge like 3-5"));
            let (a, b) = t.split_once('-').ok_or_else(bad)?;
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().parse().map_err(|_| bad())?;
            checked_edge(a, b, n)
        })
        .collect()
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn failed(message: impl ToString) -> Failure {
        Failure {
            code: EXIT_FAILURE,
            message: message.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Construction(_) | Error::InvalidDecomposition(_) | Error::BudgetExceeded => {
                Failure::failed(e)
            }
            _ => Failure::usage(e),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::usage(e)
    }
}

/// Runs one command. Documents go to `out`, diagnostics to `err`.
pub fn run(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli.command, stdin, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Construct { n, output } => {
            let d = construct(n)?;
            let doc = DecompositionDocument::from_decomposition(&d)
                .with_metadata("construction", Value::from(construction_name(n)));
            emit(out, &doc, &format!("K{n}"), output)?;
            Ok(EXIT_OK)
        }
        Command::Verify { input, format } => verify(&read_document(input, stdin)?, format, out),
        Command::Remove { kind, n, m, output } => {
            let surgery = match kind {
                Kind::Star => remove_star(n, m)?,
                Kind::Tadpole => remove_tadpole(n, m)?,
            };
            let doc = DecompositionDocument::from_decomposition(&surgery.decomposition)
                .with_metadata("removal", removal_metadata(&surgery.record));
            emit(out, &doc, &format!("K{n}"), output)?;
            Ok(EXIT_OK)
        }
        Command::Trim {
            input,
            edges,
            output,
        } => {
            let doc = read_document(input, stdin)?;
            let order = parse_edges(&edges, doc.n)?;
            let d = doc.decomposition()?;
            let (_, trimmed) = match trim_path_ends(&d, &order) {
                Ok(r) => r,
                Err(e @ (Error::NotAnEndEdge { .. } | Error::RemovalNotCovered { .. })) => {
                    return Err(Failure::failed(e))
                }
                Err(e) => return Err(e.into()),
            };
            let mut result = DecompositionDocument::from_decomposition(&trimmed);
            result.metadata = doc.metadata;
            result
                .metadata
                .insert("trim_order".into(), edge_pairs(&order));
            emit(out, &result, &format!("K{}", doc.n), output)?;
            Ok(EXIT_OK)
        }
        Command::Feasible {
            n,
            edges,
            cap,
            output,
        } => {
            let target: BTreeSet<Edge> = parse_edges(&edges, n)?.into_iter().collect();
            let cap = match cap {
                Some(c) => c,
                None => EnumerationConfig::from_env()?.cap,
            };
            match path_ends_feasible(n, &target, cap)? {
                Some(w) => {
                    let doc = DecompositionDocument::from_decomposition(&w.decomposition)
                        .with_metadata("trim_order", edge_pairs(&w.order));
                    emit(out, &doc, &format!("K{n}"), output)?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "infeasible")?;
                    Ok(EXIT_FAILURE)
                }
            }
        }
        Command::Enumerate {
            n,
            count_only,
            budget,
            output,
        } => {
            let mut config = EnumerationConfig::from_env()?;
            config.budget = budget;
            let classes = enumerate_decompositions(n, &config)?;
            if count_only {
                writeln!(out, "{}", classes.len())?;
                return Ok(EXIT_OK);
            }
            let docs: Vec<DecompositionDocument> = classes
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    DecompositionDocument::from_decomposition(&c.representative)
                        .with_metadata("class", Value::from(i + 1))
                        .with_metadata("automorphisms", Value::from(c.automorphisms))
                        .with_metadata("labeled_count", Value::from(c.labeled_count))
                })
                .collect();
            match output.format {
                Format::Json => {
                    let labeled: u64 = classes.iter().map(|c| c.labeled_count).sum();
                    let census = json!({
                        "n": n,
                        "class_count": classes.len(),
                        "labeled_total": labeled,
                        "classes": docs,
                    });
                    out.write_all(document::to_pretty_json(&census).as_bytes())?;
                }
                Format::Dot => {
                    for (i, doc) in docs.iter().enumerate() {
                        emit(out, doc, &format!("K{n}_C{}", i + 1), output)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn emit(
    out: &mut dyn Write,
    doc: &DecompositionDocument,
    name: &str,
    output: OutputArgs,
) -> Result<(), Failure> {
    let text = match (output.format, output.split) {
        (Format::Json, _) => doc.to_json(),
        (Format::Dot, false) => dot::render(doc, name),
        (Format::Dot, true) => dot::render_split(doc, name),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn read_document(
    input: Option<PathBuf>,
    stdin: &mut dyn Read,
) -> Result<DecompositionDocument, Failure> {
    let text = match input {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(&p)
            .map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    DecompositionDocument::from_json(&text)
        .map_err(|e| Failure::usage(format!("malformed document: {e}")))
}

fn verify(
    doc: &DecompositionDocument,
    format: Option<Format>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    doc.host()?;
    let (lines, passed) = match doc.decomposition() {
        Ok(d) => {
            let report = verify_decomposition(&d);
            let checks = [
                ("simple_paths", &report.simple_paths),
                ("edge_disjoint", &report.edge_disjoint),
                ("covers_host", &report.covering),
            ];
            let json_checks: serde_json::Map<String, Value> = checks
                .iter()
                .map(|(k, v)| (k.to_string(), v.as_ref().map(Violation::to_string).into()))
                .collect();
            let summary = json!({
                "n": report.n,
                "path_count": report.path_count,
                "bound": report.bound,
                "checks": json_checks,
                "within_bound": report.within_bound(),
                "passed": report.passed(),
            });
            ((report.to_string(), summary), report.passed())
        }
        Err(e) => {
            // Paths too short or with repeated vertices: report, don't reject.
            let text = format!("simple paths: FAIL ({e})");
            let summary = json!({
                "n": doc.n,
                "path_count": doc.paths.len(),
                "checks": { "simple_paths": e.to_string() },
                "passed": false,
            });
            ((text, summary), false)
        }
    };
    let (text, summary) = lines;
    match format {
        None => writeln!(out, "{text}")?,
        Some(Format::Json) => out.write_all(document::to_pretty_json(&summary).as_bytes())?,
        Some(Format::Dot) => {
            for line in text.lines() {
                writeln!(out, "// {line}")?;
            }
            out.write_all(dot::render(doc, &format!("K{}", doc.n)).as_bytes())?;
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAILURE })
}
