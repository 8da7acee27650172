//! Command-line front end: argument parsing, arrangement loading, and
//! dispatch to the report builders.
//!
//! Exit codes: 0 on success, 1 on input errors, 2 when a requested value
//! depends on an unresolved local Betti interval.

pub mod catalog;
pub mod format;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arrangement::Arrangement;
use crate::covers::{CoverEngine, Resolution, ShiftSearchConfig};
use crate::error::{Error, Result};

pub use catalog::{catalog, lookup, CatalogEntry};
pub use format::{parse_file, parse_file_record, ArrangementFile, HyperplaneRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "arrcov", version, about = "Betti numbers of cyclic covers of hyperplane arrangement complements")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Source {
    /// Built-in arrangement key (see `catalog list`).
    #[arg(long, conflicts_with = "file")]
    pub catalog: Option<String>,
    /// Arrangement file in JSON.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Decone a central arrangement at this hyperplane index first.
    #[arg(long)]
    pub decone: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Poincaré polynomial, β, Euler characteristic, sizes.
    Info {
        #[command(flatten)]
        source: Source,
    },
    /// Flats with Möbius values, and dense edges of the projective closure.
    Lattice {
        #[command(flatten)]
        source: Source,
    },
    /// NBC basis sizes, optionally with the Aomoto differentials.
    Os {
        #[command(flatten)]
        source: Source,
        /// Print the NBC basis and the differential matrices.
        #[arg(long)]
        matrices: bool,
        /// Integer weights for the differentials, comma-separated (default all 1).
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
    },
    /// Bounds on b_q(L^k_1).
    LocalBetti {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        k: u64,
        /// Extra shift vector to try, comma-separated.
        #[arg(long = "shift", allow_hyphen_values = true)]
        shifts: Vec<String>,
        /// Asserted value `q=v`.
        #[arg(long = "assert")]
        asserts: Vec<String>,
    },
    /// Betti numbers of X_m(A).
    CoverBetti {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        m: u64,
        /// Asserted value `k:q=v` for b_q(L^k_1).
        #[arg(long = "assert")]
        asserts: Vec<String>,
    },
    /// Characteristic polynomial of the monodromy on H^q(X_m(A)).
    Charpoly {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        q: usize,
        #[arg(long = "assert")]
        asserts: Vec<String>,
    },
    /// Polynomials p_{q,i} with b_q(X_m) = p_{q, m mod N}(m).
    Periodicity {
        #[command(flatten)]
        source: Source,
        #[arg(long = "assert")]
        asserts: Vec<String>,
    },
    /// Coefficients of the Betti zeta function in degree q.
    Zeta {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        q: usize,
        #[arg(long = "assert")]
        asserts: Vec<String>,
    },
    /// Built-in arrangements.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    Show { key: String },
}

/// A loaded arrangement with its display name and catalog entry, if any.
struct Loaded {
    name: String,
    arr: Arrangement,
    entry: Option<CatalogEntry>,
}

fn input_error(context: &str, message: impl Into<String>) -> Error {
    Error::Parse { context: context.to_string(), message: message.into() }
}

fn load(source: &Source) -> Result<Loaded> {
    let (name, arr, entry) = match (&source.catalog, &source.file) {
        (Some(key), _) => {
            let entry = lookup(key).ok_or_else(|| input_error("--catalog", format!("unknown key {key:?}")))?;
            (key.clone(), entry.arrangement.clone(), Some(entry))
        }
        (None, Some(path)) => {
            let bytes = std::fs::read(path)
                .map_err(|e| input_error("--file", format!("cannot read {}: {e}", path.display())))?;
            let rec = parse_file_record(&bytes)?;
            (rec.name.clone(), rec.to_arrangement()?, None)
        }
        (None, None) => return Err(input_error("input", "one of --catalog or --file is required")),
    };
    match source.decone {
        None => Ok(Loaded { name, arr, entry }),
        Some(h) => Ok(Loaded { name: format!("{name} (decone at {h})"), arr: arr.decone(h)?, entry: None }),
    }
}

fn parse_ints(s: &str, context: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| input_error(context, format!("bad integer list {s:?}"))))
        .collect()
}

fn parse_count<T: std::str::FromStr>(s: &str, context: &str, whole: &str) -> Result<T> {
    s.trim().parse().map_err(|_| input_error(context, format!("malformed assertion {whole:?}")))
}

/// `q=v` for a fixed `k`.
fn parse_local_assert(s: &str, k: u64, res: &mut Resolution) -> Result<()> {
    let (q, v) = s.split_once('=').ok_or_else(|| input_error("--assert", format!("expected q=v, got {s:?}")))?;
    res.assert(k, parse_count(q, "--assert", s)?, parse_count(v, "--assert", s)?);
    Ok(())
}

/// `k:q=v`.
fn parse_resolution(asserts: &[String]) -> Result<Resolution> {
    let mut res = Resolution::new();
    for s in asserts {
        let (k, rest) =
            s.split_once(':').ok_or_else(|| input_error("--assert", format!("expected k:q=v, got {s:?}")))?;
        let k: u64 = parse_count(k, "--assert", s)?;
        if k == 0 {
            return Err(input_error("--assert", "k must be positive"));
        }
        parse_local_assert(rest, k, &mut res)?;
    }
    Ok(res)
}

/// A rendered command result.
pub struct Rendered {
    pub json: Value,
    pub text: String,
}

fn execute(cli: &Cli) -> Result<Rendered> {
    match &cli.command {
        Command::Info { source } => Ok(report::info(&load(source)?)),
        Command::Lattice { source } => Ok(report::lattice(&load(source)?)),
        Command::Os { source, matrices, weights } => {
            let l = load(source)?;
            let w = match weights {
                Some(s) => parse_ints(s, "--weights")?,
                None => vec![1; l.arr.len()],
            };
            report::os(&l, *matrices, &w)
        }
        Command::LocalBetti { source, k, shifts, asserts } => {
            let l = load(source)?;
            let extra_shifts = shifts.iter().map(|s| parse_ints(s, "--shift")).collect::<Result<_>>()?;
            let mut res = Resolution::new();
            for a in asserts {
                parse_local_assert(a, *k, &mut res)?;
            }
            let engine = CoverEngine::with_search(&l.arr, ShiftSearchConfig { extra_shifts, ..Default::default() });
            report::local_betti(&engine, *k, &res)
        }
        Command::CoverBetti { source, m, asserts } => {
            let l = load(source)?;
            let res = parse_resolution(asserts)?;
            report::cover_betti(&l, &CoverEngine::new(&l.arr), *m, &res)
        }
        Command::Charpoly { source, m, q, asserts } => {
            let l = load(source)?;
            report::charpoly(&CoverEngine::new(&l.arr), *m, *q, &parse_resolution(asserts)?)
        }
        Command::Periodicity { source, asserts } => {
            let l = load(source)?;
            report::periodicity(&CoverEngine::new(&l.arr), &parse_resolution(asserts)?)
        }
        Command::Zeta { source, q, asserts } => {
            let l = load(source)?;
            report::zeta(&CoverEngine::new(&l.arr), *q, &parse_resolution(asserts)?)
        }
        Command::Catalog { action: CatalogAction::List } => Ok(report::catalog_list()),
        Command::Catalog { action: CatalogAction::Show { key } } => {
            let entry = lookup(key).ok_or_else(|| input_error("catalog show", format!("unknown key {key:?}")))?;
            let text = entry.file().to_json();
            Ok(Rendered { json: serde_json::to_value(entry.file()).expect("file records serialize"), text })
        }
    }
}

fn is_catalog_show(cli: &Cli) -> bool {
    matches!(cli.command, Command::Catalog { action: CatalogAction::Show { .. } })
}

/// Run the CLI on `args` (including the program name); returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(r) => {
            let body = match cli.format {
                // The file format is always pretty JSON.
                _ if is_catalog_show(&cli) => r.text,
                Format::Json => format!("{}\n", r.json),
                Format::Text => r.text,
            };
            let _ = out.write_all(body.as_bytes());
            0
        }
        Err(e @ Error::Unresolved { .. }) => {
            let Error::Unresolved { k, intervals } = &e else { unreachable!() };
            let message = e.to_string();
            match cli.format {
                Format::Json => {
                    let ivs: Vec<Value> = intervals
                        .iter()
                        .map(|(q, lo, hi)| json!({"q": q, "lower": lo, "upper": hi}))
                        .collect();
                    let v = json!({"error": "unresolved", "k": k, "intervals": ivs, "message": message});
                    let _ = writeln!(out, "{v}");
                }
                Format::Text => {
                    let _ = writeln!(out, "{message}");
                }
            }
            let _ = writeln!(err, "error: {message}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
