//! The `hwv` command line. Exit codes: 0 success, 1 negative verdict
//! (invalid certificate, refusal, failed filter or criterion), 2 usage or
//! input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hwv_core::budget::Budget;
use hwv_core::contraction::contract_power;
use hwv_core::occurrence::{
    certify, dispatch, kl_filter, minimal_m, split_partition, splitting_plan, verify_certificate, Branch, KlVerdict,
    Outcome, SearchOptions, SplitMode, Verdict,
};
use hwv_core::oracle::{hwv_rank_by_evaluation, plethysm_coeff_sf, plethysm_coeff_tensor};
use hwv_core::symtensor::format_rational;
use hwv_core::tableau::enumerate_classes;
use hwv_core::Partition;
use serde::Serialize;
use serde_json::{json, Value};

use crate::acceptance;
use crate::error::{format_err, Result};
use crate::json::{CertificateJson, PlannedBlockJson, PointJson, RefusalJson, SplitJson, TableauJson};

#[derive(Debug, Parser)]
#[command(name = "hwv", version, about = "Highest weight vectors in plethysms and occurrence certificates")]
pub struct Cli {
    /// Seed for every randomized search
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Maximum enumeration nodes per evaluation
    #[arg(long = "cost-cap", global = true, default_value_t = 50_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub cost_cap: u64,
    /// Write the output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Sf,
    Tensor,
    Rank,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Strict,
    Structural,
}

fn parse_lambda(s: &str) -> std::result::Result<Partition, String> {
    let parts = s
        .split(',')
        .map(|x| x.trim().parse::<u64>().map_err(|e| format!("part {x:?}: {e}")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Plethysm coefficient a_λ(d[n])
    Coeff {
        #[arg(long, value_parser = parse_lambda)]
        lambda: Partition,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Method::Sf)]
        method: Method,
    },
    /// Tableau classes spanning the highest weight vectors of weight λ
    Enumerate {
        #[arg(long, value_parser = parse_lambda)]
        lambda: Partition,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u64,
    },
    /// ⟨v_T, p^{⊗d}⟩ for a tableau file and a point file
    Eval {
        #[arg(long)]
        tableau: PathBuf,
        #[arg(long)]
        point: PathBuf,
    },
    /// Inner lift to degree n and/or outer lift to d letters
    Lift {
        #[arg(long)]
        tableau: PathBuf,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Occurrence certificate for λ in the coordinate ring of Det_n
    Certify {
        #[arg(long, value_parser = parse_lambda)]
        lambda: Partition,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        /// Defaults to the smallest m passing the length/body filter
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
        #[arg(long = "max-tries", default_value_t = 32)]
        max_tries: u32,
    },
    /// Recompute and check a certificate
    Verify {
        #[arg(long)]
        cert: PathBuf,
        /// Node cap for the direct evaluation of lifted tableaux (0 disables it)
        #[arg(long = "direct-cap", default_value_t = 2_000_000)]
        direct_cap: u64,
    },
    /// The splitting decomposition into rectangles and hooks
    Split {
        #[arg(long, value_parser = parse_lambda)]
        lambda: Partition,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
    },
    /// The necessary length/body condition
    KlFilter {
        #[arg(long, value_parser = parse_lambda)]
        lambda: Partition,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        m: u64,
    },
    /// Run the acceptance suite
    Selftest {
        /// Only these criteria
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

/// What a command produced.
struct Output {
    /// printed as-is in both formats
    text: Option<String>,
    json: Option<Value>,
    code: i32,
}

impl Output {
    fn text(s: impl Into<String>, code: i32) -> Self {
        Self { text: Some(s.into()), json: None, code }
    }

    fn json(v: impl Serialize, code: i32) -> Result<Self> {
        Ok(Self { text: None, json: Some(serde_json::to_value(v)?), code })
    }
}

/// Parses `args` and runs the command, returning the exit code.
pub fn main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<i32> {
    let out = execute(cli)?;
    let rendered = match (&out.text, &out.json) {
        (Some(t), _) => format!("{t}\n"),
        (None, Some(v)) if cli.format == Format::Json => format!("{}\n", serde_json::to_string_pretty(v)?),
        (None, Some(v)) => table(v),
        (None, None) => String::new(),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, rendered)?,
        None => std::io::stdout().write_all(rendered.as_bytes())?,
    }
    Ok(out.code)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn execute(cli: &Cli) -> Result<Output> {
    let opts = SearchOptions { seed: cli.seed, cost_cap: cli.cost_cap, ..SearchOptions::default() };
    match &cli.command {
        Command::Coeff { lambda, d, n, method } => {
            let a = match method {
                Method::Sf => plethysm_coeff_sf(lambda, *d, *n, lambda.length())?,
                Method::Tensor => plethysm_coeff_tensor(lambda, *d, *n)?,
                Method::Rank => hwv_rank_by_evaluation(lambda, *d, *n, cli.seed)? as u64,
            };
            Ok(Output::text(a.to_string(), 0))
        }
        Command::Enumerate { lambda, d, n } => {
            if lambda.size() != *d as u64 * n {
                return format_err(format!("|λ| = {} != dn = {}", lambda.size(), *d as u64 * n));
            }
            let classes: Vec<TableauJson> =
                enumerate_classes(lambda, *d, *n).iter().map(|c| TableauJson::from(c.tableau())).collect();
            Output::json(classes, 0)
        }
        Command::Eval { tableau, point } => {
            let t = read_json::<TableauJson>(tableau)?.to_tableau()?;
            let poly = read_json::<PointJson>(point)?.to_poly(t.n())?;
            let v = contract_power(&t, &poly, &mut Budget::capped(cli.cost_cap))?;
            Ok(Output::text(format_rational(&v), 0))
        }
        Command::Lift { tableau, n, d } => {
            if n.is_none() && d.is_none() {
                return format_err("lift needs --n and/or --d");
            }
            let mut t = read_json::<TableauJson>(tableau)?.to_tableau()?;
            if let Some(n) = n {
                t = t.inner_lift(*n)?;
            }
            if let Some(d) = d {
                t = t.outer_lift(*d)?;
            }
            Output::json(TableauJson::from(&t), 0)
        }
        Command::Certify { lambda, n, d, m, mode, max_tries } => {
            let m = m.unwrap_or_else(|| minimal_m(lambda, *d));
            let opts = SearchOptions { max_tries: *max_tries, ..opts };
            match mode {
                Mode::Structural => dry_run(lambda, *n, *d, m),
                Mode::Strict => match certify(lambda, *n, *d, m, &opts)? {
                    Outcome::Certified { branch, certificate } => {
                        Output::json(CertificateJson::new(&certificate, Some(branch.name())), 0)
                    }
                    Outcome::Refused(r) => Output::json(RefusalJson::from(&r), 1),
                },
            }
        }
        Command::Verify { cert, direct_cap } => {
            let cert = read_json::<CertificateJson>(cert)?.to_certificate()?;
            Ok(match verify_certificate(&cert, *direct_cap) {
                Verdict::Valid { direct_checks } => {
                    Output::text(format!("valid ({} blocks, {direct_checks} checked directly)", cert.blocks.len()), 0)
                }
                Verdict::Invalid(reason) => Output::text(format!("invalid({reason})"), 1),
            })
        }
        Command::Split { lambda, n, d, m, mode } => {
            let mode = if *mode == Mode::Strict { SplitMode::Strict } else { SplitMode::Structural };
            Output::json(SplitJson::from(&split_partition(lambda, *n, *d, *m, mode)?), 0)
        }
        Command::KlFilter { lambda, n, d, m } => {
            let v = kl_filter(lambda, *n, *d, *m)?;
            Ok(Output::text(v.to_string(), i32::from(v != KlVerdict::Pass)))
        }
        Command::Selftest { only } => {
            let reports = acceptance::run(only);
            let lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
            let failed = reports.iter().any(|r| !r.passed);
            Ok(Output::text(lines.join("\n"), i32::from(failed)))
        }
    }
}

/// The branch report of `certify --mode structural`: no evaluations.
fn dry_run(lambda: &Partition, n: u64, d: u64, m: u64) -> Result<Output> {
    let branch = dispatch(lambda, n, d, m)?;
    let mut report = json!({
        "dryRun": true,
        "branch": branch.name(),
        "m": m,
        "klFilter": kl_filter(lambda, n, d, m)?.to_string(),
    });
    if branch == Branch::Splitting {
        let split = split_partition(lambda, n, d, m, SplitMode::Structural)?;
        let plan: Vec<PlannedBlockJson> = splitting_plan(&split, n, m)?.iter().map(PlannedBlockJson::from).collect();
        report["split"] = serde_json::to_value(SplitJson::from(&split))?;
        report["plan"] = serde_json::to_value(plan)?;
    }
    Output::json(report, 0)
}

/// `key: value` lines for the top level of a JSON value.
fn table(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (k, val) in map {
                let shown = match val {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                out.push_str(&format!("{k:width$}  {shown}\n"));
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                out.push_str(&format!("{i:>4}  {item}\n"));
            }
        }
        other => out.push_str(&format!("{other}\n")),
    }
    out
}
