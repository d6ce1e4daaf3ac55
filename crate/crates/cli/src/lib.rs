//! The `permstat` command line.
//!
//! [`run_command`] does all the work and returns the rendered output, so the
//! binary is a thin wrapper and tests can drive it in-process.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use permstat::bijections::{phi, psi};
use permstat::paths::{fv_map, fz_map, Scheme};
use permstat::stats::full_record;
use permstat::tables::{Table, TableId};
use permstat::theorems::{build_polynomial, coeff_family, verify_with, Bounds, CheckId, CoeffFamily, Family};
use permstat::{parse_permutation, BoundaryConvention, Permutation, Var};
use rayon::prelude::*;
use serde::Serialize;

/// Exit status for a run in which some check failed.
pub const EXIT_FAIL: i32 = 1;
/// Exit status for malformed arguments or inputs.
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "permstat", version, about = "Permutation statistics, bijections and gamma expansions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every statistic of a permutation.
    Stats {
        perm: String,
        /// Boundary convention for the linear statistics.
        #[arg(long, default_value = "zz")]
        convention: String,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Image of a permutation under phi, psi, or the Laguerre history maps fv, fz.
    Bijection {
        map: String,
        perm: String,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// A_n, B_n, C_n or D*_n, optionally with integer values substituted.
    Poly {
        family: String,
        #[arg(long)]
        n: usize,
        /// `var=value`, repeatable.
        #[arg(long = "set")]
        set: Vec<String>,
    },
    /// A gamma coefficient a_{n,k}, b_{n,k,j}, c_{n,k} or d_{n,k}.
    Coeff {
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        j: usize,
    },
    /// An appendix table or figure, regenerated.
    Table {
        id: String,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Run one check (or all of them) for n = 1..=N.
    Verify {
        check: String,
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// A continued fraction expanded through x^N.
    Series {
        id: String,
        #[arg(long)]
        order: usize,
    },
}

/// What a run produced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { status: 0, stdout, stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Self { status: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { status: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match cli.command {
        Command::Stats { perm, convention, format } => stats(&perm, &convention, format),
        Command::Bijection { map, perm, format } => bijection(&map, &perm, format),
        Command::Poly { family, n, set } => poly(&family, n, &set),
        Command::Coeff { family, n, k, j } => coeff(&family, n, k, j),
        Command::Table { id, format } => table(&id, format),
        Command::Verify { check, n_max, jobs, format } => verify(&check, n_max, jobs, format),
        Command::Series { id, order } => series(&id, order),
    }
}

fn json_line(value: &impl Serialize) -> String {
    serde_json::to_string(value).expect("plain data serializes") + "\n"
}

fn perm_arg(text: &str) -> Result<Permutation, Outcome> {
    parse_permutation(text).map_err(Outcome::usage)
}

fn stats(perm: &str, convention: &str, format: OutputFormat) -> Outcome {
    let sigma = match perm_arg(perm) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let conv: BoundaryConvention = match convention.parse() {
        Ok(c) => c,
        Err(e) => return Outcome::usage(e),
    };
    let rec = full_record(&sigma, conv);
    match format {
        OutputFormat::Text => Outcome::ok(rec.to_string()),
        OutputFormat::Csv => {
            let mut out = String::from("stat,value\n");
            for (name, v) in rec.counts() {
                let _ = writeln!(out, "{name},{v}");
            }
            Outcome::ok(out)
        }
        OutputFormat::Json => {
            let mut obj = serde_json::Map::new();
            for (name, v) in rec.counts() {
                obj.insert(name.clone(), (*v).into());
            }
            for (name, vs) in rec.refinements() {
                obj.insert(name.clone(), vs.clone().into());
            }
            Outcome::ok(json_line(&obj))
        }
    }
}

#[derive(Serialize)]
struct Image<'a> {
    map: &'a str,
    input: String,
    image: String,
}

fn bijection(map: &str, perm: &str, format: OutputFormat) -> Outcome {
    let sigma = match perm_arg(perm) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let image = match map {
        "phi" => phi(&sigma).to_string(),
        "psi" => match psi(&sigma) {
            Ok(t) => t.to_string(),
            Err(e) => return Outcome { status: EXIT_FAIL, stdout: String::new(), stderr: format!("error: {e}\n") },
        },
        "fv" => fv_map(&sigma).to_string(),
        "fz" => fz_map(&sigma).to_string(),
        other => return Outcome::usage(format!("unknown map {other:?} (expected phi, psi, fv or fz)")),
    };
    match format {
        OutputFormat::Json => Outcome::ok(json_line(&Image { map, input: sigma.to_string(), image })),
        OutputFormat::Csv => Outcome::ok(format!("map,input,image\n{map},{sigma},\"{image}\"\n")),
        OutputFormat::Text => Outcome::ok(image + "\n"),
    }
}

fn poly(family: &str, n: usize, set: &[String]) -> Outcome {
    let family: Family = match family.parse() {
        Ok(f) => f,
        Err(e) => return Outcome::usage(e),
    };
    let mut assignment = Vec::new();
    for item in set {
        let Some((name, value)) = item.split_once('=') else {
            return Outcome::usage(format!("--set expects var=value, got {item:?}"));
        };
        let var = match Var::from_name(name.trim()) {
            Ok(v) => v,
            Err(e) => return Outcome::usage(e),
        };
        let value: i64 = match value.trim().parse() {
            Ok(v) => v,
            Err(_) => return Outcome::usage(format!("value for {name} must be an integer, got {value:?}")),
        };
        assignment.push((var, value));
    }
    match build_polynomial(family, n).eval_at(&assignment) {
        Ok(p) => Outcome::ok(format!("{p}\n")),
        Err(e) => Outcome::usage(e),
    }
}

fn coeff(family: &str, n: usize, k: usize, j: usize) -> Outcome {
    match family.parse::<CoeffFamily>() {
        Ok(f) => Outcome::ok(format!("{}\n", coeff_family(f, n, k, j))),
        Err(e) => Outcome::usage(e),
    }
}

fn table_json(t: &Table) -> String {
    t.rows
        .iter()
        .map(|row| {
            let obj: serde_json::Map<String, serde_json::Value> =
                t.header.iter().cloned().zip(row.iter().map(|c| c.clone().into())).collect();
            json_line(&obj)
        })
        .collect()
}

fn table(id: &str, format: OutputFormat) -> Outcome {
    let id: TableId = match id.parse() {
        Ok(t) => t,
        Err(e) => return Outcome::usage(e),
    };
    let t = id.build();
    Outcome::ok(match format {
        OutputFormat::Text => t.to_tex(),
        OutputFormat::Csv => t.to_csv(),
        OutputFormat::Json => table_json(&t),
    })
}

#[derive(Serialize)]
struct ReportLine<'a> {
    check: &'a str,
    n: usize,
    status: &'a str,
    witness: Option<&'a str>,
}

fn verify(check: &str, n_max: usize, jobs: Option<usize>, format: OutputFormat) -> Outcome {
    let bounds = Bounds::from_env();
    let runs: Vec<(CheckId, usize)> = if check.eq_ignore_ascii_case("all") {
        CheckId::ALL.iter().flat_map(|&c| (1..=n_max.min(bounds.max_n(c))).map(move |n| (c, n))).collect()
    } else {
        match check.parse::<CheckId>() {
            Ok(c) => (1..=n_max).map(|n| (c, n)).collect(),
            Err(e) => return Outcome::usage(e),
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Outcome::usage("--jobs must be at least 1");
        }
        builder = builder.num_threads(j);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e),
    };
    let results: Vec<_> = pool.install(|| runs.par_iter().map(|&(c, n)| verify_with(c, n, &bounds)).collect());

    let mut out = Outcome::default();
    for r in results {
        let report = match r {
            Ok(report) => report,
            Err(e) => return Outcome::usage(e),
        };
        if !report.passed() {
            out.status = EXIT_FAIL;
        }
        match format {
            OutputFormat::Json => {
                out.stdout += &json_line(&ReportLine {
                    check: report.check.id(),
                    n: report.n,
                    status: report.status.as_str(),
                    witness: report.witness.as_deref(),
                });
            }
            OutputFormat::Csv => {
                if out.stdout.is_empty() {
                    out.stdout += "check,n,status,witness\n";
                }
                let witness = report.witness.as_deref().unwrap_or("").replace('"', "\"\"");
                let _ = writeln!(out.stdout, "{},{},{},\"{witness}\"", report.check.id(), report.n, report.status.as_str());
            }
            OutputFormat::Text => {
                let _ = writeln!(out.stdout, "{report}");
                for note in &report.notes {
                    let _ = writeln!(out.stdout, "    {note}");
                }
            }
        }
    }
    out
}

fn series(id: &str, order: usize) -> Outcome {
    match id.parse::<Scheme>() {
        Ok(s) => Outcome::ok(s.series(order).to_string()),
        Err(e) => Outcome::usage(e),
    }
}
