use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use nsg_core::census::CensusRow;
use nsg_core::enumeration::{max_genus_from_env, GenusWalk};
use nsg_core::{
    census, family, map_reduce, verify_theorem, CensusFilter, Execution, FamilySpec, InspectRecord,
    NumericalSemigroup, TheoremId, VerifyOptions,
};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "nsg")]
#[command(
    about = "Inspect numerical semigroups and verify statements about them by exhaustive search"
)]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full structure record of one semigroup
    Inspect {
        /// Comma-separated generators, e.g. 4,10,13
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,

        /// Emit one JSON object instead of a table
        #[arg(long)]
        json: bool,
    },

    /// Check a statement on every semigroup in a genus range
    Verify {
        /// Statement id, e.g. char1, char-weight1, bo-weight
        #[arg(long)]
        theorem: TheoremId,

        #[arg(long, default_value_t = 0)]
        gamma: u64,

        /// Inclusive genus range `a..b`, or a single genus
        #[arg(long, value_parser = parse_genus_range)]
        genus: (u64, u64),

        /// Also check genera outside the statement's genus hypothesis
        #[arg(long)]
        probe_outside: bool,

        #[command(flatten)]
        jobs: Jobs,
    },

    /// Per-genus counts and histograms as CSV
    Census {
        #[arg(long)]
        max_genus: u64,

        /// Keep only semigroups matching `rho=K`, `gamma-hyperelliptic=G`,
        /// `f1=F` or `m1=M`; repeatable
        #[arg(long)]
        filter: Vec<CensusFilter>,

        /// Output file; standard output when absent
        #[arg(long)]
        out: Option<PathBuf>,

        #[command(flatten)]
        jobs: Jobs,
    },

    /// Build a member of a named family and print its record
    Family {
        /// quartic_sharp, triadic, triadic_r2, max_weight, min_weight_f4,
        /// hyperelliptic or sharp_weight_quartic
        name: String,

        #[arg(long)]
        gamma: Option<u64>,

        #[arg(long)]
        genus: Option<u64>,

        #[arg(long)]
        rho: Option<u64>,

        #[arg(long)]
        json: bool,
    },

    /// List semigroups by genus as JSON lines
    Enumerate {
        /// Inclusive genus range `a..b`, or a single genus
        #[arg(long, value_parser = parse_genus_range)]
        genus: (u64, u64),

        /// Print one count per genus instead of every semigroup
        #[arg(long)]
        count: bool,

        #[command(flatten)]
        jobs: Jobs,
    },
}

#[derive(Args)]
struct Jobs {
    /// Worker threads; 1 runs sequentially, default uses every core
    #[arg(long)]
    jobs: Option<usize>,
}

impl Jobs {
    fn execution(&self) -> Execution {
        Execution::with_jobs(self.jobs)
    }
}

fn parse_genus_range(s: &str) -> Result<(u64, u64), String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("`{t}` is not a non-negative integer"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let g = parse(s)?;
            (g, g)
        }
    };
    if lo > hi {
        return Err(format!("empty genus range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// Exit status for a command that ran to completion.
enum Status {
    Ok,
    Counterexample,
}

/// Errors that map to the I/O exit code rather than the usage one.
#[derive(Debug)]
struct IoFailure(anyhow::Error);

impl std::fmt::Display for IoFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for IoFailure {}

fn io_err(e: impl Into<anyhow::Error>) -> anyhow::Error {
    IoFailure(e.into()).into()
}

fn check_cap(hi: u64) -> anyhow::Result<()> {
    let cap = max_genus_from_env();
    if hi > cap {
        bail!("genus {hi} exceeds the enumeration cap {cap} (set NSG_MAX_GENUS to raise it)");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Counterexample) => ExitCode::from(EXIT_COUNTEREXAMPLE),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<IoFailure>().is_some() {
                ExitCode::from(EXIT_IO)
            } else {
                ExitCode::from(EXIT_USAGE)
            }
        }
    }
}

fn run(command: Command) -> anyhow::Result<Status> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let status = match command {
        Command::Inspect { gens, json } => {
            let h = NumericalSemigroup::from_generators(&gens)?;
            print_record(&mut out, &InspectRecord::new(&h)?, json)?;
            Status::Ok
        }
        Command::Verify {
            theorem,
            gamma,
            genus: (lo, hi),
            probe_outside,
            jobs,
        } => {
            check_cap(hi)?;
            let mut opts = VerifyOptions::new(gamma, lo..=hi).execution(jobs.execution());
            opts.probe_outside = probe_outside;
            let report = verify_theorem(theorem, &opts);
            for t in &report.per_genus {
                let line = json!({
                    "record": "genus",
                    "theorem_id": theorem.as_str(),
                    "genus": t.genus,
                    "in_hypothesis": t.in_hypothesis,
                    "checked": t.checked,
                    "failures": t.failures,
                });
                writeln!(out, "{line}").map_err(io_err)?;
            }
            for c in &report.counterexamples {
                let line = json!({
                    "record": "counterexample",
                    "theorem_id": theorem.as_str(),
                    "genus": c.genus,
                    "generators": c.generators,
                    "detail": c.detail,
                });
                writeln!(out, "{line}").map_err(io_err)?;
            }
            let mut summary = serde_json::to_value(&report)?;
            if let Some(obj) = summary.as_object_mut() {
                obj.remove("per_genus");
                obj.remove("counterexamples");
                obj.insert("record".into(), "summary".into());
                obj.insert(
                    "counterexample_count".into(),
                    report.counterexamples.len().into(),
                );
            }
            writeln!(out, "{summary}").map_err(io_err)?;
            if report.holds() {
                Status::Ok
            } else {
                Status::Counterexample
            }
        }
        Command::Census {
            max_genus,
            filter,
            out: path,
            jobs,
        } => {
            check_cap(max_genus)?;
            let rows = census(max_genus, &filter, jobs.execution());
            match path {
                Some(p) => {
                    let file = File::create(&p)
                        .with_context(|| format!("cannot create {}", p.display()))
                        .map_err(io_err)?;
                    write_census(file, &rows)?;
                }
                None => write_census(&mut out, &rows)?,
            }
            Status::Ok
        }
        Command::Family {
            name,
            gamma,
            genus,
            rho,
            json,
        } => {
            let params: BTreeMap<String, u64> = [("gamma", gamma), ("genus", genus), ("rho", rho)]
                .into_iter()
                .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
                .collect();
            let spec = FamilySpec::from_params(&name, &params)?;
            let h = family(spec)?;
            print_record(&mut out, &InspectRecord::new(&h)?, json)?;
            Status::Ok
        }
        Command::Enumerate {
            genus: (lo, hi),
            count,
            jobs,
        } => {
            check_cap(hi)?;
            if count {
                let width = (hi + 1) as usize;
                let counts = map_reduce(
                    lo..=hi,
                    jobs.execution(),
                    || vec![0u64; width],
                    |h| {
                        let mut v = vec![0u64; width];
                        v[h.genus() as usize] = 1;
                        v
                    },
                    |mut a, b| {
                        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                        a
                    },
                );
                for g in lo..=hi {
                    let line = json!({ "genus": g, "count": counts[g as usize] });
                    writeln!(out, "{line}").map_err(io_err)?;
                }
            } else {
                let mut all: Vec<(u64, Vec<u64>)> = GenusWalk::new(lo..=hi)
                    .map(|h| (h.genus(), h.min_generators().to_vec()))
                    .collect();
                all.sort();
                for (g, gens) in all {
                    let line = json!({ "genus": g, "generators": gens });
                    writeln!(out, "{line}").map_err(io_err)?;
                }
            }
            Status::Ok
        }
    };
    out.flush().map_err(io_err)?;
    Ok(status)
}

fn print_record(out: &mut impl Write, record: &InspectRecord, json: bool) -> anyhow::Result<()> {
    if json {
        serde_json::to_writer(&mut *out, record).map_err(io_err)?;
        writeln!(out).map_err(io_err)?;
    } else {
        write!(out, "{}", record.to_table()).map_err(io_err)?;
    }
    Ok(())
}

/// `k:v;k:v`, keys ascending.
fn histogram<K: std::fmt::Display>(h: &BTreeMap<K, u64>) -> String {
    let mut s = String::new();
    for (i, (k, v)) in h.iter().enumerate() {
        if i > 0 {
            s.push(';');
        }
        let _ = write!(s, "{k}:{v}");
    }
    s
}

fn write_census(sink: impl Write, rows: &[CensusRow]) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record([
        "genus",
        "count",
        "rho_histogram",
        "hyperelliptic_gamma_counts",
        "min_weight",
        "max_weight",
    ])
    .map_err(io_err)?;
    for r in rows {
        let weight = |w: &Option<nsg_core::census::WeightWitness>| {
            w.as_ref().map_or(String::new(), |w| w.weight.to_string())
        };
        w.write_record([
            r.genus.to_string(),
            r.count.to_string(),
            histogram(&r.rho_histogram),
            histogram(&r.gamma_counts),
            weight(&r.min_weight),
            weight(&r.max_weight),
        ])
        .map_err(io_err)?;
    }
    w.flush().map_err(io_err)?;
    Ok(())
}
