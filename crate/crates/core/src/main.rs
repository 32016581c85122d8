use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use affschur::verify::{export_tables, run_check, write_tables, CheckParams, CheckReport, TableKind, CHECK_NAMES};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "affschur", version, about = "Certificate checks and structure-constant tables for affine quantum Schur algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand)]
enum Command {
    /// Run named checks, or every check when none is given.
    Check { names: Vec<String> },
    /// List the available checks.
    List,
    /// Export the nonzero f, g or h constants within the bounds.
    Table { kind: String },
}

#[derive(Args)]
struct Opts {
    /// Rank n of the affine Schur algebra; the check default range when absent.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Target rank N for embedding checks.
    #[arg(long = "N", global = true)]
    big_n: Option<usize>,
    /// Degree r.
    #[arg(long, global = true)]
    r: Option<usize>,
    /// Restrict splits to this r'.
    #[arg(long, global = true)]
    rp: Option<usize>,
    /// Restrict splits to this r''.
    #[arg(long, global = true)]
    rpp: Option<usize>,
    /// Lower end of the shift window.
    #[arg(long, global = true, default_value_t = -2, allow_hyphen_values = true)]
    kmin: i64,
    /// Upper end of the shift window.
    #[arg(long, global = true, default_value_t = 2, allow_hyphen_values = true)]
    kmax: i64,
    /// Maximal distance of nonzero entries from the diagonal.
    #[arg(long, global = true)]
    spread: Option<usize>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of sampled cases per sampled check.
    #[arg(long, global = true, default_value_t = 150)]
    samples: usize,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value = "json", value_parser = ["json", "csv"])]
    format: String,
}

impl Opts {
    fn params(&self) -> CheckParams {
        CheckParams {
            n: self.n,
            big_n: self.big_n,
            r: self.r,
            rp: self.rp,
            rpp: self.rpp,
            kmin: self.kmin,
            kmax: self.kmax,
            spread: self.spread,
            seed: self.seed,
            samples: self.samples,
        }
    }

    fn sink(&self) -> io::Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(p) => Box::new(File::create(p)?),
            None => Box::new(io::stdout().lock()),
        })
    }
}

fn write_reports(reports: &[CheckReport], format: &str, mut out: Box<dyn Write>) -> Result<(), String> {
    match format {
        "json" => serde_json::to_writer_pretty(&mut out, reports).map_err(|e| e.to_string())?,
        _ => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["check", "status", "millis", "params"]).map_err(|e| e.to_string())?;
            for r in reports {
                let status = serde_json::to_value(r.status).map_err(|e| e.to_string())?;
                let rec = [r.check.clone(), status.as_str().unwrap_or_default().to_string(), r.millis.to_string(), r.params.to_string()];
                w.write_record(&rec).map_err(|e| e.to_string())?;
            }
            w.flush().map_err(|e| e.to_string())?;
            return Ok(());
        }
    }
    writeln!(out).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<bool, String> {
    let params = cli.opts.params();
    match cli.command {
        Command::List => {
            CHECK_NAMES.iter().for_each(|n| println!("{n}"));
            Ok(true)
        }
        Command::Check { names } => {
            let names: Vec<String> = if names.is_empty() { CHECK_NAMES.iter().map(|s| s.to_string()).collect() } else { names };
            let mut reports = Vec::new();
            for name in &names {
                let rep = run_check(name, &params).map_err(|e| e.to_string())?;
                eprintln!("{:<16} {:?} ({} ms)", rep.check, rep.status, rep.millis);
                reports.push(rep);
            }
            let ok = reports.iter().all(|r| r.passed());
            write_reports(&reports, &cli.opts.format, cli.opts.sink().map_err(|e| e.to_string())?)?;
            Ok(ok)
        }
        Command::Table { kind } => {
            let kind: TableKind = kind.parse().map_err(|e: affschur::Error| e.to_string())?;
            let rows = export_tables(kind, &params).map_err(|e| e.to_string())?;
            write_tables(&rows, &cli.opts.format, cli.opts.sink().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
