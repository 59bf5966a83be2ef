//! bspec: Fourier analysis and certified polynomial inequalities on the
//! Boolean cube.
//!
//! Exit codes: 0 success / all checks passed, 1 verification failure,
//! 2 usage error, 3 capacity exceeded.

mod input;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use bspec_core::cheb::{cheb_psi_coeff, chebyshev, markov_growth_point, markov_number};
use bspec_core::error::Error;
use bspec_core::inequalities::bh_ratio;
use bspec_core::io::{spectrum_to_json, write_truth_table};
use bspec_core::report::{fmt_float, InequalityReport, DEFAULT_TOL};
use bspec_core::suites::{run_suite, SuiteName, SuiteParams};
use bspec_core::witness::{
    ratio_table, ratio_table_csv, search_bh_witness, SearchConfig, Strategy,
};

use input::load_input;

#[derive(Parser)]
#[command(
    name = "bspec",
    version,
    about = "Fourier analysis and certified polynomial inequalities on the Boolean cube"
)]
struct Cli {
    /// Cap on worker threads for enumeration kernels (env BSPEC_THREADS;
    /// default: all cores). Results are identical for any thread count.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Transform a function (truth table, JSON, or generator spec) to spectrum JSON.
    Spectrum {
        /// Truth-table file, spectrum JSON file, '-' for stdin, or a
        /// generator spec such as maj:3, dict:4:2, const:3:1.5, random:4:2:7.
        input: String,
        /// Truncate the output to levels <= this degree.
        #[arg(long)]
        degree: Option<u32>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Synthesize the truth table of a spectrum JSON file.
    Synth {
        /// Spectrum JSON file or '-' for stdin.
        input: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Empirical Bohnenblust-Hille quotient of a function.
    Bh {
        input: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Emit a CSV row instead of JSON.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        /// Emit JSON (the default).
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Run a named verification suite and report pass/fail counts.
    Verify {
        /// One of: fourier, hyper, blei, polarization, markov, psi, lorentz, aa, all.
        suite: String,
        /// Max cube dimension for random instances.
        #[arg(long, default_value_t = 5)]
        n: u32,
        /// Max degree for random instances.
        #[arg(long, default_value_t = 3)]
        d: u32,
        /// Random instances per property.
        #[arg(long, default_value_t = 60)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Emit flattened CSV instead of JSON.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        /// Emit JSON (the default).
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Search for a large Bohnenblust-Hille ratio at fixed (n, d).
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        /// random-restart, sign-flip-local-search, or flat-sign-exhaustive.
        #[arg(long, default_value = "random-restart")]
        strategy: String,
        /// Objective-evaluation budget.
        #[arg(long, default_value_t = 200)]
        iters: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Restrict coefficients to level d only.
        #[arg(long)]
        homogeneous: bool,
        /// Write the witness JSON here (default stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a ratio-table CSV over 1..=d and 1..=n to this path
        /// ('-' for stdout).
        #[arg(long)]
        csv: Option<String>,
    },
    /// Chebyshev machinery as CSV: monomial and psi coefficients, Markov
    /// numbers, and the growth trace.
    Cheb {
        #[arg(long)]
        d: u32,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args)]
struct OutArg {
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads.or_else(threads_from_env) {
        // Ignore the error when a pool already exists (e.g. under tests).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(exit_code_for(&err));
        }
    }
}

fn threads_from_env() -> Option<usize> {
    std::env::var("BSPEC_THREADS").ok()?.parse().ok()
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Capacity(_) => 3,
        _ => 2,
    }
}

fn run(command: Command) -> Result<i32, Error> {
    match command {
        Command::Spectrum { input, degree, out } => {
            let mut spectrum = load_input(&input)?.into_spectrum();
            if let Some(m) = degree {
                spectrum = spectrum.truncate_degree(m);
            }
            emit(&out.out, &(spectrum_to_json(&spectrum)? + "\n"))?;
            Ok(0)
        }
        Command::Synth { input, out } => {
            let spectrum = load_input(&input)?.into_spectrum();
            emit(&out.out, &write_truth_table(&spectrum.inverse_transform()?))?;
            Ok(0)
        }
        Command::Bh {
            input,
            tol,
            csv,
            json: _,
            out,
        } => {
            let spectrum = load_input(&input)?.into_spectrum();
            let report = bh_ratio(&spectrum, tol)?;
            let text = if csv {
                reports_to_csv(std::slice::from_ref(&report))
            } else {
                serde_json::to_string_pretty(&report)? + "\n"
            };
            emit(&out.out, &text)?;
            Ok(0)
        }
        Command::Verify {
            suite,
            n,
            d,
            trials,
            seed,
            tol,
            csv,
            json: _,
            out,
        } => {
            let name: SuiteName = suite.parse()?;
            let params = SuiteParams {
                n,
                d,
                trials,
                seed,
                tol,
            };
            let started = Instant::now();
            let result = run_suite(name, &params)?;
            // Timing goes to stderr: suite JSON must be byte-identical
            // across runs with the same seed.
            eprintln!(
                "suite {}: {} reports, {} passed, {} failed in {:.2}s",
                result.suite,
                result.reports.len(),
                result.passed,
                result.failed,
                started.elapsed().as_secs_f64()
            );
            let text = if csv {
                reports_to_csv(&result.reports)
            } else {
                serde_json::to_string_pretty(&result)? + "\n"
            };
            emit(&out.out, &text)?;
            Ok(if result.all_passed() { 0 } else { 1 })
        }
        Command::Search {
            n,
            d,
            strategy,
            iters,
            seed,
            homogeneous,
            out,
            csv,
        } => {
            let cfg = SearchConfig {
                n,
                d,
                strategy: strategy.parse::<Strategy>()?,
                iterations: iters,
                seed,
                homogeneous_only: homogeneous,
            };
            if let Some(csv_path) = &csv {
                let rows = ratio_table(1..=d, 1..=n, &cfg)?;
                let text = ratio_table_csv(&rows);
                if csv_path == "-" {
                    print!("{text}");
                } else {
                    std::fs::write(csv_path, text)?;
                }
                if out.is_none() {
                    return Ok(0);
                }
            }
            let witness = search_bh_witness(&cfg)?;
            emit(&out, &(serde_json::to_string_pretty(&witness)? + "\n"))?;
            Ok(0)
        }
        Command::Cheb { d, out } => {
            emit(&out.out, &cheb_csv(d)?)?;
            Ok(0)
        }
    }
}

/// CSV rows (kind, d, m, value) for one degree: exact monomial coefficients
/// of T_d, psi coefficients, Markov numbers, and the growth trace up to d.
fn cheb_csv(d: u32) -> Result<String, Error> {
    let mut rows = String::from("kind,d,m,value\n");
    let poly = chebyshev(d)?;
    for (m, c) in poly.coeffs().iter().enumerate() {
        rows.push_str(&format!("monomial,{d},{m},{c}\n"));
    }
    for n in 0..=d {
        rows.push_str(&format!("psi,{d},{n},{}\n", cheb_psi_coeff(n, d)?));
    }
    for m in 0..=d {
        rows.push_str(&format!("markov,{d},{m},{}\n", markov_number(m, d)?));
    }
    for dd in 1..=d {
        let (m, value) = markov_growth_point(dd)?;
        rows.push_str(&format!("growth,{dd},{m},{}\n", fmt_float(value)));
    }
    Ok(rows)
}

/// Flattens reports to CSV with the union of param keys as trailing columns.
fn reports_to_csv(reports: &[InequalityReport]) -> String {
    let mut keys: Vec<&str> = reports
        .iter()
        .flat_map(|r| r.params.keys().map(|k| k.as_str()))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    let mut out = InequalityReport::csv_header(&keys);
    out.push('\n');
    for report in reports {
        out.push_str(&report.csv_row(&keys));
        out.push('\n');
    }
    out
}

fn emit(path: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, content),
        None => std::io::stdout().write_all(content.as_bytes()),
    }
}
