use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gentaft::axioms::Scope;
use gentaft::pii::{ScanMode, DEFAULT_SAMPLES_PER_ORDER, DEFAULT_SCAN_SEED};
use gentaft::GtaParameters;
use serde_json::Value;

mod commands;

/// Exact computations in generalised Taft algebras H_q(a1, a2, b1, b2).
///
/// Every command prints one JSON object on stdout and a short summary on
/// stderr. Exit status: 0 success, 1 failed check or disagreement, 2 invalid input.
#[derive(Parser)]
#[command(name = "gentaft", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print only the JSON report, no summary on stderr.
    #[arg(long, global = true)]
    json_only: bool,

    /// Add wall-clock seconds to the JSON report (it then differs between runs).
    #[arg(long, global = true)]
    timing: bool,

    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true, value_name = "THREADS")]
    parallelism: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Validity, structure, classifier verdict and every pair in involution of one algebra.
    Check {
        #[command(flatten)]
        tuple: TupleArgs,
        /// Compute integrals even for large algebras.
        #[arg(long)]
        allow_large: bool,
    },
    /// Compare the classifier with brute force for every order up to a bound.
    Scan {
        /// Largest order N; same as --max-n.
        max_n_pos: Option<u32>,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long, value_enum, default_value_t = ModeArg::Hybrid)]
        mode: ModeArg,
        /// Tuples drawn per order when sampling.
        #[arg(long, default_value_t = DEFAULT_SAMPLES_PER_ORDER)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SCAN_SEED)]
        seed: u64,
    },
    /// Hopf algebra axioms and Radford's formula for S^4.
    Axioms {
        #[command(flatten)]
        tuple: TupleArgs,
        #[arg(long, value_enum, default_value_t = ScopeArg::Exhaustive)]
        scope: ScopeArg,
        /// Random monomial pairs in sampled scope.
        #[arg(long, default_value_t = Scope::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = Scope::DEFAULT_SEED)]
        seed: u64,
    },
    /// Dual parameters, the dual presentation and the pairing.
    Dual {
        #[command(flatten)]
        tuple: TupleArgs,
    },
    /// Drinfeld and anti-Drinfeld doubles and the isomorphism built from a pair.
    Double {
        #[command(flatten)]
        tuple: TupleArgs,
        /// Random basis triples for the associativity check.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = Scope::DEFAULT_SEED)]
        seed: u64,
        /// Allow doubles of dimension above the default limit.
        #[arg(long)]
        allow_large: bool,
    },
}

#[derive(Args)]
struct TupleArgs {
    #[arg(allow_negative_numbers = true)]
    n: i64,
    #[arg(allow_negative_numbers = true)]
    a1: i64,
    #[arg(allow_negative_numbers = true)]
    a2: i64,
    #[arg(allow_negative_numbers = true)]
    b1: i64,
    #[arg(allow_negative_numbers = true)]
    b2: i64,
}

impl TupleArgs {
    fn params(&self) -> Result<GtaParameters, InvalidInput> {
        GtaParameters::new(self.n, self.a1, self.a2, self.b1, self.b2)
            .map_err(|e| InvalidInput(e.to_string()))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sampled,
    Hybrid,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Exhaustive,
    Sampled,
}

/// Bad parameters or flags; exit status 2.
pub struct InvalidInput(pub String);

/// A finished command: the JSON body, a one-line summary and whether every check passed.
pub struct Outcome {
    pub report: Value,
    pub summary: String,
    pub ok: bool,
}

fn run(cli: &Cli) -> Result<(&'static str, Outcome), InvalidInput> {
    Ok(match &cli.command {
        Command::Check { tuple, allow_large } => {
            ("check", commands::check(&tuple.params()?, *allow_large))
        }
        Command::Scan {
            max_n_pos,
            max_n,
            mode,
            samples,
            seed,
        } => {
            let max_n = max_n.or(*max_n_pos).ok_or_else(|| {
                InvalidInput("scan needs a bound: scan <MAX_N> or --max-n".into())
            })?;
            let mode = match mode {
                ModeArg::Exhaustive => ScanMode::Exhaustive,
                ModeArg::Sampled => ScanMode::Sampled,
                ModeArg::Hybrid => ScanMode::Hybrid,
            };
            ("scan", commands::scan(max_n, mode, *samples, *seed)?)
        }
        Command::Axioms {
            tuple,
            scope,
            samples,
            seed,
        } => {
            let scope = match scope {
                ScopeArg::Exhaustive => Scope::Exhaustive,
                ScopeArg::Sampled => Scope::Sampled {
                    samples: *samples,
                    seed: *seed,
                },
            };
            ("axioms", commands::axioms(&tuple.params()?, scope))
        }
        Command::Dual { tuple } => ("dual", commands::dual(&tuple.params()?)),
        Command::Double {
            tuple,
            samples,
            seed,
            allow_large,
        } => (
            "double",
            commands::double(&tuple.params()?, *samples, *seed, *allow_large)?,
        ),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.parallelism {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("gentaft: cannot set up {threads} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    match run(&cli) {
        Ok((name, mut outcome)) => {
            let seconds = start.elapsed().as_secs_f64();
            if let Value::Object(map) = &mut outcome.report {
                map.insert("command".into(), Value::from(name));
                map.insert(
                    "schema_version".into(),
                    Value::from(commands::SCHEMA_VERSION),
                );
                map.insert("ok".into(), Value::from(outcome.ok));
                if cli.timing {
                    map.insert("timing_seconds".into(), Value::from(seconds));
                }
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&outcome.report).expect("reports serialize")
            );
            if !cli.json_only {
                let status = if outcome.ok { "ok" } else { "FAILED" };
                eprintln!("{name}: {status}: {} ({seconds:.2}s)", outcome.summary);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(InvalidInput(message)) => {
            let report = serde_json::json!({
                "error": message,
                "ok": false,
                "schema_version": commands::SCHEMA_VERSION,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("reports serialize")
            );
            if !cli.json_only {
                eprintln!("gentaft: invalid input: {message}");
            }
            ExitCode::from(2)
        }
    }
}
