//! Command-line front end: single runs, size sweeps, and verification
//! suites over the built-in corpora.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage error.
//! `SUMPROD_WORKERS` bounds the worker-thread count; results are
//! byte-identical for any worker count.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sumprod::report::{self, ExperimentConfig, Family};
use sumprod::verify::{self, Suite};
use sumprod::FieldTag;

#[derive(Parser)]
#[command(name = "sumprod", version, about = "Exact sum-product growth experiments over Q and Q(i)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute all quantities for one set and emit a report.
    Run(RunArgs),
    /// Run one config across several sizes and emit a table.
    Sweep(SweepArgs),
    /// Run a named verification suite over the built-in corpora.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Interval,
    Geometric,
    Random,
    File,
    GaussianFile,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Interval => Family::Interval,
            FamilyArg::Geometric => Family::Geometric,
            FamilyArg::Random => Family::Random,
            FamilyArg::File => Family::File,
            FamilyArg::GaussianFile => Family::GaussianFile,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    Rational,
    Gaussian,
}

impl From<FieldArg> for FieldTag {
    fn from(f: FieldArg) -> FieldTag {
        match f {
            FieldArg::Rational => FieldTag::Rational,
            FieldArg::Gaussian => FieldTag::Gaussian,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct FamilyOpts {
    /// Input set family.
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Set size (interval/geometric/random families).
    #[arg(long)]
    n: Option<u64>,
    /// PRNG seed (random family); echoed into the report.
    #[arg(long)]
    seed: Option<u64>,
    /// Random family draws integers from [-bound, bound].
    #[arg(long)]
    bound: Option<u64>,
    /// Geometric base, in scalar text form (e.g. "2", "3/2", "1+1i").
    #[arg(long)]
    base: Option<String>,
    /// Field to compute over.
    #[arg(long, value_enum, default_value = "rational")]
    field: FieldArg,
    /// Set literal file (file/gaussian-file families).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Cap |A| for the sextic brute-force oracle.
    #[arg(long)]
    cap_bruteforce: Option<u64>,
}

impl FamilyOpts {
    fn to_config(&self) -> ExperimentConfig {
        let field = match Family::from(self.family) {
            // file families carry their field implicitly
            Family::File => FieldTag::Rational,
            Family::GaussianFile => FieldTag::Gaussian,
            _ => self.field.into(),
        };
        let mut config = ExperimentConfig::new(self.family.into(), field);
        config.n = self.n;
        config.seed = self.seed;
        config.bound = self.bound;
        config.base = self.base.clone();
        config.path = self.input.as_ref().map(|p| p.display().to_string());
        if let Some(cap) = self.cap_bruteforce {
            config.caps.bruteforce = cap;
        }
        config
    }
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    family: FamilyOpts,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    family: FamilyOpts,
    /// Ascending sizes, e.g. --sizes 8,16,32,64.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<u64>,
    /// Write the table here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// identities | inequalities | parity | oracles | all
    suite: String,
}

fn main() -> ExitCode {
    if let Err(message) = configure_workers() {
        eprintln!("error: {message}");
        return ExitCode::from(2);
    }
    let cli = Cli::parse();
    match cli.command {
        Command::Run(args) => run_command(args),
        Command::Sweep(args) => sweep_command(args),
        Command::Verify(args) => verify_command(args),
    }
}

/// Honor SUMPROD_WORKERS if set; any worker count yields identical output.
fn configure_workers() -> Result<(), String> {
    match std::env::var("SUMPROD_WORKERS") {
        Err(_) => Ok(()),
        Ok(raw) => {
            let n: usize = raw
                .parse()
                .map_err(|_| format!("SUMPROD_WORKERS must be a positive integer, got {raw:?}"))?;
            if n == 0 {
                return Err("SUMPROD_WORKERS must be a positive integer".into());
            }
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| format!("failed to size the worker pool: {e}"))
        }
    }
}

fn run_command(args: RunArgs) -> ExitCode {
    let config = args.family.to_config();
    match args.format {
        FormatArg::Json => match report::run(&config) {
            Ok(report) => {
                eprintln!("computed in {} ms", report.timing_ms);
                emit(args.out.as_deref(), &report.to_json())
            }
            Err(e) => usage_error(&e.to_string()),
        },
        FormatArg::Csv => match report::run_as_row(&config) {
            Ok(row) => emit(args.out.as_deref(), &report::sweep_to_csv(&[row])),
            Err(e) => usage_error(&e.to_string()),
        },
    }
}

fn sweep_command(args: SweepArgs) -> ExitCode {
    let config = args.family.to_config();
    match report::sweep(&config, &args.sizes) {
        Ok(rows) => {
            let body = match args.format {
                FormatArg::Csv => report::sweep_to_csv(&rows),
                FormatArg::Json => {
                    let mut s =
                        serde_json::to_string_pretty(&rows).expect("rows serialize");
                    s.push('\n');
                    s
                }
            };
            emit(args.out.as_deref(), &body)
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn verify_command(args: VerifyArgs) -> ExitCode {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        match args.suite.parse::<Suite>() {
            Ok(s) => vec![s],
            Err(e) => return usage_error(&e.to_string()),
        }
    };
    let mut all_passed = true;
    for suite in suites {
        let summary = verify::run_suite(suite);
        for check in &summary.checks {
            if check.passed {
                println!("PASS [{}] {}", suite, check.name);
            } else {
                all_passed = false;
                println!("FAIL [{}] {}: {}", suite, check.name, check.detail);
            }
        }
    }
    if all_passed {
        println!("verification passed");
        ExitCode::SUCCESS
    } else {
        println!("verification FAILED");
        ExitCode::from(1)
    }
}

fn emit(path: Option<&std::path::Path>, body: &str) -> ExitCode {
    match path {
        None => {
            print!("{body}");
            ExitCode::SUCCESS
        }
        Some(p) => match std::fs::File::create(p).and_then(|mut f| f.write_all(body.as_bytes())) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => usage_error(&format!("cannot write {}: {e}", p.display())),
        },
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}
