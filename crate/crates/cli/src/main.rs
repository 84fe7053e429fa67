use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use distab::commands::{self, RunOptions};
use distab::report::Report;
use distab::scene::Scene;
use distab::CliError;
use distab_core::algebra::ValidationLevel;

#[derive(Parser)]
#[command(
    name = "distab",
    version,
    about = "Certify distinguished abelian subcategories of stable module categories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here (`-` for stdout).
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Write the CSV table here.
    #[arg(long, global = true)]
    csv: Option<PathBuf>,
    /// Cap on enumeration work.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Associativity check for table algebras.
    #[arg(long, global = true, value_enum)]
    validation: Option<Validation>,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Validation {
    Full,
    Generators,
}

#[derive(Subcommand)]
enum Command {
    /// Radical and socle series, center, Frobenius and symmetric forms.
    Analyze { scene: PathBuf },
    /// Run the scene's [[certify]] entries.
    Certify { scene: PathBuf },
    /// Survey the two-sided ideals for the embedding conditions.
    Enumerate { scene: PathBuf },
    /// Run the built-in regression suite.
    VerifySuite {
        /// Run only these criteria (repeatable).
        #[arg(long = "criterion")]
        criteria: Vec<u8>,
        #[arg(long, hide = true)]
        inject_fault: Option<u8>,
    },
}

fn threads_from_env() {
    if let Some(n) = std::env::var("DISTAB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        // a second initialisation only fails if something already built the pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

fn emit(report: &Report, json: Option<&Path>, csv: Option<&Path>) -> Result<(), CliError> {
    match json {
        Some(p) if p == Path::new("-") => print!("{}", report.to_json()),
        Some(p) => {
            report.write_json(p)?;
            print!("{}", report.summary());
        }
        None => print!("{}", report.summary()),
    }
    if let Some(p) = csv {
        report.write_csv(p)?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let opts = RunOptions {
        seed: cli.seed,
        budget: cli.budget,
        validation: cli.validation.map(|v| match v {
            Validation::Full => ValidationLevel::Full,
            Validation::Generators => ValidationLevel::Generators,
        }),
        timing: cli.timing,
        inject_fault: match &cli.command {
            Command::VerifySuite { inject_fault, .. } => *inject_fault,
            _ => None,
        },
        criteria: match &cli.command {
            Command::VerifySuite { criteria, .. } => criteria.clone(),
            _ => Vec::new(),
        },
    };
    let load = |p: &Path| Scene::load(p, opts.validation);
    let report = match &cli.command {
        Command::Analyze { scene } => commands::analyze(&load(scene)?, &opts)?,
        Command::Certify { scene } => commands::certify(&load(scene)?, &opts)?,
        Command::Enumerate { scene } => commands::enumerate(&load(scene)?, &opts)?,
        Command::VerifySuite { .. } => commands::verify_suite(&opts),
    };
    emit(&report, cli.json.as_deref(), cli.csv.as_deref())?;
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    threads_from_env();
    match run(&cli) {
        Ok(report) => ExitCode::from(report.exit_code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
