use std::path::PathBuf;
use std::process::ExitCode;

use braidhom_cli::error::{CliError, EXIT_CHECK_FAILED, EXIT_OK};
use braidhom_cli::options::Options;
use braidhom_cli::report::Report;
use braidhom_cli::scenario::{self, Command};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "braidhom", version, about = "Braided differentials, classical complexes and their homology")]
struct Cli {
    #[command(subcommand)]
    action: Action,
}

#[derive(Subcommand)]
enum Action {
    /// Yang-Baxter, structure axioms, characters, coalgebra level, naturality and modules.
    Check(Args),
    /// Assemble a complex and optionally dump its matrices.
    Complex(Args),
    /// Homology over z, q or fp:<p>.
    Homology(Args),
    /// Property suites: simplicial, hyper, hopf, homotopy, duality.
    Verify(Args),
    /// Run the computations listed in the scenario.
    Run(Args),
    /// Validate a scenario and print it in canonical form.
    Parse { scenario: PathBuf },
}

#[derive(clap::Args)]
struct Args {
    scenario: PathBuf,
    #[command(flatten)]
    options: Options,
}

fn emit(reports: &[Report], json: bool) {
    if json {
        let body: Vec<String> = reports.iter().map(Report::to_json).collect();
        if reports.len() == 1 {
            println!("{}", body[0]);
        } else {
            println!("[\n{}\n]", body.join(",\n"));
        }
    } else {
        for (i, r) in reports.iter().enumerate() {
            if i > 0 {
                println!();
            }
            print!("{r}");
        }
    }
}

fn execute(action: Action) -> Result<bool, CliError> {
    let (command, args) = match action {
        Action::Parse { scenario: path } => {
            print!("{}", scenario::to_json(&scenario::parse(&path)?));
            return Ok(true);
        }
        Action::Run(args) => {
            let s = scenario::parse(&args.scenario)?;
            let reports = braidhom_cli::run_all(&s, &args.options)?;
            emit(&reports, args.options.json);
            return Ok(reports.iter().all(|r| r.passed));
        }
        Action::Check(args) => (Command::Check, args),
        Action::Complex(args) => (Command::Complex, args),
        Action::Homology(args) => (Command::Homology, args),
        Action::Verify(args) => (Command::Verify, args),
    };
    let s = scenario::parse(&args.scenario)?;
    let report = braidhom_cli::run(command, &s, &args.options)?;
    emit(std::slice::from_ref(&report), args.options.json);
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.action) {
        Ok(true) => ExitCode::from(EXIT_OK),
        Ok(false) => ExitCode::from(EXIT_CHECK_FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
