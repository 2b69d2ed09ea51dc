use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orbisurf::oracle::oracle_suite;
use orbisurf::{parse_scenario, run, Scenario};

#[derive(Parser)]
#[command(name = "orbisurf", version, about = "Exact invariants of sheaves on root stacks over surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the queries of a scenario file.
    Run {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Comma-separated query names to run.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
    },
    /// Parse and check a scenario file without running it.
    Validate { file: PathBuf },
    /// Run the built-in Euler characteristic oracle suite.
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Machine,
}

fn load(path: &Path) -> Result<Scenario, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_scenario(&text).map_err(|e| format!("{}:{e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { file, format, only } => {
            let scenario = match load(&file) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(2);
                }
            };
            if let Some(names) = &only {
                if let Some(missing) = names.iter().find(|n| !scenario.queries.iter().any(|q| &q.name == *n)) {
                    eprintln!("no query named `{missing}`");
                    return ExitCode::from(2);
                }
            }
            let report = run(&scenario, only.as_deref());
            match format {
                Format::Human => print!("{}", report.human()),
                Format::Machine => print!("{}", report.machine()),
            }
            if report.errors() == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Command::Validate { file } => match load(&file) {
            Ok(s) => {
                println!(
                    "{}: ok ({} sheaves, {} parabolic, {} queries)",
                    file.display(),
                    s.sheaves.len(),
                    s.parabolics.len(),
                    s.queries.len()
                );
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("{e}");
                ExitCode::from(2)
            }
        },
        Command::Oracle => {
            let cases = oracle_suite();
            let failed = cases.iter().filter(|c| !c.passed()).count();
            for c in &cases {
                println!("{}", c.line());
            }
            println!("{} cases, {} mismatches", cases.len(), failed);
            if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
