use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use charp_lab::check::{run_all, run_criterion, CRITERIA};
use charp_lab::fixtures::{find, FIXTURES};
use charp_lab::runner::{run_scenario, RunOptions};
use charp_lab::scenario::Scenario;

#[derive(Parser)]
#[command(name = "charp-lab", version, about = "Frobenius-split ideals, test ideals and tight closure over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file or a bundled fixture.
    Run(RunArgs),
    /// List the bundled fixtures.
    Fixtures,
    /// Run the acceptance criteria.
    Check {
        /// Only this criterion (1-10).
        #[arg(long)]
        only: Option<u32>,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Scenario file.
    #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
    path: Option<PathBuf>,
    /// Bundled fixture name (see `charp-lab fixtures`).
    #[arg(long)]
    fixture: Option<String>,
    /// Level bound for membership and truncation tasks.
    #[arg(long)]
    levels: Option<u32>,
    /// Degree cap for truncations.
    #[arg(long)]
    degree_cap: Option<u32>,
    /// Critical-pair budget per Groebner basis computation.
    #[arg(long)]
    pair_budget: Option<usize>,
    /// Also build the lattice from the single splitting generator and diff.
    #[arg(long)]
    alt_u: bool,
    /// JSON report (default).
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Plain text report.
    #[arg(long)]
    text: bool,
}

fn configure_threads() {
    if let Ok(v) = std::env::var("CHARP_LAB_THREADS") {
        match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => eprintln!("ignoring CHARP_LAB_THREADS={v:?}"),
        }
    }
}

fn run(args: RunArgs) -> ExitCode {
    if let Some(b) = args.pair_budget {
        charp_core::groebner::set_pair_budget(b);
    }
    let (text, origin) = match (&args.path, &args.fixture) {
        (_, Some(name)) => match find(name) {
            Some(f) => (f.text.to_string(), name.clone()),
            None => {
                eprintln!("unknown fixture `{name}`");
                return ExitCode::from(1);
            }
        },
        (Some(path), None) => match std::fs::read_to_string(path) {
            Ok(t) => (t, path.display().to_string()),
            Err(e) => {
                eprintln!("{}: {e}", path.display());
                return ExitCode::from(1);
            }
        },
        (None, None) => unreachable!("clap requires one of them"),
    };
    let scenario = match Scenario::parse(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{origin}: {e}");
            return ExitCode::from(1);
        }
    };
    let opts = RunOptions {
        levels: args.levels,
        degree_cap: args.degree_cap,
        alt_u: args.alt_u,
    };
    let report = run_scenario(&scenario, &opts);
    if args.text {
        print!("{}", report.to_text());
    } else {
        println!("{}", report.to_json());
    }
    ExitCode::from(report.status.exit_code() as u8)
}

fn main() -> ExitCode {
    configure_threads();
    match Cli::parse().command {
        Command::Run(args) => run(args),
        Command::Fixtures => {
            for f in FIXTURES {
                println!("{:<8} {}", f.name, f.description());
            }
            ExitCode::SUCCESS
        }
        Command::Check { only } => {
            let results = match only {
                Some(id) if (1..=CRITERIA).contains(&id) => vec![run_criterion(id)],
                Some(id) => {
                    eprintln!("no criterion {id}");
                    return ExitCode::from(1);
                }
                None => run_all(),
            };
            for r in &results {
                println!("{}", r.line());
            }
            let failed = results.iter().filter(|r| !r.pass).count();
            println!("{} of {} criteria passed", results.len() - failed, results.len());
            if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
    }
}
