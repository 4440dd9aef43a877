use std::io::Read;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use kmajority::search::SearchBudget;
use kmajority::Rational;
use kmajority_cli::commands::{self, CliError, Which};

#[derive(Parser)]
#[command(name = "kmajority", version, about = "Exact approval gaps of weighted k-majority tournaments")]
struct Cli {
    /// Allow subset scans above the default vertex limit.
    #[arg(long, global = true)]
    limit_override: bool,
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true, value_name = "COUNT")]
    jobs: Option<usize>,
    /// Seed for the `random` subcommand.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Gamma,
    Gap,
    Half,
    Three,
}

#[derive(Subcommand)]
enum Command {
    /// Print the tournament, its maximum approval gap and a witness set.
    Gamma {
        /// Ballot file, or `-` for stdin.
        file: String,
    },
    /// Approval gap of a given dominating set.
    Gap {
        file: String,
        /// Member names, e.g. `a c` or `{a, c}`.
        #[arg(required = true)]
        names: Vec<String>,
    },
    /// Emit a ballot file for one of the constructions.
    Construct {
        #[arg(long, value_enum, default_value = "gamma")]
        which: Construction,
        /// Target value; omitted for `--which half`.
        q: Option<Rational>,
        #[arg(short)]
        k: u32,
    },
    /// Emit ballots realizing the clockwise tournament on n vertices.
    Clockwise { n: usize, k: u32 },
    /// Recompute the maximum approval gap and compare it with q.
    Verify { file: String, q: Rational },
    /// Smallest vertex count with maximum approval gap q, by exhaustive search.
    SearchM {
        q: Rational,
        k: u32,
        n_max: usize,
        /// Largest vertex count the search may enumerate.
        #[arg(long, default_value_t = SearchBudget::default().max_vertices)]
        max_vertices: usize,
        /// Cap on enumerated ballot tuples.
        #[arg(long, default_value_t = SearchBudget::default().max_tuples)]
        max_tuples: u128,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        time_limit: Option<u64>,
    },
    /// Find ballots inducing a tournament file, if any exist.
    Realize {
        file: String,
        #[arg(long, default_value_t = SearchBudget::default().max_vertices)]
        max_vertices: usize,
        #[arg(long, default_value_t = SearchBudget::default().max_tuples)]
        max_tuples: u128,
    },
    /// Emit a uniformly random ballot file on v1..vn.
    Random { n: usize, k: u32 },
}

fn read_input(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
    Ok(text)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let limits = commands::limits(cli.limit_override);
    let (out, ok) = match cli.command {
        Command::Gamma { file } => (commands::gamma(&file, &read_input(&file)?, &limits)?, true),
        Command::Gap { file, names } => (commands::gap(&file, &read_input(&file)?, &names)?, true),
        Command::Construct { which, q, k } => {
            let which = match which {
                Construction::Gamma => Which::Gamma,
                Construction::Gap => Which::Gap,
                Construction::Half => Which::Half,
                Construction::Three => Which::Three,
            };
            (commands::construct(q, k, which)?, true)
        }
        Command::Clockwise { n, k } => (commands::clockwise(n, k)?, true),
        Command::Verify { file, q } => commands::verify(&file, &read_input(&file)?, q, &limits)?,
        Command::SearchM { q, k, n_max, max_vertices, max_tuples, time_limit } => {
            let budget = SearchBudget { max_vertices, max_tuples, time_limit: time_limit.map(Duration::from_secs) };
            (commands::search_m(q, k, n_max, &budget)?, true)
        }
        Command::Realize { file, max_vertices, max_tuples } => {
            let budget = SearchBudget { max_vertices, max_tuples, time_limit: None };
            commands::realize(&file, &read_input(&file)?, &budget)?
        }
        Command::Random { n, k } => (commands::random(n, k, cli.seed)?, true),
    };
    print!("{out}");
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
