use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mvstone::Bounds;
use mvstone_cli::{parse_spec, run, validate, Format, Options};

#[derive(Parser)]
#[command(name = "mvstone", version, about = "Check finite MV-algebras, MV-spaces and their duals")]
struct Cli {
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = mvstone::random::DEFAULT_SEED)]
    seed: u64,
    /// Cap on search enumerations (coverings, subcovers, homomorphisms).
    #[arg(long, global = true)]
    bound: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks and print one line per check.
    Check { file: PathBuf },
    /// Run the checks and print the full report.
    Report {
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        file: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Kv,
}

const USAGE_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (file, format, full) = match &cli.command {
        Command::Check { file } => (file, Format::Text, false),
        Command::Report { format, file } => (
            file,
            match format {
                OutputFormat::Text => Format::Text,
                OutputFormat::Kv => Format::Kv,
            },
            true,
        ),
    };
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return ExitCode::from(USAGE_ERROR);
        }
    };
    let doc = match parse_spec(&text) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {}:{e}", file.display());
            return ExitCode::from(USAGE_ERROR);
        }
    };
    if let Err(e) = validate(&doc) {
        eprintln!("error: {}:{e}", file.display());
        return ExitCode::from(USAGE_ERROR);
    }
    let opts = Options {
        bounds: cli.bound.map_or_else(Bounds::default, Bounds::with_search_cap),
        seed: cli.seed,
    };
    let report = run(&doc, opts);
    print!("{}", report.render(format, full));
    ExitCode::from(report.exit_code() as u8)
}
