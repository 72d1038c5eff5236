mod commands;
mod doc;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use measring::audit::MAX_SWEEP_POINTS;
use measring::sample::{DEFAULT_RANDOM_COUNT, DEFAULT_SEED};

use crate::commands::{CliError, Output};

#[derive(Parser)]
#[command(name = "measring", version, about = "Rings of measurable functions on finite measurable spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generated sigma-algebra, its atoms and prime elements.
    Generate {
        doc: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Audit every proposition on one space.
    Audit {
        doc: PathBuf,
        #[command(flatten)]
        audit: AuditArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Audit every sigma-algebra on up to `--max-points` points.
    Sweep {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=MAX_SWEEP_POINTS as i64))]
        max_points: u8,
        #[command(flatten)]
        audit: AuditArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print the T-measurable quotient and the projection.
    Quotient {
        doc: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print the maximal ideals and the map from points to them.
    Spectrum {
        doc: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Decide ring isomorphism and homeomorphism of two spaces.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct AuditArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Comma-separated proposition ids to run.
    #[arg(long, value_delimiter = ',')]
    props: Option<Vec<String>>,
    /// Seeded random functions per space, on top of the sign patterns.
    #[arg(long, default_value_t = DEFAULT_RANDOM_COUNT)]
    random_functions: usize,
    /// Record wall-clock time per entry (makes reports non-reproducible).
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write `<OUT>.txt` and `<OUT>.json`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

impl AuditArgs {
    fn options(self) -> measring::audit::AuditOptions {
        measring::audit::AuditOptions {
            seed: self.seed,
            random_count: self.random_functions,
            props: self.props,
            timing: self.timing,
        }
    }
}

fn emit(output: &Output, args: &OutputArgs) -> Result<(), CliError> {
    let json = output.json_string();
    match args.format {
        Format::Text => print!("{}", output.text),
        Format::Structured => print!("{json}"),
    }
    if let Some(stem) = &args.out {
        let with = |ext: &str| {
            let mut p = stem.clone().into_os_string();
            p.push(ext);
            PathBuf::from(p)
        };
        for (path, body) in [(with(".txt"), &output.text), (with(".json"), &json)] {
            std::fs::write(&path, body).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let (output, args) = match cli.command {
        Command::Generate { doc, out } => (commands::generate(&doc)?, out),
        Command::Audit { doc, audit, out } => (commands::audit(&doc, &audit.options())?, out),
        Command::Sweep { max_points, audit, out } => (commands::sweep(max_points as usize, &audit.options())?, out),
        Command::Quotient { doc, seed, out } => (commands::quotient(&doc, seed)?, out),
        Command::Spectrum { doc, seed, out } => (commands::spectrum(&doc, seed)?, out),
        Command::Iso { first, second, out } => (commands::iso(&first, &second)?, out),
    };
    emit(&output, &args)?;
    Ok(output.passed)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
