mod commands;
mod decay;
mod export;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use simplicia::MetricKind;

use crate::commands::Failure;

#[derive(Parser)]
#[command(name = "simplicia", version, about = "Exact geometric simplicial complexes and their subdivisions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Complex file in JSON form.
    file: PathBuf,
    /// Write the result here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Off,
}

#[derive(Subcommand)]
enum Command {
    /// Check face closure, affine independence and proper intersections.
    Validate(Input),
    /// Print the full face closure in canonical form.
    Closure(Input),
    /// Iterated barycentric subdivision.
    Bsd {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
    },
    /// Open star of a vertex.
    Star {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vertex: String,
    },
    /// Carrier simplex and barycentric weights of a point, e.g. `--point 1/3,1/3`.
    Carrier {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Restrict a subdivision of the input to a subcomplex.
    Induced {
        #[command(flatten)]
        input: Input,
        /// Subcomplex of the input.
        #[arg(long, value_name = "FILE")]
        sub: PathBuf,
        /// Subdivision of the input; barycentric subdivision when omitted.
        #[arg(long, value_name = "FILE")]
        fine: Option<PathBuf>,
    },
    /// Decide whether `--fine` subdivides the input.
    CheckSubdivision {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "FILE")]
        fine: PathBuf,
    },
    /// Largest simplex diameter.
    Mesh {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "linf")]
        metric: MetricKind,
        /// Print exact values.
        #[arg(long)]
        exact: bool,
    },
    /// Mesh of each iterated barycentric subdivision against the contraction bound.
    Decay {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'n', default_value_t = 3)]
        n: usize,
        #[arg(long, default_value = "linf")]
        metric: MetricKind,
        /// Also report how many subdivisions bring the mesh below this.
        #[arg(long, value_name = "RATIONAL")]
        eps: Option<String>,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        exact: bool,
    },
    /// Render as SVG (2D) or OFF (up to 3D).
    Export {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{failure}");
            ExitCode::from(failure.code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    use commands::*;
    let (input, text) = match command {
        Command::Validate(input) => {
            let text = validate(&input.file)?;
            (input, text)
        }
        Command::Closure(input) => {
            let text = closure(&input.file)?;
            (input, text)
        }
        Command::Bsd { input, n } => {
            let text = bsd(&input.file, n)?;
            (input, text)
        }
        Command::Star { input, vertex } => {
            let text = star(&input.file, &vertex)?;
            (input, text)
        }
        Command::Carrier { input, point } => {
            let text = carrier(&input.file, &point)?;
            (input, text)
        }
        Command::Induced { input, sub, fine } => {
            let text = induced(&input.file, &sub, fine.as_deref())?;
            (input, text)
        }
        Command::CheckSubdivision { input, fine } => {
            let text = check_subdivision(&input.file, &fine)?;
            (input, text)
        }
        Command::Mesh { input, metric, exact } => {
            let text = mesh(&input.file, metric, exact)?;
            (input, text)
        }
        Command::Decay { input, n, metric, eps, csv, exact } => {
            let text = decay(&input.file, n, metric, eps.as_deref(), csv, exact)?;
            (input, text)
        }
        Command::Export { input, format } => {
            let k = load(&input.file)?;
            let text = match format {
                Format::Svg => export::svg(&k)?,
                Format::Off => export::off(&k)?,
            };
            (input, text)
        }
    };
    emit(input.out.as_deref(), &text)
}
