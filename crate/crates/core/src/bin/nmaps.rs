use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use neutromaps::cli::{self, Format, Outcome, RunOptions, Which, EXIT_INTERNAL};
use neutromaps::neutro::ThresholdMode;

/// Classify n-graphs and n-matrices, and run cognitive and relational maps.
#[derive(Parser)]
#[command(name = "nmaps", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report shape, content, gluing and neutrosophic class.
    Classify {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Find the hidden pattern of a scenario.
    Run {
        path: PathBuf,
        /// A scenario declared in the file.
        #[arg(long)]
        scenario: Option<String>,
        /// Nodes to switch on, comma separated; `2:E1` limits a label to
        /// component 2. An empty list starts with every node off.
        #[arg(long, value_delimiter = ',')]
        on: Option<Vec<String>>,
        /// Run every declared scenario.
        #[arg(long)]
        all_scenarios: bool,
        #[arg(long)]
        threshold: Option<i64>,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Print every state visited.
        #[arg(long)]
        trace: bool,
    },
    /// Sum aligned expert maps into one map file.
    Combine {
        #[arg(required = true, num_args = 2..)]
        paths: Vec<PathBuf>,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a matrix, components separated by `---`.
    ExportMatrix {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = WhichArg::Map)]
        which: WhichArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Real,
    Indet,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    Map,
    Adjacency,
    Incidence,
    Weighted,
    Kirchhoff,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Classify { path, format } => cli::classify(&path, format.into()),
        Command::Run {
            path,
            scenario,
            on,
            all_scenarios,
            threshold,
            mode,
            format,
            trace,
        } => {
            let opts = RunOptions {
                scenario,
                on,
                all_scenarios,
                threshold,
                mode: mode.map(|m| match m {
                    ModeArg::Real => ThresholdMode::RealDominant,
                    ModeArg::Indet => ThresholdMode::IndetDominant,
                }),
                format: format.into(),
                trace,
            };
            cli::run(&path, &opts)
        }
        Command::Combine { paths, out } => cli::combine(&paths, out.as_deref()),
        Command::ExportMatrix { path, which } => {
            let which = match which {
                WhichArg::Map => Which::Map,
                WhichArg::Adjacency => Which::Adjacency,
                WhichArg::Incidence => Which::Incidence,
                WhichArg::Weighted => Which::Weighted,
                WhichArg::Kirchhoff => Which::Kirchhoff,
            };
            cli::export_matrix(&path, which)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let args = Args::parse();
    let outcome = std::panic::catch_unwind(|| dispatch(args.command)).unwrap_or_else(|_| Outcome {
        code: EXIT_INTERNAL,
        stdout: String::new(),
        stderr: "internal error\n".into(),
    });
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}
