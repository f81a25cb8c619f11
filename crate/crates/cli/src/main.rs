use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use supercoh::cohomology::Kind;
use supercoh_cli::commands::{self, Exit, Outcome};

#[derive(Parser)]
#[command(
    name = "supercoh",
    version,
    about = "Cohomology of restricted Lie superalgebras over GF(p)"
)]
struct Cli {
    /// write the JSON report to this path (`-` for stdout)
    #[arg(long, global = true, value_name = "OUT")]
    json: Option<PathBuf>,
    /// prime to use when the file does not fix one
    #[arg(long, global = true, value_name = "PRIME")]
    p_override: Option<u32>,
    /// seed for the randomized suites
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// include wall-clock timings in six-term reports
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Lie,
    Restricted,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms for the algebra and every module in a file
    Validate { file: PathBuf },
    /// Compute H^n or H^n_* with coefficients in a module
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
        degree: u8,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Build and check the six-term exact sequence
    Sixterm {
        file: PathBuf,
        #[arg(long)]
        module: String,
    },
    /// The built-in catalog
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
    /// Run the invariant suites
    Selftest,
}

#[derive(Subcommand)]
enum ExamplesAction {
    List,
    /// Print an example as an algebra file
    Show {
        id: String,
    },
    /// Run the six-term sequence on every example
    RunAll,
}

fn read(path: &Path) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome {
        stdout: String::new(),
        stderr: format!("cannot read {}: {e}\n", path.display()),
        report: None,
        exit: Exit::Parse,
    })
}

fn source_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate { file } => match read(file) {
            Ok(text) => commands::validate(&source_name(file), &text, cli.p_override),
            Err(o) => o,
        },
        Command::Cohomology {
            file,
            module,
            degree,
            kind,
        } => match read(file) {
            Ok(text) => {
                let kind = match kind {
                    KindArg::Lie => Kind::Lie,
                    KindArg::Restricted => Kind::Restricted,
                };
                commands::cohomology(
                    &source_name(file),
                    &text,
                    module,
                    *degree as usize,
                    kind,
                    cli.p_override,
                )
            }
            Err(o) => o,
        },
        Command::Sixterm { file, module } => match read(file) {
            Ok(text) => commands::sixterm(
                &source_name(file),
                &text,
                module,
                cli.p_override,
                cli.timings,
            ),
            Err(o) => o,
        },
        Command::Examples { action } => match action {
            ExamplesAction::List => commands::examples_list(),
            ExamplesAction::Show { id } => commands::examples_show(id),
            ExamplesAction::RunAll => commands::examples_run_all(cli.timings),
        },
        Command::Selftest => commands::selftest(cli.seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    let mut exit = outcome.exit;
    let to_stdout = cli.json.as_deref() == Some(Path::new("-"));
    if !to_stdout {
        print!("{}", outcome.stdout);
    }
    eprint!("{}", outcome.stderr);
    if let (Some(path), Some(report)) = (&cli.json, &outcome.report) {
        if to_stdout {
            print!("{}", report.to_json());
        } else if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("cannot write {}: {e}", path.display());
            exit = Exit::Internal;
        }
    }
    ExitCode::from(exit as u8)
}
