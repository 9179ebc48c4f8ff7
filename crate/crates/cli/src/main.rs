//! `vancert`: exact certification of vanishing-theorem hypotheses for
//! Laurent polynomial systems, plus the supporting lattice geometry.
//!
//! Every subcommand reads a single JSON problem file (see `schema`), writes
//! one JSON report to standard output and a one-line summary to standard
//! error, and exits with 0 (success), 1 (a mathematical hypothesis failed),
//! 2 (bad input), or 3 (undecidable at this tier).

mod commands;
mod render;
mod schema;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use commands::CmdOut;
use schema::{CliError, ProblemFile};
use vancert_core::nondegeneracy::Level;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// JSON report on stdout, summary on stderr.
    Json,
    /// Summary text on stdout.
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    /// Proper faces of the Minkowski sum only.
    Weak,
    /// All faces, including the sum itself.
    Strong,
}

#[derive(Parser)]
#[command(
    name = "vancert",
    version,
    about = "Exact certification of vanishing hypotheses for Laurent polynomial systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized verification trials.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Trial count for randomized verification subcommands.
    #[arg(long, global = true)]
    trials: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Vertices and facets of each Newton polytope and of their Minkowski sum.
    Hull { file: PathBuf },
    /// The face lattice of the Minkowski sum, with summand decompositions.
    Faces { file: PathBuf },
    /// The dual fan of the Minkowski sum.
    Fan { file: PathBuf },
    /// Normalized lattice volume of the Minkowski sum.
    Volume { file: PathBuf },
    /// Mixed volume of the Newton polytopes, by two independent routes.
    MixedVolume { file: PathBuf },
    /// Facet-pairing nonresonance certificate for the parameter vector.
    Nonresonance { file: PathBuf },
    /// Face-by-face non-degeneracy of the polynomial system.
    CheckNondeg {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = LevelArg::Weak)]
        level: LevelArg,
    },
    /// Singular points of the first hypersurface on the torus.
    SingularLocus { file: PathBuf },
    /// Verify declared Milnor numbers of the first plane curve.
    Milnor { file: PathBuf },
    /// Facet congruence pairs of the Newton polyhedron at the origin.
    Spectrum {
        file: PathBuf,
        /// Parameter of the local system, a rational like `1/2`.
        #[arg(long)]
        beta: String,
        /// Optional boundary exponent to test for membership.
        #[arg(long)]
        point: Option<String>,
    },
    /// The Newton polyhedron of the first support: points plus coordinate rays.
    Lift { file: PathBuf },
    /// Seeded critical-point counts of the first polynomial against its volume.
    CriticalCount { file: PathBuf },
    /// Euler characteristics of the hypersurface strata and the complement.
    Euler { file: PathBuf },
    /// Check theorem hypotheses and predict degree and dimension.
    Predict {
        file: PathBuf,
        /// Target statement, or `auto` to try the full dispatch order.
        #[arg(long, default_value = "auto")]
        theorem: String,
    },
    /// Run the built-in fixture and oracle-agreement suite.
    Selftest,
}

impl Cmd {
    fn name(&self) -> &'static str {
        match self {
            Cmd::Hull { .. } => "hull",
            Cmd::Faces { .. } => "faces",
            Cmd::Fan { .. } => "fan",
            Cmd::Volume { .. } => "volume",
            Cmd::MixedVolume { .. } => "mixed-volume",
            Cmd::Nonresonance { .. } => "nonresonance",
            Cmd::CheckNondeg { .. } => "check-nondeg",
            Cmd::SingularLocus { .. } => "singular-locus",
            Cmd::Milnor { .. } => "milnor",
            Cmd::Spectrum { .. } => "spectrum",
            Cmd::Lift { .. } => "lift",
            Cmd::CriticalCount { .. } => "critical-count",
            Cmd::Euler { .. } => "euler",
            Cmd::Predict { .. } => "predict",
            Cmd::Selftest => "selftest",
        }
    }

    fn file(&self) -> Option<&PathBuf> {
        match self {
            Cmd::Hull { file }
            | Cmd::Faces { file }
            | Cmd::Fan { file }
            | Cmd::Volume { file }
            | Cmd::MixedVolume { file }
            | Cmd::Nonresonance { file }
            | Cmd::CheckNondeg { file, .. }
            | Cmd::SingularLocus { file }
            | Cmd::Milnor { file }
            | Cmd::Spectrum { file, .. }
            | Cmd::Lift { file }
            | Cmd::CriticalCount { file }
            | Cmd::Euler { file }
            | Cmd::Predict { file, .. } => Some(file),
            Cmd::Selftest => None,
        }
    }
}

fn dispatch(
    cmd: &Cmd,
    input: Option<&ProblemFile>,
    trials: usize,
    seed: u64,
) -> Result<CmdOut, CliError> {
    let file = || input.expect("loaded for every file-taking subcommand");
    match cmd {
        Cmd::Hull { .. } => commands::hull(file()),
        Cmd::Faces { .. } => commands::faces(file()),
        Cmd::Fan { .. } => commands::fan(file()),
        Cmd::Volume { .. } => commands::volume(file()),
        Cmd::MixedVolume { .. } => commands::mixed_volume(file()),
        Cmd::Nonresonance { .. } => commands::nonresonance(file()),
        Cmd::CheckNondeg { level, .. } => {
            let level = match level {
                LevelArg::Weak => Level::Weak,
                LevelArg::Strong => Level::Strong,
            };
            commands::check_nondeg(file(), level)
        }
        Cmd::SingularLocus { .. } => commands::singular_locus(file()),
        Cmd::Milnor { .. } => commands::milnor(file()),
        Cmd::Spectrum { beta, point, .. } => {
            commands::spectrum(file(), beta, point.as_deref())
        }
        Cmd::Lift { .. } => commands::lift(file()),
        Cmd::CriticalCount { .. } => commands::critical_count(file(), trials, seed),
        Cmd::Euler { .. } => commands::euler(file()),
        Cmd::Predict { theorem, .. } => commands::predict_cmd(file(), theorem),
        Cmd::Selftest => commands::selftest(trials, seed),
    }
}

fn run(cli: Cli) -> i32 {
    let started = Instant::now();
    let trials = cli.trials.unwrap_or(12);
    let seed = cli.seed.unwrap_or(0);

    let input = match cli.command.file() {
        Some(path) => match ProblemFile::load(path) {
            Ok(f) => Some(f),
            Err(e) => return emit(&cli, None, Err(e), started),
        },
        None => None,
    };
    let outcome = dispatch(&cli.command, input.as_ref(), trials, seed);
    emit(&cli, input, outcome, started)
}

fn emit(
    cli: &Cli,
    input: Option<ProblemFile>,
    outcome: Result<CmdOut, CliError>,
    started: Instant,
) -> i32 {
    let (body, summary, exit) = match outcome {
        Ok(out) => (json!({ "result": out.result }), out.summary, out.exit),
        Err(e) => (
            json!({ "error": { "message": e.message, "exit": e.exit } }),
            format!("error: {}", e.message),
            e.exit,
        ),
    };
    let mut report = json!({
        "schema": 1,
        "tool": { "name": "vancert", "version": env!("CARGO_PKG_VERSION") },
        "command": cli.command.name(),
        "options": { "seed": cli.seed, "trials": cli.trials },
        "input": input,
        "elapsed_ms": started.elapsed().as_millis() as u64,
    });
    let obj = report.as_object_mut().expect("report envelope is an object");
    if let Value::Object(extra) = body {
        obj.extend(extra);
    }
    match cli.format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            eprintln!("{summary}");
        }
        Format::Text => {
            println!("{summary}");
        }
    }
    exit
}

fn main() {
    let cli = Cli::parse();
    let code = run(cli);
    std::process::exit(code);
}
