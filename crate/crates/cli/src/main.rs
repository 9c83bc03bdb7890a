//! `skewcat`: build and check skew group dg-categories, equivariant modules
//! and orbit categories from JSON files.
//!
//! Exit codes: 0 all checks pass, 1 a semantic violation, 2 an input or
//! usage error.

mod commands;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use run::{Outcome, RunReport};

#[derive(Parser)]
#[command(name = "skewcat", version, about = "Skew group dg-categories, equivariant modules and orbit categories")]
struct Cli {
    /// Print the run report as JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a dgcat, action, functor, module, equivariant or complex file.
    Validate { path: PathBuf },
    /// Build the skew group dg-category of an action.
    Skew(SkewArgs),
    /// Replace a group action by a free one with an equivariant equivalence.
    Freeify {
        action: PathBuf,
        /// Orbit representatives, by object name.
        #[arg(long, value_delimiter = ',')]
        representatives: Option<Vec<String>>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Compare equivariant modules with modules over the skew group algebra.
    Equiv {
        action: PathBuf,
        /// An `equivariant` file over the action, or a `module` file over its skew algebra.
        module: PathBuf,
        /// Check that to-skew and back returns an isomorphic module (the default).
        #[arg(long)]
        roundtrip: bool,
        /// Compare hom dimensions with a second module of the same kind.
        #[arg(long, value_name = "OTHER")]
        homdim: Option<PathBuf>,
    },
    /// Hom dimensions in the orbit category of a period.
    Orbit {
        source: PathBuf,
        target: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        period: i64,
        /// Degree window `a b` (default `-3|n| 3|n|`).
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
        window: Option<Vec<i64>>,
        /// Require dimension 1 exactly at multiples of the period.
        #[arg(long)]
        laurent_check: bool,
    },
    /// Write the fixture corpus.
    Fixtures {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct SkewArgs {
    action: PathBuf,
    /// Also emit the full subcategory on orbit representatives.
    #[arg(long)]
    reduce: bool,
    /// Orbit representatives, by object name.
    #[arg(long, value_delimiter = ',')]
    representatives: Option<Vec<String>>,
    /// Also emit the skew group algebra (one-object actions only).
    #[arg(long)]
    algebra: bool,
    /// Check that the embedding A → A∗G is strictly equivariant.
    #[arg(long)]
    check_equivariance: bool,
    /// Check that G acts trivially on the reduced skew category (free actions only).
    #[arg(long)]
    check_trivial_induced: bool,
    /// Check the 2×2 matrix-unit relations for four skew-algebra basis labels,
    /// in the order E11,E12,E21,E22.
    #[arg(long, value_delimiter = ',', num_args = 1, value_name = "LABELS")]
    matrix_units: Option<Vec<String>>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct OutArgs {
    /// Write output documents here instead of inlining them in the report.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (name, outcome, out_dir) = dispatch(cli.command);
    let report = RunReport::finish(name, outcome, out_dir.as_deref());
    report.print(cli.json);
    ExitCode::from(report.exit_code())
}

fn dispatch(command: Command) -> (&'static str, Result<Outcome, run::Failure>, Option<PathBuf>) {
    match command {
        Command::Validate { path } => ("validate", commands::validate(&path), None),
        Command::Skew(a) => {
            let out = a.out.out_dir.clone();
            ("skew", commands::skew(&a), out)
        }
        Command::Freeify {
            action,
            representatives,
            out,
        } => (
            "freeify",
            commands::freeify(&action, representatives.as_deref()),
            out.out_dir,
        ),
        Command::Equiv {
            action,
            module,
            roundtrip,
            homdim,
        } => (
            "equiv",
            commands::equiv(&action, &module, roundtrip || homdim.is_none(), homdim.as_deref()),
            None,
        ),
        Command::Orbit {
            source,
            target,
            period,
            window,
            laurent_check,
        } => {
            let window = window.map(|w| (w[0], w[1]));
            (
                "orbit",
                commands::orbit(&source, &target, period, window, laurent_check),
                None,
            )
        }
        Command::Fixtures { out } => ("fixtures", commands::fixtures(&out), None),
    }
}
