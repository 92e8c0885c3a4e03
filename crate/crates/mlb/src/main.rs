//! `mlb` — checker and builder for mock-Lie algebra bundles.
//!
//! Exit codes: 0 when every check passes, 1 on a mathematical failure
//! (reported with a witness), 2 on input errors (parse errors, schema
//! violations, invalid referenced objects, unknown verbs).

mod bundle;
mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Parse(String),
    Validation(String),
    UnknownVerb(String),
}

impl CliError {
    fn message(&self) -> String {
        match self {
            CliError::Io(m) => format!("error: {m}"),
            CliError::Parse(m) => format!("parse error: {m}"),
            CliError::Validation(m) => format!("validation error: {m}"),
            CliError::UnknownVerb(v) => {
                format!("unknown verb {v:?}\n\n{}", commands::usage())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(
    name = "mlb",
    version,
    about = "Exact checks and constructions for mock-Lie algebra bundles",
    after_help = commands::usage()
)]
struct Cli {
    /// What to check or build (see the verb list below)
    verb: String,
    /// Bundle file (UTF-8 JSON)
    bundle: PathBuf,
    /// Name of an r_tensor entry
    #[arg(long = "r", value_name = "NAME")]
    r: Option<String>,
    /// Name of a representation entry
    #[arg(long = "rep", value_name = "NAME")]
    rep: Option<String>,
    /// Name of a linear_map entry
    #[arg(long = "T", value_name = "NAME")]
    t: Option<String>,
    /// Name of a bilinear_form entry
    #[arg(long = "form", value_name = "NAME")]
    form: Option<String>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// List every violation instead of only the first
    #[arg(long)]
    verbose: bool,
}

fn run(cli: &Cli) -> Result<report::Report, CliError> {
    if !commands::VERBS.contains(&cli.verb.as_str()) {
        return Err(CliError::UnknownVerb(cli.verb.clone()));
    }
    let text = std::fs::read_to_string(&cli.bundle)
        .map_err(|e| CliError::Io(format!("{}: {e}", cli.bundle.display())))?;
    let parsed = bundle::parse_bundle(&text)?;
    let ctx = commands::Ctx {
        bundle: &parsed,
        r_name: cli.r.as_deref(),
        rep_name: cli.rep.as_deref(),
        t_name: cli.t.as_deref(),
        form_name: cli.form.as_deref(),
        verbose: cli.verbose,
    };
    commands::run(&cli.verb, &ctx)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.emit(cli.format));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("{}", err.message());
            ExitCode::from(2)
        }
    }
}
