mod input;
mod report;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use equihom::ErrorKind;
use input::{parse_input, InputError};
use report::{Format, Report};
use run::Command;

/// Equivariant homology of finite group actions on simplicial complexes.
#[derive(Parser, Debug)]
#[command(name = "equihom", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// JSON input document
    #[arg(long)]
    input: Option<PathBuf>,
    /// subdivide when the action is not type-preserving
    #[arg(long)]
    subdivide: bool,
    /// Hodge levels `m,n` for `hp`
    #[arg(long, value_parser = parse_levels)]
    levels: Option<(usize, usize)>,
    #[arg(long)]
    max_degree: Option<usize>,
    /// dimension budget for form spaces and Hom complexes
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// include wall-clock time in the report
    #[arg(long)]
    timing: bool,
}

fn parse_levels(s: &str) -> Result<(usize, usize), String> {
    let (m, n) = s.split_once(',').ok_or("expected m,n")?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok((p(m)?, p(n)?))
}

const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_VERIFY: u8 = 4;

fn exit_code(e: &InputError) -> u8 {
    match e {
        InputError::Syntax(_) | InputError::Field { .. } => EXIT_INPUT,
        InputError::Engine(e) => match e.kind() {
            ErrorKind::Input => EXIT_INPUT,
            ErrorKind::Budget => EXIT_BUDGET,
            ErrorKind::Verification => EXIT_VERIFY,
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let doc = match cli.input.as_ref().map(load).transpose() {
        Ok(d) => d.map(|mut d| {
            d.options.subdivide |= cli.subdivide;
            d.options.levels = cli.levels.or(d.options.levels);
            d.options.max_degree = cli.max_degree.or(d.options.max_degree);
            d.options.budget = cli.budget.or(d.options.budget);
            d
        }),
        Err(e) => return fail(&e),
    };
    let outcome = match run::run(cli.command, doc.as_ref()) {
        Ok(o) => o,
        Err(e) => return fail(&e),
    };
    let report = Report {
        command: cli.command.name().to_string(),
        input_digest: doc.as_ref().map(|d| d.digest()),
        results: outcome.results,
        verified: outcome.verified,
        timing_ms: cli.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    };
    println!("{}", report.render(cli.format));
    if report.verified {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: {}: a verification failed", report.command);
        ExitCode::from(EXIT_VERIFY)
    }
}

fn load(path: &PathBuf) -> Result<input::InputDocument, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Syntax(format!("{}: {e}", path.display())))?;
    parse_input(&text)
}

fn fail(e: &InputError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code(e))
}
