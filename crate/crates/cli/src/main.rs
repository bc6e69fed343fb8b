use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use gsforge_core::corpus::{all_ok, run_examples};
use gsforge_core::report::{
    certify_report, growth_report, hilbert_report, limit_report, sample_csv, vinberg_report,
    DEFAULT_MAX_DEGREE, DEFAULT_STAGES, DEFAULT_TRUNCATION,
};
use gsforge_core::{parse, BigRational, Report, RunError};

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Command {
    /// Golod-Shafarevich status with an exact witness
    Certify,
    /// Truncated Hilbert series
    Hilbert,
    /// Growth class and standard-filtration dimensions
    Growth,
    /// Coefficient-wise check of the Golod-Shafarevich inequality
    Vinberg,
    /// Stage-by-stage analysis of a direct limit
    Limit,
    /// Floating-point samples of the series, as CSV
    Sample,
    /// Run the built-in example corpus
    Examples,
}

#[derive(Debug, Parser)]
#[command(
    name = "gsforge",
    version,
    about = "Exact Golod-Shafarevich analysis of presented algebras"
)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Algebra file (not used by `examples`)
    file: Option<PathBuf>,
    /// Degree cutoff for hilbert, growth and vinberg
    #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
    max_degree: u64,
    /// Number of stages for limit
    #[arg(long, default_value_t = DEFAULT_STAGES)]
    stages: u64,
    /// Relation-degree truncation for limit verdicts, e.g. 12 or 25/2
    #[arg(long, value_parser = positive_rational)]
    truncation: Option<BigRational>,
    /// Grid size for sample
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    grid: u64,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Write output to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn positive_rational(s: &str) -> Result<BigRational, String> {
    let q: BigRational = s
        .parse()
        .map_err(|_| format!("`{s}` is not a rational number"))?;
    if q <= BigRational::from_integer(0.into()) {
        return Err("truncation must be positive".into());
    }
    Ok(q)
}

enum Failure {
    Usage(String),
    Parse(String),
    Resource(String),
}

impl From<RunError> for Failure {
    fn from(e: RunError) -> Self {
        if e.is_resource() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn render(cli: &Cli, r: &Report) -> String {
    if cli.json {
        serde_json::to_string_pretty(r).expect("reports serialize") + "\n"
    } else {
        r.to_text()
    }
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    if cli.command == Command::Examples {
        let r = run_examples();
        return Ok((render(cli, &r), all_ok(&r)));
    }
    let path = cli.file.as_ref().ok_or_else(|| {
        Failure::Usage(format!("`{:?}` needs an algebra file", cli.command).to_lowercase())
    })?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let file = parse(&text).map_err(|e| Failure::Parse(format!("{}:{e}", path.display())))?;
    let truncation = cli
        .truncation
        .clone()
        .unwrap_or_else(|| BigRational::from_integer(DEFAULT_TRUNCATION.into()));
    let max_degree = BigRational::from_integer(cli.max_degree.into());
    let report = match cli.command {
        Command::Certify => certify_report(&file, &truncation)?,
        Command::Hilbert => hilbert_report(&file, &max_degree)?,
        Command::Growth => growth_report(&file, cli.max_degree)?,
        Command::Vinberg => vinberg_report(&file, cli.max_degree)?,
        Command::Limit => {
            if !file.has_families() {
                return Err(Failure::Usage(
                    "limit needs at least one family block".into(),
                ));
            }
            limit_report(&file, cli.stages, &truncation)?
        }
        Command::Sample => return Ok((sample_csv(&file, cli.grid), true)),
        Command::Examples => unreachable!("handled above"),
    };
    Ok((render(cli, &report), true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((out, ok)) => {
            match &cli.out {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, out) {
                        eprintln!("gsforge: {}: {e}", p.display());
                        return ExitCode::from(EXIT_USAGE);
                    }
                }
                None => print!("{out}"),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_MISMATCH)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("gsforge: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Parse(m)) => {
            eprintln!("gsforge: {m}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Resource(m)) => {
            eprintln!("gsforge: resource limit: {m}");
            ExitCode::from(EXIT_RESOURCE)
        }
    }
}
