use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rwalk_core::{
    analyze, ingest_csv, render, simulate, write_prices_csv, AnalysisConfig, ChangeMode,
    Deterministic, Error, KsMode, Model, ReportFormat, SeMode, SimSpec, YearMonth,
};

#[derive(Parser)]
#[command(name = "rwalk", version, about = "Random-walk and weak-form efficiency tests for monthly price series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full test battery on a wide price CSV.
    Analyze(AnalyzeArgs),
    /// Write a seeded synthetic price series as CSV.
    Simulate(SimulateArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ChangeArg {
    Diff,
    Log,
}

#[derive(Clone, Copy, ValueEnum)]
enum KsArg {
    Standardized,
    Raw,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeArg {
    Auto,
    Exact,
    LargeN,
}

#[derive(Clone, Copy, ValueEnum)]
enum DetArg {
    Constant,
    Trend,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Md,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    RandomWalk,
    Ar1,
    Iid,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Price CSV: `date` column then one column per index. `-` reads stdin.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "diff")]
    change_mode: ChangeArg,
    #[arg(long, default_value_t = 20)]
    max_lag: usize,
    /// Standard error of ACF(k); `auto` switches to 1/sqrt(n) at n >= 50.
    #[arg(long, value_enum, default_value = "auto")]
    se_mode: SeArg,
    #[arg(long, default_value_t = 1)]
    adf_lags: usize,
    #[arg(long, value_enum, default_value = "constant")]
    adf_deterministic: DetArg,
    #[arg(long, value_enum, default_value = "standardized")]
    ks_mode: KsArg,
    #[arg(long, value_enum, default_value = "md")]
    format: FormatArg,
    /// Output file, or `stdout`.
    #[arg(long, default_value = "stdout")]
    output: String,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long, value_enum, default_value = "random-walk")]
    model: ModelArg,
    /// Number of monthly prices.
    #[arg(long, default_value_t = 118)]
    length: usize,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    drift: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    sigma: f64,
    /// AR(1) coefficient of the changes (ar1 model only).
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    phi: f64,
    /// Starting price.
    #[arg(long, default_value_t = 100.0)]
    start: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "2005-09")]
    start_month: String,
    /// Column name in the output CSV.
    #[arg(long, default_value = "simulated")]
    label: String,
    /// Output file, or `stdout`.
    #[arg(long, default_value = "stdout")]
    output: String,
}

fn write_output(target: &str, text: &str) -> Result<()> {
    if target == "stdout" || target == "-" {
        io::stdout().write_all(text.as_bytes()).context("writing to stdout")?;
    } else {
        fs::write(target, text).with_context(|| format!("writing {target}"))?;
    }
    Ok(())
}

fn run_analyze(args: AnalyzeArgs) -> Result<()> {
    let series = if args.input.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf).context("reading stdin")?;
        ingest_csv(buf.as_slice())?
    } else {
        let file = fs::File::open(&args.input)
            .with_context(|| format!("opening {}", args.input.display()))?;
        ingest_csv(file).with_context(|| format!("reading {}", args.input.display()))?
    };
    let config = AnalysisConfig {
        change_mode: match args.change_mode {
            ChangeArg::Diff => ChangeMode::ArithmeticDiff,
            ChangeArg::Log => ChangeMode::LogReturn,
        },
        max_lag: args.max_lag,
        se_mode: match args.se_mode {
            SeArg::Auto => SeMode::Auto,
            SeArg::Exact => SeMode::Exact,
            SeArg::LargeN => SeMode::LargeN,
        },
        adf_lags: args.adf_lags,
        adf_deterministic: match args.adf_deterministic {
            DetArg::Constant => Deterministic::Constant,
            DetArg::Trend => Deterministic::ConstantTrend,
        },
        ks_mode: match args.ks_mode {
            KsArg::Standardized => KsMode::Standardized,
            KsArg::Raw => KsMode::RawStandardNormal,
        },
        ..AnalysisConfig::default()
    };
    let report = analyze(&series, &config)?;
    let format = match args.format {
        FormatArg::Md => ReportFormat::Markdown,
        FormatArg::Csv => ReportFormat::Csv,
        FormatArg::Json => ReportFormat::Json,
    };
    write_output(&args.output, &render(&report, format))
}

fn run_simulate(args: SimulateArgs) -> Result<()> {
    let start_month: YearMonth = args.start_month.parse()?;
    let spec = SimSpec {
        label: args.label,
        model: match args.model {
            ModelArg::RandomWalk => Model::RandomWalk,
            ModelArg::Ar1 => Model::Ar1,
            ModelArg::Iid => Model::IidChanges,
        },
        length: args.length,
        drift: args.drift,
        sigma: args.sigma,
        phi: args.phi,
        start_price: args.start,
        seed: args.seed,
        start_month,
    };
    let sim = simulate(&spec)?;
    if sim.redrawn(&spec) {
        eprintln!(
            "note: seed {} produced a non-positive price; used seed {} instead",
            spec.seed, sim.seed_used
        );
    }
    write_output(&args.output, &write_prices_csv(&[sim.series]))
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Degenerate(_) | Error::SingularDesign(_)) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    // usage errors are input errors; clap's own code 2 would read as a numerical failure
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Analyze(args) => run_analyze(args),
        Command::Simulate(args) => run_simulate(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
