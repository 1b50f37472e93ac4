//! Thin command-line front end: runs the verification suites and emits the
//! chart grid. All substance lives in the library; see the crate examples
//! for API-level tours.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pseudosphere::report::Report;
use pseudosphere::suites::{run_suites, Mode, Suite, SuiteConfig, ALL_SUITES};

#[derive(Parser)]
#[command(name = "pseudosphere", version, about = "Verification suites for the de Sitter spinor-wave toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Run verification suites and write report.json / report.md.
    Verify(VerifyArgs),
    /// Emit the observer-region grid as CSV.
    Chart(ChartArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite selector: all | ga | algebras | repr | geometry | operators | limit.
    #[arg(long, default_value = "all")]
    suite: String,

    /// Radius of the pseudo-sphere.
    #[arg(long, default_value_t = 1.0)]
    ell: f64,

    /// Mass parameter.
    #[arg(long, default_value_t = 1.0)]
    m: f64,

    /// Seed for the random sweeps; identical seeds give byte-identical reports.
    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// Arithmetic mode: exact-where-possible | float.
    #[arg(long, default_value = "exact-where-possible")]
    mode: String,

    /// Relative tolerance override for float comparisons.
    #[arg(long, default_value_t = 1e-10)]
    rel_tol: f64,

    /// Absolute floor override for float comparisons.
    #[arg(long, default_value_t = 1e-14)]
    abs_tol: f64,

    /// Output directory for report.json and report.md
    /// (default: $PSEUDOSPHERE_OUT or the current directory).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ChartArgs {
    /// Radius of the pseudo-sphere.
    #[arg(long, default_value_t = 1.0)]
    ell: f64,

    /// Half-width of the (t, x1) grid.
    #[arg(long, default_value_t = 3.0)]
    extent: f64,

    /// Points per axis (at least 2).
    #[arg(long, default_value_t = 50)]
    resolution: usize,

    /// Append points sampled along null lines.
    #[arg(long)]
    lightlike: bool,

    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Commands::Verify(args) => match run_verify(&args) {
            Ok(passed) => {
                if passed {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Commands::Chart(args) => match run_chart(&args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
    }
}

fn run_verify(args: &VerifyArgs) -> Result<bool, pseudosphere::Error> {
    if args.ell <= 0.0 {
        return Err(pseudosphere::Error::BadConfig("--ell must be positive".into()));
    }
    if args.m < 0.0 {
        return Err(pseudosphere::Error::BadConfig("--m must be nonnegative".into()));
    }
    let mode: Mode = args.mode.parse()?;
    let suites: Vec<Suite> = if args.suite == "all" {
        ALL_SUITES.to_vec()
    } else {
        vec![args.suite.parse()?]
    };
    let cfg = SuiteConfig {
        seed: args.seed,
        ell: args.ell,
        mass: args.m,
        mode,
        rel_tol: args.rel_tol,
        abs_tol: args.abs_tol,
    };
    let checks = run_suites(&suites, &cfg);
    let report = Report::new(&args.suite, cfg.seed, mode.as_str(), cfg.ell, cfg.mass, checks);

    let out_dir = args
        .out
        .clone()
        .or_else(|| std::env::var_os("PSEUDOSPHERE_OUT").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    std::fs::create_dir_all(&out_dir)?;
    std::fs::write(out_dir.join("report.json"), report.to_json()?)?;
    std::fs::write(out_dir.join("report.md"), report.to_markdown())?;

    for check in &report.checks {
        println!(
            "{} {} ({} cases, residual {:.3e})",
            if check.passed { "pass" } else { "FAIL" },
            check.name,
            check.cases,
            check.max_residual
        );
    }
    println!(
        "{}: {}/{} checks passed; reports in {}",
        if report.passed { "ok" } else { "FAILED" },
        report.checks.iter().filter(|c| c.passed).count(),
        report.checks.len(),
        out_dir.display()
    );
    Ok(report.passed)
}

fn run_chart(args: &ChartArgs) -> Result<(), pseudosphere::Error> {
    if args.ell <= 0.0 {
        return Err(pseudosphere::Error::BadConfig("--ell must be positive".into()));
    }
    if args.resolution < 2 {
        return Err(pseudosphere::Error::BadConfig("--resolution must be at least 2".into()));
    }
    let csv =
        pseudosphere::geometry::emit_chart_grid(args.ell, args.extent, args.resolution, args.lightlike);
    match &args.out {
        Some(path) => std::fs::write(path, csv)?,
        None => print!("{csv}"),
    }
    Ok(())
}
