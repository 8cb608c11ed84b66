//! Command-line front end: compute weighted Orlicz norms and moduli of
//! smoothness on demand, or run an inequality-verification suite.
//!
//! Exit codes: 0 success / all checks pass, 1 numeric failure or failed
//! checks, 2 usage or configuration error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use orlicz_approx::error::Error;
use orlicz_approx::operators::modulus;
use orlicz_approx::verify::{
    build_entry, reports_to_csv, reports_to_json, run_suite, summary_text, SuiteConfig,
};
use orlicz_approx::{Grid, OrliczContext, Weight, YoungFunction};

#[derive(Parser)]
#[command(
    name = "orlicz-approx",
    about = "Weighted Orlicz norms, moduli of smoothness and inequality verification on the circle",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Luxemburg (gauge) and Amemiya norms of a function.
    Norm(NormArgs),
    /// Print a (delta, Omega_k) table for the fractional modulus.
    Modulus(ModulusArgs),
    /// Run a verification suite and write reports.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CommonCtx {
    /// Young function: power:<p>, power-log:<p>, or csv:<path> (tabulated).
    #[arg(long, default_value = "power:2")]
    phi: String,
    /// Weight: const[:c], power:<gamma>[:<center>], or csv:<path>.
    #[arg(long, default_value = "const")]
    weight: String,
    /// Grid size (power of two >= 256).
    #[arg(long, default_value_t = 4096)]
    grid: usize,
    /// Seed for seeded corpus entries.
    #[arg(long, default_value_t = 20230811)]
    seed: u64,
}

#[derive(Args)]
struct NormArgs {
    #[command(flatten)]
    ctx: CommonCtx,
    /// Function: cos:m, sin:m, abs-sin-pow:g, sawtooth, random-analytic,
    /// const:c, or csv:<path>.
    #[arg(long = "fn")]
    function: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ModulusArgs {
    #[command(flatten)]
    ctx: CommonCtx,
    #[arg(long = "fn")]
    function: String,
    /// Fractional order k >= 0.
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    /// Largest step delta.
    #[arg(long, default_value_t = 0.5)]
    delta: f64,
    /// Number of table rows (delta halves per row).
    #[arg(long, default_value_t = 8)]
    rows: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite configuration file (JSON); the shipped default when absent.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Print the shipped default configuration and exit.
    #[arg(long)]
    emit_default_config: bool,
    /// Run the falsified-inequality self-test configuration (must fail).
    #[arg(long)]
    self_test: bool,
    /// Output directory for report.json / report.csv / summary.txt.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Grid override for the configured suite.
    #[arg(long)]
    grid: Option<usize>,
    /// Seed override.
    #[arg(long)]
    seed: Option<u64>,
    /// Degree-sweep override.
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn parse_phi(spec: &str) -> Result<YoungFunction, Error> {
    let (head, arg) = spec.split_once(':').unwrap_or((spec, ""));
    match head {
        "power" => YoungFunction::power(
            arg.parse()
                .map_err(|e| Error::ConfigError(format!("--phi {spec}: {e}")))?,
        ),
        "power-log" => YoungFunction::power_log(
            arg.parse()
                .map_err(|e| Error::ConfigError(format!("--phi {spec}: {e}")))?,
        ),
        "csv" => {
            let text = std::fs::read_to_string(arg)?;
            YoungFunction::tabulated_from_csv(&text)
        }
        _ => Err(Error::ConfigError(format!(
            "--phi {spec}: expected power:<p>, power-log:<p>, or csv:<path>"
        ))),
    }
}

fn parse_weight(grid: Grid, spec: &str) -> Result<Weight, Error> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts[0] {
        "const" => {
            let c = if parts.len() > 1 {
                parts[1]
                    .parse()
                    .map_err(|e| Error::ConfigError(format!("--weight {spec}: {e}")))?
            } else {
                1.0
            };
            Weight::constant(grid, c)
        }
        "power" => {
            if parts.len() < 2 {
                return Err(Error::ConfigError(format!(
                    "--weight {spec}: power needs an exponent"
                )));
            }
            let gamma: f64 = parts[1]
                .parse()
                .map_err(|e| Error::ConfigError(format!("--weight {spec}: {e}")))?;
            let center: f64 = if parts.len() > 2 {
                parts[2]
                    .parse()
                    .map_err(|e| Error::ConfigError(format!("--weight {spec}: {e}")))?
            } else {
                std::f64::consts::PI
            };
            Ok(Weight::power(grid, gamma, center))
        }
        "csv" => {
            if parts.len() < 2 {
                return Err(Error::ConfigError("--weight csv: needs a path".into()));
            }
            let text = std::fs::read_to_string(parts[1])?;
            Weight::from_csv(grid, &text)
        }
        _ => Err(Error::ConfigError(format!(
            "--weight {spec}: expected const[:c], power:<gamma>[:<center>], or csv:<path>"
        ))),
    }
}

fn build_context(common: &CommonCtx) -> Result<OrliczContext, Error> {
    let grid = Grid::new(common.grid)?;
    let phi = parse_phi(&common.phi)?;
    let weight = parse_weight(grid, &common.weight)?;
    OrliczContext::new(phi, weight)
}

fn cmd_norm(args: &NormArgs) -> Result<(), Error> {
    let ctx = build_context(&args.ctx)?;
    let entry = build_entry(ctx.grid(), &args.function, args.ctx.seed)?;
    let lux = ctx.luxemburg(&entry.f)?;
    let am = ctx.orlicz_amemiya(&entry.f)?;
    match args.format {
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "function": entry.id,
                "context": ctx.name(),
                "luxemburg": lux,
                "amemiya": am.value,
                "amemiya_is_exact_orlicz": am.exact_orlicz,
            })
        ),
        _ => {
            println!("luxemburg = {lux}");
            println!("amemiya = {}", am.value);
            if !am.exact_orlicz {
                println!("note: phi not certified convex; amemiya is an equivalent norm");
            }
        }
    }
    Ok(())
}

fn cmd_modulus(args: &ModulusArgs) -> Result<(), Error> {
    if args.delta <= 0.0 || args.rows == 0 {
        return Err(Error::ConfigError("--delta must be positive, --rows nonzero".into()));
    }
    let ctx = build_context(&args.ctx)?;
    let entry = build_entry(ctx.grid(), &args.function, args.ctx.seed)?;
    let mut out = Vec::new();
    for i in 0..args.rows {
        let d = args.delta * 2f64.powi(i as i32 + 1 - args.rows as i32);
        let (omega, argmax_h) = modulus(&ctx, &entry.f, args.k, d, 32)?;
        out.push((d, omega, argmax_h));
    }
    match args.format {
        Format::Json => {
            let rows: Vec<_> = out
                .iter()
                .map(|(d, o, h)| serde_json::json!({"delta": d, "omega": o, "argmax_h": h}))
                .collect();
            println!("{}", serde_json::json!(rows));
        }
        _ => {
            println!("delta omega argmax_h");
            for (d, o, h) in out {
                println!("{d} {o} {h}");
            }
        }
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, Error> {
    if args.emit_default_config {
        println!("{}", SuiteConfig::default_config().to_json());
        return Ok(true);
    }
    let mut config = if args.self_test {
        SuiteConfig::falsified_selftest_config()
    } else if let Some(path) = &args.config {
        SuiteConfig::from_json(&std::fs::read_to_string(path)?)?
    } else {
        SuiteConfig::default_config()
    };
    if let Some(g) = args.grid {
        config.grid = g;
    }
    if let Some(s) = args.seed {
        config.seed = s;
    }
    if let Some(n) = args.n_max {
        config.n_max = n;
    }
    config.validate()?;
    let outcome = run_suite(&config)?;
    std::fs::create_dir_all(&args.out)?;
    std::fs::write(args.out.join("report.json"), reports_to_json(&outcome.reports))?;
    std::fs::write(args.out.join("report.csv"), reports_to_csv(&outcome.reports))?;
    let summary = summary_text(&outcome);
    std::fs::write(args.out.join("summary.txt"), &summary)?;
    match args.format {
        Format::Json => println!("{}", reports_to_json(&outcome.reports)),
        Format::Csv => println!("{}", reports_to_csv(&outcome.reports)),
        Format::Text => print!("{summary}"),
    }
    Ok(outcome.all_pass())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Norm(a) => cmd_norm(a).map(|_| true),
        Command::Modulus(a) => cmd_modulus(a).map(|_| true),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ConfigError(_) | Error::InvalidInput(_) | Error::Io(_) | Error::Json(_) => {
                    ExitCode::from(2)
                }
                _ => ExitCode::from(1),
            }
        }
    }
}
