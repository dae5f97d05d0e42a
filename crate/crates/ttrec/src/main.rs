use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use ttrec::commands::{self, CmdError, Outcome, RunConfig};
use ttrec::json::{golden_to, lax_to, pretty};
use ttrec::report::envelope;

#[derive(Parser)]
#[command(name = "ttrec", version, about = "Topological-type certification of rational Lax pairs")]
struct Cli {
    /// ℏ truncation order K
    #[arg(long, global = true, default_value_t = 4)]
    k_order: usize,
    #[arg(long, global = true, default_value_t = 2)]
    chi_max: usize,
    /// Decimal digits in numeric mode
    #[arg(long, global = true, env = "TTREC_PRECISION", default_value_t = 50)]
    precision: usize,
    /// Seed of the sample plans
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Spectral-curve geometry
    Curve {
        #[command(subcommand)]
        op: CurveOp,
    },
    /// Assumptions and topological-type conditions
    Lax {
        #[command(subcommand)]
        op: LaxOp,
    },
    /// Topological-recursion tables
    Tr {
        #[command(subcommand)]
        op: TrOp,
    },
    /// One determinantal correlator W_n^(k) at given z's
    Correlate {
        path: PathBuf,
        /// Comma-separated rationals z_1,...,z_n
        #[arg(long)]
        points: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Determinantal correlators against the recursion
    Compare { path: PathBuf },
    /// ℏ ∂_t ln τ
    Tau { path: PathBuf },
    /// Ψ recovery and the exponential formula (numeric)
    Wkb {
        path: PathBuf,
        /// Comma-separated z:z' pairs
        #[arg(long)]
        pairs: Option<String>,
        #[arg(long, default_value_t = 2)]
        max_order: usize,
    },
    /// Built-in instances
    Preset {
        #[command(subcommand)]
        op: PresetOp,
    },
}

#[derive(Subcommand)]
enum CurveOp {
    Inspect { path: PathBuf },
}

#[derive(Subcommand)]
enum LaxOp {
    Certify { path: PathBuf },
}

#[derive(Subcommand)]
enum TrOp {
    Compute { path: PathBuf },
}

#[derive(Subcommand)]
enum PresetOp {
    List,
    /// Write <name>.json and <name>.golden.json
    Export { name: String, dir: PathBuf },
}

fn read_json(path: &Path) -> Result<(Value, Vec<u8>), CmdError> {
    let bytes = std::fs::read(path).map_err(|e| CmdError::Usage(format!("{}: {e}", path.display())))?;
    let v = serde_json::from_slice(&bytes).map_err(|e| CmdError::Usage(format!("{}: {e}", path.display())))?;
    Ok((v, bytes))
}

fn write_out(out: &Option<PathBuf>, s: &str) -> Result<(), CmdError> {
    match out {
        Some(p) => std::fs::write(p, s).map_err(|e| CmdError::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{s}");
            Ok(())
        }
    }
}

fn preset_op(op: &PresetOp) -> Result<(), CmdError> {
    match op {
        PresetOp::List => {
            for n in ttrec_core::presets::NAMES {
                println!("{n}");
            }
            Ok(())
        }
        PresetOp::Export { name, dir } => {
            let p = ttrec_core::presets::by_name(name).ok_or_else(|| CmdError::Usage(format!("unknown preset {name}")))?;
            let io = |e: std::io::Error| CmdError::Usage(e.to_string());
            std::fs::write(dir.join(format!("{}.json", p.name)), pretty(&lax_to(&p.name, &p.lax, &p.curve))).map_err(io)?;
            std::fs::write(dir.join(format!("{}.golden.json", p.name)), pretty(&golden_to(&p.golden))).map_err(io)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, CmdError> {
    let cfg = RunConfig { k_order: cli.k_order, chi_max: cli.chi_max, precision: cli.precision, seed: cli.seed };
    if cfg.k_order < 1 || cfg.chi_max < 1 {
        return Err(CmdError::Usage("--k-order and --chi-max must be at least 1".into()));
    }
    let (name, path) = match &cli.cmd {
        Cmd::Preset { op } => return preset_op(op).map(|_| true),
        Cmd::Curve { op: CurveOp::Inspect { path } } => ("curve inspect", path),
        Cmd::Lax { op: LaxOp::Certify { path } } => ("lax certify", path),
        Cmd::Tr { op: TrOp::Compute { path } } => ("tr compute", path),
        Cmd::Correlate { path, .. } => ("correlate", path),
        Cmd::Compare { path } => ("compare", path),
        Cmd::Tau { path } => ("tau", path),
        Cmd::Wkb { path, .. } => ("wkb", path),
    };
    let (v, bytes) = read_json(path)?;
    let Outcome { passed, result, text } = match &cli.cmd {
        Cmd::Curve { .. } => commands::curve_inspect(&v)?,
        Cmd::Lax { .. } => commands::lax_certify(&v, &cfg)?,
        Cmd::Tr { .. } => commands::tr_compute(&v, &cfg)?,
        Cmd::Correlate { points, k, .. } => commands::correlate(&v, &cfg, &commands::parse_points(points)?, *k)?,
        Cmd::Compare { .. } => commands::compare(&v, &cfg)?,
        Cmd::Tau { .. } => commands::tau(&v, &cfg)?,
        Cmd::Wkb { pairs, max_order, .. } => {
            let pairs = match pairs {
                Some(s) => commands::parse_pairs(s)?,
                None => commands::default_pairs(),
            };
            commands::wkb(&v, &cfg, &pairs, *max_order)?
        }
        Cmd::Preset { .. } => unreachable!(),
    };
    let body = match cli.format {
        Format::Json => pretty(&envelope(name, &path.display().to_string(), &bytes, &cfg, passed, result)),
        Format::Text => format!("{name}: {}\n{text}", if passed { "pass" } else { "FAIL" }),
    };
    write_out(&cli.out, &body)?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("ttrec: {e}");
            ExitCode::from(2)
        }
    }
}
