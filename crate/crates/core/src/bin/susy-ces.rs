use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use susy_ces::closedform::Branch;
use susy_ces::potential::Sector;
use susy_ces::scattering::{phase_difference_study, PhaseConfig};
use susy_ces::table::{build_table, write_figures, write_table, Format, Spacing, TableKind, TableRequest};
use susy_ces::verify::{run_suite, Suite};
use susy_ces::Error;

#[derive(Parser)]
#[command(name = "susy-ces", version, about = "Tables, checks and phase shifts for the W = -m/sqrt(x) partner potentials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate W, V or Z on a grid
    Table(TableArgs),
    /// Run a verification suite and write a JSON array of check reports
    Verify(VerifyArgs),
    /// Phase difference between the partner sectors
    Phase(PhaseArgs),
    /// Write the superpotential and potential curves as CSV files
    Figures(FiguresArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Superpotential,
    Potential,
    Solution,
}

#[derive(Clone, Copy, ValueEnum)]
enum SectorArg {
    Plus,
    Minus,
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpacingArg {
    Linear,
    Log,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long, allow_hyphen_values = true)]
    m: f64,
    #[arg(long, value_enum, default_value = "plus")]
    sector: SectorArg,
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    #[arg(long, value_enum, default_value = "I")]
    branch: BranchArg,
    #[arg(long)]
    x_min: f64,
    #[arg(long)]
    x_max: f64,
    #[arg(long, default_value_t = 200)]
    points: usize,
    #[arg(long, value_enum, default_value = "linear")]
    spacing: SpacingArg,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Output file; standard output when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    /// Replace every check's tolerance with this value
    #[arg(long)]
    rel_tol: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PhaseArgs {
    #[arg(long, allow_hyphen_values = true)]
    m: f64,
    #[arg(long, allow_hyphen_values = true)]
    omega: f64,
    #[arg(long, default_value_t = 1e4)]
    x_max: f64,
    #[arg(long, value_enum, default_value = "I")]
    branch: BranchArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FiguresArgs {
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.exit_code() == 2 {
            Failure::Usage(e.to_string())
        } else {
            Failure::Check(e.to_string())
        }
    }
}

fn open_out(out: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    match out {
        Some(p) => {
            let f = File::create(p).map_err(|e| Failure::Check(format!("cannot write {}: {e}", p.display())))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
    }
}

fn write_json<T: serde::Serialize>(value: &T, out: Option<&Path>) -> Result<(), Failure> {
    let mut w = open_out(out)?;
    serde_json::to_writer_pretty(&mut w, value).map_err(|e| Failure::Check(e.to_string()))?;
    writeln!(w).and_then(|_| w.flush()).map_err(|e| Failure::Check(e.to_string()))
}

fn cmd_table(a: TableArgs) -> Result<(), Failure> {
    let req = TableRequest {
        kind: match a.kind {
            KindArg::Superpotential => TableKind::Superpotential,
            KindArg::Potential => TableKind::Potential,
            KindArg::Solution => TableKind::Solution,
        },
        m: a.m,
        sector: match a.sector {
            SectorArg::Plus => Sector::Plus,
            SectorArg::Minus => Sector::Minus,
        },
        omega: a.omega,
        branch: branch(a.branch),
        x_min: a.x_min,
        x_max: a.x_max,
        points: a.points,
        spacing: match a.spacing {
            SpacingArg::Linear => Spacing::Linear,
            SpacingArg::Log => Spacing::Log,
        },
    };
    let format = match a.format {
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    };
    req.validate()?;
    let table = build_table(&req)?;
    write_table(&table, format, open_out(a.out.as_deref())?)?;
    Ok(())
}

fn branch(b: BranchArg) -> Branch {
    match b {
        BranchArg::I => Branch::I,
        BranchArg::II => Branch::II,
    }
}

fn cmd_verify(a: VerifyArgs) -> Result<(), Failure> {
    let suite: Suite = a.suite.parse()?;
    let reports = run_suite(suite, a.rel_tol)?;
    write_json(&reports, a.out.as_deref())?;
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.name.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} of {} checks failed: {}", failed.len(), reports.len(), failed.join(", "))))
    }
}

fn cmd_phase(a: PhaseArgs) -> Result<(), Failure> {
    let cfg = PhaseConfig { x_max: a.x_max, branch: branch(a.branch), ..PhaseConfig::default() };
    let r = phase_difference_study(a.m, a.omega, &cfg)?;
    write_json(&r, a.out.as_deref())?;
    if r.converged {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "phase difference not converged by x = {} (residual {:e})",
            a.x_max, r.residual_to_half_pi
        )))
    }
}

fn cmd_figures(a: FiguresArgs) -> Result<(), Failure> {
    for p in write_figures(&a.out)? {
        eprintln!("wrote {}", p.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Phase(a) => cmd_phase(a),
        Command::Figures(a) => cmd_figures(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
