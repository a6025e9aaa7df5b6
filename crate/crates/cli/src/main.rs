use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qubit_mobius::Hamiltonian;
use qubit_mobius_cli::commands;
use qubit_mobius_cli::{svg, CliError, GateExpression, OutputFormat, Result};

const EXPRESSION_HELP: &str = "Gate expressions are whitespace-separated terms in operator order: \
the leftmost term acts last, so \"H Z H\" is the product H·Z·H and the rightmost term acts on the state first. \
Terms are X, Y, Z, I, H, rot(nx,ny,nz,beta) with beta in radians, or a matrix literal \
[[a,b],[c,d]] with complex entries such as 0.5-0.5i.";

#[derive(Parser)]
#[command(name = "qmobius", version, about = "Single-qubit gates as Möbius transformations", after_help = EXPRESSION_HELP)]
struct Cli {
    /// Tolerance for equality and concyclicity checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Reduced Planck constant used by `evolve`.
    #[arg(long, global = true, default_value_t = 1.0)]
    hbar: f64,

    /// Trajectory file format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,

    /// Write an SVG plot of the trajectory here.
    #[arg(long, global = true)]
    svg: Option<PathBuf>,

    /// Write the trajectory here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Show the unitary, Möbius map and axis-angle form of a gate expression.
    #[command(after_help = EXPRESSION_HELP)]
    Gate { expr: String },

    /// Check whether two gate expressions agree up to a global phase.
    /// Exits 0 when equal and 1 when not.
    #[command(after_help = EXPRESSION_HELP)]
    Verify { lhs: String, rhs: String },

    /// Project a state, given as `a,b` or `phi=...,theta=...`, to the plane.
    Project { state: String },

    /// Sample the precession of a state under a constant Hamiltonian.
    Evolve {
        /// `h0,h1,h2,h3`: identity and Pauli coefficients.
        #[arg(long, allow_hyphen_values = true)]
        hamiltonian: String,

        /// Initial state, `a,b` or `phi=...,theta=...`.
        #[arg(long)]
        state: String,

        #[arg(long)]
        t_max: f64,

        /// Number of samples, including t = 0 and t = t_max.
        #[arg(short, long)]
        n: usize,
    },

    /// List the fixed points of the Möbius map of a gate expression.
    #[command(after_help = EXPRESSION_HELP)]
    FixedPoints { expr: String },
}

fn parse_hamiltonian(text: &str, hbar: f64) -> Result<Hamiltonian> {
    let mut values = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let value = part
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| {
                CliError::parse(
                    text[..offset].chars().count() + 1,
                    format!("bad coefficient `{}`", part.trim()),
                )
            })?;
        values.push(value);
        offset += part.len() + 1;
    }
    let [h0, h1, h2, h3] = values[..] else {
        return Err(CliError::parse(
            1,
            format!("expected 4 coefficients h0,h1,h2,h3, got {}", values.len()),
        ));
    };
    Ok(Hamiltonian::with_hbar(h0, h1, h2, h3, hbar)?)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut stdout = stdout.lock();
    match cli.command {
        Command::Gate { expr } => {
            let expr = GateExpression::parse(&expr)?;
            write!(stdout, "{}", commands::cmd_gate(&expr)?)?;
        }
        Command::Verify { lhs, rhs } => {
            let lhs = GateExpression::parse(&lhs)?;
            let rhs = GateExpression::parse(&rhs)?;
            let outcome = commands::cmd_verify(&lhs, &rhs, cli.tol)?;
            write!(stdout, "{}", outcome.report)?;
            if !outcome.equal {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Project { state } => {
            write!(stdout, "{}", commands::cmd_project(&state)?)?;
        }
        Command::Evolve {
            hamiltonian,
            state,
            t_max,
            n,
        } => {
            let h = parse_hamiltonian(&hamiltonian, cli.hbar)?;
            let outcome = commands::cmd_evolve(&h, &state, t_max, n, cli.tol)?;
            let report = commands::evolve_report(&outcome);
            match &cli.out {
                Some(path) => {
                    let mut writer = BufWriter::new(File::create(path)?);
                    outcome.file.write(cli.format, &mut writer)?;
                    writer.flush()?;
                    write!(stdout, "{report}")?;
                }
                None => {
                    outcome.file.write(cli.format, &mut stdout)?;
                    eprint!("{report}");
                }
            }
            if let Some(path) = &cli.svg {
                std::fs::write(path, svg::render(&outcome.file, outcome.circline.as_ref()))?;
            }
        }
        Command::FixedPoints { expr } => {
            let expr = GateExpression::parse(&expr)?;
            write!(stdout, "{}", commands::cmd_fixed_points(&expr)?)?;
        }
    }
    stdout.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
