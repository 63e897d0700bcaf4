//! `opentangle` — operator-Schmidt analysis of two-qubit gates from the
//! command line. All real work lives in [`opentangle::cli`]; this file only
//! parses flags and maps errors to the documented exit statuses.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use opentangle::cli::{
    cmd_analyze, cmd_canonical, cmd_sweep_fig1, cmd_sweep_fig2, cmd_sweep_fig3, cmd_table1,
    parse_angle,
};

#[derive(Parser)]
#[command(
    name = "opentangle",
    version,
    about = "Operator-Schmidt decomposition, entangling power, and canonical \
             class vectors for two-qubit gates",
    after_help = "Exit status: 0 success, 2 parse error, 3 non-unitary input, \
                  4 operator-Schmidt rank 3, 5 I/O error, 6 class-bound violation.\n\
                  Angles accept plain radians or pi fractions: 0.785, pi/4, -pi/2, 2pi."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a gate from a matrix file: spectrum, Schmidt number,
    /// entanglement, class vector
    #[command(name = "analyze")]
    Analyze {
        /// JSON matrix file ({"label": ..., "matrix": 4x4 of [re, im]})
        input: PathBuf,
        /// Emit the full-precision report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the closed forms at a class vector (c1, c2, c3)
    #[command(name = "canonical")]
    Canonical {
        #[arg(value_parser = parse_angle, allow_hyphen_values = true)]
        c1: f64,
        #[arg(value_parser = parse_angle, allow_hyphen_values = true)]
        c2: f64,
        #[arg(value_parser = parse_angle, allow_hyphen_values = true)]
        c3: f64,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Sweep entanglement over the (c1, c2) square at fixed c3, CSV out
    #[command(name = "sweep-fig1")]
    SweepFig1 {
        /// Fixed third coordinate
        #[arg(long, value_parser = parse_angle, default_value = "0", allow_hyphen_values = true)]
        c3: f64,
        /// Lattice points per axis
        #[arg(long, default_value_t = 101)]
        grid: usize,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
    /// Sweep the one-parameter rank-2 family (c1, 0, 0), CSV out
    #[command(name = "sweep-fig2")]
    SweepFig2 {
        /// Lattice points over [0, pi/4]
        #[arg(long, default_value_t = 101)]
        grid: usize,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
    /// Sweep the dispersive cavity trajectory E(lambda*t), CSV out
    #[command(name = "sweep-fig3")]
    SweepFig3 {
        /// Largest accumulated phase lambda*t
        #[arg(long, value_parser = parse_angle, default_value = "2pi", allow_hyphen_values = true)]
        phase_max: f64,
        /// Number of grid points (inclusive of both endpoints)
        #[arg(long, default_value_t = 201)]
        steps: usize,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
    /// Tabulate entanglement ranges per Schmidt class over a chamber grid
    /// plus Haar-random gates, asserting the class bounds
    #[command(name = "table1")]
    Table1 {
        /// Number of Haar-random gates to draw
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// RNG seed (fixed seed => identical output)
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Emit the table as JSON
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { input, json } => cmd_analyze(&input, json),
        Command::Canonical { c1, c2, c3, json } => cmd_canonical(c1, c2, c3, json),
        Command::SweepFig1 { c3, grid, out } => cmd_sweep_fig1(c3, grid, &out),
        Command::SweepFig2 { grid, out } => cmd_sweep_fig2(grid, &out),
        Command::SweepFig3 {
            phase_max,
            steps,
            out,
        } => cmd_sweep_fig3(phase_max, steps, &out),
        Command::Table1 {
            samples,
            seed,
            json,
        } => cmd_table1(samples, seed, json),
    };
    match result {
        Ok(report) => {
            println!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
