//! Generate the three standard CSV sweeps — the same data the `opentangle`
//! binary's `sweep-fig1/2/3` subcommands produce — into `target/figures/`.
//!
//! * fig1: entanglement surface over (c1, c2) at fixed c3
//! * fig2: the rank-2 family (c1, 0, 0), E = ½ sin² 2c1
//! * fig3: the cavity trajectory, E = ½ sin² λt
//!
//! Run with `cargo run --example figure_data`.

use std::f64::consts::FRAC_PI_4;
use std::path::Path;

use opentangle::cli::{cmd_sweep_fig1, cmd_sweep_fig2, cmd_sweep_fig3, parse_angle};

fn main() {
    let dir = Path::new("target/figures");
    std::fs::create_dir_all(dir).expect("create target/figures");

    println!(
        "{}",
        cmd_sweep_fig1(0.0, 41, &dir.join("fig1_c3_zero.csv")).unwrap()
    );
    println!(
        "{}",
        cmd_sweep_fig1(FRAC_PI_4, 41, &dir.join("fig1_c3_quarter_pi.csv")).unwrap()
    );
    println!("{}", cmd_sweep_fig2(101, &dir.join("fig2.csv")).unwrap());

    let phase_max = parse_angle("2pi").unwrap();
    println!(
        "{}",
        cmd_sweep_fig3(phase_max, 201, &dir.join("fig3.csv")).unwrap()
    );

    // Identical invocations produce byte-identical files, so these CSVs are
    // safe to check into a paper repo and regenerate in CI.
}
