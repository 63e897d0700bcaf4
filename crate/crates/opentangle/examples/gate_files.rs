//! The on-disk gate format: write a matrix file, read it back, analyze it —
//! the same path the `opentangle analyze` subcommand takes.
//!
//! Run with `cargo run --example gate_files`.

use std::path::Path;

use opentangle::canonical::{build_ud, CanonicalParams};
use opentangle::cli::{cmd_analyze, MatrixFile};

fn main() {
    let dir = Path::new("target/gates");
    std::fs::create_dir_all(dir).expect("create target/gates");
    let path = dir.join("sqrt_swap.json");

    // √SWAP sits at class vector (π/8, π/8, π/8).
    let c = std::f64::consts::FRAC_PI_4 / 2.0;
    let gate = build_ud(&CanonicalParams::new(c, c, c));
    MatrixFile::from_mat4(Some("sqrt-SWAP class"), &gate)
        .write(&path)
        .unwrap();
    println!("wrote {}\n", path.display());

    // Round trip through JSON text — [re, im] pairs survive exactly, so the
    // analysis of the file equals the analysis of the matrix.
    println!("{}", cmd_analyze(&path, false).unwrap());
    println!("{}", cmd_analyze(&path, true).unwrap());
}
