//! Analyze a handful of well-known gates plus one Haar-random sample:
//! operator-Schmidt spectrum, Schmidt number, entanglement, class vector.
//!
//! Run with `cargo run --example analyze_gate`.

use opentangle::matrix::{gates, haar_random_unitary4, kron};
use opentangle::schmidt::analyze;

fn main() {
    let named = [
        ("identity", kron(&gates::hadamard(), &gates::hadamard())), // local ⊗ local
        ("CNOT", gates::cnot()),
        ("iSWAP", gates::iswap()),
        ("SWAP", gates::swap()),
        ("Haar(seed 42)", haar_random_unitary4(42)),
    ];

    println!("gate            sch  entanglement  spectrum");
    for (name, u) in named {
        let report = analyze(&u).expect("all inputs here are exactly unitary");
        println!(
            "{name:<15} {:<4} {:<13.9} {}",
            report.schmidt_number, report.entanglement, report.spectrum
        );
        if let Some(c) = report.canonical {
            println!("                 class vector {c}");
        }
    }

    // The Hadamard pair up top is a product of locals: one Schmidt
    // coefficient (= 2), zero entanglement, class vector at the origin —
    // local gates cannot entangle anything, however busy they look.
}
