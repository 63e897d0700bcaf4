//! Fixed single- and two-qubit gates used as fixtures throughout the crate.

use super::{c64, Mat2, Mat4};

const Z0: num_complex::Complex64 = c64(0.0, 0.0);
const P1: num_complex::Complex64 = c64(1.0, 0.0);
const N1: num_complex::Complex64 = c64(-1.0, 0.0);
const PI_: num_complex::Complex64 = c64(0.0, 1.0);
const NI: num_complex::Complex64 = c64(0.0, -1.0);

pub fn pauli_x() -> Mat2 {
    Mat2::from_rows([[Z0, P1], [P1, Z0]])
}

pub fn pauli_y() -> Mat2 {
    Mat2::from_rows([[Z0, NI], [PI_, Z0]])
}

pub fn pauli_z() -> Mat2 {
    Mat2::from_rows([[P1, Z0], [Z0, N1]])
}

pub fn hadamard() -> Mat2 {
    let h = c64(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    Mat2::from_rows([[h, h], [h, -h]])
}

/// Controlled-NOT, first qubit controlling the second.
pub fn cnot() -> Mat4 {
    Mat4::from_rows([
        [P1, Z0, Z0, Z0],
        [Z0, P1, Z0, Z0],
        [Z0, Z0, Z0, P1],
        [Z0, Z0, P1, Z0],
    ])
}

/// Exchange of the two qubits.
pub fn swap() -> Mat4 {
    Mat4::from_rows([
        [P1, Z0, Z0, Z0],
        [Z0, Z0, P1, Z0],
        [Z0, P1, Z0, Z0],
        [Z0, Z0, Z0, P1],
    ])
}

/// Exchange with an `i` phase on the swapped amplitudes.
pub fn iswap() -> Mat4 {
    Mat4::from_rows([
        [P1, Z0, Z0, Z0],
        [Z0, Z0, PI_, Z0],
        [Z0, PI_, Z0, Z0],
        [Z0, Z0, Z0, P1],
    ])
}
