//! Operator-entanglement analysis for two-qubit joint unitaries.
//!
//! A two-qubit gate is more than a map on states: as an element of the
//! operator space it carries its own Schmidt decomposition
//!
//! ```text
//! U = Σ_l  s_l · A_l ⊗ B_l,      s_1 ≥ s_2 ≥ s_3 ≥ s_4 ≥ 0,
//! ```
//!
//! with `A_l`, `B_l` orthonormal single-qubit operator bases (Hilbert–Schmidt
//! inner product) and Σ s_l² = 4. The number of nonzero coefficients — the
//! *Schmidt number* of the gate — and the linear-entropy functional built
//! from them classify how much entangling power the gate can possibly have,
//! before any state ever enters the picture.
//!
//! This crate computes that structure along two deliberately independent
//! routes and cross-checks them everywhere:
//!
//! * **Numerically**, for an arbitrary 4×4 unitary: a reshuffling of the
//!   matrix followed by a singular-value computation gives the Schmidt
//!   coefficients ([`schmidt::schmidt_spectrum_svd`]), and a magic-basis
//!   (Bell-frame) diagonalization recovers the canonical interaction content
//!   — the class vector `(c1, c2, c3)` — of the gate ([`kak`]).
//! * **In closed form**, for the canonical interaction family
//!   `U_d = exp(−i Σ_k c_k σ_k ⊗ σ_k)`: the spectrum and the entanglement
//!   follow from trigonometric formulas in `(c1, c2, c3)` alone
//!   ([`canonical`]).
//!
//! Every nontrivial path is verified against the other: extraction is only
//! accepted when the closed-form spectrum of the extracted class vector
//! reproduces the SVD spectrum of the input, and the analysis entry point
//! checks the rank/entanglement bounds (Schmidt number 1, 2 or 4 — never 3;
//! `E ≤ 1/2` for rank 2; `E ≤ 3/4` always).
//!
//! [`cavity`] works one concrete physical source of such a gate: the
//! dispersive two-atom cavity interaction whose effective evolution is the
//! `(c1, 0, 0)` family, swept through its entanglement arc.
//!
//! # Quick start
//!
//! ```
//! use opentangle::{matrix::gates, schmidt};
//!
//! let report = schmidt::analyze(&gates::cnot()).unwrap();
//! assert_eq!(report.schmidt_number, 2);
//! assert!((report.entanglement - 0.5).abs() < 1e-12);
//! ```
//!
//! The `opentangle` binary exposes the same machinery as subcommands
//! (`analyze`, `canonical`, `sweep-fig1`, `sweep-fig2`, `sweep-fig3`,
//! `table1`); see the crate README and `examples/` for entry points.

// Tolerance gates are written `!(defect <= tol)` rather than `defect > tol`
// so that a NaN defect fails closed; the `partial_cmp` form clippy suggests
// would bury that intent.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod canonical;
pub mod cavity;
pub mod cli;
pub mod kak;
pub mod matrix;
pub mod schmidt;

pub use canonical::{CanonicalParams, SchmidtSpectrum};
pub use matrix::{Mat2, Mat4, C64};
pub use schmidt::OperatorAnalysis;

/// Unitarity gate for core analysis entry points: `‖U·U† − I‖_F` must not
/// exceed this before spectra or class vectors are extracted.
pub const UNITARY_TOL: f64 = 1e-9;

/// Looser unitarity gate applied to matrices read from external files, where
/// entries have typically survived a decimal round trip.
pub const INPUT_UNITARY_TOL: f64 = 1e-6;

/// Hermiticity gate for the eigensolver: `‖A − A†‖_F` relative to `‖A‖_F`.
pub const HERMITIAN_TOL: f64 = 1e-9;

/// Residual bound on eigenpairs produced by the Jacobi solver,
/// `‖A·v − λ·v‖ ≤ EIG_TOL` for unit `v` on matrices of Frobenius norm ≲ 4.
pub const EIG_TOL: f64 = 1e-10;

/// Off-diagonal mass threshold (relative to `‖A‖_F`, floored at 1) at which
/// the cyclic Jacobi iteration declares convergence.
pub const JACOBI_OFFDIAG_TOL: f64 = 1e-14;

/// Rank cutoff for the Schmidt number: coefficients above
/// `RANK_TOL · s_max` count as nonzero.
pub const RANK_TOL: f64 = 1e-9;

/// How negative a closed-form squared coefficient may come out before it is
/// an error rather than roundoff to clamp to zero.
pub const CLAMP_TOL: f64 = 1e-12;

/// Acceptance bound for class-vector extraction: the closed-form spectrum of
/// the candidate must match the SVD spectrum of the input this closely.
pub const KAK_VERIFY_TOL: f64 = 1e-8;

/// Everything that can go wrong in the library layer.
///
/// Variants carry the measured defect and the bound it violated, so callers
/// (and the CLI's exit-code mapping) can report *how* bad the input was, not
/// just that it was bad.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A matrix failed its unitarity gate.
    #[error("matrix is not unitary: ‖U·U† − I‖_F = {defect:.3e} exceeds {tol:.1e}")]
    NotUnitary { defect: f64, tol: f64 },

    /// The eigensolver was handed a matrix with a Hermitian defect above tolerance.
    #[error("matrix is not Hermitian: ‖A − A†‖_F = {defect:.3e} exceeds {tol:.1e} (relative)")]
    NotHermitian { defect: f64, tol: f64 },

    /// An operator-Schmidt spectrum with exactly three nonzero coefficients
    /// was measured — impossible for a unitary, so the input (or the
    /// arithmetic) is broken in a way worth surfacing loudly.
    #[error(
        "operator-Schmidt rank 3 measured (spectrum {spectrum:?}); \
         no two-qubit unitary has exactly three Schmidt coefficients"
    )]
    SchmidtNumberThree { spectrum: [f64; 4] },

    /// No image of the given class vector under the chamber symmetry group
    /// landed in the Weyl chamber (only reachable for non-finite input).
    #[error("class vector ({c1}, {c2}, {c3}) could not be reduced to the Weyl chamber")]
    NotReducible { c1: f64, c2: f64, c3: f64 },

    /// Class-vector extraction ran out of mixing angles without producing a
    /// candidate whose closed-form spectrum matches the input's spectrum.
    #[error(
        "class-vector extraction failed: best spectrum mismatch {best_defect:.3e} \
         exceeds {tol:.1e}"
    )]
    ExtractionFailed { best_defect: f64, tol: f64 },

    /// An internal invariant was violated; indicates a bug in this crate, not
    /// bad input. The message names the invariant.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
