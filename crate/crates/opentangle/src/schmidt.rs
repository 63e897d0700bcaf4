//! Operator-Schmidt decomposition of a two-qubit gate, numerically.
//!
//! The Schmidt coefficients of `U = Σ_l s_l A_l ⊗ B_l` are the singular
//! values of the *reshuffled* matrix `R(U)`: the rearrangement that groups
//! `U`'s indices by subsystem instead of by (row, column). Concretely, with
//! two-qubit indices written as bit pairs,
//!
//! ```text
//! R[2i+j, 2k+l] = U[2i+k, 2j+l]   —   row ↦ first-qubit indices (i, j),
//!                                      column ↦ second-qubit indices (k, l).
//! ```
//!
//! Reshuffling is linear and involutive, and it sends a product operator
//! `a ⊗ b` to the rank-1 matrix `vec(a)·vec(b)ᵀ`; singular values of `R(U)`
//! are therefore exactly the Schmidt coefficients, with Σ s² = ‖U‖²_F = 4.
//!
//! Everything else in this module is bookkeeping on top of that one fact:
//! the spectrum ([`schmidt_spectrum_svd`], via a one-sided Jacobi SVD of
//! `R`), the Schmidt *number* (nonzero count at a relative cutoff), the
//! linear-entropy functional, and the all-in-one [`analyze`] entry point,
//! which also enforces the rank/entanglement classification every two-qubit
//! unitary must obey:
//!
//! | Schmidt number | E range        |
//! |---------------:|----------------|
//! | 1              | exactly 0      |
//! | 2              | (0, 1/2]       |
//! | 3              | *impossible*   |
//! | 4              | (0, 3/4]       |

use crate::canonical::SchmidtSpectrum;
use crate::kak;
use crate::matrix::{svd, Mat4};
use crate::{CanonicalParams, Error, RANK_TOL, UNITARY_TOL};

/// Slack applied when checking measured entanglement against the rank-class
/// ceilings above: genuine violations are bugs, so the window is tight.
const CLASS_BOUND_SLACK: f64 = 1e-9;

/// Everything [`analyze`] can tell you about one gate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorAnalysis {
    /// Operator-Schmidt coefficients, descending.
    pub spectrum: SchmidtSpectrum,
    /// Count of coefficients above the relative rank cutoff: 1, 2 or 4.
    pub schmidt_number: usize,
    /// Linear-entropy operator entanglement `1 − Σ s⁴/16`.
    pub entanglement: f64,
    /// Weyl-chamber class vector, when extraction succeeds. `None` only for
    /// inputs admitted under a tolerance looser than the extraction gate
    /// (see [`analyze_with_tolerance`]).
    pub canonical: Option<CanonicalParams>,
}

/// Index regrouping described in the module docs: `R[2i+j, 2k+l] = U[2i+k, 2j+l]`.
pub fn reshuffle(u: &Mat4) -> Mat4 {
    Mat4::from_fn(|r, c| {
        let (i, j) = (r / 2, r % 2);
        let (k, l) = (c / 2, c % 2);
        u[(2 * i + k, 2 * j + l)]
    })
}

/// Schmidt coefficients of a unitary, as singular values of its reshuffle —
/// the oracle route, sharing no arithmetic with the closed form.
///
/// The input must be unitary within [`UNITARY_TOL`](crate::UNITARY_TOL)
/// (use [`analyze_with_tolerance`] when a looser gate is wanted). The
/// singular values come from one-sided Jacobi orthogonalization of the
/// reshuffle's columns rather than from eigenvalues of the formed Gram
/// matrix `R·R†`: forming the Gram squares the spectrum and floors
/// exact-zero coefficients near `√ε·‖R‖ ≈ 1e-8`, which the 1e-9 rank cutoff
/// must be able to see through. (The Gram route survives in the test suite
/// as an independent cross-check on everything above that floor.)
///
/// ```
/// use opentangle::matrix::gates;
/// use opentangle::schmidt::schmidt_spectrum_svd;
///
/// let s = schmidt_spectrum_svd(&gates::swap()).unwrap();
/// assert!(s.values().iter().all(|x| (x - 1.0).abs() < 1e-12));
/// ```
pub fn schmidt_spectrum_svd(u: &Mat4) -> Result<SchmidtSpectrum, Error> {
    let defect = u.unitarity_defect();
    if !(defect <= UNITARY_TOL) {
        return Err(Error::NotUnitary {
            defect,
            tol: UNITARY_TOL,
        });
    }
    spectrum_ungated(u)
}

/// The spectrum computation itself, no unitarity gate — for callers that
/// have already applied one of their own.
pub(crate) fn spectrum_ungated(u: &Mat4) -> Result<SchmidtSpectrum, Error> {
    let values = svd::singular_values(&reshuffle(u))?;
    Ok(SchmidtSpectrum::from_values(values))
}

/// Number of Schmidt coefficients that count as nonzero: those above
/// [`RANK_TOL`](crate::RANK_TOL) *relative to the largest coefficient*. The
/// relative cutoff keeps the answer scale-free; for unitaries the largest
/// coefficient is at least 1, so the absolute threshold is never smaller
/// than 1e-9.
pub fn schmidt_number(spectrum: &SchmidtSpectrum) -> usize {
    let cutoff = RANK_TOL * spectrum[0];
    spectrum.values().iter().filter(|&&s| s > cutoff).count()
}

/// Linear-entropy operator entanglement `E = 1 − Σ s⁴ / 16 ∈ [0, 3/4]`.
///
/// `E = 0` exactly when the gate is a product of locals (spectrum
/// `(2,0,0,0)`), and `E = 3/4` exactly when the spectrum is flat
/// `(1,1,1,1)`.
pub fn linear_entropy(spectrum: &SchmidtSpectrum) -> f64 {
    1.0 - spectrum.values().iter().map(|s| s.powi(4)).sum::<f64>() / 16.0
}

/// Largest entanglement a gate of the given Schmidt number can carry:
/// 0, 1/2 or 3/4. (Rank 3 cannot occur; it shares the global 3/4 ceiling
/// here so the function is total.)
pub fn entanglement_ceiling(schmidt_number: usize) -> f64 {
    match schmidt_number {
        0 | 1 => 0.0,
        2 => 0.5,
        _ => 0.75,
    }
}

/// Full operator-entanglement analysis of a two-qubit gate, gated at the
/// standard [`UNITARY_TOL`](crate::UNITARY_TOL).
///
/// Beyond computing the spectrum/number/entanglement triple, this checks the
/// classification table: a measured Schmidt number of 3 is rejected as
/// [`Error::SchmidtNumberThree`] (no unitary has one — seeing it means the
/// input defect or the arithmetic broke something), and an entanglement
/// outside the ceiling for the measured rank is reported as an internal
/// error rather than returned as fact.
///
/// ```
/// use opentangle::matrix::gates;
/// use opentangle::schmidt::analyze;
///
/// let report = analyze(&gates::cnot()).unwrap();
/// assert_eq!(report.schmidt_number, 2);
/// assert!((report.entanglement - 0.5).abs() < 1e-12);
/// let c = report.canonical.unwrap();
/// assert!((c.c1 - std::f64::consts::FRAC_PI_4).abs() < 1e-7);
/// ```
pub fn analyze(u: &Mat4) -> Result<OperatorAnalysis, Error> {
    analyze_with_tolerance(u, UNITARY_TOL)
}

/// [`analyze`] with a caller-chosen unitarity gate, for inputs that have
/// survived a decimal round trip (the CLI admits files at 1e-6).
///
/// The spectrum, Schmidt number and entanglement degrade gracefully with the
/// input defect. Class-vector extraction does not — it keeps its strict
/// internal gate — so for inputs that pass only the loose gate the
/// `canonical` field comes back `None` instead of a low-quality answer.
pub fn analyze_with_tolerance(u: &Mat4, unitary_tol: f64) -> Result<OperatorAnalysis, Error> {
    let defect = u.unitarity_defect();
    if !(defect <= unitary_tol) {
        return Err(Error::NotUnitary {
            defect,
            tol: unitary_tol,
        });
    }

    let spectrum = spectrum_ungated(u)?;
    let n = schmidt_number(&spectrum);
    if n == 3 {
        return Err(Error::SchmidtNumberThree {
            spectrum: spectrum.values(),
        });
    }

    let entanglement = linear_entropy(&spectrum);
    let ceiling = entanglement_ceiling(n);
    let in_class = if n <= 1 {
        entanglement.abs() <= CLASS_BOUND_SLACK
    } else {
        entanglement >= -CLASS_BOUND_SLACK && entanglement <= ceiling + CLASS_BOUND_SLACK
    };
    if !in_class {
        return Err(Error::Internal(format!(
            "Schmidt number {n} with entanglement {entanglement:.12} \
             outside its ceiling {ceiling}"
        )));
    }

    Ok(OperatorAnalysis {
        spectrum,
        schmidt_number: n,
        entanglement,
        canonical: kak::extract_class_vector(u).ok(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{build_ud, schmidt_coefficients_closed};
    use crate::matrix::{
        gates, haar_random_unitary2, haar_random_unitary4, kron,
    };
    use proptest::prelude::*;
    use rand::{RngExt, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{FRAC_PI_4, SQRT_2};

    #[test]
    fn reshuffle_index_convention_is_pinned() {
        let u = haar_random_unitary4(3);
        let r = reshuffle(&u);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        assert_eq!(r[(2 * i + j, 2 * k + l)], u[(2 * i + k, 2 * j + l)]);
                    }
                }
            }
        }
    }

    #[test]
    fn reshuffle_is_an_involution() {
        for seed in 0..50 {
            let u = haar_random_unitary4(seed);
            assert_eq!(reshuffle(&reshuffle(&u)), u);
        }
    }

    #[test]
    fn product_operators_reshuffle_to_rank_one() {
        for seed in 0..50 {
            let ab = kron(&haar_random_unitary2(seed), &haar_random_unitary2(seed + 1000));
            let s = schmidt_spectrum_svd(&ab).unwrap();
            // ‖a‖_F = ‖b‖_F = √2, so the lone coefficient is 2. The zeros
            // must come out at rounding level — far below the rank cutoff —
            // or product gates would stop counting as Schmidt number 1.
            assert!((s[0] - 2.0).abs() < 1e-13, "seed {seed}: {s}");
            assert!(s[1] < 1e-13, "seed {seed}: {s}");
            assert_eq!(schmidt_number(&s), 1);
        }
    }

    #[test]
    fn cnot_gram_eigenvalues_are_two_two_zero_zero() {
        let r = reshuffle(&gates::cnot());
        let vals =
            crate::matrix::hermitian_eigenvalues(&(r * r.adjoint())).unwrap();
        for (got, want) in vals.iter().zip([2.0, 2.0, 0.0, 0.0]) {
            assert!((got - want).abs() < 1e-12, "{vals:?}");
        }
    }

    #[test]
    fn landmark_spectra() {
        let cases: [(Mat4, [f64; 4]); 4] = [
            (Mat4::identity(), [2.0, 0.0, 0.0, 0.0]),
            (gates::cnot(), [SQRT_2, SQRT_2, 0.0, 0.0]),
            (gates::swap(), [1.0, 1.0, 1.0, 1.0]),
            (gates::iswap(), [1.0, 1.0, 1.0, 1.0]),
        ];
        for (u, want) in cases {
            let s = schmidt_spectrum_svd(&u).unwrap();
            for i in 0..4 {
                assert!((s[i] - want[i]).abs() < 1e-10, "want {want:?}, got {s}");
            }
        }
    }

    #[test]
    fn svd_route_agrees_with_closed_form_across_parameter_space() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..500 {
            let p = CanonicalParams::new(
                rng.random_range(-8.0..8.0),
                rng.random_range(-8.0..8.0),
                rng.random_range(-8.0..8.0),
            );
            let svd = schmidt_spectrum_svd(&build_ud(&p)).unwrap();
            let closed = schmidt_coefficients_closed(&p);
            assert!(
                svd.max_abs_diff(&closed) < 1e-9,
                "{p}: svd {svd} vs closed {closed}"
            );
        }
    }

    #[test]
    fn spectrum_is_invariant_under_local_gates() {
        for seed in 0..50u64 {
            let u = haar_random_unitary4(seed);
            let before = schmidt_spectrum_svd(&u).unwrap();
            let left = kron(&haar_random_unitary2(4 * seed), &haar_random_unitary2(4 * seed + 1));
            let right = kron(&haar_random_unitary2(4 * seed + 2), &haar_random_unitary2(4 * seed + 3));
            let after = schmidt_spectrum_svd(&(left * u * right)).unwrap();
            assert!(before.max_abs_diff(&after) < 1e-9, "seed {seed}");
        }
    }

    #[test]
    fn analyze_classifies_the_landmarks() {
        let id = analyze(&Mat4::identity()).unwrap();
        assert_eq!(id.schmidt_number, 1);
        assert!(id.entanglement.abs() < 1e-12);
        assert!(id.canonical.unwrap().max_abs_diff(&CanonicalParams::new(0.0, 0.0, 0.0)) < 1e-7);

        let cnot = analyze(&gates::cnot()).unwrap();
        assert_eq!(cnot.schmidt_number, 2);
        assert!((cnot.entanglement - 0.5).abs() < 1e-12);
        assert!(
            cnot.canonical
                .unwrap()
                .max_abs_diff(&CanonicalParams::new(FRAC_PI_4, 0.0, 0.0))
                < 1e-7
        );

        let swap = analyze(&gates::swap()).unwrap();
        assert_eq!(swap.schmidt_number, 4);
        assert!((swap.entanglement - 0.75).abs() < 1e-12);
        assert!(
            swap.canonical
                .unwrap()
                .max_abs_diff(&CanonicalParams::new(FRAC_PI_4, FRAC_PI_4, FRAC_PI_4))
                < 1e-7
        );
    }

    #[test]
    fn analyze_rejects_non_unitary_input() {
        let shrunk = Mat4::from_fn(|i, j| {
            if i == j {
                crate::matrix::c64(0.9, 0.0)
            } else {
                crate::matrix::c64(0.0, 0.0)
            }
        });
        let err = analyze(&shrunk).unwrap_err();
        assert!(matches!(err, Error::NotUnitary { .. }));
    }

    #[test]
    fn gray_zone_inputs_keep_spectrum_but_lose_canonical() {
        // Perturb CNOT by ~1e-7: fails the 1e-9 gate, passes 1e-6.
        let mut u = gates::cnot();
        u[(0, 0)] += crate::matrix::c64(1e-7, 0.0);
        assert!(matches!(analyze(&u), Err(Error::NotUnitary { .. })));

        let report = analyze_with_tolerance(&u, 1e-6).unwrap();
        assert_eq!(report.schmidt_number, 2);
        assert!((report.entanglement - 0.5).abs() < 1e-6);
        assert!(report.canonical.is_none());
    }

    #[test]
    fn schmidt_number_over_haar_samples_is_never_three() {
        for seed in 0..200u64 {
            let report = analyze(&haar_random_unitary4(seed)).unwrap();
            assert!(
                matches!(report.schmidt_number, 1 | 2 | 4),
                "seed {seed}: {}",
                report.schmidt_number
            );
            assert!((report.spectrum.squared_sum() - 4.0).abs() < 1e-9);
            assert!(report.entanglement <= 0.75 + 1e-12);
            assert!(report.entanglement >= 0.0 - 1e-12);
        }
    }

    #[test]
    fn maximal_entanglement_pins_the_flat_spectrum() {
        // Forward: a flat spectrum gives E = 3/4 on the nose.
        let flat = schmidt_spectrum_svd(&gates::swap()).unwrap();
        assert!((linear_entropy(&flat) - 0.75).abs() < 1e-12);

        // Reverse: E within 1e-9 of 3/4 forces the spectrum within 1e-4 of
        // flat — only 1e-4, because E is quartically flat at its maximum.
        // Probe along (c, c, c) approaching the SWAP corner, where
        // E = 3/4 − ¾·sin⁴(π/2 − 2c)·(…): x = sin(2(π/4 − c)) controls both.
        let x = 0.0060f64; // E defect ≈ 0.75·x⁴ ≈ 9.7e-10, just inside 1e-9
        let c = FRAC_PI_4 - x.asin() / 2.0;
        let p = CanonicalParams::new(c, c, c);
        let s = schmidt_spectrum_svd(&build_ud(&p)).unwrap();
        let e = linear_entropy(&s);
        assert!(e >= 0.75 - 1e-9, "probe missed the E window: {e}");
        for i in 0..4 {
            assert!((s[i] - 1.0).abs() <= 1e-4, "{s}");
        }
    }

    proptest! {
        /// Linear entropy of any admissible spectrum stays under the global
        /// ceiling. (Spectra are realized as actual gates so the invariant
        /// is tested on the true domain, not on arbitrary 4-vectors.)
        #[test]
        fn entanglement_never_exceeds_three_quarters(
            c1 in -8.0..8.0f64, c2 in -8.0..8.0f64, c3 in -8.0..8.0f64,
        ) {
            let s = schmidt_spectrum_svd(&build_ud(&CanonicalParams::new(c1, c2, c3))).unwrap();
            prop_assert!(linear_entropy(&s) <= 0.75 + 1e-12);
        }
    }
}
