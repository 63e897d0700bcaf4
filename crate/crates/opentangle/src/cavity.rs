//! Worked physical example: the dispersive two-atom cavity interaction.
//!
//! Two atoms sitting far off-resonance in a common cavity mode (coupling
//! `g`, detuning `δ1`) stop exchanging real photons and instead acquire the
//! effective pairwise Hamiltonian
//!
//! ```text
//! H_eff = (λ/2) σx ⊗ σx,        λ = g²/δ1,
//! ```
//!
//! whose evolution after an interaction phase `λt` is
//!
//! ```text
//! U_eff(λt) = exp(−i·(λt/2)·σx⊗σx)
//!           = cos(λt/2)·I − i·sin(λt/2)·σx⊗σx.
//! ```
//!
//! In class-vector language this is the one-axis family `(λt/2, 0, 0)`
//! marching along an edge of the Weyl chamber: operator entanglement
//! `E = ½ sin²(λt)` breathes periodically between 0 and the Schmidt-rank-2
//! ceiling of 1/2 (reached at `λt = π/2`, where the gate is CNOT-class),
//! and the Schmidt number is 2 everywhere except the product-operator
//! instants `λt ≡ 0 (mod π)`.
//!
//! The module keeps its three views of that one curve deliberately separate
//! so they can check each other: the explicit matrix ([`u_eff`]), the exact
//! exponential of the Hamiltonian ([`verify_hamiltonian_exponential`]), and
//! the closed form cross-checked against the full numerical analysis at
//! every grid point ([`entanglement_trajectory`]).

use crate::matrix::{c64, gates, kron, Mat4};
use crate::schmidt::analyze;

/// Advisory margin for the regime checks below: "much larger" is read as a
/// factor of ten. Heuristic, not physics — the effective model is taken as
/// given either way.
const REGIME_MARGIN: f64 = 10.0;

/// The dispersive-coupling parameters: atom–cavity coupling `g` and
/// detuning `δ1`, both in angular-frequency units.
///
/// The derived effective atom–atom coupling is [`lambda`](Self::lambda)
/// `= g²/δ1`, exactly. Whether the parameters actually sit in the regime
/// where the effective model is trustworthy is *advisory*: the two flag
/// methods report it, nothing enforces it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveCoupling {
    pub g: f64,
    pub delta1: f64,
}

impl EffectiveCoupling {
    /// Panics if `delta1 == 0` — a zero detuning has no dispersive limit.
    pub fn new(g: f64, delta1: f64) -> Self {
        assert!(delta1 != 0.0, "dispersive coupling requires nonzero detuning");
        Self { g, delta1 }
    }

    /// The effective atom–atom coupling `λ = g²/δ1`.
    pub fn lambda(&self) -> f64 {
        self.g * self.g / self.delta1
    }

    /// Advisory: is the detuning large, `|δ1| ≫ |g|`? Large detuning is what
    /// suppresses real photon exchange with the cavity mode.
    pub fn large_detuning(&self) -> bool {
        self.delta1.abs() >= REGIME_MARGIN * self.g.abs()
    }

    /// Advisory: does a classical driving field of Rabi frequency `omega`
    /// dominate the induced coupling, `|Ω| ≫ |λ|`? (The driving field is a
    /// premise of the effective model, not a term in it, so `omega` is an
    /// argument rather than a field.)
    pub fn strong_driving(&self, omega: f64) -> bool {
        omega.abs() >= REGIME_MARGIN * self.lambda().abs()
    }
}

/// One sample of the entanglement trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolutionPoint {
    /// Interaction phase `λt`, radians.
    pub phase: f64,
    /// Operator entanglement `½ sin²(λt)` (cross-checked numerically).
    pub entanglement: f64,
    /// Operator-Schmidt number: 2, dipping to 1 at `λt ≡ 0 (mod π)`.
    pub schmidt_number: usize,
}

/// The effective evolution operator `U_eff(λt)`, written out directly:
/// `cos(λt/2)` on the diagonal, `−i·sin(λt/2)` on the antidiagonal.
///
/// This is entrywise the canonical gate `build_ud(λt/2, 0, 0)` — asserted in
/// the tests, not assumed here; the explicit form is kept independent so the
/// identity stays a checked fact rather than a definition.
///
/// ```
/// use opentangle::cavity::u_eff;
/// use opentangle::matrix::Mat4;
///
/// assert!(u_eff(0.0).distance(&Mat4::identity()) < 1e-15);
/// ```
pub fn u_eff(phase: f64) -> Mat4 {
    let c = c64((phase / 2.0).cos(), 0.0);
    let s = c64(0.0, -(phase / 2.0).sin());
    let z = c64(0.0, 0.0);
    Mat4::from_rows([
        [c, z, z, s],
        [z, c, s, z],
        [z, s, c, z],
        [s, z, z, c],
    ])
}

/// Does the exact exponential of `H_eff` reproduce [`u_eff`] at this phase?
///
/// Because `(σx⊗σx)² = I`, the exponential truncates exactly:
/// `exp(−iθ·σx⊗σx) = cos θ·I − i·sin θ·(σx⊗σx)` with `θ = phase/2`. The
/// comparison is built from the Pauli matrices themselves, sharing no code
/// with [`u_eff`], and passes within 1e-10 for every real phase.
pub fn verify_hamiltonian_exponential(phase: f64) -> bool {
    let xx = kron(&gates::pauli_x(), &gates::pauli_x());
    let theta = phase / 2.0;
    let exponential =
        Mat4::identity().scale(c64(theta.cos(), 0.0)) + xx.scale(c64(0.0, -theta.sin()));
    exponential.max_abs_diff(&u_eff(phase)) <= 1e-10
}

/// Sample the entanglement trajectory on a uniform inclusive grid
/// `λt ∈ [0, phase_max]` with `steps` points (`steps ≥ 2`; panics below).
///
/// Every point is computed twice — closed form `½ sin²(λt)` and full
/// numerical analysis of `u_eff(λt)` — and the two must agree within 1e-9;
/// the reported entanglement is the closed form, the Schmidt number comes
/// from the numerical analysis.
///
/// ```
/// use opentangle::cavity::entanglement_trajectory;
/// use std::f64::consts::PI;
///
/// let pts = entanglement_trajectory(PI, 3);
/// let e: Vec<f64> = pts.iter().map(|p| p.entanglement).collect();
/// assert!(e[0].abs() < 1e-12 && (e[1] - 0.5).abs() < 1e-12 && e[2].abs() < 1e-12);
/// assert_eq!(pts[1].schmidt_number, 2);
/// ```
pub fn entanglement_trajectory(phase_max: f64, steps: usize) -> Vec<EvolutionPoint> {
    assert!(steps >= 2, "a trajectory needs at least its two endpoints");
    let denom = (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            let phase = phase_max * (i as f64 / denom);
            let closed = 0.5 * phase.sin().powi(2);
            let report = analyze(&u_eff(phase))
                .expect("u_eff is exactly unitary for every real phase");
            assert!(
                (report.entanglement - closed).abs() <= 1e-9,
                "closed form and numerical analysis disagree at λt = {phase}: \
                 {closed} vs {}",
                report.entanglement
            );
            EvolutionPoint {
                phase,
                entanglement: closed,
                schmidt_number: report.schmidt_number,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{build_ud, CanonicalParams};
    use crate::matrix::gates;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    #[test]
    fn effective_coupling_and_regime_flags() {
        // Powers of two, so g²/δ1 is exact and can be pinned with `==`.
        let c = EffectiveCoupling::new(0.125, 2.0);
        assert_eq!(c.lambda(), 0.0078125);
        assert!(c.large_detuning()); // 2.0 ≥ 10·0.125
        assert!(c.strong_driving(0.1)); // 0.1 ≥ 10·0.0078125
        assert!(!c.strong_driving(0.01));

        let tight = EffectiveCoupling::new(0.5, 1.0);
        assert!(!tight.large_detuning());
        // Negative detuning is physical; λ just changes sign.
        assert_eq!(EffectiveCoupling::new(0.25, -2.0).lambda(), -0.03125);
    }

    #[test]
    #[should_panic(expected = "nonzero detuning")]
    fn zero_detuning_is_refused() {
        let _ = EffectiveCoupling::new(0.1, 0.0);
    }

    #[test]
    fn u_eff_matches_the_canonical_family_on_a_grid() {
        for k in 0..100 {
            let phase = 2.0 * PI * k as f64 / 99.0;
            let direct = u_eff(phase);
            let canonical = build_ud(&CanonicalParams::new(phase / 2.0, 0.0, 0.0));
            assert!(
                direct.max_abs_diff(&canonical) <= 1e-12,
                "λt = {phase}: deviation {:.3e}",
                direct.max_abs_diff(&canonical)
            );
        }
    }

    #[test]
    fn quarter_period_is_cnot_class() {
        let report = analyze(&u_eff(FRAC_PI_2)).unwrap();
        assert_eq!(report.schmidt_number, 2);
        assert!((report.entanglement - 0.5).abs() < 1e-12);
        let p = report.canonical.unwrap();
        assert!(p.max_abs_diff(&CanonicalParams::new(FRAC_PI_4, 0.0, 0.0)) < 1e-7);
    }

    #[test]
    fn half_period_is_a_product_operator_again() {
        // u_eff(π) = −i·σx⊗σx: entangling power gone, though the gate isn't I.
        let u = u_eff(PI);
        let xx = kron(&gates::pauli_x(), &gates::pauli_x()).scale(c64(0.0, -1.0));
        assert!(u.max_abs_diff(&xx) < 1e-15);
        let report = analyze(&u).unwrap();
        assert_eq!(report.schmidt_number, 1);
        assert!(report.entanglement.abs() < 1e-12);
    }

    #[test]
    fn exponential_identity_holds_at_the_pinned_phases() {
        for phase in [0.0, FRAC_PI_2, 1.2345] {
            assert!(verify_hamiltonian_exponential(phase), "phase {phase}");
        }
        // And at an unremarkable spread of others.
        for k in 0..50 {
            let phase = -7.0 + 14.0 * k as f64 / 49.0;
            assert!(verify_hamiltonian_exponential(phase), "phase {phase}");
        }
    }

    #[test]
    fn three_point_trajectory_hits_the_arc_landmarks() {
        let pts = entanglement_trajectory(PI, 3);
        assert_eq!(pts.len(), 3);
        let phases: Vec<f64> = pts.iter().map(|p| p.phase).collect();
        assert!((phases[1] - FRAC_PI_2).abs() < 1e-15 && (phases[2] - PI).abs() < 1e-15);
        assert!(pts[0].entanglement.abs() < 1e-12);
        assert!((pts[1].entanglement - 0.5).abs() < 1e-12);
        assert!(pts[2].entanglement.abs() < 1e-12);
        assert_eq!(
            pts.iter().map(|p| p.schmidt_number).collect::<Vec<_>>(),
            vec![1, 2, 1]
        );
    }

    #[test]
    fn trajectory_is_pi_periodic() {
        let pts = entanglement_trajectory(2.0 * PI, 9); // grid step π/4
        for i in 0..5 {
            assert!(
                (pts[i].entanglement - pts[i + 4].entanglement).abs() < 1e-12,
                "points {i} and {}",
                i + 4
            );
        }
    }

    #[test]
    fn dense_trajectory_peaks_at_one_half_with_rank_two_interior() {
        let pts = entanglement_trajectory(PI, 101);
        let peak = pts
            .iter()
            .max_by(|a, b| a.entanglement.total_cmp(&b.entanglement))
            .unwrap();
        assert!((peak.entanglement - 0.5).abs() < 1e-9);
        assert!((peak.phase - FRAC_PI_2).abs() < 1e-12); // 101 points ⇒ π/2 on-grid

        for p in &pts {
            let endpoint = p.phase.abs() < 1e-12 || (p.phase - PI).abs() < 1e-12;
            assert_eq!(p.schmidt_number, if endpoint { 1 } else { 2 }, "λt = {}", p.phase);
        }
    }

    #[test]
    #[should_panic(expected = "at least its two endpoints")]
    fn trajectory_refuses_degenerate_grids() {
        let _ = entanglement_trajectory(PI, 1);
    }
}
