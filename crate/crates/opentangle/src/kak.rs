//! Class-vector extraction: from a raw 4×4 unitary to Weyl-chamber
//! coordinates.
//!
//! The engine is the **magic basis** — the Bell frame in which local gates
//! look real. Conjugating by the fixed unitary [`MagicBasisTransform`]
//! turns any product of single-qubit gates (determinant normalized to 1)
//! into a *real orthogonal* matrix, while the canonical interaction
//! `U_d(c1, c2, c3)` becomes diagonal with unit-modulus entries
//! `e^{−iθ_j}`, the θ's being the four signed combinations `±c1 ± c2 ± c3`.
//! So in the magic frame an arbitrary gate factors as `m = O₁ · D · O₂`
//! (orthogonal × diagonal × orthogonal), and the symmetric product
//!
//! ```text
//! M = mᵀ m = O₂ᵀ · D² · O₂
//! ```
//!
//! discards the locals entirely: the eigenvalues of `M` are `e^{−2iθ_j}`,
//! and the θ's — hence the class vector — can be read off its spectrum.
//!
//! `M` is complex symmetric and unitary, which means its real and imaginary
//! parts are commuting real symmetric matrices. Rather than diagonalize them
//! simultaneously with special-case logic, [`extract_class_vector`] picks a
//! mixing angle φ and diagonalizes the single real symmetric matrix
//! `K = cos φ·Re M + sin φ·Im M` with the Jacobi solver; its eigenvectors
//! are eigenvectors of `M` itself unless φ accidentally makes two distinct
//! `M`-eigenvalues collide in `K`. That accident is detected cheaply — the
//! Rayleigh quotients `w ᵀM w` stop being eigenvalues, leaving a visible
//! residual — and handled by retrying with the next φ from a fixed list of
//! irrational angles (no rational multiple of π, so the structured phases
//! that arise here cannot collide twice in a row).
//!
//! Each candidate class vector is folded into the Weyl chamber and accepted
//! only if its closed-form Schmidt spectrum reproduces the SVD spectrum of
//! the input to [`KAK_VERIFY_TOL`](crate::KAK_VERIFY_TOL) — extraction is
//! never trusted on faith, every answer is certified against the
//! independent numerical route.

use crate::canonical::{reduce_to_weyl_chamber, schmidt_coefficients_closed, CanonicalParams};
use crate::matrix::eig::eigen_hermitian;
use crate::matrix::{c64, Mat4, C64};
use crate::schmidt::schmidt_spectrum_svd;
use crate::{Error, KAK_VERIFY_TOL, UNITARY_TOL};

/// Mixing angles tried when splitting `M`'s eigenvectors out of
/// `cos φ·Re M + sin φ·Im M`. All irrational and unrelated to π: an angle
/// collision `θ_i + θ_j ≡ 2φ (mod 2π)` at one entry cannot persist at the
/// next. The first angle almost always succeeds; the rest are insurance.
const MIXING_ANGLES: [f64; 8] = [
    0.577_215_664_901_532_9, // Euler–Mascheroni γ
    std::f64::consts::SQRT_2,
    std::f64::consts::LN_10,
    0.915_965_594_177_219,    // Catalan constant
    1.732_050_807_568_877_2,  // √3
    2.645_751_311_064_590_6,  // √7
    1.098_612_288_668_109_8,  // ln 3
    0.367_879_441_171_442_33, // 1/e
];

/// Accepted residual for `‖M·w − μ·w‖` when certifying a Jacobi eigenvector
/// of `K` as an eigenvector of `M` (both have unit operator norm, so the
/// scale-free bound is meaningful). Clean splits sit at ~1e-14; a φ
/// collision jumps to order one.
const RAYLEIGH_RESIDUAL_TOL: f64 = 1e-8;

/// Below this magnitude the (0,0) entry is not used to resolve the
/// fourth-root phase ambiguity in [`global_phase_normalize`].
const PHASE_PIVOT_TOL: f64 = 1e-12;

/// The fixed change of basis into the Bell ("magic") frame.
///
/// Columns, in order:
///
/// ```text
/// (|00⟩ + |11⟩)/√2,   −i(|00⟩ − |11⟩)/√2,
/// (|01⟩ − |10⟩)/√2,   −i(|01⟩ + |10⟩)/√2.
/// ```
///
/// Other phase conventions exist; this one is fixed here once and used
/// everywhere. Its defining property — the reason the whole module works —
/// is that `Q†(a ⊗ b)Q` is real orthogonal whenever `det a = det b = 1`,
/// while `Q†·U_d(c1,c2,c3)·Q = diag(e^{−iθ_1}, …, e^{−iθ_4})` with
///
/// ```text
/// θ_1 = c1 − c2 + c3,   θ_2 = −c1 + c2 + c3,
/// θ_3 = −(c1 + c2 + c3),   θ_4 = c1 + c2 − c3.
/// ```
#[derive(Debug, Clone)]
pub struct MagicBasisTransform {
    q: Mat4,
}

impl MagicBasisTransform {
    pub fn new() -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let (p, m, z) = (c64(s, 0.0), c64(-s, 0.0), c64(0.0, 0.0));
        let (ip, im) = (c64(0.0, s), c64(0.0, -s));
        Self {
            q: Mat4::from_rows([
                [p, im, z, z],
                [z, z, p, im],
                [z, z, m, im],
                [p, ip, z, z],
            ]),
        }
    }

    /// The basis-change matrix itself (unitary).
    pub fn matrix(&self) -> &Mat4 {
        &self.q
    }

    /// Conjugate a computational-basis operator into the magic frame:
    /// `Q† · u · Q`.
    pub fn to_magic_frame(&self, u: &Mat4) -> Mat4 {
        self.q.adjoint() * *u * self.q
    }
}

impl Default for MagicBasisTransform {
    fn default() -> Self {
        Self::new()
    }
}

/// Rescale a unitary to determinant 1, resolving the leftover fourth-root
/// ambiguity deterministically.
///
/// Dividing out `e^{i·arg(det u)/4}` (principal branch, arg ∈ (−π, π])
/// leaves four equally valid results differing by powers of `i`. When the
/// (0,0) entry is usably nonzero its phase is steered into `(−π/4, π/4]` —
/// exactly one of the four powers does that — so equal inputs up to global
/// phase produce the *same* output, not merely equivalent ones. (A gate
/// with a vanishing (0,0) entry keeps the principal-branch result; every
/// downstream use is invariant under the residual `i^k`.)
///
/// For exactly unitary input the result's determinant is 1 to ~1e-10; an
/// input admitted near the [`UNITARY_TOL`](crate::UNITARY_TOL) gate carries
/// its defect into the determinant at the same order.
///
/// ```
/// use opentangle::kak::global_phase_normalize;
/// use opentangle::matrix::{c64, Mat4};
///
/// let phase = c64(0.0, std::f64::consts::FRAC_PI_3).exp();
/// let v = global_phase_normalize(&Mat4::identity().scale(phase)).unwrap();
/// assert!(v.distance(&Mat4::identity()) < 1e-12);
/// ```
pub fn global_phase_normalize(u: &Mat4) -> Result<Mat4, Error> {
    let defect = u.unitarity_defect();
    if !(defect <= UNITARY_TOL) {
        return Err(Error::NotUnitary {
            defect,
            tol: UNITARY_TOL,
        });
    }

    let mut v = u.scale(C64::from_polar(1.0, -u.det().arg() / 4.0));
    let pivot = v[(0, 0)];
    if pivot.norm() > PHASE_PIVOT_TOL {
        for k in [c64(1.0, 0.0), c64(0.0, 1.0), c64(-1.0, 0.0), c64(0.0, -1.0)] {
            let a = (k * pivot).arg();
            if a > -std::f64::consts::FRAC_PI_4 && a <= std::f64::consts::FRAC_PI_4 {
                v = v.scale(k);
                break;
            }
        }
    }
    Ok(v)
}

/// Extract the Weyl-chamber class vector of a two-qubit gate.
///
/// Runs the magic-basis algorithm described in the module docs, then
/// *certifies* the result: the closed-form Schmidt spectrum of the candidate
/// must match the input's SVD spectrum within
/// [`KAK_VERIFY_TOL`](crate::KAK_VERIFY_TOL). A candidate that fails is
/// discarded and the next mixing angle tried; if the whole list is exhausted
/// the best spectral defect seen is reported in [`Error::ExtractionFailed`].
///
/// The returned parameters always satisfy the chamber inequalities
/// `π/4 ≥ c1 ≥ c2 ≥ c3 ≥ 0` and are invariant under global phases and
/// local dressing of the input.
///
/// ```
/// use opentangle::kak::extract_class_vector;
/// use opentangle::matrix::gates;
/// use std::f64::consts::FRAC_PI_4;
///
/// let p = extract_class_vector(&gates::cnot()).unwrap();
/// assert!((p.c1 - FRAC_PI_4).abs() < 1e-9);
/// assert!(p.c2.abs() < 1e-9 && p.c3.abs() < 1e-9);
/// ```
pub fn extract_class_vector(u: &Mat4) -> Result<CanonicalParams, Error> {
    let defect = u.unitarity_defect();
    if !(defect <= UNITARY_TOL) {
        return Err(Error::NotUnitary {
            defect,
            tol: UNITARY_TOL,
        });
    }

    // Independent certificate target, computed once up front.
    let target = schmidt_spectrum_svd(u)?;

    let v = global_phase_normalize(u)?;
    let m = MagicBasisTransform::new().to_magic_frame(&v);
    let mm = m.transpose() * m; // complex symmetric, unitary; locals gone

    let re = Mat4::from_fn(|i, j| c64(mm[(i, j)].re, 0.0));
    let im = Mat4::from_fn(|i, j| c64(mm[(i, j)].im, 0.0));

    let mut best_defect = f64::INFINITY;
    'angles: for phi in MIXING_ANGLES {
        let k = re.scale(c64(phi.cos(), 0.0)) + im.scale(c64(phi.sin(), 0.0));
        let Ok(eig) = eigen_hermitian(&k) else {
            continue; // unreachable: k is real symmetric by construction
        };

        // Rayleigh quotients of M over K's eigenvectors. If φ made two
        // distinct M-eigenvalues coincide in K, the vectors mix across
        // M-eigenspaces and the residual gives it away.
        let mut theta = [0.0f64; 4];
        for (j, th) in theta.iter_mut().enumerate() {
            let w: [C64; 4] = std::array::from_fn(|i| eig.vectors[(i, j)]);
            let mw: [C64; 4] =
                std::array::from_fn(|i| (0..4).map(|t| mm[(i, t)] * w[t]).sum());
            let mu: C64 = (0..4).map(|i| w[i].conj() * mw[i]).sum();
            let residual: f64 = (0..4)
                .map(|i| (mw[i] - mu * w[i]).norm_sqr())
                .sum::<f64>()
                .sqrt();
            if residual > RAYLEIGH_RESIDUAL_TOL {
                continue 'angles;
            }
            // μ_j = e^{−2iθ_j}; each θ is only defined mod π, and the
            // eigenvalue order is arbitrary — both ambiguities land inside
            // the Weyl orbit, so the chamber fold below absorbs them.
            *th = -mu.arg() / 2.0;
        }

        let candidate = CanonicalParams::new(
            (theta[0] + theta[3]) / 2.0,
            (theta[1] + theta[3]) / 2.0,
            (theta[0] + theta[1]) / 2.0,
        );
        let folded = reduce_to_weyl_chamber(&candidate)?;

        let spectrum_defect = schmidt_coefficients_closed(&folded).max_abs_diff(&target);
        if spectrum_defect <= KAK_VERIFY_TOL {
            return Ok(folded);
        }
        best_defect = best_defect.min(spectrum_defect);
    }

    Err(Error::ExtractionFailed {
        best_defect,
        tol: KAK_VERIFY_TOL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{build_ud, entanglement_closed};
    use crate::matrix::{gates, haar_random_unitary2, haar_random_unitary4, kron, Mat2};
    use crate::schmidt::analyze;
    use rand::{RngExt, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::FRAC_PI_4;

    /// A Haar 2×2 sample rescaled to determinant 1.
    fn special_local(seed: u64) -> Mat2 {
        let a = haar_random_unitary2(seed);
        let det = a.det();
        let root = C64::from_polar(1.0, det.arg() / 2.0);
        Mat2::from_rows([
            [a[(0, 0)] / root, a[(0, 1)] / root],
            [a[(1, 0)] / root, a[(1, 1)] / root],
        ])
    }

    fn random_chamber_point(rng: &mut ChaCha8Rng) -> CanonicalParams {
        // Uniform over the box, then folded — covers the chamber and its
        // boundary without fiddly rejection sampling.
        let p = CanonicalParams::new(
            rng.random_range(-8.0..8.0),
            rng.random_range(-8.0..8.0),
            rng.random_range(-8.0..8.0),
        );
        reduce_to_weyl_chamber(&p).unwrap()
    }

    #[test]
    fn magic_basis_is_unitary_with_pinned_columns() {
        let q = MagicBasisTransform::new();
        assert!(q.matrix().is_unitary(1e-15));
        let s = std::f64::consts::FRAC_1_SQRT_2;
        // Column 0 = (|00⟩+|11⟩)/√2, column 3 = −i(|01⟩+|10⟩)/√2.
        assert_eq!(q.matrix()[(0, 0)], c64(s, 0.0));
        assert_eq!(q.matrix()[(3, 0)], c64(s, 0.0));
        assert_eq!(q.matrix()[(1, 3)], c64(0.0, -s));
        assert_eq!(q.matrix()[(2, 3)], c64(0.0, -s));
    }

    #[test]
    fn locals_become_real_orthogonal_in_the_magic_frame() {
        let q = MagicBasisTransform::new();
        for seed in 0..50u64 {
            let local = kron(&special_local(seed), &special_local(seed + 500));
            let o = q.to_magic_frame(&local);
            let mut max_im = 0.0f64;
            for i in 0..4 {
                for j in 0..4 {
                    max_im = max_im.max(o[(i, j)].im.abs());
                }
            }
            assert!(max_im < 1e-9, "seed {seed}: imaginary part {max_im:.3e}");
            assert!((o * o.transpose()).distance(&Mat4::identity()) < 1e-9);
        }
    }

    #[test]
    fn canonical_gates_are_diagonal_in_the_magic_frame() {
        let q = MagicBasisTransform::new();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..50 {
            let p = CanonicalParams::new(
                rng.random_range(-3.0..3.0),
                rng.random_range(-3.0..3.0),
                rng.random_range(-3.0..3.0),
            );
            let d = q.to_magic_frame(&build_ud(&p));
            let thetas = [
                p.c1 - p.c2 + p.c3,
                -p.c1 + p.c2 + p.c3,
                -(p.c1 + p.c2 + p.c3),
                p.c1 + p.c2 - p.c3,
            ];
            for i in 0..4 {
                for j in 0..4 {
                    if i == j {
                        let want = C64::from_polar(1.0, -thetas[i]);
                        assert!((d[(i, i)] - want).norm() < 1e-12, "{p}");
                    } else {
                        assert!(d[(i, j)].norm() < 1e-12, "{p}: off-diag {i}{j}");
                    }
                }
            }
        }
    }

    #[test]
    fn phase_normalization_is_phase_blind_and_det_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for seed in 0..50u64 {
            let u = haar_random_unitary4(seed);
            let v = global_phase_normalize(&u).unwrap();
            assert!((v.det() - c64(1.0, 0.0)).norm() < 1e-10, "seed {seed}");

            let phase = C64::from_polar(1.0, rng.random_range(-3.0..3.0));
            let w = global_phase_normalize(&u.scale(phase)).unwrap();
            assert!(v.distance(&w) < 1e-12, "seed {seed}");
        }
    }

    #[test]
    fn phase_normalization_rejects_non_unitary_input() {
        let half = Mat4::identity().scale(c64(0.5, 0.0));
        assert!(matches!(
            global_phase_normalize(&half),
            Err(Error::NotUnitary { .. })
        ));
        assert!(matches!(
            extract_class_vector(&half),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn extraction_landmarks() {
        let cases: [(Mat4, (f64, f64, f64)); 4] = [
            (Mat4::identity(), (0.0, 0.0, 0.0)),
            (gates::cnot(), (FRAC_PI_4, 0.0, 0.0)),
            (gates::iswap(), (FRAC_PI_4, FRAC_PI_4, 0.0)),
            (gates::swap(), (FRAC_PI_4, FRAC_PI_4, FRAC_PI_4)),
        ];
        for (u, (c1, c2, c3)) in cases {
            let p = extract_class_vector(&u).unwrap();
            assert!(
                p.max_abs_diff(&CanonicalParams::new(c1, c2, c3)) < 1e-9,
                "got {p}, wanted ({c1}, {c2}, {c3})"
            );
        }
    }

    #[test]
    fn round_trip_through_build_ud_recovers_the_chamber_point() {
        let mut rng = ChaCha8Rng::seed_from_u64(1234);
        for i in 0..300 {
            let p = random_chamber_point(&mut rng);
            let got = extract_class_vector(&build_ud(&p)).unwrap();
            assert!(got.in_weyl_chamber());
            assert!(got.max_abs_diff(&p) < 1e-7, "case {i}: {p} → {got}");
        }
    }

    #[test]
    fn local_dressing_does_not_move_the_class_vector() {
        let mut rng = ChaCha8Rng::seed_from_u64(4321);
        for i in 0..100u64 {
            let p = random_chamber_point(&mut rng);
            let dressed = kron(&haar_random_unitary2(9000 + i), &haar_random_unitary2(9100 + i))
                * build_ud(&p)
                * kron(&haar_random_unitary2(9200 + i), &haar_random_unitary2(9300 + i));
            let got = extract_class_vector(&dressed).unwrap();
            assert!(got.max_abs_diff(&p) < 1e-7, "case {i}: {p} → {got}");
        }
    }

    #[test]
    fn extraction_is_global_phase_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for seed in 0..30u64 {
            let u = haar_random_unitary4(seed);
            let base = extract_class_vector(&u).unwrap();
            let phased = u.scale(C64::from_polar(1.0, rng.random_range(-3.0..3.0)));
            let again = extract_class_vector(&phased).unwrap();
            assert!(base.max_abs_diff(&again) < 1e-9, "seed {seed}");
        }
    }

    #[test]
    fn extracted_class_reproduces_measured_entanglement() {
        for seed in 0..200u64 {
            let u = haar_random_unitary4(seed);
            let report = analyze(&u).unwrap();
            let p = report.canonical.expect("extraction succeeds on unitaries");
            assert!(
                (entanglement_closed(&p) - report.entanglement).abs() < 1e-7,
                "seed {seed}"
            );
        }
    }
}
