//! The canonical interaction family and its closed-form invariants.
//!
//! Up to single-qubit rotations before and after, every two-qubit unitary is
//! one member of the three-parameter family
//!
//! ```text
//! U_d(c1, c2, c3) = exp(−i (c1·σx⊗σx + c2·σy⊗σy + c3·σz⊗σz)),
//! ```
//!
//! and the triple `(c1, c2, c3)` — the *class vector* — pins down everything
//! about the gate that local operations cannot change. The three summands
//! commute, so `U_d` has an explicit matrix ([`build_ud`]), and its
//! operator-Schmidt structure reduces to trigonometry: the four coefficients
//! ([`schmidt_coefficients_closed`]) and the linear-entropy operator
//! entanglement ([`entanglement_closed`]) are evaluated here without ever
//! touching an SVD. The numerical route in [`crate::schmidt`] computes the
//! same quantities from the raw matrix; the two routes are developed
//! independently and cross-checked in the tests, which is the point.
//!
//! Class vectors are redundant: shifting any component by π/2, flipping
//! signs, and permuting components all yield locally equivalent gates. The
//! fundamental domain — the **Weyl chamber** `π/4 ≥ c1 ≥ c2 ≥ |c3|` — is
//! reached by [`reduce_to_weyl_chamber`], which searches the finite symmetry
//! orbit exhaustively and deterministically picks the representative with
//! `c3 ≥ 0`.
//!
//! Landmarks, for orientation:
//!
//! | class vector        | gate class | spectrum            | E    |
//! |---------------------|-----------|---------------------|------|
//! | (0, 0, 0)           | identity  | (2, 0, 0, 0)        | 0    |
//! | (π/4, 0, 0)         | CNOT      | (√2, √2, 0, 0)      | 1/2  |
//! | (π/4, π/4, 0)       | iSWAP     | (1, 1, 1, 1)        | 3/4  |
//! | (π/4, π/4, π/4)     | SWAP      | (1, 1, 1, 1)        | 3/4  |

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use std::fmt;
use std::ops::Index;

use crate::matrix::{c64, Mat4, C64};
use crate::{Error, CLAMP_TOL};

/// A class vector `(c1, c2, c3)`: the interaction content of a two-qubit
/// gate in radians. Plain data — any real triple is a valid set of
/// coordinates; [`reduce_to_weyl_chamber`] maps it to the fundamental domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalParams {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl CanonicalParams {
    pub const fn new(c1: f64, c2: f64, c3: f64) -> Self {
        Self { c1, c2, c3 }
    }

    /// Membership in the Weyl chamber `π/4 ≥ c1 ≥ c2 ≥ |c3|`, tested with
    /// exact comparisons — callers who want slack should apply it themselves.
    pub fn in_weyl_chamber(&self) -> bool {
        FRAC_PI_4 >= self.c1 && self.c1 >= self.c2 && self.c2 >= self.c3.abs()
    }

    /// Largest componentwise deviation from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.c1 - other.c1)
            .abs()
            .max((self.c2 - other.c2).abs())
            .max((self.c3 - other.c3).abs())
    }
}

impl fmt::Display for CanonicalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:.9}, {:.9}, {:.9})", self.c1, self.c2, self.c3)
    }
}

/// An operator-Schmidt spectrum: four coefficients, descending, nonnegative,
/// with Σ s² = 4 for a unitary. Construction sites clamp roundoff-negative
/// squares (within [`CLAMP_TOL`](crate::CLAMP_TOL)) and sort, so a value of
/// this type is always well-formed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchmidtSpectrum {
    values: [f64; 4],
}

impl SchmidtSpectrum {
    /// Build from squared coefficients (the form both routes naturally
    /// produce). Squares more negative than `−CLAMP_TOL` indicate a bug, not
    /// roundoff, and are refused.
    pub(crate) fn from_squares(squares: [f64; 4]) -> Result<Self, Error> {
        let mut values = [0.0; 4];
        for (v, &sq) in values.iter_mut().zip(&squares) {
            if sq < -CLAMP_TOL {
                return Err(Error::Internal(format!(
                    "squared Schmidt coefficient {sq:.3e} below −{CLAMP_TOL:.1e}"
                )));
            }
            *v = sq.max(0.0).sqrt();
        }
        values.sort_by(|a, b| b.total_cmp(a));
        Ok(Self { values })
    }

    /// Build from already-nonnegative coefficients (the SVD route).
    pub(crate) fn from_values(mut values: [f64; 4]) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self { values }
    }

    /// The coefficients, descending.
    pub fn values(&self) -> [f64; 4] {
        self.values
    }

    /// Σ s² — equals 4 for any unitary.
    pub fn squared_sum(&self) -> f64 {
        self.values.iter().map(|s| s * s).sum()
    }

    /// Largest componentwise deviation from `other` (both are sorted, so
    /// this is a multiset distance).
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl Index<usize> for SchmidtSpectrum {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.values[i]
    }
}

impl fmt::Display for SchmidtSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:.9}, {:.9}, {:.9}, {:.9})",
            self.values[0], self.values[1], self.values[2], self.values[3]
        )
    }
}

/// The canonical gate `U_d(c1, c2, c3)` as an explicit matrix in the
/// computational basis `|00⟩, |01⟩, |10⟩, |11⟩`.
///
/// The σz⊗σz term contributes pure phases `e^{∓i c3}` on the even/odd
/// parity sectors; the σx⊗σx + σy⊗σy part rotates within the two
/// antidiagonal 2×2 blocks by the angles `c1 ∓ c2`:
///
/// ```text
/// ⎡ e^{−ic3}·cos(c1−c2)              −i e^{−ic3}·sin(c1−c2) ⎤   on |00⟩,|11⟩
/// ⎣ −i e^{−ic3}·sin(c1−c2)            e^{−ic3}·cos(c1−c2)   ⎦
///
/// ⎡ e^{+ic3}·cos(c1+c2)              −i e^{+ic3}·sin(c1+c2) ⎤   on |01⟩,|10⟩
/// ⎣ −i e^{+ic3}·sin(c1+c2)            e^{+ic3}·cos(c1+c2)   ⎦
/// ```
///
/// ```
/// use opentangle::canonical::{build_ud, CanonicalParams};
/// use opentangle::matrix::Mat4;
///
/// let id = build_ud(&CanonicalParams::new(0.0, 0.0, 0.0));
/// assert!(id.distance(&Mat4::identity()) < 1e-15);
/// ```
pub fn build_ud(p: &CanonicalParams) -> Mat4 {
    let z = c64(0.0, 0.0);
    let em = C64::from_polar(1.0, -p.c3); // e^{−i c3}, even-parity sector
    let ep = C64::from_polar(1.0, p.c3); // e^{+i c3}, odd-parity sector
    let cm = c64((p.c1 - p.c2).cos(), 0.0);
    let sm = c64(0.0, -(p.c1 - p.c2).sin()); // −i·sin(c1 − c2)
    let cp = c64((p.c1 + p.c2).cos(), 0.0);
    let sp = c64(0.0, -(p.c1 + p.c2).sin()); // −i·sin(c1 + c2)

    Mat4::from_rows([
        [em * cm, z, z, em * sm],
        [z, ep * cp, ep * sp, z],
        [z, ep * sp, ep * cp, z],
        [em * sm, z, z, em * cm],
    ])
}

/// Operator-Schmidt coefficients of `U_d(c1, c2, c3)` in closed form.
///
/// In the normalized Pauli basis the expansion coefficients of `U_d` are
/// products of the sector cosines/sines; collecting magnitudes gives, with
/// `α = c1 − c2`, `β = c1 + c2`, `C = cos 2c3`:
///
/// ```text
/// s² = cos²β + cos²α ± 2C·cosβ·cosα     (one sign each)
/// s² = sin²β + sin²α ± 2C·sinβ·sinα
/// ```
///
/// The four squares sum to 4 identically. Roundoff can push a square a hair
/// negative near spectrum zeros; such values are clamped (see
/// [`SchmidtSpectrum`]).
///
/// ```
/// use opentangle::canonical::{schmidt_coefficients_closed, CanonicalParams};
/// use std::f64::consts::FRAC_PI_4;
///
/// // The CNOT class: two equal coefficients √2, two zeros.
/// let s = schmidt_coefficients_closed(&CanonicalParams::new(FRAC_PI_4, 0.0, 0.0));
/// let sq2 = std::f64::consts::SQRT_2;
/// assert!((s[0] - sq2).abs() < 1e-12 && (s[1] - sq2).abs() < 1e-12);
/// assert!(s[2] < 1e-12 && s[3] < 1e-12);
/// ```
pub fn schmidt_coefficients_closed(p: &CanonicalParams) -> SchmidtSpectrum {
    let alpha = p.c1 - p.c2;
    let beta = p.c1 + p.c2;
    let cc = (2.0 * p.c3).cos();
    let (ca, sa) = (alpha.cos(), alpha.sin());
    let (cb, sb) = (beta.cos(), beta.sin());

    let even = cb * cb + ca * ca; // cos-sector mass
    let odd = sb * sb + sa * sa; // sin-sector mass
    let squares = [
        even + 2.0 * cc * cb * ca,
        odd + 2.0 * cc * sb * sa,
        odd - 2.0 * cc * sb * sa,
        even - 2.0 * cc * cb * ca,
    ];
    // The clamp branch is unreachable for finite inputs (each square is a
    // perfect |x ± y|² up to roundoff); from_squares still guards it.
    SchmidtSpectrum::from_squares(squares).expect("closed-form squares are nonnegative")
}

/// Linear-entropy operator entanglement of `U_d(c1, c2, c3)` in closed form.
///
/// This is *not* computed from [`schmidt_coefficients_closed`]; it is the
/// independent trigonometric expression
///
/// ```text
/// E = 1 − ¼ [ 1 − sin²β cos²β − sin²α cos²α
///             + (1 + 2cos²2c3)(sin²β sin²α + cos²β cos²α) ]
/// ```
///
/// (`α = c1 − c2`, `β = c1 + c2`), kept separate so tests can confirm the
/// two routes agree rather than trivially reuse one another. `E` ranges over
/// `[0, 3/4]`, hitting 0 exactly on the local class and 3/4 on the
/// SWAP/iSWAP classes.
///
/// ```
/// use opentangle::canonical::{entanglement_closed, CanonicalParams};
/// use std::f64::consts::FRAC_PI_4;
///
/// let e = entanglement_closed(&CanonicalParams::new(FRAC_PI_4, FRAC_PI_4, FRAC_PI_4));
/// assert!((e - 0.75).abs() < 1e-15);
/// ```
pub fn entanglement_closed(p: &CanonicalParams) -> f64 {
    let alpha = p.c1 - p.c2;
    let beta = p.c1 + p.c2;
    let (sa2, ca2) = (alpha.sin().powi(2), alpha.cos().powi(2));
    let (sb2, cb2) = (beta.sin().powi(2), beta.cos().powi(2));
    let c2c3 = (2.0 * p.c3).cos().powi(2);

    1.0 - 0.25 * (1.0 - sb2 * cb2 - sa2 * ca2 + (1.0 + 2.0 * c2c3) * (sb2 * sa2 + cb2 * ca2))
}

/// Entanglement along the one-axis (Schmidt-rank ≤ 2) family
/// `U_d(0, 0, c3)`: `E = ½ sin² 2c3`, a π/2-periodic arc from 0 up to the
/// rank-2 ceiling of 1/2 and back.
///
/// ```
/// use opentangle::canonical::entanglement_sch2_c3;
/// use std::f64::consts::FRAC_PI_8;
///
/// assert!((entanglement_sch2_c3(FRAC_PI_8) - 0.25).abs() < 1e-15);
/// ```
pub fn entanglement_sch2_c3(c3: f64) -> f64 {
    let s = (2.0 * c3).sin();
    0.5 * s * s
}

/// All 6 permutations of three indices, for the orbit search below.
const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Map an arbitrary class vector to its Weyl-chamber representative.
///
/// The symmetries available are π/2 shifts, sign flips, and permutations of
/// the components — all spectrum-preserving. Composing shift and flip gives
/// the per-component reflection `x → π/2 − x`; so after normalizing each
/// component into `[0, π/2)` the full orbit is the finite set
/// {`r_i` or `π/2 − r_i`} × (6 permutations), 48 candidates, which is
/// searched exhaustively for chamber members. Ties (the chamber boundary)
/// are broken by taking the lexicographically greatest member, making the
/// result deterministic, idempotent, and always signed `c3 ≥ 0`.
///
/// Fails only for non-finite input, as [`Error::NotReducible`].
///
/// ```
/// use opentangle::canonical::{reduce_to_weyl_chamber, CanonicalParams};
/// use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, FRAC_PI_6};
///
/// // A pure σz⊗σz interaction is CNOT-class once reduced.
/// let p = reduce_to_weyl_chamber(&CanonicalParams::new(0.0, 0.0, FRAC_PI_4)).unwrap();
/// assert_eq!((p.c1, p.c2, p.c3), (FRAC_PI_4, 0.0, 0.0));
///
/// // Over-rotation folds back.
/// let q = reduce_to_weyl_chamber(&CanonicalParams::new(FRAC_PI_3, 0.0, 0.0)).unwrap();
/// assert!((q.c1 - FRAC_PI_6).abs() < 1e-15 && q.c2 == 0.0 && q.c3 == 0.0);
/// ```
pub fn reduce_to_weyl_chamber(p: &CanonicalParams) -> Result<CanonicalParams, Error> {
    let raw = [p.c1, p.c2, p.c3];
    let not_reducible = || Error::NotReducible {
        c1: p.c1,
        c2: p.c2,
        c3: p.c3,
    };
    if raw.iter().any(|x| !x.is_finite()) {
        return Err(not_reducible());
    }

    // Per-component candidates after [0, π/2) normalization: the residue and
    // its reflection. (Both lie in [0, π/2]; at least one is ≤ π/4.)
    let folded: [[f64; 2]; 3] = raw.map(|x| {
        let r = x.rem_euclid(FRAC_PI_2);
        [r, FRAC_PI_2 - r]
    });

    let mut best: Option<[f64; 3]> = None;
    for mask in 0..8usize {
        let v = [
            folded[0][mask & 1],
            folded[1][(mask >> 1) & 1],
            folded[2][(mask >> 2) & 1],
        ];
        for perm in PERMS {
            let t = [v[perm[0]], v[perm[1]], v[perm[2]]];
            let in_chamber = t[0] <= FRAC_PI_4 && t[0] >= t[1] && t[1] >= t[2] && t[2] >= 0.0;
            if in_chamber && best.is_none_or(|b| t > b) {
                best = Some(t);
            }
        }
    }

    // For finite input the per-component minimum sorted descending is always
    // a chamber member, so `best` is populated; the error arm is defensive.
    // `+ 0.0` canonicalizes the −0.0 that `rem_euclid` lets through.
    best.map(|t| CanonicalParams::new(t[0] + 0.0, t[1] + 0.0, t[2] + 0.0))
        .ok_or_else(not_reducible)
}
