//! Singular values of a complex 4×4 matrix by one-sided Jacobi.
//!
//! The Hestenes variant: rotate *pairs of columns* of the matrix itself
//! until all columns are mutually orthogonal, at which point the column
//! norms are the singular values. Each rotation is the unitary that
//! diagonalizes the 2×2 Hermitian Gram block of the chosen pair, so this is
//! the [`eig`](crate::matrix::eig) iteration applied implicitly — but never
//! actually *forming* `A†A`. That distinction is the whole point: forming
//! the Gram matrix squares the spectrum, so an exactly-zero singular value
//! resurfaces from its eigenvalues at √ε·‖A‖ ≈ 1e-8, far too coarse for a
//! 1e-9 rank cutoff. Working on the columns directly keeps zero modes at
//! true rounding level (~1e-16·‖A‖) and small nonzero ones at full
//! precision.

use crate::matrix::{Mat4, C64};
use crate::Error;

/// Cyclic sweeps before declaring failure; 4×4 inputs settle in 3–6.
const MAX_SWEEPS: usize = 30;

/// A column pair counts as orthogonal when `|⟨a_p, a_q⟩|` is below this
/// relative to `‖a_p‖·‖a_q‖`. Purely relative on purpose: the rounding
/// error in a computed inner product is itself bounded by a few ε times
/// `‖a_p‖·‖a_q‖`, so this criterion is reachable for *any* pair — including
/// ones involving a column that has decayed to rounding level — while an
/// absolute floor would freeze small columns before they are resolved
/// against each other.
const ORTHO_REL_TOL: f64 = 1e-14;

/// Singular values of `a`, sorted descending.
///
/// Backward-stable to `O(ε·‖a‖)` *absolutely*, including for singular
/// values that are exactly zero — the property the Schmidt-rank counting
/// depends on.
pub(crate) fn singular_values(a: &Mat4) -> Result<[f64; 4], Error> {
    let mut m = *a;

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..3 {
            for q in (p + 1)..4 {
                let (dp, dq, g) = gram_block(&m, p, q);
                let threshold = ORTHO_REL_TOL * (dp * dq).sqrt();
                if g.norm() <= threshold {
                    continue;
                }
                rotated = true;
                rotate_columns(&mut m, p, q, dp, dq, g);
            }
        }
        if !rotated {
            let mut values = [0.0; 4];
            for (j, v) in values.iter_mut().enumerate() {
                *v = (0..4).map(|k| m[(k, j)].norm_sqr()).sum::<f64>().sqrt();
            }
            values.sort_by(|x, y| y.total_cmp(x));
            return Ok(values);
        }
    }
    Err(Error::Internal(format!(
        "column orthogonalization did not converge in {MAX_SWEEPS} sweeps"
    )))
}

/// `(‖a_p‖², ‖a_q‖², ⟨a_p, a_q⟩)` for columns `p`, `q`.
fn gram_block(m: &Mat4, p: usize, q: usize) -> (f64, f64, C64) {
    let mut dp = 0.0;
    let mut dq = 0.0;
    let mut g = C64::new(0.0, 0.0);
    for k in 0..4 {
        dp += m[(k, p)].norm_sqr();
        dq += m[(k, q)].norm_sqr();
        g += m[(k, p)].conj() * m[(k, q)];
    }
    (dp, dq, g)
}

/// Right-multiply columns `p`, `q` by the 2×2 unitary that zeroes their
/// inner product: with `γ = ⟨a_p, a_q⟩ = |γ|e^{iφ}` and
/// `τ = (‖a_p‖² − ‖a_q‖²)/(2|γ|)`, the tangent solves `t² − 2τt − 1 = 0`
/// and the smaller-magnitude root keeps every rotation under 45°, which is
/// what makes the cyclic iteration converge.
fn rotate_columns(m: &mut Mat4, p: usize, q: usize, dp: f64, dq: f64, g: C64) {
    let phase = g / g.norm();
    let tau = (dp - dq) / (2.0 * g.norm());
    let t = if tau >= 0.0 {
        -1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // [a_p, a_q] ← [a_p, a_q] · [[c, s·e^{iφ}], [−s·e^{−iφ}, c]]
    let sp = phase * s;
    for k in 0..4 {
        let (mkp, mkq) = (m[(k, p)], m[(k, q)]);
        m[(k, p)] = mkp * c - mkq * sp.conj();
        m[(k, q)] = mkp * sp + mkq * c;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::eig::eigen_hermitian;
    use crate::matrix::{c64, gates, haar_random_unitary2, haar_random_unitary4, kron, Mat4};

    #[test]
    fn identity_and_swap_are_exact() {
        assert_eq!(singular_values(&Mat4::identity()).unwrap(), [1.0; 4]);
        assert_eq!(singular_values(&gates::swap()).unwrap(), [1.0; 4]);
    }

    #[test]
    fn diagonal_matrices_read_off_their_moduli() {
        let mut d = Mat4::zeros();
        for (j, v) in [3.0, -2.0, 0.5, 0.0].iter().enumerate() {
            d[(j, j)] = c64(0.0, *v); // phases must not matter
        }
        assert_eq!(singular_values(&d).unwrap(), [3.0, 2.0, 0.5, 0.0]);
    }

    #[test]
    fn zero_singular_values_come_out_at_rounding_level() {
        // Rank-1 outer products: u·v† has singular values (‖u‖‖v‖, 0, 0, 0).
        for seed in 0..100 {
            let u = haar_random_unitary4(seed);
            let v = haar_random_unitary4(seed + 500);
            let outer = Mat4::from_fn(|i, j| u[(i, 0)] * v[(j, 0)].conj());
            let s = singular_values(&outer).unwrap();
            assert!((s[0] - 1.0).abs() < 1e-13, "seed {seed}: s0 = {}", s[0]);
            // The decisive property: far below any rank threshold, not ~1e-8.
            assert!(s[1] < 1e-13, "seed {seed}: s1 = {}", s[1]);
        }
    }

    #[test]
    fn small_singular_values_are_resolved_to_full_precision() {
        // Diagonal (1, 1e-6, 1e-12, 0) conjugated by unitaries on both
        // sides; the Gram route would report the third value as ~1e-8.
        for seed in 0..50 {
            let planted = [1.0, 1e-6, 1e-12, 0.0];
            let u = haar_random_unitary4(seed);
            let v = haar_random_unitary4(seed + 77);
            let mut d = Mat4::zeros();
            for (j, val) in planted.iter().enumerate() {
                d[(j, j)] = c64(*val, 0.0);
            }
            let a = u * d * v;
            let s = singular_values(&a).unwrap();
            for (got, want) in s.iter().zip(planted) {
                assert!(
                    (got - want).abs() < 1e-14,
                    "seed {seed}: got {got:e}, want {want:e}"
                );
            }
        }
    }

    #[test]
    fn agrees_with_the_gram_eigenvalue_route_above_its_floor() {
        // The two routes share no code past the matrix type; where the Gram
        // route is trustworthy (values ≳ 1e-7) they must coincide.
        for seed in 0..100 {
            let a = kron(
                &haar_random_unitary2(seed),
                &haar_random_unitary2(seed + 1000),
            ) * haar_random_unitary4(seed + 2000);
            let s = singular_values(&a).unwrap();
            let gram = a * a.adjoint();
            let eig = eigen_hermitian(&gram).unwrap();
            for (j, (sj, ev)) in s.iter().zip(eig.values).enumerate() {
                let via_gram = ev.max(0.0).sqrt();
                if via_gram > 1e-7 {
                    assert!(
                        (sj - via_gram).abs() < 1e-9,
                        "seed {seed}, j = {j}: {sj} vs {via_gram}"
                    );
                }
            }
        }
    }

    #[test]
    fn unitary_input_gives_a_flat_spectrum() {
        for seed in 0..50 {
            let s = singular_values(&haar_random_unitary4(seed)).unwrap();
            for v in s {
                assert!((v - 1.0).abs() < 1e-12, "seed {seed}: {s:?}");
            }
        }
    }

    #[test]
    fn zero_matrix_converges_immediately() {
        assert_eq!(singular_values(&Mat4::zeros()).unwrap(), [0.0; 4]);
    }
}
