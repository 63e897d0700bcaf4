//! Cyclic Jacobi eigensolver for Hermitian 4×4 matrices.
//!
//! At dimension 4 the classical Jacobi iteration is hard to beat: it is
//! a page of code, unconditionally stable, and — the property the magic-basis
//! extraction in [`crate::kak`] actually depends on — it resolves *degenerate*
//! eigenvalues exactly rather than approximately, because a rotation that
//! zeroes the pivot inside a degenerate block is still an exact orthogonal
//! move. Krylov or QR-shift machinery would buy nothing here.
//!
//! One sweep visits every off-diagonal pivot `(p, q)`, `p < q`, and applies
//! a unitary plane rotation `J` chosen to zero that pivot:
//!
//! ```text
//! J[p][p] = c        J[p][q] =  s·e^{iφ}
//! J[q][p] = −s·e^{−iφ}   J[q][q] = c
//! ```
//!
//! with `e^{iφ}` the phase of the pivot, `t = s/c` the smaller root of
//! `t² − 2τt − 1 = 0`, `τ = (a_pp − a_qq) / 2|a_pq|` — the textbook real
//! rotation after the pivot's phase is factored out. The iteration converges
//! quadratically; the off-diagonal *mass* (root of the summed squared
//! magnitudes above the diagonal) is driven below
//! [`JACOBI_OFFDIAG_TOL`](crate::JACOBI_OFFDIAG_TOL) relative to the matrix
//! scale, in well under [`MAX_SWEEPS`] sweeps.

use crate::matrix::{c64, Mat4};
use crate::{Error, HERMITIAN_TOL, JACOBI_OFFDIAG_TOL};

/// Hard cap on Jacobi sweeps. Quadratic convergence at n = 4 lands in
/// 5–8 sweeps; hitting this cap means the input was not Hermitian after all
/// and is reported as an internal error.
pub const MAX_SWEEPS: usize = 30;

/// Eigenvalues *and* eigenvectors, kept crate-private: external callers get
/// the simpler [`hermitian_eigenvalues`], while the KAK extraction needs the
/// vectors (columns of `vectors`, aligned with `values`, descending).
#[derive(Debug, Clone)]
pub(crate) struct EigenDecomposition {
    pub values: [f64; 4],
    /// Unitary matrix whose column `j` is the eigenvector for `values[j]`.
    pub vectors: Mat4,
    /// Sweeps actually used — exposed so tests can pin the convergence margin.
    #[cfg_attr(not(test), allow(dead_code))]
    pub sweeps: usize,
}

/// Eigenvalues of a Hermitian 4×4 matrix, sorted descending.
///
/// The input must be Hermitian to within
/// [`HERMITIAN_TOL`](crate::HERMITIAN_TOL) (Frobenius, relative to the
/// matrix norm floored at 1); anything worse is rejected as
/// [`Error::NotHermitian`] rather than silently symmetrized.
///
/// ```
/// use opentangle::matrix::{c64, hermitian_eigenvalues, Mat4};
///
/// let z = c64(0.0, 0.0);
/// let diag = Mat4::from_rows([
///     [c64(3.0, 0.0), z, z, z],
///     [z, c64(1.0, 0.0), z, z],
///     [z, z, c64(4.0, 0.0), z],
///     [z, z, z, c64(1.5, 0.0)],
/// ]);
/// assert_eq!(hermitian_eigenvalues(&diag).unwrap(), [4.0, 3.0, 1.5, 1.0]);
/// ```
pub fn hermitian_eigenvalues(a: &Mat4) -> Result<[f64; 4], Error> {
    Ok(eigen_hermitian(a)?.values)
}

pub(crate) fn eigen_hermitian(a: &Mat4) -> Result<EigenDecomposition, Error> {
    let scale = a.frobenius_norm().max(1.0);
    let defect = a.hermitian_defect();
    if !(defect <= HERMITIAN_TOL * scale) {
        return Err(Error::NotHermitian {
            defect,
            tol: HERMITIAN_TOL,
        });
    }

    // Work on the exactly-Hermitian part; the defect just rejected is the
    // only thing this discards.
    let mut m = Mat4::from_fn(|i, j| (a[(i, j)] + a[(j, i)].conj()) * c64(0.5, 0.0));
    let mut v = Mat4::identity();
    let stop = JACOBI_OFFDIAG_TOL * scale;

    let mut sweeps = 0;
    while off_diagonal_mass(&m) > stop {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Internal(format!(
                "Jacobi failed to converge in {MAX_SWEEPS} sweeps \
                 (off-diagonal mass {:.3e})",
                off_diagonal_mass(&m)
            )));
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                rotate(&mut m, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    // Diagonal is real up to the converged off-mass; sort descending and
    // carry the eigenvector columns along.
    let mut order = [0usize, 1, 2, 3];
    let diag = [m[(0, 0)].re, m[(1, 1)].re, m[(2, 2)].re, m[(3, 3)].re];
    order.sort_by(|&i, &j| diag[j].total_cmp(&diag[i]));

    let values = [
        diag[order[0]],
        diag[order[1]],
        diag[order[2]],
        diag[order[3]],
    ];
    let vectors = Mat4::from_fn(|i, j| v[(i, order[j])]);
    Ok(EigenDecomposition {
        values,
        vectors,
        sweeps,
    })
}

/// Root of the summed squared magnitudes strictly above the diagonal — the
/// quantity the convergence threshold is stated on.
fn off_diagonal_mass(m: &Mat4) -> f64 {
    let mut sum = 0.0;
    for p in 0..3 {
        for q in (p + 1)..4 {
            sum += m[(p, q)].norm_sqr();
        }
    }
    sum.sqrt()
}

/// One plane rotation zeroing pivot `(p, q)`; updates `m ← J† m J`, `v ← v·J`.
fn rotate(m: &mut Mat4, v: &mut Mat4, p: usize, q: usize) {
    let pivot = m[(p, q)];
    let r = pivot.norm();
    if r <= 1e-300 {
        return;
    }
    let phase = pivot / c64(r, 0.0);
    let tau = (m[(p, p)].re - m[(q, q)].re) / (2.0 * r);
    let t = if tau >= 0.0 {
        -1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let cs = c64(c, 0.0);
    let sp = c64(s, 0.0) * phase;

    // Column update (right-multiplication by J) on m and v.
    for k in 0..4 {
        let (mkp, mkq) = (m[(k, p)], m[(k, q)]);
        m[(k, p)] = cs * mkp - sp.conj() * mkq;
        m[(k, q)] = sp * mkp + cs * mkq;
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = cs * vkp - sp.conj() * vkq;
        v[(k, q)] = sp * vkp + cs * vkq;
    }
    // Row update (left-multiplication by J†) on m.
    for k in 0..4 {
        let (mpk, mqk) = (m[(p, k)], m[(q, k)]);
        m[(p, k)] = cs * mpk - sp * mqk;
        m[(q, k)] = sp.conj() * mpk + cs * mqk;
    }
    // Pivot is now zero up to roundoff; pin it so the mass estimate is honest.
    m[(p, q)] = c64(0.0, 0.0);
    m[(q, p)] = c64(0.0, 0.0);
}
