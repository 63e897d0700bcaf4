//! Dense 2×2 and 4×4 complex matrices, sized for two-qubit work.
//!
//! Everything in this crate lives in dimension 2 or 4, so the matrix types
//! are fixed-size, `Copy`, row-major arrays — no allocation, no generic
//! dimension plumbing. Qubit ordering follows the usual tensor convention:
//! the first factor is the high bit, so `kron(a, b)` places `a` on the qubit
//! whose basis index contributes 2 and `b` on the one contributing 1, and
//! the computational basis of [`Mat4`] reads `|00⟩, |01⟩, |10⟩, |11⟩`.
//!
//! The submodules hold the numerical kernels the rest of the crate leans
//! on: a cyclic Jacobi eigensolver for Hermitian 4×4 matrices ([`eig`]), a
//! one-sided Jacobi singular-value routine ([`svd`]), and seeded
//! Haar-distributed unitary sampling ([`haar`]).

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

pub mod eig;
pub mod gates;
pub mod haar;
pub(crate) mod svd;

pub use eig::hermitian_eigenvalues;
pub use haar::{haar_random_unitary2, haar_random_unitary4};

/// Complex double — the only scalar type used anywhere in the crate.
pub type C64 = num_complex::Complex64;

/// Shorthand constructor, because `C64::new(…)` everywhere drowns the math.
pub const fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

const ZERO: C64 = c64(0.0, 0.0);
const ONE: C64 = c64(1.0, 0.0);

/// 2×2 complex matrix (single-qubit operator).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    rows: [[C64; 2]; 2],
}

/// 4×4 complex matrix (two-qubit operator).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4 {
    rows: [[C64; 4]; 4],
}

impl Mat2 {
    pub const fn from_rows(rows: [[C64; 2]; 2]) -> Self {
        Self { rows }
    }

    pub fn zeros() -> Self {
        Self::from_rows([[ZERO; 2]; 2])
    }

    pub fn identity() -> Self {
        Self::from_rows([[ONE, ZERO], [ZERO, ONE]])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros();
        for i in 0..2 {
            for j in 0..2 {
                out.rows[i][j] = self.rows[j][i].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> C64 {
        self.rows[0][0] + self.rows[1][1]
    }

    pub fn det(&self) -> C64 {
        self.rows[0][0] * self.rows[1][1] - self.rows[0][1] * self.rows[1][0]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.rows
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `‖self·self† − I‖_F`, the distance from the unitary group.
    pub fn unitarity_defect(&self) -> f64 {
        (*self * self.adjoint() - Self::identity()).frobenius_norm()
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }
}

impl Mat4 {
    pub const fn from_rows(rows: [[C64; 4]; 4]) -> Self {
        Self { rows }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut out = Self::zeros();
        for i in 0..4 {
            for j in 0..4 {
                out.rows[i][j] = f(i, j);
            }
        }
        out
    }

    pub fn zeros() -> Self {
        Self::from_rows([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { ONE } else { ZERO })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.rows[j][i])
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|i, j| self.rows[i][j].conj())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.rows[j][i].conj())
    }

    pub fn scale(&self, z: C64) -> Self {
        Self::from_fn(|i, j| z * self.rows[i][j])
    }

    pub fn trace(&self) -> C64 {
        (0..4).map(|i| self.rows[i][i]).sum()
    }

    /// Determinant by cofactor expansion along the first row. Fine at this
    /// size; nothing here needs a numerically fancier method.
    pub fn det(&self) -> C64 {
        let m = &self.rows;
        let det3 = |r: [usize; 3], c: [usize; 3]| -> C64 {
            m[r[0]][c[0]] * (m[r[1]][c[1]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[1]])
                - m[r[0]][c[1]] * (m[r[1]][c[0]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[0]])
                + m[r[0]][c[2]] * (m[r[1]][c[0]] * m[r[2]][c[1]] - m[r[1]][c[1]] * m[r[2]][c[0]])
        };
        let rows = [1, 2, 3];
        let cols = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];
        let mut det = ZERO;
        let mut sign = 1.0;
        for j in 0..4 {
            det += c64(sign, 0.0) * m[0][j] * det3(rows, cols[j]);
            sign = -sign;
        }
        det
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.rows
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Frobenius distance `‖self − other‖_F`.
    pub fn distance(&self, other: &Self) -> f64 {
        (*self - *other).frobenius_norm()
    }

    /// Largest entrywise deviation from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.rows[i][j] - other.rows[i][j]).norm());
            }
        }
        worst
    }

    /// `‖self·self† − I‖_F`, the distance from the unitary group.
    pub fn unitarity_defect(&self) -> f64 {
        (*self * self.adjoint() - Self::identity()).frobenius_norm()
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }

    /// `‖self − self†‖_F`, the distance from Hermitian symmetry.
    pub fn hermitian_defect(&self) -> f64 {
        (*self - self.adjoint()).frobenius_norm()
    }
}

impl Index<(usize, usize)> for Mat2 {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.rows[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat2 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.rows[i][j]
    }
}

impl Index<(usize, usize)> for Mat4 {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.rows[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.rows[i][j]
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let mut out = Mat2::zeros();
        for i in 0..2 {
            for j in 0..2 {
                out.rows[i][j] = self.rows[i][0] * rhs.rows[0][j] + self.rows[i][1] * rhs.rows[1][j];
            }
        }
        out
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        let mut out = Mat2::zeros();
        for i in 0..2 {
            for j in 0..2 {
                out.rows[i][j] = self.rows[i][j] - rhs.rows[i][j];
            }
        }
        out
    }
}

impl Mul for Mat4 {
    type Output = Mat4;
    fn mul(self, rhs: Mat4) -> Mat4 {
        let mut out = Mat4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = ZERO;
                for k in 0..4 {
                    acc += self.rows[i][k] * rhs.rows[k][j];
                }
                out.rows[i][j] = acc;
            }
        }
        out
    }
}

impl Add for Mat4 {
    type Output = Mat4;
    fn add(self, rhs: Mat4) -> Mat4 {
        Mat4::from_fn(|i, j| self.rows[i][j] + rhs.rows[i][j])
    }
}

impl Sub for Mat4 {
    type Output = Mat4;
    fn sub(self, rhs: Mat4) -> Mat4 {
        Mat4::from_fn(|i, j| self.rows[i][j] - rhs.rows[i][j])
    }
}

impl fmt::Display for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            for (j, z) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{:+.4}{:+.4}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Kronecker product: `kron(a, b)[(2i+k, 2j+l)] = a[(i,j)] · b[(k,l)]`.
///
/// With this layout `kron(a, I) ⊗ kron(I, b)` acts as `a` on the first
/// qubit and `b` on the second, matching the `|q1 q2⟩` basis order of
/// [`Mat4`].
pub fn kron(a: &Mat2, b: &Mat2) -> Mat4 {
    Mat4::from_fn(|r, c| a[(r / 2, c / 2)] * b[(r % 2, c % 2)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_layout_places_first_factor_on_high_bit() {
        // X ⊗ I flips the first qubit: |00⟩ ↔ |10⟩, |01⟩ ↔ |11⟩.
        let xi = kron(&gates::pauli_x(), &Mat2::identity());
        assert_eq!(xi[(2, 0)], ONE);
        assert_eq!(xi[(3, 1)], ONE);
        assert_eq!(xi[(0, 0)], ZERO);
        // I ⊗ X flips the second: |00⟩ ↔ |01⟩.
        let ix = kron(&Mat2::identity(), &gates::pauli_x());
        assert_eq!(ix[(1, 0)], ONE);
        assert_eq!(ix[(2, 3)], ONE);
    }

    #[test]
    fn pauli_algebra_via_kron() {
        // (σy ⊗ σy)² = I, and tr(σa ⊗ σb) = tr σa · tr σb = 0.
        let yy = kron(&gates::pauli_y(), &gates::pauli_y());
        assert!(yy * yy == Mat4::identity() || (yy * yy).distance(&Mat4::identity()) < 1e-15);
        assert!(yy.trace().norm() < 1e-15);
    }

    #[test]
    fn standard_gates_are_unitary() {
        for g in [gates::cnot(), gates::swap(), gates::iswap(), Mat4::identity()] {
            assert!(g.is_unitary(1e-15));
        }
    }

    #[test]
    fn cnot_determinant_is_minus_one() {
        // CNOT permutes two basis vectors (one transposition): det = −1.
        let d = gates::cnot().det();
        assert!((d - c64(-1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn adjoint_reverses_products() {
        let a = haar_random_unitary4(11);
        let b = haar_random_unitary4(12);
        assert!((a * b).adjoint().distance(&(b.adjoint() * a.adjoint())) < 1e-13);
    }

    #[test]
    fn determinant_is_multiplicative_on_unitaries() {
        let a = haar_random_unitary4(5);
        let b = haar_random_unitary4(6);
        let lhs = (a * b).det();
        let rhs = a.det() * b.det();
        assert!((lhs - rhs).norm() < 1e-12);
        assert!((a.det().norm() - 1.0).abs() < 1e-12);
    }
}
