//! Small dense complex matrices (K ≤ 16) and the Hermitian/unitary newtypes
//! used throughout the symbol calculus.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance on the Hermitian symmetry residual at construction.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Frobenius tolerance on `U*U - I` for unitary matrices.
pub const UNITARY_TOL: f64 = 1e-10;

pub type C64 = Complex64;

pub const C_ZERO: C64 = Complex64::new(0.0, 0.0);
pub const C_ONE: C64 = Complex64::new(1.0, 0.0);

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        CMatrix { dim, data: vec![C_ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = C_ONE;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::invalid("matrix rows must form a square"));
        }
        let mut data = Vec::with_capacity(dim * dim);
        for r in rows {
            data.extend_from_slice(r);
        }
        Ok(CMatrix { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch in matrix product");
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == C_ZERO {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Matrix-vector product into a caller-provided buffer.
    pub fn apply_into(&self, v: &[C64], out: &mut [C64]) {
        let n = self.dim;
        debug_assert_eq!(v.len(), n);
        debug_assert_eq!(out.len(), n);
        for i in 0..n {
            let mut acc = C_ZERO;
            let row = &self.data[i * n..(i + 1) * n];
            for (a, x) in row.iter().zip(v) {
                acc += a * x;
            }
            out[i] = acc;
        }
    }

    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        let mut out = vec![C_ZERO; self.dim];
        self.apply_into(v, &mut out);
        out
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, c: C64) -> CMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= c;
        }
        out
    }

    pub fn scale_re(&self, c: f64) -> CMatrix {
        self.scale(C64::new(c, 0.0))
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// max_{i,j} |a_ij - conj(a_ji)|.
    pub fn hermitian_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                let r = (self[(i, j)] - self[(j, i)].conj()).norm();
                worst = worst.max(r);
            }
        }
        worst
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = C64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.dim + j]
    }
}

/// Hermitian matrix. Construction validates the symmetry residual against
/// an absolute tolerance of 1e-12 and then stores the symmetrized part, so
/// the invariant holds exactly afterwards.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HermitianMatrix(CMatrix);

impl HermitianMatrix {
    pub fn new(m: CMatrix) -> Result<Self> {
        let residual = m.hermitian_residual();
        if residual > HERMITIAN_TOL {
            return Err(Error::NotHermitian { residual, tol: HERMITIAN_TOL });
        }
        Ok(Self::symmetrize(m))
    }

    /// Symmetrize without validating; for matrices Hermitian by construction.
    pub(crate) fn symmetrize(m: CMatrix) -> Self {
        let n = m.dim();
        let mut s = m;
        for i in 0..n {
            s[(i, i)] = C64::new(s[(i, i)].re, 0.0);
            for j in (i + 1)..n {
                let avg = 0.5 * (s[(i, j)] + s[(j, i)].conj());
                s[(i, j)] = avg;
                s[(j, i)] = avg.conj();
            }
        }
        HermitianMatrix(s)
    }

    pub fn zeros(dim: usize) -> Self {
        HermitianMatrix(CMatrix::zeros(dim))
    }

    pub fn identity(dim: usize) -> Self {
        HermitianMatrix(CMatrix::identity(dim))
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        let mut m = CMatrix::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = C64::new(*d, 0.0);
        }
        HermitianMatrix(m)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    #[inline]
    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix {
        self.0
    }

    /// Real linear combination a*self + b*other (Hermitian by closure).
    pub fn lin_comb(&self, a: f64, other: &HermitianMatrix, b: f64) -> HermitianMatrix {
        HermitianMatrix(self.0.scale_re(a).add(&other.0.scale_re(b)))
    }

    pub fn real_trace(&self) -> f64 {
        self.0.trace().re
    }
}

impl std::ops::Deref for HermitianMatrix {
    type Target = CMatrix;
    fn deref(&self) -> &CMatrix {
        &self.0
    }
}

/// Unitary matrix; construction validates ‖U*U − I‖_F ≤ 1e-10.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix(CMatrix);

impl UnitaryMatrix {
    pub fn new(m: CMatrix) -> Result<Self> {
        let res = m.adjoint().mul(&m).sub(&CMatrix::identity(m.dim())).frobenius_norm();
        if res > UNITARY_TOL {
            return Err(Error::invalid(format!(
                "not unitary: ‖U*U − I‖ = {res:.3e} exceeds {UNITARY_TOL:.1e}"
            )));
        }
        Ok(UnitaryMatrix(m))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    #[inline]
    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    /// U* v, written into `out`.
    pub fn adjoint_apply_into(&self, v: &[C64], out: &mut [C64]) {
        let n = self.0.dim();
        for i in 0..n {
            let mut acc = C_ZERO;
            for j in 0..n {
                acc += self.0[(j, i)].conj() * v[j];
            }
            out[i] = acc;
        }
    }
}

/// ⟨u, v⟩ = Σ u_i conj(v_i), linear in the first argument.
pub fn dot_conj(u: &[C64], v: &[C64]) -> C64 {
    u.iter().zip(v).map(|(a, b)| a * b.conj()).sum()
}

pub fn vec_norm(u: &[C64]) -> f64 {
    u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermitian_construction_rejects_asymmetry() {
        let mut m = CMatrix::identity(2);
        m[(0, 1)] = C64::new(0.5, 0.1);
        m[(1, 0)] = C64::new(0.5, 0.1); // should be conj
        let err = HermitianMatrix::new(m).unwrap_err();
        assert!(matches!(err, Error::NotHermitian { .. }));
    }

    #[test]
    fn product_and_adjoint_agree_with_hand_computation() {
        let a = CMatrix::from_rows(&[
            vec![C64::new(1.0, 0.0), C64::new(0.0, 1.0)],
            vec![C64::new(2.0, 0.0), C64::new(0.0, 0.0)],
        ])
        .unwrap();
        let b = a.adjoint();
        assert_eq!(b[(0, 1)], C64::new(2.0, 0.0));
        assert_eq!(b[(1, 0)], C64::new(0.0, -1.0));
        let p = a.mul(&b);
        // row 0 of a ⋅ col 0 of b = 1*1 + i*(-i) = 2
        assert_eq!(p[(0, 0)], C64::new(2.0, 0.0));
    }
}
