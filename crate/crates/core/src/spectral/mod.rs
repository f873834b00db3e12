//! Hermitian spectra of Seidel matrices.
//!
//! For a tournament with adjacency `A` the Seidel matrix is
//! `S = √−1 (A − Aᵀ)`. The spectrum is grouped into distinct eigenvalues
//! `τ₁ < … < τ_s` with multiplicities and main angles, the length of the
//! projection of `j/√n` onto each eigenspace.

mod identities;
mod krylov;
mod spectrum;

pub use identities::{
    char_identity_residual, shifted_main_spectrum, CharIdentityResidual, ShiftedMainSpectrum,
};
pub use krylov::{main_polynomial, is_main_exact};
pub use spectrum::{group_spectrum, Eigenvalue, MainSpectrum, Spectrum};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tournament::Tournament;

const HERMITIAN_TOL: f64 = 1e-12;

/// A dense Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix(DMatrix<Complex64>);

impl HermitianMatrix {
    /// Wraps `m` after checking `m = m*` entrywise within 1e-12.
    pub fn new(m: DMatrix<Complex64>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::input("matrix is not square"));
        }
        let n = m.nrows();
        for i in 0..n {
            for j in i..n {
                if (m[(i, j)] - m[(j, i)].conj()).norm() > HERMITIAN_TOL {
                    return Err(Error::input(format!("matrix is not Hermitian at ({i},{j})")));
                }
            }
        }
        Ok(HermitianMatrix(m))
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize, usize) -> Complex64) -> Result<Self> {
        Self::new(DMatrix::from_fn(n, n, f))
    }

    pub fn n(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.0[(i, j)]
    }

    pub fn as_matrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `H + a J`.
    pub fn add_ones(&self, a: f64) -> HermitianMatrix {
        HermitianMatrix(self.0.map(|z| z + a))
    }

    /// `H + a I`.
    pub fn add_identity(&self, a: f64) -> HermitianMatrix {
        let mut m = self.0.clone();
        for i in 0..m.nrows() {
            m[(i, i)] += a;
        }
        HermitianMatrix(m)
    }
}

/// `S = √−1 (A − Aᵀ)`: `S[u][v] = i` for an arc `u → v`, `−i` for `v → u`.
pub fn seidel_matrix(t: &Tournament) -> HermitianMatrix {
    let n = t.n();
    HermitianMatrix(DMatrix::from_fn(n, n, |u, v| {
        if u == v {
            Complex64::new(0.0, 0.0)
        } else if t.has_arc(u, v) {
            Complex64::new(0.0, 1.0)
        } else {
            Complex64::new(0.0, -1.0)
        }
    }))
}

/// Eigenvalues in ascending order with an orthonormal basis of eigenvectors
/// stored as the matching columns of `vectors`.
#[derive(Debug, Clone)]
pub struct Eigensystem {
    pub values: Vec<f64>,
    pub vectors: DMatrix<Complex64>,
}

impl Eigensystem {
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        self.vectors.column(k).iter().copied().collect()
    }
}

pub fn eigensystem(h: &HermitianMatrix) -> Eigensystem {
    let n = h.n();
    if n == 0 {
        return Eigensystem { values: vec![], vectors: DMatrix::zeros(0, 0) };
    }
    let eig = h.0.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = DMatrix::from_fn(n, n, |i, k| eig.eigenvectors[(i, order[k])]);
    Eigensystem { values, vectors }
}

/// Eigenvalues only, ascending.
pub fn eigenvalues(h: &HermitianMatrix) -> Vec<f64> {
    let mut v: Vec<f64> = h.0.clone().symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}
