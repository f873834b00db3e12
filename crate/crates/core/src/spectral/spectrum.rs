use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{eigensystem, krylov, seidel_matrix, Eigensystem, HermitianMatrix};
use crate::tolerance::Tolerances;
use crate::tournament::Tournament;

/// One distinct eigenvalue with its multiplicity and main angle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Eigenvalue {
    pub tau: f64,
    pub mult: usize,
    pub beta: f64,
    /// Whether the eigenvalue is main (`β ≠ 0`) after thresholding and,
    /// for tournaments, the exact cross-check.
    #[serde(skip)]
    pub main: bool,
}

/// Distinct eigenvalues in increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    n: usize,
    values: Vec<Eigenvalue>,
    warnings: Vec<String>,
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Spectrum", 1)?;
        st.serialize_field("eigenvalues", &self.values)?;
        st.end()
    }
}

/// The main eigenvalues `τ_{k₁} < … < τ_{k_r}` with their main angles.
#[derive(Debug, Clone, PartialEq)]
pub struct MainSpectrum(pub Vec<(f64, f64)>);

impl MainSpectrum {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn taus(&self) -> Vec<f64> {
        self.0.iter().map(|&(t, _)| t).collect()
    }
}

impl Spectrum {
    /// Spectrum of the Seidel matrix of `t`, with main angles in the
    /// ambiguous band re-decided by the exact integer Krylov test.
    pub fn of_tournament(t: &Tournament, tol: &Tolerances) -> Spectrum {
        let mut spec = group_spectrum(&eigensystem(&seidel_matrix(t)), tol);
        let (lo, hi) = tol.exact_band;
        if spec.values.iter().any(|e| e.beta >= lo && e.beta <= hi) {
            let poly = krylov::main_polynomial(&t.seidel_squared());
            for e in spec.values.iter_mut().filter(|e| e.beta >= lo && e.beta <= hi) {
                let exact = krylov::is_root(&poly, e.tau * e.tau);
                if exact != e.main {
                    spec.warnings.push(format!(
                        "main angle {:.3e} at tau={:.6} re-decided as {} by the exact test",
                        e.beta,
                        e.tau,
                        if exact { "main" } else { "non-main" }
                    ));
                }
                e.main = exact;
            }
        }
        spec
    }

    /// Spectrum of an arbitrary Hermitian matrix (threshold-only main test).
    pub fn of_matrix(h: &HermitianMatrix, tol: &Tolerances) -> Spectrum {
        group_spectrum(&eigensystem(h), tol)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Eigenvalue] {
        &self.values
    }

    /// Number of distinct eigenvalues.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn main_spectrum(&self) -> MainSpectrum {
        MainSpectrum(
            self.values
                .iter()
                .filter(|e| e.main)
                .map(|e| (e.tau, e.beta))
                .collect(),
        )
    }

    /// `(multiplicity, τ)` pairs, handy for shape comparisons.
    pub fn shape(&self) -> Vec<(usize, f64)> {
        self.values.iter().map(|e| (e.mult, e.tau)).collect()
    }
}

/// Clusters an ascending eigensystem into distinct eigenvalues and computes
/// each main angle `β = ‖E j‖ / √n`.
pub fn group_spectrum(es: &Eigensystem, tol: &Tolerances) -> Spectrum {
    let n = es.values.len();
    let radius = es.values.iter().fold(0.0f64, |r, v| r.max(v.abs()));
    let gap_tol = tol.eig_rel * radius.max(1.0);
    let mut warnings = Vec::new();

    let mut clusters: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for k in 1..=n {
        if k == n || es.values[k] - es.values[k - 1] >= gap_tol {
            clusters.push((start, k));
            start = k;
            if k < n {
                let gap = es.values[k] - es.values[k - 1];
                if gap < 1e3 * gap_tol {
                    warnings.push(format!(
                        "eigenvalue gap {gap:.3e} near clustering tolerance {gap_tol:.3e}"
                    ));
                }
            }
        }
    }

    let values = clusters
        .into_iter()
        .map(|(lo, hi)| {
            let tau = es.values[lo..hi].iter().sum::<f64>() / (hi - lo) as f64;
            let weight: f64 = (lo..hi)
                .map(|k| es.vectors.column(k).iter().sum::<num_complex::Complex64>().norm_sqr())
                .sum();
            let beta = (weight / n as f64).sqrt().min(1.0);
            Eigenvalue { tau, mult: hi - lo, beta, main: beta >= tol.beta_zero }
        })
        .collect();
    Spectrum { n, values, warnings }
}
