//! Numerical checks of the rank-one shift identities for `M = H + aJ`.
//!
//! With `H` Hermitian, distinct eigenvalues `τ_i` and main angles `β_i`,
//! `P_M(x) = P_H(x) · (1 + a Σ n β_i² / (τ_i − x))`, and for real `a ≠ 0` the
//! main eigenvalues of `H` and `M` are equally many and strictly interlace.

use super::{eigenvalues, HermitianMatrix, MainSpectrum, Spectrum};
use crate::error::{Error, Result};
use crate::tolerance::{Tolerances, INTERLACE_SEP};

#[derive(Debug, Clone, PartialEq)]
pub struct CharIdentityResidual {
    pub max_residual: f64,
    pub evaluated: usize,
    /// Samples dropped because they sit on an eigenvalue of `H`.
    pub skipped: Vec<f64>,
}

/// `∏ (λ_k − x)` over all eigenvalues.
fn char_poly_at(eigs: &[f64], x: f64) -> f64 {
    eigs.iter().map(|&l| l - x).product()
}

/// Maximum of `|P_M(x) − P_H(x)(1 + a Σ nβ_i²/(τ_i − x))| / (1 + |P_H(x)|)`
/// over the sample points. Both characteristic polynomials are evaluated as
/// products over independently computed eigenvalues of `H` and `M`.
pub fn char_identity_residual(
    h: &HermitianMatrix,
    a: f64,
    x_samples: &[f64],
    tol: &Tolerances,
) -> CharIdentityResidual {
    let n = h.n() as f64;
    let spec = Spectrum::of_matrix(h, tol);
    let eig_h = eigenvalues(h);
    let eig_m = eigenvalues(&h.add_ones(a));
    let radius = eig_h.iter().fold(1.0f64, |r, v| r.max(v.abs()));
    let guard = tol.eig_rel * radius * 10.0;

    let mut out = CharIdentityResidual { max_residual: 0.0, evaluated: 0, skipped: Vec::new() };
    for &x in x_samples {
        if spec.values().iter().any(|e| (e.tau - x).abs() <= guard) {
            out.skipped.push(x);
            continue;
        }
        let p_h = char_poly_at(&eig_h, x);
        let p_m = char_poly_at(&eig_m, x);
        let shift: f64 = spec
            .values()
            .iter()
            .map(|e| n * e.beta * e.beta / (e.tau - x))
            .sum();
        let residual = (p_m - p_h * (1.0 + a * shift)).abs() / (1.0 + p_h.abs());
        out.max_residual = out.max_residual.max(residual);
        out.evaluated += 1;
    }
    out
}

/// Main spectra of `H` and `M = H + aJ` with the interlacing verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftedMainSpectrum {
    pub a: f64,
    pub base: MainSpectrum,
    pub shifted: MainSpectrum,
    pub counts_match: bool,
    /// Smallest gap between consecutive members of the merged chain.
    pub min_separation: f64,
    pub violations: Vec<String>,
}

impl ShiftedMainSpectrum {
    pub fn passes(&self) -> bool {
        self.counts_match && self.violations.is_empty()
    }
}

/// Checks `τ₁ < μ₁ < τ₂ < … < τ_r < μ_r` for `a > 0` and
/// `μ₁ < τ₁ < μ₂ < … < μ_r < τ_r` for `a < 0`, each gap beyond 1e-7.
pub fn shifted_main_spectrum(
    h: &HermitianMatrix,
    a: f64,
    tol: &Tolerances,
) -> Result<ShiftedMainSpectrum> {
    if a == 0.0 {
        return Err(Error::input("the shift a must be nonzero"));
    }
    let base = Spectrum::of_matrix(h, tol).main_spectrum();
    let shifted = Spectrum::of_matrix(&h.add_ones(a), tol).main_spectrum();
    let counts_match = base.len() == shifted.len();
    let mut violations = Vec::new();
    if !counts_match {
        violations.push(format!(
            "{} main eigenvalues before the shift, {} after",
            base.len(),
            shifted.len()
        ));
    }

    let (taus, mus) = (base.taus(), shifted.taus());
    let chain: Vec<f64> = if a > 0.0 {
        taus.iter().zip(&mus).flat_map(|(&t, &m)| [t, m]).collect()
    } else {
        mus.iter().zip(&taus).flat_map(|(&m, &t)| [m, t]).collect()
    };
    let mut min_separation = f64::INFINITY;
    for (k, w) in chain.windows(2).enumerate() {
        let gap = w[1] - w[0];
        min_separation = min_separation.min(gap);
        if gap <= INTERLACE_SEP {
            violations.push(format!(
                "chain position {k}: {:.12} then {:.12} (gap {gap:.3e})",
                w[0], w[1]
            ));
        }
    }
    Ok(ShiftedMainSpectrum { a, base, shifted, counts_match, min_separation, violations })
}
