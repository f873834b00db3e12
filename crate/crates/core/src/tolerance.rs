use serde::Serialize;

/// Numerical thresholds shared by the spectral and representation code.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Sorted eigenvalues closer than `eig_rel · max(1, spectral radius)` form one cluster.
    pub eig_rel: f64,
    /// A main angle below this is treated as zero.
    pub beta_zero: f64,
    /// Main angles inside `[lo, hi]` are re-decided by the exact integer test.
    pub exact_band: (f64, f64),
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eig_rel: 1e-7,
            beta_zero: 1e-6,
            exact_band: (1e-9, 1e-3),
        }
    }
}

/// Maximum inner-product deviation accepted by embedding verification.
pub const EMBEDDING_TOL: f64 = 1e-7;

/// Gram eigenvalues below `GRAM_RANK_REL ·` (largest eigenvalue) count as zero.
pub const GRAM_RANK_REL: f64 = 1e-7;

/// Required strict separation in interlacing checks.
pub const INTERLACE_SEP: f64 = 1e-7;
