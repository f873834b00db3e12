//! Minimum complex spherical embeddings of tournaments.
//!
//! A representation of a tournament `T` in the unit sphere `Ω(d) ⊂ ℂ^d` maps
//! vertices to unit vectors with `φ(x)*φ(y) = α` for every arc `x → y` and
//! `ᾱ` for the reverse, where `Im α > 0`. Its Gram matrix is
//! `G = I + αA + ᾱAᵀ`, so the smallest `d` is the smallest achievable rank.
//!
//! Writing `α ∝ a + i`, the rank is governed by the multiplicity of the least
//! eigenvalue of `M = aJ + S`. The Seidel spectrum `τ₁ < τ₂ < …` with
//! multiplicities `m_i` and main angles `β_i` decides the optimum:
//!
//! | type | condition                          | dimension     | α                          |
//! |------|------------------------------------|---------------|----------------------------|
//! | 1    | `β₁ = 0`                           | `n − m₁ − 1`  | `(1 − c₁i) / (1 + c₁τ₁)`   |
//! | 2    | `β₁ ≠ 0`, `m₁ > 1`                 | `n − m₁`      | `−i / τ₁`                  |
//! | 3    | `m₁ = 1`, `β₂ = 0`, `c₂ < 0`       | `n − m₂ − 1`  | `(1 − c₂i) / (1 + c₂τ₂)`   |
//! | 4    | otherwise                          | `n − 1`       | `−i / τ₁`                  |
//!
//! with `c₁ = Σ_{i≥2} nβ_i²/(τ_i − τ₁)` and
//! `c₂ = nβ₁²/(τ₁ − τ₂) + Σ_{i≥3} nβ_i²/(τ_i − τ₂)`.

use num_complex::Complex64;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::spectral::{eigensystem, eigenvalues, seidel_matrix, HermitianMatrix, Spectrum};
use crate::tolerance::{Tolerances, EMBEDDING_TOL, GRAM_RANK_REL};
use crate::tournament::Tournament;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RepType {
    Type1,
    Type2,
    Type3,
    Type4,
}

impl RepType {
    pub fn number(self) -> u8 {
        match self {
            RepType::Type1 => 1,
            RepType::Type2 => 2,
            RepType::Type3 => 3,
            RepType::Type4 => 4,
        }
    }
}

/// Outcome of the four-way case analysis.
#[derive(Debug, Clone, PartialEq)]
pub struct TypeClass {
    pub kind: RepType,
    /// Set for Type 1.
    pub c1: Option<f64>,
    /// Set whenever `m₁ = 1` and `β₂ = 0` (Type 3, or Type 4 with `c₂ ≥ 0`).
    pub c2: Option<f64>,
    pub tau1: f64,
    pub tau2: f64,
    pub m1: usize,
    pub m2: usize,
}

/// Complex number serialized as `{"re": …, "im": …}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReIm {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ReIm {
    fn from(z: Complex64) -> Self {
        ReIm { re: z.re, im: z.im }
    }
}

const C2_ZERO_REL: f64 = 1e-9;

/// Case analysis on a Seidel spectrum.
pub fn classify_type(spec: &Spectrum) -> Result<TypeClass> {
    let n = spec.n();
    let v = spec.values();
    if n < 2 || v.len() < 2 {
        return Err(Error::input(
            "classification needs at least two vertices (a single point has no angle set)",
        ));
    }
    let nf = n as f64;
    // Non-main eigenvalues contribute nothing, whatever their rounding residue.
    let weight = |i: usize| if v[i].main { nf * v[i].beta * v[i].beta } else { 0.0 };
    let (tau1, tau2, m1, m2) = (v[0].tau, v[1].tau, v[0].mult, v[1].mult);
    let mut class = TypeClass { kind: RepType::Type4, c1: None, c2: None, tau1, tau2, m1, m2 };

    if !v[0].main {
        let c1: f64 = (1..v.len()).map(|i| weight(i) / (v[i].tau - tau1)).sum();
        if c1 <= 0.0 {
            return Err(Error::inconsistency(format!("c1 = {c1} is not positive")));
        }
        class.kind = RepType::Type1;
        class.c1 = Some(c1);
        return Ok(class);
    }
    if m1 > 1 {
        class.kind = RepType::Type2;
        return Ok(class);
    }
    if !v[1].main {
        let terms: Vec<f64> = std::iter::once(weight(0) / (tau1 - tau2))
            .chain((2..v.len()).map(|i| weight(i) / (v[i].tau - tau2)))
            .collect();
        let c2: f64 = terms.iter().sum();
        // Exact cancellation happens (e.g. symmetric angle profiles); its residue is zero.
        let scale: f64 = terms.iter().map(|x| x.abs()).sum();
        let c2 = if c2.abs() <= C2_ZERO_REL * scale.max(1.0) { 0.0 } else { c2 };
        class.c2 = Some(c2);
        if c2 < 0.0 {
            class.kind = RepType::Type3;
        }
    }
    Ok(class)
}

impl TypeClass {
    pub fn rep_dim(&self, n: usize) -> usize {
        match self.kind {
            RepType::Type1 => n - self.m1 - 1,
            RepType::Type2 => n - self.m1,
            RepType::Type3 => n - self.m2 - 1,
            RepType::Type4 => n - 1,
        }
    }

    /// The angle of the minimal representation. For Type 4 this is the `a = 0`
    /// witness `−i/τ₁`.
    pub fn alpha(&self) -> Complex64 {
        let i = Complex64::i();
        match self.kind {
            RepType::Type1 => {
                let c1 = self.c1.expect("Type 1 carries c1");
                (1.0 - c1 * i) / (1.0 + c1 * self.tau1)
            }
            RepType::Type3 => {
                let c2 = self.c2.expect("Type 3 carries c2");
                (1.0 - c2 * i) / (1.0 + c2 * self.tau2)
            }
            RepType::Type2 | RepType::Type4 => -i / self.tau1,
        }
    }

    /// The shift `a` in `M = aJ + S` realising the optimum.
    pub fn optimal_shift(&self) -> f64 {
        match self.kind {
            RepType::Type1 => -1.0 / self.c1.expect("Type 1 carries c1"),
            RepType::Type3 => -1.0 / self.c2.expect("Type 3 carries c2"),
            RepType::Type2 | RepType::Type4 => 0.0,
        }
    }
}

/// Classification, minimum dimension and optimal angle of one tournament.
#[derive(Debug, Clone, PartialEq)]
pub struct RepReport {
    pub n: usize,
    pub class: TypeClass,
    pub rep_dim: usize,
    pub alpha: Complex64,
    pub spectrum: Spectrum,
}

impl Serialize for RepReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("type", &self.class.kind.number())?;
        map.serialize_entry("rep_dim", &self.rep_dim)?;
        map.serialize_entry("alpha", &ReIm::from(self.alpha))?;
        if let Some(c1) = self.class.c1 {
            map.serialize_entry("c1", &c1)?;
        }
        if let Some(c2) = self.class.c2 {
            map.serialize_entry("c2", &c2)?;
        }
        map.serialize_entry("spectrum", self.spectrum.values())?;
        map.end()
    }
}

/// Runs the case analysis on the Seidel spectrum of `t`.
pub fn analyze(t: &Tournament, tol: &Tolerances) -> Result<RepReport> {
    if t.n() < 2 {
        return Err(Error::input("a single vertex has no angle set"));
    }
    let spectrum = Spectrum::of_tournament(t, tol);
    let class = classify_type(&spectrum)?;
    let alpha = class.alpha();
    if alpha.im <= 0.0 || !alpha.is_finite() {
        return Err(Error::inconsistency(format!(
            "optimal angle {alpha} does not have positive imaginary part"
        )));
    }
    if alpha.norm() > 1.0 + 1e-9 {
        return Err(Error::inconsistency(format!("optimal angle {alpha} lies outside the unit disc")));
    }
    Ok(RepReport { n: t.n(), rep_dim: class.rep_dim(t.n()), alpha, class, spectrum })
}

pub fn rep_dimension(t: &Tournament) -> Result<usize> {
    Ok(analyze(t, &Tolerances::default())?.rep_dim)
}

pub fn optimal_alpha(t: &Tournament) -> Result<Complex64> {
    Ok(analyze(t, &Tolerances::default())?.alpha)
}

/// `G = I + αA + ᾱAᵀ`.
pub fn gram_matrix(t: &Tournament, alpha: Complex64) -> HermitianMatrix {
    HermitianMatrix::from_fn(t.n(), |x, y| {
        if x == y {
            Complex64::new(1.0, 0.0)
        } else if t.has_arc(x, y) {
            alpha
        } else {
            alpha.conj()
        }
    })
    .expect("I + αA + ᾱAᵀ is Hermitian")
}

/// Spectral facts about the Gram matrix at the optimal angle.
#[derive(Debug, Clone, PartialEq)]
pub struct GramCheck {
    pub eigenvalues: Vec<f64>,
    pub rank: usize,
    pub min_eigenvalue: f64,
}

/// Verifies that the Gram matrix at `report.alpha` is positive semidefinite
/// with rank exactly `report.rep_dim`.
pub fn check_gram(t: &Tournament, report: &RepReport) -> Result<GramCheck> {
    let eig = eigenvalues(&gram_matrix(t, report.alpha));
    gram_verdict(eig, t.n(), report.rep_dim)
}

fn gram_verdict(eigenvalues: Vec<f64>, n: usize, rep_dim: usize) -> Result<GramCheck> {
    let largest = eigenvalues.last().copied().unwrap_or(0.0);
    let min_eigenvalue = eigenvalues.first().copied().unwrap_or(0.0);
    if min_eigenvalue < -1e-8 * n as f64 {
        return Err(Error::inconsistency(format!(
            "Gram matrix is not positive semidefinite (eigenvalue {min_eigenvalue:.3e})"
        )));
    }
    let rank = eigenvalues.iter().filter(|&&l| l >= GRAM_RANK_REL * largest).count();
    if rank != rep_dim {
        return Err(Error::inconsistency(format!(
            "Gram matrix has rank {rank}, expected {rep_dim}"
        )));
    }
    Ok(GramCheck { eigenvalues, rank, min_eigenvalue })
}

/// Unit vectors in `ℂ^dim` realising the angle set `{α, ᾱ}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    pub dim: usize,
    pub alpha: Complex64,
    pub vectors: Vec<Vec<Complex64>>,
}

impl Serialize for Embedding {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let vectors: Vec<Vec<ReIm>> = self
            .vectors
            .iter()
            .map(|v| v.iter().copied().map(ReIm::from).collect())
            .collect();
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("dim", &self.dim)?;
        map.serialize_entry("alpha", &ReIm::from(self.alpha))?;
        map.serialize_entry("vectors", &vectors)?;
        map.end()
    }
}

/// Builds a minimum-dimension representation by factorising the Gram matrix
/// `G = V*V` through its positive eigenpairs.
pub fn embed(t: &Tournament, tol: &Tolerances) -> Result<(RepReport, Embedding)> {
    let report = analyze(t, tol)?;
    let es = eigensystem(&gram_matrix(t, report.alpha));
    let check = gram_verdict(es.values.clone(), t.n(), report.rep_dim)?;
    let largest = check.eigenvalues.last().copied().unwrap_or(0.0);
    let kept: Vec<usize> = (0..t.n())
        .filter(|&k| es.values[k] >= GRAM_RANK_REL * largest)
        .collect();
    // φ(x)_k = √λ_k · conj(U[x][k]) gives Σ_k conj(φ(x)_k) φ(y)_k = G[x][y].
    let vectors = (0..t.n())
        .map(|x| {
            kept.iter()
                .map(|&k| es.vectors[(x, k)].conj() * es.values[k].sqrt())
                .collect()
        })
        .collect();
    let embedding = Embedding { dim: kept.len(), alpha: report.alpha, vectors };
    let verdict = verify_embedding(&embedding, t)?;
    if !verdict.pass {
        return Err(Error::inconsistency(format!(
            "factorised embedding deviates by {:.3e}",
            verdict.max_deviation
        )));
    }
    Ok((report, embedding))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EmbeddingVerdict {
    pub max_deviation: f64,
    pub pass: bool,
}

/// Checks unit norms and every inner product against `α` / `ᾱ`.
pub fn verify_embedding(e: &Embedding, t: &Tournament) -> Result<EmbeddingVerdict> {
    if e.vectors.len() != t.n() {
        return Err(Error::input(format!(
            "embedding has {} vectors for {} vertices",
            e.vectors.len(),
            t.n()
        )));
    }
    if e.vectors.iter().any(|v| v.len() != e.dim) {
        return Err(Error::input("embedding vectors do not all have the stated dimension"));
    }
    let inner = |x: usize, y: usize| -> Complex64 {
        e.vectors[x].iter().zip(&e.vectors[y]).map(|(a, b)| a.conj() * b).sum()
    };
    let mut max_deviation = 0.0f64;
    for x in 0..t.n() {
        max_deviation = max_deviation.max((inner(x, x) - 1.0).norm());
        for y in 0..t.n() {
            if x != y {
                let want = if t.has_arc(x, y) { e.alpha } else { e.alpha.conj() };
                max_deviation = max_deviation.max((inner(x, y) - want).norm());
            }
        }
    }
    Ok(EmbeddingVerdict { max_deviation, pass: max_deviation <= EMBEDDING_TOL })
}

/// Multiplicity of the least eigenvalue of `aJ + S` for each shift.
pub fn multiplicity_profile(t: &Tournament, a_values: &[f64], tol: &Tolerances) -> Vec<(f64, usize)> {
    let s = seidel_matrix(t);
    a_values
        .iter()
        .map(|&a| (a, least_multiplicity(&eigenvalues(&s.add_ones(a)), tol)))
        .collect()
}

fn least_multiplicity(eig: &[f64], tol: &Tolerances) -> usize {
    let radius = eig.iter().fold(0.0f64, |r, v| r.max(v.abs()));
    let gap_tol = tol.eig_rel * radius.max(1.0);
    1 + eig.windows(2).take_while(|w| w[1] - w[0] < gap_tol).count()
}

/// The shifts singled out by the case analysis: `0`, `−1/c₁`, `−1/c₂`.
pub fn candidate_shifts(class: &TypeClass) -> Vec<f64> {
    let mut shifts = vec![0.0];
    shifts.extend(class.c1.map(|c| -1.0 / c));
    shifts.extend(class.c2.filter(|&c| c != 0.0).map(|c| -1.0 / c));
    shifts
}

/// Largest code size allowed in `Ω(d)`: `2d + 1` for odd `d`, `2d` for even `d`.
pub fn absolute_bound(d: usize) -> usize {
    if d % 2 == 1 {
        2 * d + 1
    } else {
        2 * d
    }
}
