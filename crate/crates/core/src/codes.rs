//! Extremal complex spherical 2-codes.
//!
//! A 2-code in `Ω(d)` has at most `2d + 1` points for odd `d` and `2d` for
//! even `d`. The tight codes are exactly the doubly regular tournaments
//! (odd `d`) and the tournaments with `I + A − Aᵀ` skew Hadamard (even `d`).
//! For odd `d`, codes with `2d` points are either a doubly regular tournament
//! with one vertex removed or have `S² ≅ diag(kI + lJ, kI + lJ)`.

use std::collections::BTreeSet;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::representation::{absolute_bound, analyze, RepReport, RepType};
use crate::spectral::Spectrum;
use crate::tolerance::Tolerances;
use crate::tournament::{
    canonical_form, enumerate_tournaments, paley_tournament, switching_class, CanonicalForm,
    Tournament,
};

/// Parameters `(n, k, λ)` of a doubly regular tournament: out-degree `k`,
/// `λ` common out-neighbours for every pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DrtParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
}

/// Some parameters iff all out-degrees agree and all pairs share the same
/// number of out-neighbours. Orders below 3 never qualify.
pub fn is_doubly_regular(t: &Tournament) -> Option<DrtParams> {
    let n = t.n();
    if n < 3 {
        return None;
    }
    let k = t.out_degree(0);
    if (1..n).any(|v| t.out_degree(v) != k) {
        return None;
    }
    let lambda = (t.out_mask(0) & t.out_mask(1)).count_ones() as usize;
    for u in 0..n {
        for v in u + 1..n {
            if (t.out_mask(u) & t.out_mask(v)).count_ones() as usize != lambda {
                return None;
            }
        }
    }
    Some(DrtParams { n, k, lambda })
}

/// `true` iff `H = I + A − Aᵀ` satisfies `HHᵀ = nI` (and `H + Hᵀ = 2I`, which
/// holds for every tournament).
pub fn skew_hadamard_check(t: &Tournament) -> bool {
    let n = t.n();
    let k = t.skew();
    let h = crate::tournament::IntMatrix::from_fn(n, crate::tournament::MatrixRole::Other, |i, j| {
        k.get(i, j) + i64::from(i == j)
    });
    let sum_ok = (0..n).all(|i| (0..n).all(|j| h.get(i, j) + h.get(j, i) == 2 * i64::from(i == j)));
    sum_ok && h.mul(&h.transpose()).is_scalar(n as i64)
}

/// Certificate that `S²` is permutationally `diag(kI + lJ, kI + lJ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockFormCert {
    pub k: i64,
    pub l: i64,
    pub partition: [Vec<usize>; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockForm {
    Certified(BlockFormCert),
    /// `S² = (n − 1)I`: the `l = 0` degenerate shape, which is the skew Hadamard case.
    Scalar,
    Absent,
}

impl BlockForm {
    pub fn cert(&self) -> Option<&BlockFormCert> {
        match self {
            BlockForm::Certified(c) => Some(c),
            _ => None,
        }
    }
}

/// Detects the two-block shape of `S²` from its off-diagonal support graph.
pub fn block_form_check(t: &Tournament) -> Result<BlockForm> {
    let n = t.n();
    if n % 2 == 1 {
        return Err(Error::input(format!("block form needs an even order, got {n}")));
    }
    let s2 = t.seidel_squared();
    let mut component = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let id = members.len();
        let mut stack = vec![start];
        let mut comp = Vec::new();
        component[start] = id;
        while let Some(u) = stack.pop() {
            comp.push(u);
            for v in 0..n {
                if v != u && s2.get(u, v) != 0 && component[v] == usize::MAX {
                    component[v] = id;
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        members.push(comp);
    }
    if members.len() == n {
        return Ok(BlockForm::Scalar);
    }
    if members.len() != 2 || members[0].len() != n / 2 {
        return Ok(BlockForm::Absent);
    }
    let l = s2.get(members[0][0], members[0][1]);
    let uniform = members.iter().all(|comp| {
        comp.iter()
            .all(|&u| comp.iter().all(|&v| u == v || s2.get(u, v) == l))
    });
    if !uniform || l <= 0 {
        return Ok(BlockForm::Absent);
    }
    let cert = BlockFormCert {
        k: n as i64 - 1 - l,
        l,
        partition: [members[0].clone(), members[1].clone()],
    };
    // The first block must induce a regular tournament of odd order.
    let first = t.induced(&cert.partition[0])?;
    let d = first.n();
    if d % 2 == 0 || (0..d).any(|v| first.out_degree(v) != (d - 1) / 2) {
        return Err(Error::inconsistency(format!(
            "block form with first block {:?} that is not a regular tournament of odd order",
            cert.partition[0]
        )));
    }
    Ok(BlockForm::Certified(cert))
}

/// Result of testing whether `T` is a doubly regular tournament minus a vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct DrtMinusVertex {
    /// Type 1 with spectrum `{(−θ)^{d−1}, −φ, φ, θ^{d−1}}`, `θ² = n + 1`, `φ² = 1`.
    pub spectral_match: bool,
    /// A doubly regular one-vertex extension, if one exists.
    pub extension: Option<Tournament>,
}

impl DrtMinusVertex {
    pub fn passes(&self) -> bool {
        self.extension.is_some()
    }
}

/// Spectral signature first, confirmed by an explicit search over the
/// `C(n, n/2)` out-neighbourhoods a new vertex of a doubly regular extension could have.
pub fn drt_minus_vertex_check(t: &Tournament, tol: &Tolerances) -> Result<DrtMinusVertex> {
    let n = t.n();
    if n % 2 == 1 {
        return Err(Error::input(format!("expected an even order, got {n}")));
    }
    let spectral_match = n >= 4 && {
        let report = analyze(t, tol)?;
        report.class.kind == RepType::Type1
            && matches_drt_minus_vertex_spectrum(&report.spectrum, n)
    };
    let extension = (0..1u64 << n)
        .filter(|m| m.count_ones() as usize == n / 2)
        .map(|outs| extend(t, outs))
        .find(|ext| is_doubly_regular(ext).is_some());
    if n >= 4 && spectral_match != extension.is_some() {
        return Err(Error::inconsistency(format!(
            "spectral signature ({spectral_match}) disagrees with the extension search ({})",
            extension.is_some()
        )));
    }
    Ok(DrtMinusVertex { spectral_match, extension })
}

fn matches_drt_minus_vertex_spectrum(spec: &Spectrum, n: usize) -> bool {
    let d = n / 2;
    let v = spec.values();
    let close = |x: f64, y: f64| (x - y).abs() < 1e-7;
    let theta = ((n + 1) as f64).sqrt();
    v.len() == 4
        && [v[0].mult, v[1].mult, v[2].mult, v[3].mult] == [d - 1, 1, 1, d - 1]
        && close(v[0].tau, -theta)
        && close(v[1].tau, -1.0)
        && close(v[2].tau, 1.0)
        && close(v[3].tau, theta)
}

fn extend(t: &Tournament, outs: u64) -> Tournament {
    let n = t.n();
    Tournament::from_fn(n + 1, |i, j| {
        if j == n {
            outs >> i & 1 == 0
        } else {
            t.has_arc(i, j)
        }
    })
    .expect("order stays in range")
}

/// Spectrum shapes possible for a 2-code with `n = 2d` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HalfBoundCase {
    /// Type 1, `{(−θ)^{d−1}, 0², θ^{d−1}}` (never occurs).
    ZeroPair,
    /// Type 1, `{(−θ)^{d−1}, −φ, φ, θ^{d−1}}`.
    InnerPair,
    /// Type 2, `{(−θ)^d, θ^d}`.
    TwoValued,
    /// Type 3, `{−θ, (−φ)^{d−1}, φ^{d−1}, θ}`.
    OuterPair,
}

/// Matches a spectrum of a `2d`-vertex tournament against the four shapes.
pub fn half_bound_case(spec: &Spectrum, kind: RepType) -> Option<HalfBoundCase> {
    let n = spec.n();
    if n % 2 == 1 || n < 2 {
        return None;
    }
    let d = n / 2;
    let v = spec.values();
    let mults: Vec<usize> = v.iter().map(|e| e.mult).collect();
    let symmetric = (0..v.len()).all(|i| (v[i].tau + v[v.len() - 1 - i].tau).abs() < 1e-7);
    if !symmetric {
        return None;
    }
    match (kind, v.len()) {
        (RepType::Type1, 3) if mults == [d - 1, 2, d - 1] && v[1].tau.abs() < 1e-7 => {
            Some(HalfBoundCase::ZeroPair)
        }
        (RepType::Type1, 4) if mults == [d - 1, 1, 1, d - 1] => Some(HalfBoundCase::InnerPair),
        (RepType::Type2, 2) if mults == [d, d] => Some(HalfBoundCase::TwoValued),
        (RepType::Type3, 4) if mults == [1, d - 1, d - 1, 1] => Some(HalfBoundCase::OuterPair),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    Drt(DrtParams),
    SkewHadamard,
    DrtMinusVertex,
    BlockForm(BlockFormCert),
    None,
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        match self {
            Certificate::Drt(p) => {
                map.serialize_entry("kind", "DRT")?;
                map.serialize_entry("params", &[p.n, p.k, p.lambda])?;
            }
            Certificate::SkewHadamard => map.serialize_entry("kind", "SkewHadamard")?,
            Certificate::DrtMinusVertex => map.serialize_entry("kind", "DrtMinusVertex")?,
            Certificate::BlockForm(c) => {
                map.serialize_entry("kind", "BlockForm")?;
                map.serialize_entry("k", &c.k)?;
                map.serialize_entry("l", &c.l)?;
                map.serialize_entry("partition", &c.partition)?;
            }
            Certificate::None => map.serialize_entry("kind", "None")?,
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TightnessReport {
    pub n: usize,
    pub rep_dim: usize,
    pub bound: usize,
    pub is_tight: bool,
    pub certificate: Certificate,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub half_bound_case: Option<HalfBoundCase>,
    #[serde(skip)]
    pub rep: RepReport,
}

/// Places `T` relative to the absolute bound and certifies the extremal cases,
/// cross-checking each characterization in both directions.
pub fn classify_code(t: &Tournament, tol: &Tolerances) -> Result<TightnessReport> {
    let n = t.n();
    if n < 3 {
        return Err(Error::input(format!("code classification needs n ≥ 3, got {n}")));
    }
    let rep = analyze(t, tol)?;
    let d = rep.rep_dim;
    let bound = absolute_bound(d);
    if n > bound {
        return Err(Error::inconsistency(format!(
            "{n} points exceed the absolute bound {bound} in dimension {d}"
        )));
    }
    let is_tight = n == bound;
    let drt = is_doubly_regular(t);
    let hadamard = skew_hadamard_check(t);
    if drt.is_some() && !(is_tight && d % 2 == 1) {
        return Err(Error::inconsistency("doubly regular tournament is not a tight code"));
    }
    if hadamard && !(is_tight && d % 2 == 0) {
        return Err(Error::inconsistency("skew Hadamard tournament is not a tight code"));
    }

    let half_bound_case = if n == 2 * d { half_bound_case(&rep.spectrum, rep.class.kind) } else { None };
    if n == 2 * d && half_bound_case.is_none() {
        return Err(Error::inconsistency(format!(
            "n = 2d = {n} but the spectrum fits none of the admissible shapes"
        )));
    }

    let certificate = if is_tight && d % 2 == 1 {
        Certificate::Drt(drt.ok_or_else(|| Error::inconsistency("tight odd code that is not doubly regular"))?)
    } else if is_tight {
        if !hadamard {
            return Err(Error::inconsistency("tight even code without a skew Hadamard matrix"));
        }
        if half_bound_case != Some(HalfBoundCase::TwoValued) {
            return Err(Error::inconsistency("tight even code that is not Type 2 with a two-valued spectrum"));
        }
        Certificate::SkewHadamard
    } else if n == 2 * d {
        let minus_vertex = drt_minus_vertex_check(t, tol)?.passes();
        let block = block_form_check(t)?;
        match (minus_vertex, block.cert()) {
            (true, None) if half_bound_case == Some(HalfBoundCase::InnerPair) => {
                Certificate::DrtMinusVertex
            }
            (false, Some(cert)) if half_bound_case == Some(HalfBoundCase::OuterPair) => {
                Certificate::BlockForm(cert.clone())
            }
            (mv, bf) => {
                return Err(Error::inconsistency(format!(
                    "n = 2d with odd d: minus-vertex {mv}, block form {}, spectrum case {:?}",
                    bf.is_some(),
                    half_bound_case
                )))
            }
        }
    } else {
        Certificate::None
    };
    Ok(TightnessReport { n, rep_dim: d, bound, is_tight, certificate, half_bound_case, rep })
}

/// Outcome of the exhaustive search for the excluded `{(−θ)^{d−1}, 0², θ^{d−1}}` spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroPairSweep {
    pub n: usize,
    pub classes_checked: usize,
    pub counterexamples: Vec<Tournament>,
}

impl ZeroPairSweep {
    pub fn passes(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Confirms over all isomorphism classes of order `n ∈ {2, 4, 6}` that no
/// tournament has Seidel spectrum `{(−θ)^{d−1}, 0², θ^{d−1}}` with `n = 2d`.
pub fn zero_pair_sweep(n: usize, tol: &Tolerances) -> Result<ZeroPairSweep> {
    if ![2, 4, 6].contains(&n) {
        return Err(Error::input(format!("the exhaustive sweep supports n ∈ {{2, 4, 6}}, got {n}")));
    }
    let d = n / 2;
    if d == 1 {
        // The shape would need a double zero eigenvalue on two vertices.
        return Ok(ZeroPairSweep { n, classes_checked: 0, counterexamples: vec![] });
    }
    let classes = enumerate_tournaments(n)?;
    let counterexamples = classes
        .iter()
        .filter(|t| {
            let spec = Spectrum::of_tournament(t, tol);
            let v = spec.values();
            v.len() == 3
                && [v[0].mult, v[1].mult, v[2].mult] == [d - 1, 2, d - 1]
                && v[1].tau.abs() < 1e-7
                && (v[0].tau + v[2].tau).abs() < 1e-7
        })
        .cloned()
        .collect();
    Ok(ZeroPairSweep { n, classes_checked: classes.len(), counterexamples })
}

/// Doubly regular tournaments of one order, up to isomorphism.
#[derive(Debug, Clone, PartialEq)]
pub struct DrtCatalog {
    pub order: usize,
    pub tournaments: Vec<Tournament>,
    /// Completeness rests on an external classification rather than on a search done here.
    pub catalog_trusted: bool,
}

/// Orders `≢ 3 (mod 4)` give an empty list; 3 and 7 are searched exhaustively;
/// 11 is the Paley tournament, complete by the published classification. Other
/// orders need `external`, a list of tournaments (only those of `order` are used).
pub fn drt_catalog(order: usize, external: Option<&[Tournament]>) -> Result<DrtCatalog> {
    if let Some(list) = external.filter(|l| l.iter().any(|t| t.n() == order)) {
        let mut seen = BTreeSet::new();
        let mut tournaments = Vec::new();
        for t in list.iter().filter(|t| t.n() == order) {
            if is_doubly_regular(t).is_none() {
                return Err(Error::input(format!("catalog entry {t} is not doubly regular")));
            }
            if seen.insert(canonical_form(t)) {
                tournaments.push(t.clone());
            }
        }
        return Ok(DrtCatalog { order, tournaments, catalog_trusted: true });
    }
    if order % 4 != 3 {
        return Ok(DrtCatalog { order, tournaments: vec![], catalog_trusted: false });
    }
    match order {
        3 | 7 => Ok(DrtCatalog {
            order,
            tournaments: enumerate_tournaments(order)?
                .into_iter()
                .filter(|t| is_doubly_regular(t).is_some())
                .collect(),
            catalog_trusted: false,
        }),
        11 => Ok(DrtCatalog {
            order,
            tournaments: vec![paley_tournament(11)?],
            catalog_trusted: true,
        }),
        _ => Err(Error::input(format!(
            "no built-in catalog of doubly regular tournaments of order {order}; supply one"
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TightCount {
    pub d: usize,
    /// Code size `|X|` at the bound.
    pub size: usize,
    pub count: usize,
    pub catalog_trusted: bool,
}

/// Number of tight 2-codes in `Ω(d)` up to isomorphism.
///
/// Odd `d` counts doubly regular tournaments of order `2d + 1`. Even `d`
/// counts isomorphism classes in the union, over all doubly regular
/// tournaments `D` of order `2d − 1`, of the switching class of `D` plus a
/// vertex dominated by all of `D`.
pub fn count_tight_codes(d: usize, external: Option<&[Tournament]>) -> Result<TightCount> {
    if d == 0 {
        return Err(Error::input("dimension must be positive"));
    }
    let size = absolute_bound(d);
    if d % 2 == 1 {
        let cat = drt_catalog(size, external)?;
        return Ok(TightCount { d, size, count: cat.tournaments.len(), catalog_trusted: cat.catalog_trusted });
    }
    let cat = drt_catalog(2 * d - 1, external)?;
    let mut classes: BTreeSet<CanonicalForm> = BTreeSet::new();
    for drt in &cat.tournaments {
        classes.extend(switching_class(&drt.dominated_extension()?)?);
    }
    Ok(TightCount { d, size, count: classes.len(), catalog_trusted: cat.catalog_trusted })
}
