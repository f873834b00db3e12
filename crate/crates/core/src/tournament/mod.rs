//! Exact combinatorial tournaments.
//!
//! A [`Tournament`] on `n` vertices stores one orientation bit per unordered
//! pair. Internally each vertex keeps a bit mask of its out-neighbours, which
//! keeps arc queries and relabelling cheap; the public bit-pattern view uses
//! the row-major upper-triangle order `(0,1), (0,2), …, (0,n-1), (1,2), …`.

mod canon;
mod enumerate;
mod format;
mod matrix;

pub use canon::{canonical_form, CanonicalForm};
pub use enumerate::{enumerate_tournaments, switching_class, MAX_ENUMERATION_ORDER};
pub use format::{parse_catalog, parse_line};
pub use matrix::{IntMatrix, MatrixRole};

use crate::error::{Error, Result};

/// Largest supported vertex count (out-neighbourhoods are stored as `u64` masks).
pub const MAX_ORDER: usize = 64;

/// An orientation of the complete graph on `n` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    out: Vec<u64>,
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tournament({})", self.to_line())
    }
}

impl std::fmt::Display for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_line())
    }
}

/// Number of unordered pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Tournament {
    /// Builds a tournament from its upper-triangle bit pattern.
    ///
    /// Bit `1` for the pair `{i, j}` (`i < j`) means the arc `i → j`;
    /// bit `0` means `j → i`.
    pub fn build(n: usize, arc_bits: &[bool]) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("a tournament needs at least one vertex"));
        }
        if n > MAX_ORDER {
            return Err(Error::input(format!(
                "{n} vertices exceeds the supported maximum of {MAX_ORDER}"
            )));
        }
        let expected = pair_count(n);
        if arc_bits.len() != expected {
            return Err(Error::input(format!(
                "{n} vertices need {expected} arc bits, got {}",
                arc_bits.len()
            )));
        }
        let mut t = Tournament::empty(n);
        let mut bits = arc_bits.iter();
        for i in 0..n {
            for j in i + 1..n {
                if *bits.next().expect("length checked") {
                    t.set_arc(i, j);
                } else {
                    t.set_arc(j, i);
                }
            }
        }
        Ok(t)
    }

    /// Builds a tournament from an arc predicate evaluated on every pair `i < j`.
    pub fn from_fn(n: usize, mut arc: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let bits: Vec<bool> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| arc(i, j))
            .collect();
        Self::build(n, &bits)
    }

    /// Builds a tournament from a 0/1 adjacency matrix, validating `A + Aᵀ = J − I`.
    pub fn from_adjacency(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::input("adjacency matrix is not square"));
        }
        for i in 0..n {
            if rows[i][i] != 0 {
                return Err(Error::input(format!("nonzero diagonal at vertex {i}")));
            }
            for j in i + 1..n {
                if rows[i][j] + rows[j][i] != 1 || rows[i][j] > 1 || rows[j][i] > 1 {
                    return Err(Error::input(format!(
                        "pair ({i},{j}) is not oriented exactly once"
                    )));
                }
            }
        }
        Self::from_fn(n, |i, j| rows[i][j] == 1)
    }

    /// Internal constructor for a tournament whose arcs are filled in afterwards.
    pub(crate) fn empty(n: usize) -> Self {
        Tournament { n, out: vec![0; n] }
    }

    pub(crate) fn set_arc(&mut self, from: usize, to: usize) {
        self.out[from] |= 1 << to;
        self.out[to] &= !(1 << from);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `true` iff the arc `from → to` is present.
    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.out[from] >> to & 1 == 1
    }

    pub fn out_mask(&self, v: usize) -> u64 {
        self.out[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn score_sequence(&self) -> Vec<usize> {
        let mut s: Vec<usize> = (0..self.n).map(|v| self.out_degree(v)).collect();
        s.sort_unstable();
        s
    }

    /// The upper-triangle bit pattern in row-major pair order.
    pub fn arc_bits(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(pair_count(self.n));
        for i in 0..self.n {
            for j in i + 1..self.n {
                bits.push(self.has_arc(i, j));
            }
        }
        bits
    }

    /// The text form `<n>:<bitstring>`.
    pub fn to_line(&self) -> String {
        let bits: String = self
            .arc_bits()
            .into_iter()
            .map(|b| if b { '1' } else { '0' })
            .collect();
        format!("{}:{}", self.n, bits)
    }

    /// 0/1 adjacency matrix with `A[x][y] = 1` iff `x → y`.
    pub fn adjacency(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, MatrixRole::Adjacency, |i, j| {
            i64::from(self.has_arc(i, j))
        })
    }

    /// The skew-symmetric ±1 matrix `A − Aᵀ`.
    pub fn skew(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, MatrixRole::Skew, |i, j| {
            if i == j {
                0
            } else if self.has_arc(i, j) {
                1
            } else {
                -1
            }
        })
    }

    /// `S²` for the Seidel matrix `S = √−1 (A − Aᵀ)`, i.e. `−(A − Aᵀ)²`.
    ///
    /// Entry `(u, v)` is the dot product of rows `u` and `v` of `A − Aᵀ`, so the
    /// diagonal is `n − 1` and the matrix is symmetric.
    pub fn seidel_squared(&self) -> IntMatrix {
        let n = self.n;
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        IntMatrix::from_fn(n, MatrixRole::SeidelSquared, |u, v| {
            if u == v {
                return n as i64 - 1;
            }
            // Rows agree on w (w ≠ u, v) when both point the same way.
            let others = full & !(1 << u) & !(1 << v);
            let agree = (!(self.out[u] ^ self.out[v]) & others).count_ones() as i64;
            let disagree = (n as i64 - 2) - agree;
            agree - disagree
        })
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::input("permutation length differs from vertex count"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::input("relabelling is not a permutation"));
            }
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Self {
        let mut t = Tournament::empty(self.n);
        for u in 0..self.n {
            let mut mask = self.out[u];
            while mask != 0 {
                let v = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                t.out[perm[u]] |= 1 << perm[v];
            }
        }
        t
    }

    /// Reverses every arc between `subset` and its complement.
    pub fn switch(&self, subset: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &v in subset {
            if v >= self.n {
                return Err(Error::input(format!("vertex {v} out of range")));
            }
            mask |= 1 << v;
        }
        Ok(self.switch_mask(mask))
    }

    /// Switching with the subset given as a vertex bit mask.
    pub fn switch_mask(&self, subset: u64) -> Self {
        let n = self.n;
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let subset = subset & full;
        let complement = full & !subset;
        // Across the cut an out-arc becomes an in-arc and vice versa, which is
        // exactly toggling every bit that lies across the cut.
        let out = (0..n)
            .map(|v| {
                let across = if subset >> v & 1 == 1 { complement } else { subset };
                self.out[v] ^ across
            })
            .collect();
        Tournament { n, out }
    }

    fn in_mask(&self, v: usize) -> u64 {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        full & !self.out[v] & !(1 << v)
    }

    /// Adds a vertex that every existing vertex points into.
    pub fn dominated_extension(&self) -> Result<Self> {
        let n = self.n + 1;
        if n > MAX_ORDER {
            return Err(Error::input("extension exceeds the supported order"));
        }
        let mut out = self.out.clone();
        for mask in out.iter_mut() {
            *mask |= 1 << self.n;
        }
        out.push(0);
        Ok(Tournament { n, out })
    }

    /// The induced subtournament on all vertices but `v`; later vertices shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.n {
            return Err(Error::input(format!(
                "vertex {v} out of range for {} vertices",
                self.n
            )));
        }
        if self.n < 2 {
            return Err(Error::input("cannot delete the only vertex"));
        }
        let low = (1u64 << v) - 1;
        let out = (0..self.n)
            .filter(|&u| u != v)
            .map(|u| {
                let m = self.out[u];
                (m & low) | ((m >> 1) & !low)
            })
            .collect();
        Ok(Tournament { n: self.n - 1, out })
    }

    /// The induced subtournament on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.n) {
            return Err(Error::input(format!("vertex {v} out of range")));
        }
        Self::from_fn(vertices.len(), |i, j| self.has_arc(vertices[i], vertices[j]))
    }

    /// The tournament with every arc reversed.
    pub fn reversed(&self) -> Self {
        let out = (0..self.n).map(|v| self.in_mask(v)).collect();
        Tournament { n: self.n, out }
    }
}

/// The transitive tournament on `n` vertices (`i → j` whenever `i < j`).
pub fn transitive(n: usize) -> Result<Tournament> {
    Tournament::from_fn(n, |_, _| true)
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// The Paley tournament on `Z_q`: `i → j` iff `j − i` is a nonzero square mod `q`.
pub fn paley_tournament(q: usize) -> Result<Tournament> {
    if !is_prime(q) {
        return Err(Error::input(format!("Paley order {q} is not prime")));
    }
    if q % 4 != 3 {
        return Err(Error::input(format!("Paley order {q} is not 3 mod 4")));
    }
    let mut residue = vec![false; q];
    for x in 1..q {
        residue[x * x % q] = true;
    }
    Tournament::from_fn(q, |i, j| residue[(j + q - i) % q])
}

/// The `2d`-vertex tournament with adjacency `[[A₁, J], [0, A₂]]` for two
/// doubly regular tournaments of equal order `d`.
pub fn d_optimal_block(first: &Tournament, second: &Tournament) -> Result<Tournament> {
    if first.n() != second.n() {
        return Err(Error::input(format!(
            "block orders differ: {} and {}",
            first.n(),
            second.n()
        )));
    }
    for (name, t) in [("first", first), ("second", second)] {
        if crate::codes::is_doubly_regular(t).is_none() {
            return Err(Error::input(format!("{name} block is not doubly regular")));
        }
    }
    let d = first.n();
    Tournament::from_fn(2 * d, |i, j| match (i < d, j < d) {
        (true, true) => first.has_arc(i, j),
        (true, false) => true,
        (false, false) => second.has_arc(i - d, j - d),
        (false, true) => unreachable!("i < j"),
    })
}
