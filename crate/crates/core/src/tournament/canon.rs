//! Canonical labelling by individualisation and refinement.
//!
//! Every node of the search tree carries an ordered partition of the vertices
//! that is refined until each vertex in a cell sees the same number of
//! out-neighbours in every cell. A non-discrete node branches on its first
//! non-singleton cell. Among the children of a node only those whose refined
//! quotient invariant is smallest are explored; the canonical form is the
//! lexicographically smallest bit pattern over the surviving leaves.

use super::{pair_count, Tournament};

/// Isomorphism-invariant key of a tournament.
///
/// Two tournaments have equal keys iff they are isomorphic. The ordering is
/// by vertex count, then by the packed bit pattern of the canonical relabelling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// The canonical representative itself.
    pub fn to_tournament(&self) -> Tournament {
        let bits: Vec<bool> = (0..pair_count(self.n))
            .map(|k| self.bytes[k / 8] >> (7 - k % 8) & 1 == 1)
            .collect();
        Tournament::build(self.n, &bits).expect("canonical bytes encode a valid tournament")
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalForm({})", self.to_tournament().to_line())
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_tournament().to_line())
    }
}

pub fn canonical_form(t: &Tournament) -> CanonicalForm {
    canonical_labeling(t).0
}

/// Canonical form together with a relabelling `perm` such that
/// `t.relabel(perm)` is the canonical representative.
pub fn canonical_labeling(t: &Tournament) -> (CanonicalForm, Vec<usize>) {
    let mut cells = vec![(0..t.n()).collect::<Vec<_>>()];
    refine(t, &mut cells);
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    search(t, cells, &mut best);
    let (bytes, order) = best.expect("search visits at least one leaf");
    let mut perm = vec![0; t.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    (CanonicalForm { n: t.n(), bytes }, perm)
}

type Cells = Vec<Vec<usize>>;

fn search(t: &Tournament, cells: Cells, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let code = leaf_code(t, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };

    let mut children: Vec<(Vec<u32>, Cells)> = cells[target]
        .iter()
        .map(|&v| {
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            refine(t, &mut child);
            (quotient_invariant(t, &child), child)
        })
        .collect();
    let min_inv = children.iter().map(|(inv, _)| inv).min().cloned();
    children.retain(|(inv, _)| Some(inv) == min_inv.as_ref());
    for (_, child) in children {
        search(t, child, best);
    }
}

/// Refines an ordered partition to the coarsest equitable one below it.
fn refine(t: &Tournament, cells: &mut Cells) {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Cells = Vec::with_capacity(t.n());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks
                        .iter()
                        .map(|m| (t.out_mask(v) & m).count_ones())
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

/// Cell sizes followed by the out-degree quotient matrix of an equitable partition.
fn quotient_invariant(t: &Tournament, cells: &Cells) -> Vec<u32> {
    let masks: Vec<u64> = cells
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let mut inv: Vec<u32> = cells.iter().map(|c| c.len() as u32).collect();
    for cell in cells {
        let rep = t.out_mask(cell[0]);
        inv.extend(masks.iter().map(|m| (rep & m).count_ones()));
    }
    inv
}

fn leaf_code(t: &Tournament, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut bytes = vec![0u8; pair_count(n).div_ceil(8)];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if t.has_arc(order[i], order[j]) {
                bytes[k / 8] |= 1 << (7 - k % 8);
            }
            k += 1;
        }
    }
    bytes
}
