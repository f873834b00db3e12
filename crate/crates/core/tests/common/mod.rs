#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tourney_codes::tournament::{pair_count, Tournament};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_tournament(rng: &mut impl Rng, n: usize) -> Tournament {
    let bits: Vec<bool> = (0..pair_count(n)).map(|_| rng.gen()).collect();
    Tournament::build(n, &bits).unwrap()
}

pub fn matrix(rows: [[u8; 4]; 4]) -> Tournament {
    Tournament::from_adjacency(&rows.map(|r| r.to_vec())).unwrap()
}

/// The four order-4 tournaments (a)–(d) in the order they are usually listed.
pub fn order_four() -> [Tournament; 4] {
    [
        matrix([[0, 1, 1, 1], [0, 0, 1, 1], [0, 0, 0, 1], [0, 0, 0, 0]]),
        matrix([[0, 1, 1, 1], [0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0]]),
        matrix([[0, 0, 1, 1], [1, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]]),
        matrix([[0, 0, 1, 1], [1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 0, 0]]),
    ]
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every bijection.
pub fn isomorphic_brute(a: &Tournament, b: &Tournament) -> bool {
    a.n() == b.n()
        && permutations(a.n())
            .iter()
            .any(|p| a.relabel(p).unwrap() == *b)
}
