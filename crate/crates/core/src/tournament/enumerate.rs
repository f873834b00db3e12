use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{canonical_form, CanonicalForm, Tournament};
use crate::error::{Error, Result};

/// Largest order handled by [`enumerate_tournaments`].
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Largest order accepted by [`switching_class`] (the orbit has `2^(n−1)` members).
pub const MAX_SWITCHING_ORDER: usize = 20;

/// One representative per isomorphism class of `n`-vertex tournaments,
/// sorted by canonical form.
///
/// Classes of order `n` are grown from those of order `n − 1` by attaching a
/// new vertex in all `2^(n−1)` ways and deduplicating canonical forms. Every
/// `n`-tournament arises this way from the class of any vertex-deleted subtournament.
pub fn enumerate_tournaments(n: usize) -> Result<Vec<Tournament>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::input(format!(
            "exhaustive enumeration supports 1 ≤ n ≤ {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let mut classes: BTreeSet<CanonicalForm> =
        BTreeSet::from([canonical_form(&Tournament::empty(1))]);
    for order in 2..=n {
        classes = classes
            .par_iter()
            .map(|form| {
                let base = form.to_tournament();
                (0..1u64 << (order - 1))
                    .map(|outs| canonical_form(&attach_vertex(&base, outs)))
                    .collect::<BTreeSet<_>>()
            })
            .reduce(BTreeSet::new, |mut a, mut b| {
                a.append(&mut b);
                a
            });
    }
    Ok(classes.iter().map(CanonicalForm::to_tournament).collect())
}

/// Adds vertex `n` pointing to the old vertices in `outs` and receiving arcs from the rest.
fn attach_vertex(base: &Tournament, outs: u64) -> Tournament {
    let n = base.n();
    let mut t = Tournament::empty(n + 1);
    for v in 0..n {
        t.out[v] = base.out_mask(v);
        if outs >> v & 1 == 0 {
            t.out[v] |= 1 << n;
        }
    }
    t.out[n] = outs;
    t
}

/// Isomorphism classes of all tournaments switching-equivalent to `t`.
///
/// Switching by `X` and by its complement agree, so only subsets containing
/// vertex 0 are visited.
pub fn switching_class(t: &Tournament) -> Result<BTreeSet<CanonicalForm>> {
    let n = t.n();
    if n > MAX_SWITCHING_ORDER {
        return Err(Error::input(format!(
            "switching classes are limited to {MAX_SWITCHING_ORDER} vertices, got {n}"
        )));
    }
    Ok((0..1u64 << (n - 1))
        .into_par_iter()
        .fold(BTreeSet::new, |mut set, m| {
            set.insert(canonical_form(&t.switch_mask(m << 1 | 1)));
            set
        })
        .reduce(BTreeSet::new, |mut a, mut b| {
            a.append(&mut b);
            a
        }))
}
