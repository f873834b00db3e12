use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::ValueEnum;
use serde::Serialize;
use tourney_codes::codes::{
    classify_code, count_tight_codes, is_doubly_regular, skew_hadamard_check, zero_pair_sweep,
    Certificate, DrtParams,
};
use tourney_codes::representation::{analyze, embed};
use tourney_codes::tournament::{d_optimal_block, enumerate_tournaments, paley_tournament, switching_class};
use tourney_codes::{Error, Tolerances, Tournament};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn(&Tolerances) -> Result<String, String>;

const QUICK: [(&str, Check); 6] = [
    ("order-four-rep", order_four_rep),
    ("tight-counts-d1-d4", counts_quick),
    ("zero-pair-sweep", zero_pair),
    ("paley-seven", paley_seven),
    ("half-bound-dichotomy", half_bound),
    ("exhaustive-n2-n6", |tol| exhaustive(2..=6, tol)),
];

const FULL: [(&str, Check); 4] = [
    ("tight-counts-d5-d6", counts_full),
    ("scan-n7", scan_seven),
    ("exhaustive-n7", |tol| exhaustive(7..=7, tol)),
    ("switching-class-n8", switching_eight),
];

/// Runs the checks of `level` in a fixed order. A check that errors or
/// panics is reported as failed; the remaining checks still run.
pub fn run_checks(level: Level, tol: &Tolerances) -> Vec<CheckOutcome> {
    let extra: &[(&str, Check)] = if level == Level::Full { &FULL } else { &[] };
    QUICK
        .iter()
        .chain(extra)
        .map(|&(id, check)| {
            let result = catch_unwind(AssertUnwindSafe(|| check(tol)))
                .unwrap_or_else(|_| Err("check panicked".to_string()));
            match result {
                Ok(detail) => CheckOutcome { id, passed: true, detail },
                Err(detail) => CheckOutcome { id, passed: false, detail },
            }
        })
        .collect()
}

fn fail(e: Error) -> String {
    e.to_string()
}

fn order_four() -> Vec<Tournament> {
    let rows: [[[u8; 4]; 4]; 4] = [
        [[0, 1, 1, 1], [0, 0, 1, 1], [0, 0, 0, 1], [0, 0, 0, 0]],
        [[0, 1, 1, 1], [0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0]],
        [[0, 0, 1, 1], [1, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]],
        [[0, 0, 1, 1], [1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 0, 0]],
    ];
    rows.iter()
        .map(|m| Tournament::from_adjacency(&m.map(|r| r.to_vec())).expect("valid tournament"))
        .collect()
}

fn order_four_rep(tol: &Tolerances) -> Result<String, String> {
    let got = order_four()
        .iter()
        .map(|t| analyze(t, tol).map(|r| r.rep_dim))
        .collect::<Result<Vec<_>, _>>()
        .map_err(fail)?;
    if got == [3, 2, 3, 2] {
        Ok(format!("{got:?}"))
    } else {
        Err(format!("expected [3, 2, 3, 2], got {got:?}"))
    }
}

fn counts(ds: std::ops::RangeInclusive<usize>, expected: &[usize]) -> Result<String, String> {
    let got = ds
        .map(|d| count_tight_codes(d, None).map(|c| c.count))
        .collect::<Result<Vec<_>, _>>()
        .map_err(fail)?;
    if got == expected {
        Ok(format!("{got:?}"))
    } else {
        Err(format!("expected {expected:?}, got {got:?}"))
    }
}

fn counts_quick(_: &Tolerances) -> Result<String, String> {
    counts(1..=4, &[1, 2, 1, 4])
}

fn counts_full(_: &Tolerances) -> Result<String, String> {
    counts(5..=6, &[1, 8])
}

fn zero_pair(tol: &Tolerances) -> Result<String, String> {
    let mut checked = 0;
    for n in [4, 6] {
        let sweep = zero_pair_sweep(n, tol).map_err(fail)?;
        if !sweep.passes() {
            return Err(format!("n = {n}: counterexample {}", sweep.counterexamples[0]));
        }
        checked += sweep.classes_checked;
    }
    Ok(format!("{checked} classes"))
}

fn paley_seven(tol: &Tolerances) -> Result<String, String> {
    let p7 = paley_tournament(7).map_err(fail)?;
    let r = classify_code(&p7, tol).map_err(fail)?;
    match r.certificate {
        Certificate::Drt(DrtParams { n: 7, k: 3, lambda: 1 }) if r.rep_dim == 3 => Ok("DRT(7,3,1), Rep 3".into()),
        other => Err(format!("Rep {} with certificate {other:?}", r.rep_dim)),
    }
}

fn half_bound(tol: &Tolerances) -> Result<String, String> {
    let p7 = paley_tournament(7).map_err(fail)?;
    for v in 0..7 {
        let r = classify_code(&p7.delete_vertex(v).map_err(fail)?, tol).map_err(fail)?;
        if r.certificate != Certificate::DrtMinusVertex || r.rep_dim != 3 {
            return Err(format!("Paley-7 minus {v}: Rep {}, {:?}", r.rep_dim, r.certificate));
        }
    }
    let p3 = paley_tournament(3).map_err(fail)?;
    let r = classify_code(&d_optimal_block(&p3, &p3).map_err(fail)?, tol).map_err(fail)?;
    match &r.certificate {
        Certificate::BlockForm(c) if c.k == 3 && c.l == 2 && r.rep_dim == 3 => {
            Ok("Paley-7 deletions and block form (k=3, l=2)".into())
        }
        other => Err(format!("block tournament: Rep {}, {other:?}", r.rep_dim)),
    }
}

/// Classification with its built-in cross-checks plus a verified embedding
/// for every isomorphism class of the given orders.
fn exhaustive(orders: std::ops::RangeInclusive<usize>, tol: &Tolerances) -> Result<String, String> {
    let mut checked = 0;
    for n in orders {
        for t in enumerate_tournaments(n).map_err(fail)? {
            let (report, _) = embed(&t, tol).map_err(|e| format!("{t}: {e}"))?;
            if n >= 3 {
                classify_code(&t, tol).map_err(|e| format!("{t}: {e}"))?;
            }
            if n % 4 == 3 && (report.rep_dim == (n - 1) / 2) != is_doubly_regular(&t).is_some() {
                return Err(format!("{t}: tightness and double regularity disagree"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} classes"))
}

fn scan_seven(tol: &Tolerances) -> Result<String, String> {
    let all = enumerate_tournaments(7).map_err(fail)?;
    let mut low = Vec::new();
    for t in &all {
        if analyze(t, tol).map_err(|e| format!("{t}: {e}"))?.rep_dim == 3 {
            low.push(t);
        }
    }
    match low.as_slice() {
        [t] if is_doubly_regular(t) == Some(DrtParams { n: 7, k: 3, lambda: 1 }) => {
            Ok(format!("1 of {} classes has Rep 3", all.len()))
        }
        _ => Err(format!("{} classes with Rep 3", low.len())),
    }
}

fn switching_eight(tol: &Tolerances) -> Result<String, String> {
    let ext = paley_tournament(7).and_then(|p| p.dominated_extension()).map_err(fail)?;
    let class = switching_class(&ext).map_err(fail)?;
    for c in &class {
        let t = c.to_tournament();
        let rep = analyze(&t, tol).map_err(|e| format!("{t}: {e}"))?.rep_dim;
        if rep != 4 || !skew_hadamard_check(&t) {
            return Err(format!("{t}: Rep {rep}"));
        }
    }
    Ok(format!("{} classes, all Rep 4 and skew Hadamard", class.len()))
}
