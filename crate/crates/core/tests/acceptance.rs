//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{order_four, random_tournament, rng};
use rand::Rng;
use tourney_codes::codes::{
    classify_code, count_tight_codes, is_doubly_regular, skew_hadamard_check, zero_pair_sweep,
    Certificate, DrtParams,
};
use tourney_codes::representation::{
    absolute_bound, analyze, check_gram, embed, multiplicity_profile, rep_dimension,
    verify_embedding, RepType,
};
use tourney_codes::spectral::{
    char_identity_residual, seidel_matrix, shifted_main_spectrum, Spectrum,
};
use tourney_codes::tournament::{
    d_optimal_block, enumerate_tournaments, paley_tournament, switching_class, Tournament,
};
use tourney_codes::Tolerances;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {{
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($fmt)+));
        }
    }};
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let spent = start.elapsed();
    if spent > limit {
        Err(format!("{what} took {spent:.2?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

fn classes(max_n: usize) -> Vec<Tournament> {
    (2..=max_n).flat_map(|n| enumerate_tournaments(n).unwrap()).collect()
}

fn order_four_rep() -> Outcome {
    let start = Instant::now();
    let got: Vec<usize> = order_four().iter().map(|t| rep_dimension(t).unwrap()).collect();
    within(start, Duration::from_secs(1), "order-4 analysis")?;
    ensure!(got == [3, 2, 3, 2], "Rep values {got:?}");
    Ok(format!("Rep = {got:?}"))
}

fn table_one() -> Outcome {
    let start = Instant::now();
    let quick: Vec<usize> = (1..=4).map(|d| count_tight_codes(d, None).unwrap().count).collect();
    within(start, Duration::from_secs(10), "d <= 4")?;
    ensure!(quick == [1, 2, 1, 4], "d = 1..4 counts {quick:?}");
    let full: Vec<usize> = (5..=6).map(|d| count_tight_codes(d, None).unwrap().count).collect();
    ensure!(full == [1, 8], "d = 5, 6 counts {full:?}");
    Ok(format!("counts {quick:?} {full:?} in {:.2?}", start.elapsed()))
}

fn seven_vertex_scan() -> Outcome {
    let start = Instant::now();
    let all = enumerate_tournaments(7).unwrap();
    ensure!(all.len() == 456, "{} classes", all.len());
    let low: Vec<&Tournament> =
        all.iter().filter(|t| rep_dimension(t).unwrap() == 3).collect();
    within(start, Duration::from_secs(60), "n = 7 scan")?;
    ensure!(low.len() == 1, "{} classes with Rep 3", low.len());
    let params = is_doubly_regular(low[0]);
    ensure!(params == Some(DrtParams { n: 7, k: 3, lambda: 1 }), "parameters {params:?}");
    Ok(format!("1 of 456 classes, (7, 3, 1), {:.2?}", start.elapsed()))
}

fn tight_equivalences() -> Outcome {
    let mut checked = 0;
    for n in [3, 7] {
        let d = (n - 1) / 2;
        for t in enumerate_tournaments(n).unwrap() {
            let tight = rep_dimension(&t).unwrap() == d;
            ensure!(tight == is_doubly_regular(&t).is_some(), "{t}: Rep = d is {tight}");
            checked += 1;
        }
    }
    let class = switching_class(&paley_tournament(7).unwrap().dominated_extension().unwrap())
        .unwrap();
    for c in &class {
        let t = c.to_tournament();
        ensure!(rep_dimension(&t).unwrap() == 4, "{t}: Rep != 4");
        ensure!(skew_hadamard_check(&t), "{t}: not skew Hadamard");
    }
    Ok(format!("{checked} odd-order classes, {} switching-class members", class.len()))
}

fn half_bound_dichotomy() -> Outcome {
    let tol = Tolerances::default();
    let p7 = paley_tournament(7).unwrap();
    for v in 0..7 {
        let t = p7.delete_vertex(v).unwrap();
        let r = classify_code(&t, &tol).unwrap();
        ensure!(r.certificate == Certificate::DrtMinusVertex, "vertex {v}: {:?}", r.certificate);
        ensure!(r.n == 2 * r.rep_dim, "vertex {v}: n = {}, Rep = {}", r.n, r.rep_dim);
        let spec = Spectrum::of_tournament(&t, &tol);
        let shape: Vec<(usize, f64)> = spec.values().iter().map(|e| (e.mult, e.tau)).collect();
        let expected = [(2, -1.0), (1, -1.0), (1, 1.0), (2, 1.0)];
        let squares = [7.0, 1.0, 1.0, 7.0];
        ensure!(shape.len() == 4, "vertex {v}: spectrum {shape:?}");
        for ((m, tau), ((em, sign), sq)) in shape.iter().zip(expected.iter().zip(squares)) {
            ensure!(
                m == em && tau.signum() == *sign && (tau * tau - sq).abs() <= 1e-7,
                "vertex {v}: spectrum {shape:?}"
            );
        }
    }
    let p3 = paley_tournament(3).unwrap();
    let block = d_optimal_block(&p3, &p3).unwrap();
    let r = classify_code(&block, &tol).unwrap();
    match &r.certificate {
        Certificate::BlockForm(c) => ensure!(c.k == 3 && c.l == 2, "k = {}, l = {}", c.k, c.l),
        other => return Err(format!("block tournament certificate {other:?}")),
    }
    ensure!(r.rep_dim == 3 && r.n == 6, "block tournament Rep = {}", r.rep_dim);
    Ok("7 vertex deletions and the 6-vertex block form".into())
}

fn embeddings() -> Outcome {
    let tol = Tolerances::default();
    let mut worst = 0.0f64;
    let all = classes(7);
    for t in &all {
        let (report, e) = embed(t, &tol).map_err(|err| format!("{t}: {err}"))?;
        let gram = check_gram(t, &report).map_err(|err| format!("{t}: {err}"))?;
        ensure!(gram.rank == report.rep_dim && e.dim == report.rep_dim, "{t}: rank {}", gram.rank);
        let v = verify_embedding(&e, t).unwrap();
        ensure!(v.max_deviation <= 1e-7, "{t}: deviation {:.3e}", v.max_deviation);
        worst = worst.max(v.max_deviation);
    }
    Ok(format!("{} classes, max deviation {worst:.2e}", all.len()))
}

fn spectral_identities() -> Outcome {
    let tol = Tolerances::default();
    let mut r = rng(2024);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let n = r.gen_range(2..=8);
        let t = random_tournament(&mut r, n);
        let a = r.gen_range(-3.0..=3.0);
        let xs: Vec<f64> = (0..20).map(|_| r.gen_range(-2.0 * n as f64..2.0 * n as f64)).collect();
        let res = char_identity_residual(&seidel_matrix(&t), a, &xs, &tol);
        ensure!(res.max_residual <= 1e-8, "{t} a={a}: residual {:.3e}", res.max_residual);
        worst = worst.max(res.max_residual);
    }
    for _ in 0..100 {
        let n = r.gen_range(2..=8);
        let t = random_tournament(&mut r, n);
        let mut a = 0.0;
        while a == 0.0 {
            a = r.gen_range(-3.0..=3.0);
        }
        let v = shifted_main_spectrum(&seidel_matrix(&t), a, &tol).unwrap();
        ensure!(v.passes(), "{t} a={a}: {:?}", v.violations);
    }
    Ok(format!("max residual {worst:.2e}, 100 interlacing cases"))
}

fn falsification_sweep() -> Outcome {
    let tol = Tolerances::default();
    let mut r = rng(7);
    for _ in 0..50 {
        let n = r.gen_range(2..=7);
        let t = random_tournament(&mut r, n);
        let rep = rep_dimension(&t).unwrap();
        let shifts: Vec<f64> = (0..1000).map(|_| r.gen_range(-10.0..10.0)).collect();
        for (a, m) in multiplicity_profile(&t, &shifts, &tol) {
            ensure!(m <= n - rep, "{t} a={a}: multiplicity {m} > {}", n - rep);
        }
    }
    Ok("50 tournaments x 1000 shifts".into())
}

fn zero_pair() -> Outcome {
    let tol = Tolerances::default();
    let mut checked = 0;
    for n in [4, 6] {
        let sweep = zero_pair_sweep(n, &tol).unwrap();
        ensure!(sweep.passes(), "n = {n}: {} counterexamples", sweep.counterexamples.len());
        checked += sweep.classes_checked;
    }
    Ok(format!("{checked} classes, no counterexample"))
}

fn invariants() -> Outcome {
    let tol = Tolerances::default();
    let all = classes(7);
    for t in &all {
        let n = t.n();
        let spec = Spectrum::of_tournament(t, &tol);
        let v = spec.values();
        for (lo, hi) in v.iter().zip(v.iter().rev()) {
            ensure!(
                (lo.tau + hi.tau).abs() <= 1e-7
                    && lo.mult == hi.mult
                    && (lo.beta - hi.beta).abs() <= 1e-7,
                "{t}: asymmetric pair {lo:?} {hi:?}"
            );
        }
        let beta_sum: f64 = v.iter().map(|e| e.beta * e.beta).sum();
        ensure!((beta_sum - 1.0).abs() <= 1e-8, "{t}: sum of squared angles {beta_sum}");
        let trace: f64 = v.iter().map(|e| e.mult as f64 * e.tau * e.tau).sum();
        let expected = (n * (n - 1)) as f64;
        ensure!((trace - expected).abs() <= 1e-6 * (n * n) as f64, "{t}: trace {trace}");

        let report = analyze(t, &tol).unwrap();
        ensure!(n <= absolute_bound(report.rep_dim), "{t}: n exceeds the bound");

        let nf = n as f64;
        let w = |i: usize| if v[i].main { nf * v[i].beta * v[i].beta } else { 0.0 };
        let case1 = !v[0].main;
        let case2 = v[0].main && v[0].mult > 1;
        let case3 = v[0].mult == 1 && !v[1].main && {
            let c2 = w(0) / (v[0].tau - v[1].tau)
                + (2..v.len()).map(|i| w(i) / (v[i].tau - v[1].tau)).sum::<f64>();
            c2 < -1e-9
        };
        let hits = [case1, case2, case3].iter().filter(|&&c| c).count();
        ensure!(hits <= 1, "{t}: cases overlap");
        let expected_kind = match (case1, case2, case3) {
            (true, _, _) => RepType::Type1,
            (_, true, _) => RepType::Type2,
            (_, _, true) => RepType::Type3,
            _ => RepType::Type4,
        };
        ensure!(report.class.kind == expected_kind, "{t}: {:?}", report.class.kind);
    }
    Ok(format!("{} classes", all.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("AC1 order-4 Rep values", order_four_rep),
        ("AC2 tight code counts", table_one),
        ("AC3 exhaustive n = 7 scan", seven_vertex_scan),
        ("AC4 tight characterizations", tight_equivalences),
        ("AC5 n = 2d dichotomy", half_bound_dichotomy),
        ("AC6 embeddings", embeddings),
        ("AC7 spectral identities", spectral_identities),
        ("AC8 falsification sweep", falsification_sweep),
        ("AC9 zero-pair exclusion", zero_pair),
        ("AC10 spectral invariants", invariants),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let spent = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail} [{spent:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why} [{spent:.2?}]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
