mod common;

use common::{random_tournament, rng};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use tourney_codes::spectral::{
    char_identity_residual, is_main_exact, seidel_matrix, shifted_main_spectrum, HermitianMatrix,
    Spectrum,
};
use tourney_codes::tournament::{enumerate_tournaments, paley_tournament};
use tourney_codes::Tolerances;

#[test]
fn float_and_exact_main_tests_agree_on_all_small_classes() {
    let tol = Tolerances::default();
    for n in 2..=7 {
        for t in enumerate_tournaments(n).unwrap() {
            let spec = Spectrum::of_tournament(&t, &tol);
            for e in spec.values() {
                assert_eq!(e.main, is_main_exact(&t, e.tau), "{t} tau={}", e.tau);
            }
        }
    }
}

#[test]
fn perturbation_changes_no_multiplicity() {
    let tol = Tolerances::default();
    let mut r = rng(3);
    for t in [paley_tournament(7).unwrap(), paley_tournament(11).unwrap()] {
        let s = seidel_matrix(&t);
        let n = t.n();
        let mut noise = DMatrix::from_fn(n, n, |_, _| {
            Complex64::new(r.gen_range(-1e-12..1e-12), r.gen_range(-1e-12..1e-12))
        });
        noise = (&noise + noise.adjoint()) * Complex64::new(0.5, 0.0);
        let perturbed = HermitianMatrix::new(s.as_matrix() + noise).unwrap();
        let a: Vec<usize> = Spectrum::of_matrix(&s, &tol).values().iter().map(|e| e.mult).collect();
        let b: Vec<usize> = Spectrum::of_matrix(&perturbed, &tol).values().iter().map(|e| e.mult).collect();
        assert_eq!(a, b);
    }
}

#[test]
fn odd_orders_have_a_zero_eigenvalue() {
    let mut r = rng(5);
    for _ in 0..100 {
        let n = 2 * r.gen_range(1..=5) + 1;
        let spec = Spectrum::of_tournament(&random_tournament(&mut r, n), &Tolerances::default());
        let min = spec.values().iter().map(|e| e.tau.abs()).fold(f64::INFINITY, f64::min);
        assert!(min <= 1e-7);
    }
}

#[test]
fn identity_checks_on_general_hermitian_input() {
    // A real symmetric matrix with a repeated eigenvalue, not from a tournament.
    let h = HermitianMatrix::from_fn(4, |i, j| {
        Complex64::new(if i == j { 2.0 } else { (i + j) as f64 * 0.25 }, 0.0)
    })
    .unwrap();
    let tol = Tolerances::default();
    let res = char_identity_residual(&h, 1.3, &[-4.0, 0.1, 7.5], &tol);
    assert!(res.max_residual < 1e-9);
    assert!(shifted_main_spectrum(&h, 1.3, &tol).unwrap().passes());
    assert!(shifted_main_spectrum(&h, -0.4, &tol).unwrap().passes());
}

mod shift_identities {
    use super::*;
    use proptest::prelude::*;
    use tourney_codes::tournament::{pair_count, Tournament};

    fn tournament() -> impl Strategy<Value = Tournament> {
        (2..=10usize).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), pair_count(n))
                .prop_map(move |b| Tournament::build(n, &b).unwrap())
        })
    }

    proptest! {
        #[test]
        fn characteristic_identity(t in tournament(), a in -3.0f64..3.0, x in -20.0f64..20.0) {
            let h = seidel_matrix(&t);
            let r = char_identity_residual(&h, a, &[x], &Tolerances::default());
            prop_assert!(r.max_residual < 1e-6, "{}", r.max_residual);
        }

        #[test]
        fn main_eigenvalues_interlace(t in tournament(), a in prop_oneof![-3.0f64..-0.05, 0.05f64..3.0]) {
            let v = shifted_main_spectrum(&seidel_matrix(&t), a, &Tolerances::default()).unwrap();
            prop_assert!(v.passes(), "{t} a={a}: {:?}", v.violations);
        }
    }
}
