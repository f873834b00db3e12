//! Exact main-eigenvalue test through the integer Krylov space of `S²`.
//!
//! `j` has a nonzero projection onto the `λ`-eigenspace of `S²` iff `λ` is a
//! root of the minimal polynomial of `j` with respect to `S²`. Since
//! `conj(S) = −S` and `j` is real, the eigenspaces of `τ` and `−τ` carry the same
//! main angle, so `τ` is main iff `τ²` is a root of that polynomial.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::tournament::{IntMatrix, Tournament};

/// Minimal polynomial of `j` under `S²`, as integer coefficients from the
/// constant term upwards (monic). Its roots are simple and are exactly the
/// eigenvalues of `S²` whose eigenspaces meet `j`.
pub fn main_polynomial(s2: &IntMatrix) -> Vec<BigInt> {
    let n = s2.n();
    // Each basis row: reduced vector, pivot, and its coefficients over the Krylov vectors.
    let mut basis: Vec<(Vec<BigRational>, usize, Vec<BigRational>)> = Vec::new();
    let mut krylov: Vec<BigInt> = vec![BigInt::one(); n];
    for k in 0..=n {
        let mut r: Vec<BigRational> = krylov.iter().cloned().map(BigRational::from_integer).collect();
        let mut c: Vec<BigRational> = vec![BigRational::zero(); k + 1];
        c[k] = BigRational::one();
        for (row, pivot, coeffs) in &basis {
            if r[*pivot].is_zero() {
                continue;
            }
            let f = &r[*pivot] / &row[*pivot];
            for (x, y) in r.iter_mut().zip(row) {
                *x -= &f * y;
            }
            for (x, y) in c.iter_mut().zip(coeffs) {
                *x -= &f * y;
            }
        }
        match r.iter().position(|x| !x.is_zero()) {
            None => {
                return c
                    .into_iter()
                    .map(|q| {
                        assert!(q.is_integer(), "monic factor of an integer polynomial");
                        q.to_integer()
                    })
                    .collect();
            }
            Some(pivot) => basis.push((r, pivot, c)),
        }
        krylov = multiply(s2, &krylov);
    }
    unreachable!("the Krylov sequence becomes dependent within n + 1 steps")
}

fn multiply(m: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    let n = m.n();
    (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| m.get(i, j) != 0)
                .map(|j| &v[j] * m.get(i, j))
                .sum()
        })
        .collect()
}

/// Decides whether `lambda` (an eigenvalue of `S²` known to floating-point
/// accuracy) is a root of `poly`.
///
/// The polynomial and its derivative are evaluated exactly at the rational
/// value of `lambda`; the Newton step `|p/p'|` is the distance to the nearest
/// simple root to first order.
pub(crate) fn is_root(poly: &[BigInt], lambda: f64) -> bool {
    let Some(x) = BigRational::from_float(lambda) else {
        return false;
    };
    let mut p = BigRational::zero();
    let mut dp = BigRational::zero();
    for coeff in poly.iter().rev() {
        dp = &dp * &x + &p;
        p = &p * &x + BigRational::from_integer(coeff.clone());
    }
    if p.is_zero() {
        return true;
    }
    if dp.is_zero() {
        return false;
    }
    let step = (p / dp).abs().to_f64().unwrap_or(f64::INFINITY);
    step < 1e-8 * lambda.abs().max(1.0)
}

/// Exact decision of whether the Seidel eigenvalue `tau` of `t` is main.
pub fn is_main_exact(t: &Tournament, tau: f64) -> bool {
    is_root(&main_polynomial(&t.seidel_squared()), tau * tau)
}
