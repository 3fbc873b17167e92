//! Frobenius-Euler numbers and polynomials of every order.
//!
//! The defining generating function is `(1-λ)/(e^t-λ) · e^{xt}`; its `t^n/n!`
//! coefficient is the monic degree-`n` polynomial `H_n(x|λ)` with coefficients
//! in `Q(λ)`, and `H_n(λ) = H_n(0|λ)` is the `n`-th Frobenius-Euler number.
//! Order-`r` variants come from the `r`-th power of the kernel; order 0
//! degenerates to `x^n`.
//!
//! Numbers are produced by the recurrence solved from
//! `H_n(1|λ) - λ H_n(λ) = (1-λ) δ_{0,n}` and memoized in shared tables;
//! [`fe_numbers_via_series`] is the independent construction through series
//! inversion. λ is never specialized here; `λ - 1` is a unit of `Q(λ)`.

use crate::lrat::LRat;
use crate::rat::{binomial_rat, factorial};
use crate::series::LSeries;
use crate::xpoly::XPoly;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

static NUMBERS: Lazy<Mutex<Vec<LRat>>> = Lazy::new(|| Mutex::new(vec![LRat::one()]));
static HIGHER: Lazy<Mutex<HashMap<usize, Vec<LRat>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// The `n`-th Frobenius-Euler number `H_n(λ)` as an element of `Q(λ)`.
///
/// `H_0 = 1` and for `n ≥ 1`, `H_n = (Σ_{l<n} C(n,l) H_l) / (λ-1)`.
pub fn fe_number(n: usize) -> LRat {
    let mut table = NUMBERS.lock().unwrap();
    while table.len() <= n {
        let m = table.len();
        let mut sum = LRat::zero();
        for (l, h) in table.iter().enumerate() {
            sum = &sum + &(h * &LRat::from_rat(binomial_rat(m, l)));
        }
        let next = sum.checked_div(&LRat::lambda_minus_one()).unwrap();
        table.push(next);
    }
    table[n].clone()
}

/// The kernel series `(e^t - λ)/(1 - λ)` truncated at `order`; its reciprocal
/// generates the Frobenius-Euler numbers.
pub fn kernel_series(order: usize) -> LSeries {
    let inv = LRat::one_minus_lambda().inv().unwrap();
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(LRat::one());
    for k in 1..=order {
        coeffs.push(
            inv.checked_div(&LRat::from_rat(factorial(k)))
                .unwrap(),
        );
    }
    LSeries::new(order, coeffs)
}

/// `H_0 .. H_N` computed by series inversion of the generating function — an
/// independent route that must agree with [`fe_number`].
pub fn fe_numbers_via_series(n_max: usize) -> Vec<LRat> {
    let recip = kernel_series(n_max).reciprocal().unwrap();
    (0..=n_max)
        .map(|n| recip.coeff(n) * &LRat::from_rat(factorial(n)))
        .collect()
}

/// `H_n^{(r)}(λ)` for `n ≤ N`, by series inversion of the `r`-th kernel
/// power. Used as an oracle for [`fe_number_higher`].
pub fn fe_numbers_higher_via_series(n_max: usize, r: usize) -> Vec<LRat> {
    let recip = kernel_series(n_max).reciprocal().unwrap().power(r);
    (0..=n_max)
        .map(|n| recip.coeff(n) * &LRat::from_rat(factorial(n)))
        .collect()
}

/// The order-`r` Frobenius-Euler number `H_n^{(r)}(λ)`, by iterated binomial
/// convolution of the order-1 sequence. `r = 0` gives `δ_{0,n}`.
pub fn fe_number_higher(n: usize, r: usize) -> LRat {
    if r == 1 {
        return fe_number(n);
    }
    let mut memo = HIGHER.lock().unwrap();
    let seq = memo.entry(r).or_insert_with(Vec::new);
    if seq.len() > n {
        return seq[n].clone();
    }
    drop(memo);

    // h^{(r)} = h^{(r-1)} * H under the binomial convolution
    let mut prev: Vec<LRat> = vec![LRat::one()]; // order 0: [1, 0, 0, ...]
    prev.resize(n + 1, LRat::zero());
    let base: Vec<LRat> = (0..=n).map(fe_number).collect();
    for _ in 0..r {
        let mut next = vec![LRat::zero(); n + 1];
        for (m, slot) in next.iter_mut().enumerate() {
            let mut sum = LRat::zero();
            for k in 0..=m {
                if prev[m - k].is_zero() {
                    continue;
                }
                sum = &sum + &(&(&prev[m - k] * &base[k]) * &LRat::from_rat(binomial_rat(m, k)));
            }
            *slot = sum;
        }
        prev = next;
    }

    let mut memo = HIGHER.lock().unwrap();
    let seq = memo.entry(r).or_insert_with(Vec::new);
    if seq.len() < n + 1 {
        *seq = prev;
    }
    seq[n].clone()
}

/// The Frobenius-Euler polynomial `H_n(x|λ) = Σ_l C(n,l) H_{n-l}(λ) x^l`.
pub fn fe_poly(n: usize) -> XPoly {
    fe_poly_higher(n, 1)
}

/// The order-`r` polynomial `H_n^{(r)}(x|λ) = Σ_l C(n,l) H^{(r)}_{n-l}(λ) x^l`.
pub fn fe_poly_higher(n: usize, r: usize) -> XPoly {
    let coeffs = (0..=n)
        .map(|l| &LRat::from_rat(binomial_rat(n, l)) * &fe_number_higher(n - l, r))
        .collect();
    XPoly::new(coeffs)
}

/// The difference operator `Δ_λ p(x) = p(x+1) - λ p(x)`.
pub fn delta_lambda(p: &XPoly) -> XPoly {
    &p.shift(1) - &p.scale(&LRat::lambda())
}

/// `Δ_λ` iterated `r` times; `r = 0` is the identity.
pub fn delta_lambda_iter(p: &XPoly, r: usize) -> XPoly {
    let mut q = p.clone();
    for _ in 0..r {
        q = delta_lambda(&q);
    }
    q
}

/// `H_n(x|λ)` with `λ` replaced by `λ^{-1}` in every coefficient.
pub fn fe_poly_inverted_lambda(n: usize) -> XPoly {
    fe_poly(n).invert_lambda()
}
