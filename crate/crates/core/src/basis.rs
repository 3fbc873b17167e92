//! Expansion of polynomials in the (order-`r`) Frobenius-Euler basis.
//!
//! `{H_0^{(r)}, …, H_n^{(r)}}` is a monic triangular basis of the polynomials
//! of degree ≤ n over `Q(λ)`. Coefficients are read off from derivative data:
//! for order 1, `b_k = (p^{(k)}(1) - λ p^{(k)}(0)) / ((1-λ) k!)`; for order
//! `r`, `C_k` is the `x^k` coefficient of `Δ_λ^r p` divided by `(1-λ)^r`.
//! The equivalent finite sum `C_k = Σ_j C(r,j) (-λ)^{r-j} p^{(k)}(j) /
//! ((1-λ)^r k!)` is kept as an independent route; the two must agree.

use crate::frobenius::{delta_lambda_iter, fe_poly, fe_poly_higher};
use crate::lrat::LRat;
use crate::rat::{binomial_rat, factorial};
use crate::xpoly::XPoly;
use serde::{Deserialize, Serialize};

/// Coefficients of `p = Σ_k coeffs[k] · H_k^{(order)}(x|λ)`.
///
/// JSON form: `{"order": r, "coeffs": [LRat…]}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FEExpansion {
    pub order: usize,
    pub coeffs: Vec<LRat>,
}

impl FEExpansion {
    pub fn new(order: usize, mut coeffs: Vec<LRat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        FEExpansion { order, coeffs }
    }

    pub fn coeff(&self, k: usize) -> LRat {
        self.coeffs.get(k).cloned().unwrap_or_else(LRat::zero)
    }
}

/// Expand `p` in the plain Frobenius-Euler basis.
pub fn to_fe_basis(p: &XPoly) -> FEExpansion {
    to_fe_basis_higher(p, 1)
}

/// Expand `p` in the order-`r` basis (`r ≥ 1`), from the `x^k` coefficients
/// of `Δ_λ^r p`.
pub fn to_fe_basis_higher(p: &XPoly, r: usize) -> FEExpansion {
    assert!(r >= 1, "basis order must be positive");
    let g = delta_lambda_iter(p, r);
    let scale = LRat::one_minus_lambda().pow(r).inv().unwrap();
    let coeffs = g.coeffs().iter().map(|c| c * &scale).collect();
    FEExpansion::new(r, coeffs)
}

/// Same expansion through the finite shift sum instead of the difference
/// operator; retained as the dual route.
pub fn to_fe_basis_higher_sum(p: &XPoly, r: usize) -> FEExpansion {
    assert!(r >= 1, "basis order must be positive");
    let deg = match p.degree() {
        None => return FEExpansion::new(r, Vec::new()),
        Some(d) => d,
    };
    let scale = LRat::one_minus_lambda().pow(r).inv().unwrap();
    let neg_lambda = -&LRat::lambda();
    let mut deriv = p.clone();
    let mut coeffs = Vec::with_capacity(deg + 1);
    for k in 0..=deg {
        if k > 0 {
            deriv = deriv.derivative(1);
        }
        let mut sum = LRat::zero();
        for j in 0..=r {
            let w = &LRat::from_rat(binomial_rat(r, j)) * &neg_lambda.pow(r - j);
            sum = &sum + &(&w * &deriv.eval_int(j as i64));
        }
        let k_fact = LRat::from_rat(factorial(k));
        coeffs.push(&sum.checked_div(&k_fact).unwrap() * &scale);
    }
    FEExpansion::new(r, coeffs)
}

/// Reconstruct `Σ_k coeffs[k] · H_k^{(order)}(x|λ)`.
pub fn from_fe_basis(e: &FEExpansion) -> XPoly {
    let mut acc = XPoly::zero();
    for (k, c) in e.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = &acc + &fe_poly_higher(k, e.order).scale(c);
    }
    acc
}

/// Closed-form expansion of `H_n(x|λ)` in the order-`r` basis:
/// `C_k = C(n,k) Σ_j C(r,j) (-λ)^{r-j} H_{n-k}(j|λ) / (1-λ)^r`.
pub fn fe_change_order(n: usize, r: usize) -> FEExpansion {
    assert!(r >= 1, "basis order must be positive");
    let scale = LRat::one_minus_lambda().pow(r).inv().unwrap();
    let neg_lambda = -&LRat::lambda();
    let coeffs = (0..=n)
        .map(|k| {
            let mut sum = LRat::zero();
            let h = fe_poly(n - k);
            for j in 0..=r {
                let w = &LRat::from_rat(binomial_rat(r, j)) * &neg_lambda.pow(r - j);
                sum = &sum + &(&w * &h.eval_int(j as i64));
            }
            &(&LRat::from_rat(binomial_rat(n, k)) * &sum) * &scale
        })
        .collect();
    FEExpansion::new(r, coeffs)
}
