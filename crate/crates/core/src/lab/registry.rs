//! The registered identities.
//!
//! Builders construct both sides from the number/polynomial primitives only;
//! neither side is simplified using the identity under test. Where the
//! printed form of an identity fails, a `corrected` twin carries the
//! re-derived coefficients (single-counted delta terms, fixed prefactors);
//! the printed original stays registered as `as-printed` so the refutation is
//! reproducible.

use crate::frobenius::{delta_lambda, fe_number, fe_number_higher, fe_poly, fe_poly_higher};
use crate::lrat::LRat;
use crate::rat::{binomial_rat, factorial, rat};
use crate::xpoly::XPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    AsPrinted,
    Corrected,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::AsPrinted => "as-printed",
            Variant::Corrected => "corrected",
        }
    }
}

/// Basis order used for the corrected expansion attached to refutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrectionBasis {
    PlainBasis,
    OrderR,
}

pub struct Identity {
    pub id: &'static str,
    pub variant: Variant,
    pub description: &'static str,
    /// Whether the identity has an order parameter `r`.
    pub takes_r: bool,
    /// Smallest admissible `r` (only meaningful when `takes_r`).
    pub min_r: usize,
    /// Expect `verified` on every admissible instance; `false` marks the
    /// known-bad printed forms. Drives the aggregate exit code.
    pub authoritative: bool,
    pub correction: CorrectionBasis,
    pub lhs: fn(usize, usize) -> XPoly,
    pub rhs: fn(usize, usize) -> XPoly,
}

impl Identity {
    pub fn correction_order(&self, r: usize) -> usize {
        match self.correction {
            CorrectionBasis::PlainBasis => 1,
            CorrectionBasis::OrderR => r.max(1),
        }
    }
}

fn binr(n: usize, k: usize) -> LRat {
    LRat::from_rat(binomial_rat(n, k))
}

fn inv_factorial(k: usize) -> LRat {
    LRat::from_rat(factorial(k)).inv().unwrap()
}

fn two_pow(k: i64) -> LRat {
    if k >= 0 {
        LRat::from_rat(rat(1i64 << k, 1))
    } else {
        LRat::from_rat(rat(1, 1i64 << (-k)))
    }
}

// --- Kronecker-type and operator identities -------------------------------

fn eq2_lhs(n: usize, _r: usize) -> XPoly {
    XPoly::constant(fe_poly(n).eval_int(1))
}

fn eq2_rhs(n: usize, _r: usize) -> XPoly {
    let mut v = &LRat::lambda() * &fe_number(n);
    if n == 0 {
        v = &v + &LRat::one_minus_lambda();
    }
    XPoly::constant(v)
}

fn eq5_lhs(n: usize, _r: usize) -> XPoly {
    delta_lambda(&fe_poly(n))
}

fn eq5_rhs(n: usize, _r: usize) -> XPoly {
    XPoly::monomial(n).scale(&LRat::one_minus_lambda())
}

fn eq7_lhs(n: usize, _r: usize) -> XPoly {
    XPoly::constant(fe_poly(n).integral_01())
}

fn eq7_rhs(n: usize, _r: usize) -> XPoly {
    let c = LRat::lambda_minus_one()
        .checked_div(&LRat::from_int(n as i64 + 1))
        .unwrap();
    XPoly::constant(&c * &fe_number(n + 1))
}

fn eq30_lhs(n: usize, _r: usize) -> XPoly {
    fe_poly_higher(n, 0)
}

fn eq30_rhs(n: usize, _r: usize) -> XPoly {
    XPoly::monomial(n)
}

fn eq32_lhs(n: usize, r: usize) -> XPoly {
    delta_lambda(&fe_poly_higher(n, r))
}

fn eq32_rhs(n: usize, r: usize) -> XPoly {
    fe_poly_higher(n, r - 1).scale(&LRat::one_minus_lambda())
}

// --- Theorem 2: λ-inversion expansion -------------------------------------

fn thm2_lhs(n: usize, _r: usize) -> XPoly {
    let inverted = fe_poly(n).invert_lambda();
    &inverted.scale(&LRat::lambda()) + &fe_poly(n)
}

fn thm2_rhs(n: usize, _r: usize) -> XPoly {
    let one_plus_lambda = &LRat::one() + &LRat::lambda();
    let mut acc = XPoly::zero();
    for k in 0..=n {
        let c = &binr(n, k) * &fe_number(n - k).invert_lambda();
        acc = &acc + &fe_poly(k).scale(&c);
    }
    acc.scale(&one_plus_lambda)
}

// --- Theorem 3: convolution Σ H_k H_{n-k} ---------------------------------

fn thm3_lhs(n: usize, _r: usize) -> XPoly {
    let mut acc = XPoly::zero();
    for k in 0..=n {
        acc = &acc + &(&fe_poly(k) * &fe_poly(n - k));
    }
    acc.scale(&LRat::from_int(n as i64 + 1).inv().unwrap())
}

fn thm3_printed_rhs(n: usize, _r: usize) -> XPoly {
    let neg_lambda = -&LRat::lambda();
    let two_lambda = &LRat::from_int(2) * &LRat::lambda();
    let mut acc = XPoly::zero();
    for k in 0..n {
        let mut inner = LRat::zero();
        for l in k..=n {
            let t = &(&neg_lambda * &fe_number(l - k)) * &fe_number(n - l);
            inner = &inner + &(&t + &(&two_lambda * &fe_number(n - k)));
        }
        let w = binr(n, k)
            .checked_div(&LRat::from_int((n - k) as i64 + 1))
            .unwrap();
        acc = &acc + &fe_poly(k).scale(&(&w * &inner));
    }
    &acc + &fe_poly(n)
}

fn thm3_corrected_rhs(n: usize, _r: usize) -> XPoly {
    // delta-terms counted once, outside the inner l-sum
    let neg_lambda = -&LRat::lambda();
    let two_lambda = &LRat::from_int(2) * &LRat::lambda();
    let mut acc = XPoly::zero();
    for k in 0..=n {
        let mut inner = LRat::zero();
        for l in k..=n {
            inner = &inner + &(&(&neg_lambda * &fe_number(l - k)) * &fe_number(n - l));
        }
        inner = &inner + &(&two_lambda * &fe_number(n - k));
        if k == n {
            inner = &inner + &LRat::one_minus_lambda();
        }
        let w = binr(n, k)
            .checked_div(&LRat::from_int((n - k) as i64 + 1))
            .unwrap();
        acc = &acc + &fe_poly(k).scale(&(&w * &inner));
    }
    acc
}

// --- Theorem 4: weighted convolution Σ H_k H_{n-k} / (k!(n-k)!) -----------

fn thm4_lhs(n: usize, _r: usize) -> XPoly {
    let mut acc = XPoly::zero();
    for k in 0..=n {
        let w = &inv_factorial(k) * &inv_factorial(n - k);
        acc = &acc + &(&fe_poly(k) * &fe_poly(n - k)).scale(&w);
    }
    acc
}

fn thm4_printed_rhs(n: usize, _r: usize) -> XPoly {
    let lam = LRat::lambda();
    let a = &lam * &LRat::lambda_minus_one(); // λ(λ−1)
    let b = &(&LRat::from_int(2) * &lam) * &LRat::one_minus_lambda(); // 2λ(1−λ)
    let mut acc = XPoly::zero();
    for k in 0..n {
        let mut inner = LRat::zero();
        for l in k..=n {
            let t1 = &(&(&a * &fe_number(l - k)) * &fe_number(n - l))
                * &(&inv_factorial(l - k) * &inv_factorial(n - l));
            let t2 = &(&b * &fe_number(n - k)) * &inv_factorial(n - k);
            inner = &inner + &(&t1 + &t2);
        }
        let w = &two_pow(k as i64 - 1) * &inv_factorial(k);
        acc = &acc + &fe_poly(k).scale(&(&w * &inner));
    }
    let top = &(&two_pow(n as i64 - 1) * &LRat::one_minus_lambda()) * &inv_factorial(n);
    &acc + &fe_poly(n).scale(&top)
}

fn thm4_corrected_rhs(n: usize, _r: usize) -> XPoly {
    let neg_lambda = -&LRat::lambda();
    let two_lambda = &LRat::from_int(2) * &LRat::lambda();
    let mut acc = XPoly::zero();
    for k in 0..=n {
        let mut inner = LRat::zero();
        for l in k..=n {
            inner = &inner
                + &(&(&(&neg_lambda * &fe_number(l - k)) * &fe_number(n - l))
                    * &(&inv_factorial(l - k) * &inv_factorial(n - l)));
        }
        inner = &inner + &(&(&two_lambda * &fe_number(n - k)) * &inv_factorial(n - k));
        if k == n {
            inner = &inner + &LRat::one_minus_lambda();
        }
        let w = &two_pow(k as i64) * &inv_factorial(k);
        acc = &acc + &fe_poly(k).scale(&(&w * &inner));
    }
    acc
}

// --- Theorem 5: order-r expansion of x^n ----------------------------------

/// The coefficient `C_k = Σ_j C(r,j)(−λ)^{r−j} (D^k p)(j) / ((1−λ)^r k!)`
/// for `p = x^n`, built from shifts and derivatives directly.
fn thm5_coeff(n: usize, r: usize, k: usize) -> LRat {
    let deriv = XPoly::monomial(n).derivative(k);
    let neg_lambda = -&LRat::lambda();
    let mut sum = LRat::zero();
    for j in 0..=r {
        let w = &binr(r, j) * &neg_lambda.pow(r - j);
        sum = &sum + &(&w * &deriv.eval_int(j as i64));
    }
    let scale = &LRat::one_minus_lambda().pow(r).inv().unwrap() * &inv_factorial(k);
    &sum * &scale
}

fn thm5_lhs(n: usize, _r: usize) -> XPoly {
    XPoly::monomial(n)
}

fn thm5_combination(n: usize, r: usize) -> XPoly {
    let mut acc = XPoly::zero();
    for k in 0..=n {
        acc = &acc + &fe_poly_higher(k, r).scale(&thm5_coeff(n, r, k));
    }
    acc
}

fn thm5_printed_rhs(n: usize, r: usize) -> XPoly {
    // the statement repeats the 1/(1−λ)^r prefactor on the expansion itself
    thm5_combination(n, r).scale(&LRat::one_minus_lambda().pow(r).inv().unwrap())
}

fn thm5_corrected_rhs(n: usize, r: usize) -> XPoly {
    thm5_combination(n, r)
}

// --- Theorem 6: H_n in the order-r basis ----------------------------------

fn thm6_lhs(n: usize, _r: usize) -> XPoly {
    fe_poly(n)
}

fn thm6_rhs(n: usize, r: usize) -> XPoly {
    let neg_lambda = -&LRat::lambda();
    let mut acc = XPoly::zero();
    for k in 0..=n {
        let h = fe_poly(n - k);
        let mut sum = LRat::zero();
        for j in 0..=r {
            let w = &binr(r, j) * &neg_lambda.pow(r - j);
            sum = &sum + &(&w * &h.eval_int(j as i64));
        }
        acc = &acc + &fe_poly_higher(k, r).scale(&(&binr(n, k) * &sum));
    }
    acc.scale(&LRat::one_minus_lambda().pow(r).inv().unwrap())
}

// --- Theorem 7: H_n^{(r)} in the plain basis ------------------------------

fn thm7_lhs(n: usize, r: usize) -> XPoly {
    fe_poly_higher(n, r)
}

fn thm7_combination(n: usize, r: usize) -> XPoly {
    let mut acc = XPoly::zero();
    for k in 0..=n {
        let c = &binr(n, k) * &fe_number_higher(n - k, r - 1);
        acc = &acc + &fe_poly(k).scale(&c);
    }
    acc
}

fn thm7_printed_rhs(n: usize, r: usize) -> XPoly {
    thm7_combination(n, r).scale(&LRat::one_minus_lambda().pow(2).inv().unwrap())
}

fn thm7_corrected_rhs(n: usize, r: usize) -> XPoly {
    thm7_combination(n, r)
}

/// Every registered identity, sorted by id.
pub fn registry_list() -> &'static [Identity] {
    use CorrectionBasis::{OrderR, PlainBasis};
    use Variant::{AsPrinted, Corrected};
    static REGISTRY: once_cell::sync::Lazy<Vec<Identity>> = once_cell::sync::Lazy::new(|| {
        let mut list = vec![
            Identity {
                id: "eq2",
                variant: AsPrinted,
                description: "H_n(1|\u{3bb}) - \u{3bb} H_n(\u{3bb}) = (1-\u{3bb}) \u{3b4}_{0,n}",
                takes_r: false,
                min_r: 0,
                authoritative: true,
                correction: PlainBasis,
                lhs: eq2_lhs,
                rhs: eq2_rhs,
            },
            Identity {
                id: "eq5",
                variant: AsPrinted,
                description: "\u{394}_\u{3bb} H_n(x|\u{3bb}) = (1-\u{3bb}) x^n",
                takes_r: false,
                min_r: 0,
                authoritative: true,
                correction: PlainBasis,
                lhs: eq5_lhs,
                rhs: eq5_rhs,
            },
            Identity {
                id: "eq7",
                variant: AsPrinted,
                description: "\u{222b}_0^1 H_n(x|\u{3bb}) dx = (\u{3bb}-1)/(n+1) H_{n+1}(\u{3bb})",
                takes_r: false,
                min_r: 0,
                authoritative: true,
                correction: PlainBasis,
                lhs: eq7_lhs,
                rhs: eq7_rhs,
            },
            Identity {
                id: "eq30",
                variant: AsPrinted,
                description: "H_n^{(0)}(x|\u{3bb}) = x^n",
                takes_r: false,
                min_r: 0,
                authoritative: true,
                correction: PlainBasis,
                lhs: eq30_lhs,
                rhs: eq30_rhs,
            },
            Identity {
                id: "eq32",
                variant: AsPrinted,
                description: "\u{394}_\u{3bb} H_n^{(r)}(x|\u{3bb}) = (1-\u{3bb}) H_n^{(r-1)}(x|\u{3bb})",
                takes_r: true,
                min_r: 1,
                authoritative: true,
                correction: OrderR,
                lhs: eq32_lhs,
                rhs: eq32_rhs,
            },
            Identity {
                id: "thm2",
                variant: AsPrinted,
                description: "\u{3bb} H_n(x|\u{3bb}^{-1}) + H_n(x|\u{3bb}) = (1+\u{3bb}) \u{3a3}_k C(n,k) H_{n-k}(\u{3bb}^{-1}) H_k(x|\u{3bb})",
                takes_r: false,
                min_r: 0,
                authoritative: true,
                correction: PlainBasis,
                lhs: thm2_lhs,
                rhs: thm2_rhs,
            },
            Identity {
                id: "thm3-as-printed",
                variant: AsPrinted,
                description: "convolution \u{3a3}_k H_k H_{n-k}: printed form with the 2\u{3bb}H_{n-k} term inside the l-sum",
                takes_r: false,
                min_r: 0,
                authoritative: false,
                correction: PlainBasis,
                lhs: thm3_lhs,
                rhs: thm3_printed_rhs,
            },
            Identity {
                id: "thm3-corrected",
                variant: Corrected,
                description: "convolution \u{3a3}_k H_k H_{n-k}: single-counted 2\u{3bb}H_{n-k} and (1-\u{3bb})\u{3b4}_{n,k} terms",
                takes_r: false,
                min_r: 0,
                authoritative: true,
                correction: PlainBasis,
                lhs: thm3_lhs,
                rhs: thm3_corrected_rhs,
            },
            Identity {
                id: "thm4-as-printed",
                variant: AsPrinted,
                description: "weighted convolution \u{3a3}_k H_k H_{n-k}/(k!(n-k)!): printed coefficients 2^{k-1}/k! and top term 2^{n-1}(1-\u{3bb})/n!",
                takes_r: false,
                min_r: 0,
                authoritative: false,
                correction: PlainBasis,
                lhs: thm4_lhs,
                rhs: thm4_printed_rhs,
            },
            Identity {
                id: "thm4-corrected",
                variant: Corrected,
                description: "weighted convolution: b_k = (2^k/k!)(-\u{3bb}\u{3a3}_l H_{l-k}H_{n-l}/((l-k)!(n-l)!) + 2\u{3bb}H_{n-k}/(n-k)! + (1-\u{3bb})\u{3b4}_{n,k})",
                takes_r: false,
                min_r: 0,
                authoritative: true,
                correction: PlainBasis,
                lhs: thm4_lhs,
                rhs: thm4_corrected_rhs,
            },
            Identity {
                id: "thm5-as-printed",
                variant: AsPrinted,
                description: "order-r expansion of x^n with the 1/(1-\u{3bb})^r prefactor on both the expansion and the coefficients",
                takes_r: true,
                min_r: 1,
                authoritative: false,
                correction: OrderR,
                lhs: thm5_lhs,
                rhs: thm5_printed_rhs,
            },
            Identity {
                id: "thm5-corrected",
                variant: Corrected,
                description: "order-r expansion of x^n with the prefactor applied once, inside the coefficients",
                takes_r: true,
                min_r: 1,
                authoritative: true,
                correction: OrderR,
                lhs: thm5_lhs,
                rhs: thm5_corrected_rhs,
            },
            Identity {
                id: "thm6",
                variant: AsPrinted,
                description: "H_n(x|\u{3bb}) = (1/(1-\u{3bb})^r) \u{3a3}_k C(n,k) (\u{3a3}_j C(r,j)(-\u{3bb})^{r-j} H_{n-k}(j|\u{3bb})) H_k^{(r)}(x|\u{3bb})",
                takes_r: true,
                min_r: 1,
                authoritative: true,
                correction: OrderR,
                lhs: thm6_lhs,
                rhs: thm6_rhs,
            },
            Identity {
                id: "thm7-as-printed",
                variant: AsPrinted,
                description: "H_n^{(r)} in the plain basis with the printed 1/(1-\u{3bb})^2 prefactor",
                takes_r: true,
                min_r: 1,
                authoritative: false,
                correction: PlainBasis,
                lhs: thm7_lhs,
                rhs: thm7_printed_rhs,
            },
            Identity {
                id: "thm7-corrected",
                variant: Corrected,
                description: "H_n^{(r)}(x|\u{3bb}) = \u{3a3}_k C(n,k) H^{(r-1)}_{n-k}(\u{3bb}) H_k(x|\u{3bb})",
                takes_r: true,
                min_r: 1,
                authoritative: true,
                correction: PlainBasis,
                lhs: thm7_lhs,
                rhs: thm7_corrected_rhs,
            },
        ];
        list.sort_by(|a, b| a.id.cmp(b.id));
        list
    });
    &REGISTRY
}
