//! Truncated formal power series in `t` over `Q(λ)`.
//!
//! A series of order `N` stores exactly `N + 1` coefficients; all products are
//! taken modulo `t^{N+1}`.

use crate::error::ArithError;
use crate::lrat::LRat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LSeries {
    coeffs: Vec<LRat>,
}

impl LSeries {
    /// Build from coefficients; pads with zeros up to `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<LRat>) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, LRat::zero());
        LSeries { coeffs }
    }

    pub fn identity(order: usize) -> Self {
        let mut coeffs = vec![LRat::zero(); order + 1];
        coeffs[0] = LRat::one();
        LSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[LRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &LRat {
        &self.coeffs[k]
    }

    /// Truncated Cauchy product; both factors must have the same order.
    pub fn mul(&self, rhs: &LSeries) -> LSeries {
        assert_eq!(self.order(), rhs.order(), "series order mismatch");
        let n = self.order();
        let mut coeffs = vec![LRat::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        LSeries { coeffs }
    }

    /// Multiplicative inverse modulo `t^{order+1}`; the constant term must be
    /// a unit.
    pub fn reciprocal(&self) -> Result<LSeries, ArithError> {
        if self.coeffs[0].is_zero() {
            return Err(ArithError::NonUnitSeries);
        }
        let c0_inv = self.coeffs[0].inv().expect("nonzero constant term");
        let n = self.order();
        let mut q = vec![LRat::zero(); n + 1];
        q[0] = c0_inv.clone();
        for m in 1..=n {
            let mut acc = LRat::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[k] * &q[m - k]);
            }
            q[m] = &(-&acc) * &c0_inv;
        }
        Ok(LSeries { coeffs: q })
    }

    /// Truncated `r`-fold Cauchy power; `r = 0` yields the identity series.
    pub fn power(&self, r: usize) -> LSeries {
        let mut acc = LSeries::identity(self.order());
        for _ in 0..r {
            acc = acc.mul(self);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn s(order: usize, cs: &[(i64, i64)]) -> LSeries {
        LSeries::new(
            order,
            cs.iter().map(|&(p, q)| LRat::from_rat(rat(p, q))).collect(),
        )
    }

    #[test]
    fn reciprocal_of_exp_truncation() {
        // [1, 1, 1/2, 1/6] → [1, −1, 1/2, −1/6]
        let e = s(3, &[(1, 1), (1, 1), (1, 2), (1, 6)]);
        assert_eq!(
            e.reciprocal().unwrap(),
            s(3, &[(1, 1), (-1, 1), (1, 2), (-1, 6)])
        );
    }

    #[test]
    fn reciprocal_of_identity() {
        let id = LSeries::identity(2);
        assert_eq!(id.reciprocal().unwrap(), id);
    }

    #[test]
    fn reciprocal_needs_unit() {
        let t = s(1, &[(0, 1), (1, 1)]);
        assert_eq!(t.reciprocal(), Err(ArithError::NonUnitSeries));
    }

    #[test]
    fn powers() {
        let p = s(1, &[(1, 1), (1, 1)]);
        assert_eq!(p.power(0), LSeries::identity(1));
        assert_eq!(p.power(1), p);
        assert_eq!(p.power(2), s(1, &[(1, 1), (2, 1)]));
    }

    #[test]
    fn product_against_reciprocal() {
        let e = s(4, &[(1, 1), (1, 1), (1, 2), (1, 6), (1, 24)]);
        let q = e.reciprocal().unwrap();
        assert_eq!(e.mul(&q), LSeries::identity(4));
    }
}
