//! The field `Q(λ)` of rational functions in `λ`.
//!
//! Canonical form: `gcd(num, den) = 1` with the monic gcd convention, the
//! denominator is monic, and zero is `0/1`. Equality is therefore a
//! componentwise check, which is the verifier's core primitive.

use crate::error::ArithError;
use crate::lpoly::LPoly;
use crate::rat::BigRat;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize};
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct LRat {
    num: LPoly,
    den: LPoly,
}

impl LRat {
    /// Normalizing constructor. The denominator must be nonzero.
    pub fn new(num: LPoly, den: LPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in Q(\u{3bb})");
        if num.is_zero() {
            return LRat {
                num: LPoly::zero(),
                den: LPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        LRat { num, den }
    }

    pub fn from_poly(p: LPoly) -> Self {
        LRat::new(p, LPoly::one())
    }

    pub fn from_rat(c: BigRat) -> Self {
        LRat::new(LPoly::constant(c), LPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        LRat::from_rat(crate::rat::rat_int(n))
    }

    pub fn zero() -> Self {
        LRat {
            num: LPoly::zero(),
            den: LPoly::one(),
        }
    }

    pub fn one() -> Self {
        LRat {
            num: LPoly::one(),
            den: LPoly::one(),
        }
    }

    /// The element `λ` itself.
    pub fn lambda() -> Self {
        LRat::from_poly(LPoly::lambda())
    }

    /// The unit `λ − 1`.
    pub fn lambda_minus_one() -> Self {
        LRat::from_poly(&LPoly::lambda() - &LPoly::one())
    }

    /// The unit `1 − λ`.
    pub fn one_minus_lambda() -> Self {
        LRat::from_poly(&LPoly::one() - &LPoly::lambda())
    }

    pub fn num(&self) -> &LPoly {
        &self.num
    }

    pub fn den(&self) -> &LPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<LRat, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(LRat::new(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &LRat) -> Result<LRat, ArithError> {
        Ok(self * &rhs.inv()?)
    }

    /// Exact specialization `λ → λ0`; errors if the denominator vanishes
    /// there.
    pub fn eval_at(&self, lambda0: &BigRat) -> Result<BigRat, ArithError> {
        let d = self.den.eval(lambda0);
        if d.is_zero() {
            return Err(ArithError::Pole(lambda0.to_string()));
        }
        Ok(self.num.eval(lambda0) / d)
    }

    /// The field automorphism `λ → 1/λ`, with denominators cleared by the
    /// appropriate power of `λ`. Applying it twice is the identity.
    pub fn invert_lambda(&self) -> LRat {
        if self.is_zero() {
            return LRat::zero();
        }
        let d = self.num.degree().unwrap().max(self.den.degree().unwrap());
        LRat::new(self.num.reverse_to(d), self.den.reverse_to(d))
    }

    pub fn pow(&self, e: usize) -> LRat {
        let mut acc = LRat::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &LRat {
    type Output = LRat;
    fn add(self, rhs: &LRat) -> LRat {
        LRat::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &LRat {
    type Output = LRat;
    fn sub(self, rhs: &LRat) -> LRat {
        LRat::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &LRat {
    type Output = LRat;
    fn mul(self, rhs: &LRat) -> LRat {
        LRat::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &LRat {
    type Output = LRat;
    fn neg(self) -> LRat {
        LRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

// JSON form: {"num": [...], "den": [...]}.
#[derive(Serialize, Deserialize)]
struct LRatRepr {
    num: LPoly,
    den: LPoly,
}

impl Serialize for LRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LRatRepr {
            num: self.num.clone(),
            den: self.den.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = LRatRepr::deserialize(d)?;
        if repr.den.is_zero() {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(LRat::new(repr.num, repr.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn poly(cs: &[i64]) -> LPoly {
        LPoly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    fn lr(num: &[i64], den: &[i64]) -> LRat {
        LRat::new(poly(num), poly(den))
    }

    #[test]
    fn additive_inverses_cancel() {
        // 1/(λ−1) + 1/(1−λ) = 0
        let a = lr(&[1], &[-1, 1]);
        let b = lr(&[1], &[1, -1]);
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn multiplicative_inverse() {
        let a = lr(&[-1, 1], &[1]);
        assert!((&a * &a.inv().unwrap()).is_one());
        assert_eq!(LRat::zero().inv(), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn common_denominator_addition() {
        // (λ+1)/(λ−1) + 2/(λ−1) = (λ+3)/(λ−1)
        let got = &lr(&[1, 1], &[-1, 1]) + &lr(&[2], &[-1, 1]);
        assert_eq!(got, lr(&[3, 1], &[-1, 1]));
    }

    #[test]
    fn canonical_form_is_monic_and_reduced() {
        // (2λ² − 2)/(4λ − 4) = (λ+1)/2
        let f = lr(&[-2, 0, 2], &[-4, 4]);
        assert_eq!(f.den(), &LPoly::one());
        assert_eq!(f.num(), &LPoly::new(vec![rat(1, 2), rat(1, 2)]));
    }

    #[test]
    fn eval_and_pole() {
        let f = lr(&[1], &[-1, 1]); // 1/(λ−1)
        assert_eq!(f.eval_at(&rat_int(-1)).unwrap(), rat(-1, 2));
        assert!(matches!(f.eval_at(&rat_int(1)), Err(ArithError::Pole(_))));
        // (λ+1)/(λ−1)² vanishes at −1
        let g = lr(&[1, 1], &[1, -2, 1]);
        assert!(g.eval_at(&rat_int(-1)).unwrap().is_zero());
    }

    #[test]
    fn lambda_inversion() {
        // 1/(λ−1) → λ/(1−λ) = −λ/(λ−1)
        let f = lr(&[1], &[-1, 1]);
        assert_eq!(f.invert_lambda(), lr(&[0, -1], &[-1, 1]));
        // constants are fixed
        let c = LRat::from_rat(rat(3, 7));
        assert_eq!(c.invert_lambda(), c);
        // involution
        let g = lr(&[1, 1], &[1, -2, 1]);
        assert_eq!(g.invert_lambda().invert_lambda(), g);
    }
}
