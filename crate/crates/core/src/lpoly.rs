//! Dense polynomials in the parameter `λ` over the exact rationals.
//!
//! Coefficients are stored in ascending degree; the canonical zero is the
//! empty sequence and every constructor trims trailing zeros.

use crate::rat::BigRat;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct LPoly {
    coeffs: Vec<BigRat>,
}

impl LPoly {
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        LPoly { coeffs }
    }

    pub fn zero() -> Self {
        LPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LPoly::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        LPoly::new(vec![c])
    }

    /// The monomial `λ`.
    pub fn lambda() -> Self {
        LPoly::new(vec![BigRat::zero(), BigRat::one()])
    }

    pub fn monomial(deg: usize, c: BigRat) -> Self {
        if c.is_zero() {
            return LPoly::zero();
        }
        let mut coeffs = vec![BigRat::zero(); deg + 1];
        coeffs[deg] = c;
        LPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &BigRat) -> LPoly {
        if c.is_zero() {
            return LPoly::zero();
        }
        LPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Leading coefficient scaled to one; zero stays zero.
    pub fn monic(&self) -> LPoly {
        match self.leading() {
            None => LPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, d: &LPoly) -> (LPoly, LPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let dl = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() >= dd + 1 {
            let k = rem.len() - 1 - dd;
            let f = rem.last().unwrap() / &dl;
            if !f.is_zero() {
                for (i, c) in d.coeffs.iter().enumerate() {
                    let v = &rem[k + i] - c * &f;
                    rem[k + i] = v;
                }
                quot[k] = f;
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() < dd + 1 {
                break;
            }
        }
        (LPoly::new(quot), LPoly::new(rem))
    }

    /// Monic greatest common divisor via the Euclidean algorithm over Q;
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &LPoly) -> LPoly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            // keeping remainders monic bounds coefficient growth
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// `λ^d · p(1/λ)`: coefficient `i` moves to slot `d - i`. Requires
    /// `d >= deg(p)`.
    pub fn reverse_to(&self, d: usize) -> LPoly {
        let mut coeffs = vec![BigRat::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        LPoly::new(coeffs)
    }
}

impl Add for &LPoly {
    type Output = LPoly;
    fn add(self, rhs: &LPoly) -> LPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        LPoly::new(coeffs)
    }
}

impl Sub for &LPoly {
    type Output = LPoly;
    fn sub(self, rhs: &LPoly) -> LPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        LPoly::new(coeffs)
    }
}

impl Neg for &LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        LPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LPoly {
    type Output = LPoly;
    fn mul(self, rhs: &LPoly) -> LPoly {
        if self.is_zero() || rhs.is_zero() {
            return LPoly::zero();
        }
        let mut coeffs = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &coeffs[i + j] + a * b;
                coeffs[i + j] = v;
            }
        }
        LPoly::new(coeffs)
    }
}

// JSON form: array of "p/q" strings, ascending degree.
impl Serialize for LPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for LPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strs: Vec<String> = Vec::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(strs.len());
        for s in &strs {
            coeffs.push(
                s.parse::<BigRat>()
                    .map_err(|e| D::Error::custom(format!("bad rational {s:?}: {e}")))?,
            );
        }
        Ok(LPoly::new(coeffs))
    }
}
