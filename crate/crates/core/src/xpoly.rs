//! Dense polynomials in `x` with coefficients in `Q(λ)`.

use crate::error::ArithError;
use crate::lrat::LRat;
use crate::rat::{binomial_rat, rat_int, BigRat};
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XPoly {
    coeffs: Vec<LRat>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<LRat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XPoly::constant(LRat::one())
    }

    pub fn constant(c: LRat) -> Self {
        XPoly::new(vec![c])
    }

    /// The monomial `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![LRat::zero(); n + 1];
        coeffs[n] = LRat::one();
        XPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[LRat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> LRat {
        self.coeffs.get(i).cloned().unwrap_or_else(LRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&LRat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &LRat) -> XPoly {
        if c.is_zero() {
            return XPoly::zero();
        }
        XPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `p(x + c)` for an integer shift, via the binomial theorem.
    pub fn shift(&self, c: i64) -> XPoly {
        if c == 0 || self.is_zero() {
            return self.clone();
        }
        let c = rat_int(c);
        let n = self.coeffs.len();
        let mut out = vec![LRat::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut cpow = BigRat::from_integer(1.into());
            // j runs downward so c^{i-j} builds incrementally
            for j in (0..=i).rev() {
                let w = LRat::from_rat(binomial_rat(i, j) * &cpow);
                out[j] = &out[j] + &(a * &w);
                cpow *= &c;
            }
        }
        XPoly::new(out)
    }

    /// Exact `k`-th derivative.
    pub fn derivative(&self, k: usize) -> XPoly {
        let mut p = self.clone();
        for _ in 0..k {
            if p.is_zero() {
                break;
            }
            let coeffs = p
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &LRat::from_rat(rat_int(i as i64)))
                .collect();
            p = XPoly::new(coeffs);
        }
        p
    }

    /// Exact definite integral over `[0, 1]`.
    pub fn integral_01(&self) -> LRat {
        let mut acc = LRat::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = &acc + &c.checked_div(&LRat::from_int(i as i64 + 1)).unwrap();
        }
        acc
    }

    /// Horner evaluation at an integer point, exact in `Q(λ)`.
    pub fn eval_int(&self, j: i64) -> LRat {
        let x = LRat::from_int(j);
        let mut acc = LRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &x) + c;
        }
        acc
    }

    /// Specialize `λ → λ0` in every coefficient, then evaluate at `x0`.
    pub fn eval_rat(&self, lambda0: &BigRat, x0: &BigRat) -> Result<BigRat, ArithError> {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + c.eval_at(lambda0)?;
        }
        Ok(acc)
    }

    /// Apply `λ → 1/λ` to every coefficient.
    pub fn invert_lambda(&self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(LRat::invert_lambda).collect(),
        }
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![LRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        XPoly::new(coeffs)
    }
}

// JSON form: array of LRat objects, ascending x-degree.
impl Serialize for XPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter())
    }
}

impl<'de> Deserialize<'de> for XPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(XPoly::new(Vec::<LRat>::deserialize(d)?))
    }
}
