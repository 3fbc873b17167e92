//! Arbitrary-precision rational scalars.
//!
//! `BigRat` is `num_rational::BigRational`: always reduced, denominator
//! positive, zero stored as `0/1`. Serialized as the string `"p/q"`, or `"p"`
//! when the denominator is one (that is exactly `Display`/`FromStr` of
//! `BigRational`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type BigRat = BigRational;

pub fn rat_int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

/// `n!` as an exact integer-valued rational.
pub fn factorial(n: usize) -> BigRat {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    BigRat::from_integer(acc)
}

/// Binomial coefficient `C(n, k)` from a cached Pascal triangle, extended on
/// demand.
pub fn binomial(n: usize, k: usize) -> BigInt {
    use once_cell::sync::Lazy;
    use std::sync::Mutex;
    static PASCAL: Lazy<Mutex<Vec<Vec<BigInt>>>> =
        Lazy::new(|| Mutex::new(vec![vec![BigInt::one()]]));

    if k > n {
        return BigInt::zero();
    }
    let mut rows = PASCAL.lock().unwrap();
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let m = prev.len();
        let mut row = Vec::with_capacity(m + 1);
        row.push(BigInt::one());
        for i in 1..m {
            row.push(&prev[i - 1] + &prev[i]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows[n][k].clone()
}

pub fn binomial_rat(n: usize, k: usize) -> BigRat {
    BigRat::from_integer(binomial(n, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pascal_rows() {
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(10, 5), BigInt::from(252));
        assert_eq!(binomial(3, 7), BigInt::from(0));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), rat_int(1));
        assert_eq!(factorial(6), rat_int(720));
    }

    #[test]
    fn string_round_trip() {
        let x = rat(-3, 6);
        assert_eq!(x.to_string(), "-1/2");
        assert_eq!(x, "-1/2".parse().unwrap());
        assert_eq!(rat_int(7).to_string(), "7");
    }
}
