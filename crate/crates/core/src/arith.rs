//! Exact integer and rational scalars and the two binomial conventions.
//!
//! Counting formulas use [`binom_nat`], which vanishes whenever the upper
//! index is negative or smaller than the lower one. Identities over arbitrary
//! rational parameters use [`binom_gen`], the falling-factorial binomial,
//! which is nonzero for negative upper indices. The two agree on
//! `0 <= k <= a` and must not be interchanged elsewhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{require, Result};

pub type ExactInt = BigInt;
pub type ExactRational = BigRational;

/// Lifts a machine integer into an exact rational.
pub fn rat(value: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(value))
}

/// Builds `num/den` in lowest terms. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Converts a rational known to be integral. Returns `None` otherwise.
pub fn to_int(value: &ExactRational) -> Option<ExactInt> {
    value.is_integer().then(|| value.to_integer())
}

/// Counting binomial: zero unless `0 <= k <= a`.
pub fn binom_nat(a: i64, k: i64) -> ExactInt {
    if k < 0 || a < 0 || a < k {
        return BigInt::zero();
    }
    let k = k.min(a - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (a - i) is divisible by (i + 1) at every step.
        acc *= a - i;
        acc = acc.div_floor(&BigInt::from(i + 1));
    }
    acc
}

/// `a (a-1) ... (a-k+1)`; the empty product is 1.
pub fn falling_factorial(a: &ExactRational, k: i64) -> Result<ExactRational> {
    require(k >= 0, || format!("falling factorial needs k >= 0, got {k}"))?;
    let mut acc = BigRational::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term -= BigRational::one();
    }
    Ok(acc)
}

/// Generalized binomial `a (a-1) ... (a-k+1) / k!`, zero for negative `k`.
pub fn binom_gen(a: &ExactRational, k: i64) -> ExactRational {
    if k < 0 {
        return BigRational::zero();
    }
    let mut acc = BigRational::one();
    let mut term = a.clone();
    for i in 1..=k {
        acc *= &term;
        acc /= rat(i);
        term -= BigRational::one();
    }
    acc
}

/// [`binom_gen`] for an integer upper index, returned as an integer.
pub fn binom_gen_int(a: i64, k: i64) -> ExactInt {
    binom_gen(&rat(a), k).to_integer()
}

/// `k!` for `k >= 0`; 1 otherwise.
pub fn factorial(k: i64) -> ExactInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// Integer power with `0^0 = 1`.
pub(crate) fn pow_rat(base: &ExactRational, exp: i64) -> ExactRational {
    debug_assert!(exp >= 0);
    let mut acc = BigRational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

pub(crate) fn pow_int(base: i64, exp: i64) -> ExactInt {
    debug_assert!(exp >= 0);
    (0..exp).fold(BigInt::one(), |acc, _| acc * base)
}

/// Renders a rational as `p` or `p/q`.
pub fn display_rat(value: &ExactRational) -> String {
    if value.is_integer() {
        value.to_integer().to_string()
    } else if value.is_negative() {
        format!("-{}/{}", value.numer().abs(), value.denom())
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_nat_values() {
        assert_eq!(binom_nat(5, 2), BigInt::from(10));
        assert_eq!(binom_nat(3, 5), BigInt::zero());
        assert_eq!(binom_nat(6, 2), BigInt::from(15));
        assert_eq!(binom_nat(-1, 0), BigInt::zero());
        assert_eq!(binom_nat(4, -1), BigInt::zero());
        assert_eq!(binom_nat(0, 0), BigInt::one());
        assert_eq!(binom_nat(40, 20), "137846528820".parse::<BigInt>().unwrap());
    }

    #[test]
    fn binom_gen_values() {
        assert_eq!(binom_gen(&rat(-1), 3), rat(-1));
        assert_eq!(binom_gen(&frac(1, 2), 2), frac(-1, 8));
        assert_eq!(binom_gen(&rat(7), 0), rat(1));
        assert_eq!(binom_gen(&rat(7), -2), rat(0));
        for j in 1..8 {
            assert_eq!(binom_gen(&rat(j - 1), j), rat(0));
        }
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(&rat(4), 2).unwrap(), rat(12));
        assert_eq!(falling_factorial(&frac(3, 7), 0).unwrap(), rat(1));
        assert_eq!(falling_factorial(&frac(1, 2), 2).unwrap(), frac(-1, 4));
        assert!(falling_factorial(&rat(4), -1).is_err());
    }

    #[test]
    fn binomial_conventions_agree_on_the_counting_range() {
        for a in 0..15 {
            for k in 0..=a {
                assert_eq!(BigRational::from_integer(binom_nat(a, k)), binom_gen(&rat(a), k));
                assert_eq!(binom_nat(a, k), binom_nat(a, a - k));
                if a >= 1 {
                    assert_eq!(binom_nat(a, k), binom_nat(a - 1, k) + binom_nat(a - 1, k - 1));
                }
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(display_rat(&frac(-3, 6)), "-1/2");
        assert_eq!(display_rat(&rat(20)), "20");
    }
}
