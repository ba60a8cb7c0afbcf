//! Line and circle counts: the row decomposition, the closed forms for a
//! line, and the closed form and decomposition for a circle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binom_gen, binom_gen_int, binom_nat, pow_int, rat, to_int, ExactInt, ExactRational};
use crate::compositions::compositions;
use crate::error::{require, Result};
use crate::params::SeparationParams;

/// Row sizes `|A_1|, ..., |A_m|` of the residue-class array of `[n]`.
///
/// With `n = r m + ell` and `1 <= ell <= m`, the first `ell` rows hold
/// `r + 1` objects and the remaining rows hold `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionSizes {
    pub sizes: Vec<i64>,
    pub r: i64,
    pub ell: i64,
}

pub fn partition_sizes(n: i64, m: i64) -> Result<PartitionSizes> {
    require(n >= 1, || format!("partition needs n >= 1, got {n}"))?;
    require(m >= 1, || format!("partition needs m >= 1, got {m}"))?;
    let r = (n - 1) / m;
    let ell = n - r * m;
    let sizes = (1..=m).map(|i| if i <= ell { r + 1 } else { r }).collect();
    Ok(PartitionSizes { sizes, r, ell })
}

fn row_sizes(n: i64, m: i64) -> Vec<i64> {
    if n == 0 {
        vec![0; m as usize]
    } else {
        partition_sizes(n, m).expect("n >= 1 and m >= 1").sizes
    }
}

/// Which binomial the row-decomposition sum uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinomialRule {
    /// `binom_nat` with the per-row cap `k_i <= 1 + |A_i|/p`.
    Counting,
    /// `binom_gen` over every composition, no cap.
    Generalized,
}

/// `sum over compositions of prod_i binom(|A_i| - p(k_i - 1), k_i)` for
/// arbitrary row sizes.
pub fn composition_sum(sizes: &[i64], k: i64, p: i64, rule: BinomialRule) -> ExactRational {
    let mut total = BigRational::zero();
    'outer: for comp in compositions(k, sizes.len()) {
        let mut term = BigRational::one();
        for (&size, &ki) in sizes.iter().zip(comp.parts()) {
            let upper = size - p * (ki - 1);
            match rule {
                BinomialRule::Counting => {
                    // k_i <= 1 + |A_i|/p, compared exactly.
                    if ki * p > p + size {
                        continue 'outer;
                    }
                    let b = binom_nat(upper, ki);
                    if b.is_zero() {
                        continue 'outer;
                    }
                    term *= BigRational::from_integer(b);
                }
                BinomialRule::Generalized => term *= binom_gen(&rat(upper), ki),
            }
        }
        total += term;
    }
    total
}

/// Number of separated k-subsets of a line of `n` objects, via the row
/// decomposition. Valid for every `n >= 0`.
///
/// `k = 0` yields 1 for every `n`, negative `n` included; otherwise negative
/// `n` or `k` yield 0.
pub fn h_composition(n: i64, k: i64, sep: SeparationParams) -> ExactInt {
    if k < 0 {
        return BigInt::zero();
    }
    if k == 0 {
        return BigInt::one();
    }
    if n < 0 {
        return BigInt::zero();
    }
    let sum = composition_sum(&row_sizes(n, sep.m()), k, sep.p(), BinomialRule::Counting);
    sum.to_integer()
}

fn check_line_range(n: i64, k: i64, sep: SeparationParams) -> Result<()> {
    require(k >= 0, || format!("need k >= 0, got {k}"))?;
    let bound = sep.p() * sep.m() * (k - 1);
    require(n >= 0 && n >= bound, || format!("closed forms for H need n >= pm(k-1) = {bound}, got n = {n}"))
}

fn line_top(n: i64, k: i64, sep: SeparationParams) -> i64 {
    let (m, p) = (sep.m(), sep.p());
    n + m * p + m - p * k - 1
}

/// `sum_j binom(m+j-2, j) binom(n+mp+m-pk-1, k-j) (-p-1)^j`.
pub fn h_closed_1(n: i64, k: i64, sep: SeparationParams) -> Result<ExactInt> {
    check_line_range(n, k, sep)?;
    let (m, p) = (sep.m(), sep.p());
    let top = line_top(n, k, sep);
    Ok((0..=k).map(|j| binom_gen_int(m + j - 2, j) * binom_nat(top, k - j) * pow_int(-p - 1, j)).sum())
}

/// `sum_j binom(n+mp-(p+1)k+j, j) binom(n+mp+m-pk-1, k-j) (p+1)^j (-p)^{k-j}`.
pub fn h_closed_2(n: i64, k: i64, sep: SeparationParams) -> Result<ExactInt> {
    check_line_range(n, k, sep)?;
    let (m, p) = (sep.m(), sep.p());
    let top = line_top(n, k, sep);
    Ok((0..=k)
        .map(|j| {
            // The first upper index goes negative for m = 1; it is a
            // generalized binomial there, not a count.
            binom_gen_int(n + m * p - (p + 1) * k + j, j)
                * binom_nat(top, k - j)
                * pow_int(p + 1, j)
                * pow_int(-p, k - j)
        })
        .sum())
}

/// Typeset form versus index-shifted form of a displayed identity.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Printed,
    #[default]
    Corrected,
}

/// `sum_j (n-pj)/k binom(m+j-1, j) binom(n+mp+m-pk-1, k-1-j) (-p-1)^j`.
///
/// [`Variant::Printed`] uses `binom(..., k-j)` in the middle factor, which
/// does not count anything; it is kept for the audit. The result is returned
/// as a rational because the printed variant need not be integral.
pub fn h_closed_3(n: i64, k: i64, sep: SeparationParams, variant: Variant) -> Result<ExactRational> {
    require(k >= 1, || format!("third closed form needs k >= 1, got {k}"))?;
    check_line_range(n, k, sep)?;
    let (m, p) = (sep.m(), sep.p());
    let top = line_top(n, k, sep);
    let shift = match variant {
        Variant::Printed => 0,
        Variant::Corrected => 1,
    };
    Ok((0..=k)
        .map(|j| {
            let weight = BigRational::new(BigInt::from(n - p * j), BigInt::from(k));
            let rest = binom_gen_int(m + j - 1, j) * binom_nat(top, k - shift - j) * pow_int(-p - 1, j);
            weight * BigRational::from_integer(rest)
        })
        .sum())
}

fn check_circle_range(n: i64, k: i64, sep: SeparationParams) -> Result<()> {
    require(k >= 0, || format!("need k >= 0, got {k}"))?;
    let bound = sep.m() * sep.p() * k + 1;
    require(n >= bound, || format!("closed forms for G need n >= mpk+1 = {bound}, got n = {n}"))
}

/// Circle count `n/(n-pk) binom(n-pk, k)`, valid for `n >= mpk + 1`.
pub fn g_closed(n: i64, k: i64, sep: SeparationParams) -> Result<ExactInt> {
    check_circle_range(n, k, sep)?;
    let rest = n - sep.p() * k;
    let value = BigRational::new(BigInt::from(n), BigInt::from(rest)) * BigRational::from_integer(binom_nat(rest, k));
    Ok(to_int(&value).expect("circle closed form is integral"))
}

/// Circle count from line counts: `sum_j binom(m, j) p^j H(n-pm-pj-j, k-j)`.
///
/// The `j = k` term relies on the empty selection counting once even when its
/// line length is negative; at `n = mpk + 1` that term is what makes the sum
/// agree with the circle.
pub fn g_from_h(n: i64, k: i64, sep: SeparationParams) -> Result<ExactInt> {
    check_circle_range(n, k, sep)?;
    let (m, p) = (sep.m(), sep.p());
    Ok((0..=k.min(m)).map(|j| binom_nat(m, j) * pow_int(p, j) * h_composition(n - p * m - p * j - j, k - j, sep)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sep(m: i64, p: i64) -> SeparationParams {
        SeparationParams::new(m, p).unwrap()
    }

    #[test]
    fn partition_examples() {
        assert_eq!(partition_sizes(5, 2).unwrap().sizes, [3, 2]);
        assert_eq!(partition_sizes(6, 3).unwrap().sizes, [2, 2, 2]);
        let p = partition_sizes(7, 3).unwrap();
        assert_eq!((p.sizes.as_slice(), p.r, p.ell), ([3, 2, 2].as_slice(), 2, 1));
        assert!(partition_sizes(0, 2).is_err());
        assert!(partition_sizes(3, 0).is_err());
        for n in 1..30 {
            for m in 1..6 {
                let ps = partition_sizes(n, m).unwrap();
                assert_eq!(ps.sizes.iter().sum::<i64>(), n);
                assert!(ps.sizes.windows(2).all(|w| w[0] >= w[1] && w[0] - w[1] <= 1));
                assert!(1 <= ps.ell && ps.ell <= m && ps.r * m + ps.ell == n);
            }
        }
    }

    #[test]
    fn h_composition_examples() {
        assert_eq!(h_composition(6, 2, sep(2, 1)), 11.into());
        assert_eq!(h_composition(3, 3, sep(1, 2)), 0.into());
        assert_eq!(h_composition(0, 0, sep(2, 2)), 1.into());
        assert_eq!(h_composition(-4, 0, sep(2, 2)), 1.into());
        assert_eq!(h_composition(-4, 1, sep(2, 2)), 0.into());
        assert_eq!(h_composition(0, 1, sep(2, 2)), 0.into());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(h_closed_1(6, 2, sep(2, 1)).unwrap(), 11.into());
        assert_eq!(h_closed_1(8, 2, sep(1, 2)).unwrap(), 15.into());
        assert_eq!(h_closed_2(6, 2, sep(2, 1)).unwrap(), 11.into());
        assert_eq!(h_closed_3(6, 2, sep(2, 1), Variant::Printed).unwrap(), rat(17));
        assert_eq!(h_closed_3(6, 2, sep(2, 1), Variant::Corrected).unwrap(), rat(11));
        assert!(h_closed_1(1, 2, sep(2, 1)).is_err());
        assert!(h_closed_3(5, 0, sep(2, 1), Variant::Corrected).is_err());
    }

    #[test]
    fn circle_examples() {
        assert_eq!(g_closed(5, 2, sep(2, 1)).unwrap(), 5.into());
        assert_eq!(g_closed(9, 2, sep(2, 1)).unwrap(), 27.into());
        for n in 7..15 {
            assert_eq!(g_closed(n, 1, sep(3, 2)).unwrap(), n.into());
            assert_eq!(g_from_h(n, 0, sep(3, 2)).unwrap(), 1.into());
        }
        assert!(g_closed(4, 2, sep(2, 1)).is_err());
        assert_eq!(g_from_h(6, 2, sep(2, 1)).unwrap(), 9.into());
        assert_eq!(g_from_h(5, 2, sep(2, 1)).unwrap(), 5.into());
    }

    #[test]
    fn g_from_h_terms_at_six() {
        // 1*1*H(4,2) + 2*1*H(2,1) + 1*1*H(0,0) with m = 2, p = 1
        let s = sep(2, 1);
        assert_eq!(h_composition(4, 2, s), 4.into());
        assert_eq!(h_composition(2, 1, s), 2.into());
        assert_eq!(h_composition(0, 0, s), 1.into());
    }
}
