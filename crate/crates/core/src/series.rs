//! Truncated formal power series over exact rationals.
//!
//! Every residue needed here has the shape `Res_x f(x) x^{-k-1}` with `f`
//! analytic at the origin, so it is read off as the coefficient of `x^k`
//! after expanding `f` to order `k`. No Laurent type is needed.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{binom_gen, pow_rat, rat, to_int, ExactInt, ExactRational};
use crate::error::{require, Error, Result};

/// Coefficients of `x^0 ..= x^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<ExactRational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Truncates or zero-pads `coeffs` to `order`.
    pub fn from_coeffs(mut coeffs: Vec<ExactRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: i64) -> Result<ExactRational> {
        usize::try_from(k)
            .ok()
            .and_then(|i| self.coeffs.get(i))
            .cloned()
            .ok_or(Error::CoefficientOutOfRange { index: k, order: self.order() })
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &PowerSeries) -> Result<PowerSeries> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &ExactRational) -> PowerSeries {
        Self { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    pub fn add(&self, other: &PowerSeries) -> Result<PowerSeries> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coeffs.iter().map(crate::arith::display_rat).collect();
        write!(f, "[{}] + O(x^{})", terms.join(", "), self.order() + 1)
    }
}

/// `(1 + c x)^a` to order `order`; the `x^j` coefficient is `binom_gen(a, j) c^j`.
pub fn binomial_series(a: &ExactRational, c: &ExactRational, order: usize) -> PowerSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    for j in 0..=order as i64 {
        coeffs.push(binom_gen(a, j) * pow_rat(c, j));
    }
    PowerSeries { coeffs }
}

fn kernel_order(k: i64) -> Result<usize> {
    usize::try_from(k).map_err(|_| Error::Precondition(format!("coefficient index k = {k} must be >= 0")))
}

/// Residue form of the line count, without range checks:
/// `[y^k] (1+y)^{n+pm+m-pk-1} (1+(p+1)y)^{-(m-1)}`.
///
/// Inside `n >= pm(k-1)` this is the number of separated k-subsets of a line;
/// outside it is the polynomial continuation used by the algebraic identities.
pub fn h_residue(n: i64, k: i64, m: i64, p: i64) -> Result<ExactInt> {
    let order = kernel_order(k)?;
    let top = binomial_series(&rat(n + p * m + m - p * k - 1), &rat(1), order);
    let bottom = binomial_series(&rat(-(m - 1)), &rat(p + 1), order);
    let value = top.mul(&bottom)?.coeff(k)?;
    Ok(to_int(&value).expect("integer kernels have integer coefficients"))
}

/// Residue form of the circle count, without range checks:
/// `[y^k] (1+y)^{n-pk-1} (1+(p+1)y)`.
pub fn g_residue(n: i64, k: i64, p: i64) -> Result<ExactInt> {
    let order = kernel_order(k)?;
    let base = binomial_series(&rat(n - p * k - 1), &rat(1), order);
    let linear = PowerSeries::from_coeffs(vec![rat(1), rat(p + 1)], order);
    let value = base.mul(&linear)?.coeff(k)?;
    Ok(to_int(&value).expect("integer kernels have integer coefficients"))
}

/// Line count by coefficient extraction, valid for `n >= pm(k-1)`.
pub fn h_series(n: i64, k: i64, m: i64, p: i64) -> Result<ExactInt> {
    require(m >= 1 && p >= 1, || format!("need m, p >= 1, got m = {m}, p = {p}"))?;
    require(k >= 0, || format!("need k >= 0, got {k}"))?;
    require(n >= 0 && n >= p * m * (k - 1), || {
        format!("series form of H needs n >= pm(k-1) = {}, got n = {n}", p * m * (k - 1))
    })?;
    h_residue(n, k, m, p)
}

/// Circle count by coefficient extraction, valid for `n >= mpk + 1`.
pub fn g_series(n: i64, k: i64, m: i64, p: i64) -> Result<ExactInt> {
    require(m >= 1 && p >= 1, || format!("need m, p >= 1, got m = {m}, p = {p}"))?;
    require(k >= 0, || format!("need k >= 0, got {k}"))?;
    require(n > m * p * k, || format!("series form of G needs n >= mpk+1 = {}, got n = {n}", m * p * k + 1))?;
    g_residue(n, k, p)
}

/// `[x^k] (1+x)^{lambda+mu k-1} (1-(mu-1)x)`.
pub fn phi_residue(lambda: &ExactRational, mu: &ExactRational, k: i64) -> Result<ExactRational> {
    let order = kernel_order(k)?;
    let exponent = lambda + mu * rat(k) - rat(1);
    let base = binomial_series(&exponent, &rat(1), order);
    let linear = PowerSeries::from_coeffs(vec![rat(1), rat(1) - mu], order);
    base.mul(&linear)?.coeff(k)
}
