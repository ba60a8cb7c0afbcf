//! Recurrences for line and circle counts, used both as identities and as
//! independent evaluation paths.
//!
//! Line: `H(n,k) = H(n-1,k) + H(n-p-1,k-1)`. Splitting on whether the first
//! object is chosen needs the objects `x_{m+1}, ..., x_{pm+1}` to exist, so the
//! step holds for true counts only when `n > pm(k-1)`; at `n = pm(k-1)` with
//! `m >= 2` it undercounts. The evaluator recurses strictly above that
//! boundary and seeds every other cell from the row decomposition.
//!
//! Circle: `G(n,k) = G(n-1,k) + G(n-p-1,k-1)`. It holds for true counts once
//! all three cells sit in the closed-form range, i.e. for
//! `n >= max(m(pk+1), mpk+2)`; other cells are seeded by brute force.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binom_nat, pow_int, ExactInt};
use crate::counting::{g_closed, h_composition, Variant};
use crate::error::{require, Result};
use crate::oracle::Oracle;
use crate::params::{CountQuery, SeparationParams};
use crate::series::{g_residue, h_residue};

/// Memoized line recurrence table.
#[derive(Debug, Clone)]
pub struct LineRecurrence {
    sep: SeparationParams,
    memo: HashMap<(i64, i64), ExactInt>,
}

impl LineRecurrence {
    pub fn new(sep: SeparationParams) -> Self {
        Self { sep, memo: HashMap::new() }
    }

    fn recurses(&self, n: i64, k: i64) -> bool {
        k >= 1 && n > self.sep.p() * self.sep.m() * (k - 1)
    }

    pub fn get(&mut self, n: i64, k: i64) -> ExactInt {
        if !self.recurses(n, k) {
            return h_composition(n, k, self.sep);
        }
        if let Some(v) = self.memo.get(&(n, k)) {
            return v.clone();
        }
        let p = self.sep.p();
        let v = self.get(n - 1, k) + self.get(n - p - 1, k - 1);
        self.memo.insert((n, k), v.clone());
        v
    }

    /// Cells computed by recursion so far.
    pub fn memoized(&self) -> impl Iterator<Item = (&(i64, i64), &ExactInt)> {
        self.memo.iter()
    }
}

pub fn h_recurrence(n: i64, k: i64, sep: SeparationParams) -> ExactInt {
    LineRecurrence::new(sep).get(n, k)
}

/// Memoized circle recurrence table with brute-force seeds.
#[derive(Debug, Clone)]
pub struct CircleRecurrence {
    sep: SeparationParams,
    oracle: Oracle,
    memo: HashMap<(i64, i64), ExactInt>,
}

impl CircleRecurrence {
    pub fn new(sep: SeparationParams, oracle: Oracle) -> Self {
        Self { sep, oracle, memo: HashMap::new() }
    }

    fn recurses(&self, n: i64, k: i64) -> bool {
        let (m, p) = (self.sep.m(), self.sep.p());
        k >= 1 && n >= (m * (p * k + 1)).max(m * p * k + 2)
    }

    pub fn get(&mut self, n: i64, k: i64) -> Result<ExactInt> {
        if k < 0 || (n < 0 && k > 0) {
            return Ok(BigInt::zero());
        }
        if k == 0 {
            return Ok(BigInt::one());
        }
        if !self.recurses(n, k) {
            let q = CountQuery::new(crate::params::Topology::Circle, n, k, self.sep)?;
            return self.oracle.count(&q);
        }
        if let Some(v) = self.memo.get(&(n, k)) {
            return Ok(v.clone());
        }
        let p = self.sep.p();
        let v = self.get(n - 1, k)? + self.get(n - p - 1, k - 1)?;
        self.memo.insert((n, k), v.clone());
        Ok(v)
    }

    pub fn memoized(&self) -> impl Iterator<Item = (&(i64, i64), &ExactInt)> {
        self.memo.iter()
    }
}

fn check_recurrence_range(n: i64, k: i64, sep: SeparationParams) -> Result<()> {
    require(k >= 0, || format!("need k >= 0, got {k}"))?;
    let bound = sep.m() * (sep.p() * k + 1);
    require(n >= bound, || format!("circle recurrences need n >= m(pk+1) = {bound}, got n = {n}"))
}

/// One step of the circle recurrence over true counts.
///
/// [`Variant::Corrected`] is `G(n-1,k) + G(n-p-1,k-1)` and reproduces the
/// circle count. [`Variant::Printed`] is `G(n-1,k) + G(n-p,k-1)`, which
/// overcounts; e.g. at `m=2, p=1, k=2, n=7` it gives 15 against 14.
pub fn g_recurrence(n: i64, k: i64, sep: SeparationParams, variant: Variant) -> Result<ExactInt> {
    g_recurrence_with(n, k, sep, variant, Oracle::default())
}

pub fn g_recurrence_with(n: i64, k: i64, sep: SeparationParams, variant: Variant, oracle: Oracle) -> Result<ExactInt> {
    check_recurrence_range(n, k, sep)?;
    let mut table = CircleRecurrence::new(sep, oracle);
    match variant {
        Variant::Corrected => table.get(n, k),
        Variant::Printed => Ok(table.get(n - 1, k)? + table.get(n - sep.p(), k - 1)?),
    }
}

/// `sum_j (-1)^j binom(m,j) p^j (p+1)^{m-j} H(n-pm-j, k)`, valid for
/// `n >= mpk + 1`.
///
/// For `n >= m(pk+1)` every term is a true line count. Between `mpk + 1` and
/// `m(pk+1)` some terms fall below `pm(k-1)`; with true counts there the sum
/// is wrong, with the residue continuation it is still the circle count.
pub fn g_alternating(n: i64, k: i64, sep: SeparationParams) -> Result<ExactInt> {
    require(k >= 0, || format!("need k >= 0, got {k}"))?;
    let (m, p) = (sep.m(), sep.p());
    let bound = m * p * k + 1;
    require(n >= bound, || format!("alternating form needs n >= mpk+1 = {bound}, got n = {n}"))?;
    let mut total = BigInt::zero();
    for j in 0..=m {
        let coeff = pow_int(-1, j) * binom_nat(m, j) * pow_int(p, j) * pow_int(p + 1, m - j);
        total += coeff * line_term_closed(n - p * m - j, k, sep)?;
    }
    Ok(total)
}

/// Line term for algebraic identities: the count inside `n >= pm(k-1)`, the
/// residue continuation below it.
pub(crate) fn line_term_closed(n: i64, k: i64, sep: SeparationParams) -> Result<ExactInt> {
    if k < 0 {
        Ok(BigInt::zero())
    } else if n >= 0 && n >= sep.p() * sep.m() * (k - 1) {
        Ok(h_composition(n, k, sep))
    } else {
        h_residue(n, k, sep.m(), sep.p())
    }
}

/// Circle term for algebraic identities: the count inside `n >= mpk+1`, the
/// residue continuation below it.
pub(crate) fn circle_term_closed(n: i64, k: i64, sep: SeparationParams) -> Result<ExactInt> {
    if k < 0 {
        return Ok(BigInt::zero());
    }
    if k == 0 {
        return Ok(BigInt::one());
    }
    if n > sep.m() * sep.p() * k {
        g_closed(n, k, sep)
    } else {
        g_residue(n, k, sep.p())
    }
}

/// `sum_j (-1)^j binom(m+j-1, j) p^j G(n+pm-pj-j, k-j)`.
///
/// Terms below the closed-form range take the residue continuation of the
/// closed form, not the brute-force count; the identity is an identity of
/// those continued values.
pub fn h_from_g(n: i64, k: i64, sep: SeparationParams) -> Result<ExactInt> {
    require(k >= 0, || format!("need k >= 0, got {k}"))?;
    let (m, p) = (sep.m(), sep.p());
    let bound = m * p * (k - 1);
    require(n >= 0 && n >= bound, || format!("need n >= mp(k-1) = {bound}, got n = {n}"))?;
    let mut total = BigInt::zero();
    for j in 0..=k {
        let coeff = pow_int(-1, j) * binom_nat(m + j - 1, j) * pow_int(p, j);
        total += coeff * circle_term_closed(n + p * m - p * j - j, k - j, sep)?;
    }
    Ok(total)
}

/// Brute-force circle counts under `N_m^p` and under `N_1^p`.
pub fn bijection_count_check(n: i64, k: i64, sep: SeparationParams) -> Result<(ExactInt, ExactInt)> {
    bijection_count_check_with(n, k, sep, Oracle::default())
}

pub fn bijection_count_check_with(
    n: i64,
    k: i64,
    sep: SeparationParams,
    oracle: Oracle,
) -> Result<(ExactInt, ExactInt)> {
    require(k >= 0, || format!("need k >= 0, got {k}"))?;
    let bound = sep.m() * sep.p() * k + 1;
    require(n >= bound, || format!("need n >= mpk+1 = {bound}, got n = {n}"))?;
    let general = oracle.count(&CountQuery::circle(n, k, sep.m(), sep.p())?)?;
    let adjacent = oracle.count(&CountQuery::circle(n, k, 1, sep.p())?)?;
    Ok((general, adjacent))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::count_brute;

    fn sep(m: i64, p: i64) -> SeparationParams {
        SeparationParams::new(m, p).unwrap()
    }

    fn naive_line(n: i64, k: i64, s: SeparationParams) -> ExactInt {
        if k >= 1 && n > s.p() * s.m() * (k - 1) {
            naive_line(n - 1, k, s) + naive_line(n - s.p() - 1, k - 1, s)
        } else {
            h_composition(n, k, s)
        }
    }

    #[test]
    fn line_examples() {
        let s = sep(2, 1);
        assert_eq!(h_recurrence(5, 2, s), 7.into());
        assert_eq!(h_recurrence(4, 1, s), 4.into());
        assert_eq!(h_recurrence(6, 2, s), 11.into());
        for n in 0..12 {
            assert_eq!(h_recurrence(n, 0, sep(3, 2)), 1.into());
            assert_eq!(h_recurrence(n, 1, sep(3, 2)), n.into());
        }
    }

    #[test]
    fn line_step_fails_on_the_boundary_for_true_counts() {
        // n = pm(k-1) = 2: only {x1, x2} is separated, but the step gives 0.
        let s = sep(2, 1);
        assert_eq!(h_composition(2, 2, s), 1.into());
        assert_eq!(h_composition(1, 2, s) + h_composition(0, 1, s), 0.into());
        assert_eq!(h_recurrence(2, 2, s), 1.into());
    }

    #[test]
    fn memo_matches_naive() {
        for (m, p) in [(1, 1), (2, 1), (2, 3), (3, 2)] {
            let s = sep(m, p);
            let mut table = LineRecurrence::new(s);
            for n in 0..22 {
                for k in 0..6 {
                    table.get(n, k);
                }
            }
            for (&(n, k), v) in table.memoized() {
                assert_eq!(v, &naive_line(n, k, s), "cell ({n},{k})");
            }
        }
    }

    #[test]
    fn circle_examples() {
        let s = sep(2, 1);
        assert_eq!(g_recurrence(7, 2, s, Variant::Corrected).unwrap(), 14.into());
        assert_eq!(g_recurrence(7, 2, s, Variant::Printed).unwrap(), 15.into());
        assert_eq!(g_recurrence(8, 2, s, Variant::Corrected).unwrap(), 20.into());
        assert!(g_recurrence(5, 2, s, Variant::Corrected).is_err());
        // m = 1 at n = pk + 1 is seeded, not stepped.
        let q = CountQuery::circle(3, 2, 1, 1).unwrap();
        assert_eq!(g_recurrence(3, 2, sep(1, 1), Variant::Corrected).unwrap(), count_brute(&q).unwrap());
    }

    #[test]
    fn alternating_and_inverse() {
        let s = sep(2, 1);
        assert_eq!(g_alternating(6, 2, s).unwrap(), 9.into());
        assert_eq!(g_alternating(12, 1, s).unwrap(), 12.into());
        for n in 3..10 {
            assert_eq!(g_alternating(n, 0, sep(3, 1)).unwrap(), 1.into());
        }
        assert!(g_alternating(4, 2, s).is_err());
        // n = 5 lies below m(pk+1) = 6; H(1,2) is continued, not counted.
        assert_eq!(g_alternating(5, 2, s).unwrap(), 5.into());
        assert_eq!(h_composition(1, 2, s), 0.into());
        assert_eq!(h_from_g(4, 2, s).unwrap(), 4.into());
        for n in 0..10 {
            assert_eq!(h_from_g(n, 0, sep(2, 3)).unwrap(), 1.into());
            assert_eq!(h_from_g(n, 1, sep(2, 3)).unwrap(), n.into());
        }
    }

    #[test]
    fn bijection_examples() {
        let s = sep(2, 1);
        assert_eq!(bijection_count_check(5, 2, s).unwrap(), (5.into(), 5.into()));
        assert_eq!(bijection_count_check(7, 2, s).unwrap(), (14.into(), 14.into()));
        assert_eq!(bijection_count_check(9, 1, sep(3, 2)).unwrap(), (9.into(), 9.into()));
        assert!(bijection_count_check(4, 2, s).is_err());
    }
}
