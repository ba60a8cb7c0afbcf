//! Composition sums of products of generalized binomials, their closed
//! forms, and two classical specializations.
//!
//! For rationals `lambda_1..lambda_m`, `mu` and `lambda = sum lambda_i`:
//!
//! ```text
//! Omega = sum_{k_1+...+k_m=k} prod_i binom(lambda_i + mu k_i, k_i)
//! Phi   = sum_{k_1+...+k_m=k} prod_i lambda_i/(lambda_i + mu k_i) binom(lambda_i + mu k_i, k_i)
//! ```

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{binom_gen, display_rat, pow_rat, rat, ExactRational};
use crate::compositions::compositions;
use crate::counting::Variant;
use crate::error::{require, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaQuery {
    lambdas: Vec<ExactRational>,
    mu: ExactRational,
    k: i64,
}

impl OmegaQuery {
    pub fn new(lambdas: Vec<ExactRational>, mu: ExactRational, k: i64) -> Result<Self> {
        require(!lambdas.is_empty(), || "need at least one lambda".to_string())?;
        require(k >= 0, || format!("need k >= 0, got {k}"))?;
        Ok(Self { lambdas, mu, k })
    }

    /// Convenience constructor from integers.
    pub fn from_ints(lambdas: &[i64], mu: i64, k: i64) -> Result<Self> {
        Self::new(lambdas.iter().map(|&l| rat(l)).collect(), rat(mu), k)
    }

    pub fn lambdas(&self) -> &[ExactRational] {
        &self.lambdas
    }

    pub fn mu(&self) -> &ExactRational {
        &self.mu
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn m(&self) -> i64 {
        self.lambdas.len() as i64
    }

    pub fn lambda_total(&self) -> ExactRational {
        self.lambdas.iter().sum()
    }

    /// `lambda + mu k + m - 1`, the upper index shared by the Omega closed forms.
    fn shared_top(&self) -> ExactRational {
        self.lambda_total() + &self.mu * rat(self.k) + rat(self.m() - 1)
    }

    pub fn describe(&self) -> String {
        let ls: Vec<String> = self.lambdas.iter().map(display_rat).collect();
        format!("lambda=({}),mu={},k={}", ls.join(","), display_rat(&self.mu), self.k)
    }
}

pub fn omega_direct(q: &OmegaQuery) -> ExactRational {
    compositions(q.k, q.lambdas.len())
        .map(|c| {
            q.lambdas
                .iter()
                .zip(c.parts())
                .map(|(l, &ki)| binom_gen(&(l + &q.mu * rat(ki)), ki))
                .product::<ExactRational>()
        })
        .sum()
}

/// Direct Phi sum. Fails on the first composition term whose
/// `lambda_i + mu k_i` vanishes.
pub fn phi_direct(q: &OmegaQuery) -> Result<ExactRational> {
    let mut total = BigRational::zero();
    for c in compositions(q.k, q.lambdas.len()) {
        let mut term = BigRational::one();
        for (i, (l, &ki)) in q.lambdas.iter().zip(c.parts()).enumerate() {
            let top = l + &q.mu * rat(ki);
            if top.is_zero() {
                return Err(Error::Singular(format!(
                    "lambda_{} + mu k_{} = 0 in composition {:?} of {}",
                    i + 1,
                    i + 1,
                    c.parts(),
                    q.describe()
                )));
            }
            term *= l / &top * binom_gen(&top, ki);
        }
        total += term;
    }
    Ok(total)
}

/// `sum_j binom(m+j-2, j) binom(lambda+mu k+m-1, k-j) (mu-1)^j`.
pub fn omega_closed_1(q: &OmegaQuery) -> ExactRational {
    let (m, k) = (q.m(), q.k);
    let top = q.shared_top();
    let base = &q.mu - rat(1);
    (0..=k).map(|j| binom_gen(&rat(m + j - 2), j) * binom_gen(&top, k - j) * pow_rat(&base, j)).sum()
}

/// `sum_j binom(lambda+(mu-1)k+j, j) binom(lambda+mu k+m-1, k-j) (1-mu)^j mu^{k-j}`.
pub fn omega_closed_2(q: &OmegaQuery) -> ExactRational {
    let k = q.k;
    let top = q.shared_top();
    let lead = q.lambda_total() + (&q.mu - rat(1)) * rat(k);
    let one_minus_mu = rat(1) - &q.mu;
    (0..=k)
        .map(|j| {
            binom_gen(&(&lead + rat(j)), j) * binom_gen(&top, k - j) * pow_rat(&one_minus_mu, j) * pow_rat(&q.mu, k - j)
        })
        .sum()
}

/// `sum_j (lambda+mu(m+j))/k binom(m+j-1, j) binom(lambda+mu k+m-1, k-1-j) (mu-1)^j`.
///
/// [`Variant::Printed`] puts `k-j` in the second binomial, as typeset.
pub fn omega_closed_3(q: &OmegaQuery, variant: Variant) -> Result<ExactRational> {
    require(q.k >= 1, || "third Omega closed form needs k >= 1".to_string())?;
    let (m, k) = (q.m(), q.k);
    let top = q.shared_top();
    let lambda = q.lambda_total();
    let base = &q.mu - rat(1);
    let shift = match variant {
        Variant::Printed => 0,
        Variant::Corrected => 1,
    };
    Ok((0..=k)
        .map(|j| {
            (&lambda + &q.mu * rat(m + j)) / rat(k)
                * binom_gen(&rat(m + j - 1), j)
                * binom_gen(&top, k - shift - j)
                * pow_rat(&base, j)
        })
        .sum())
}

/// `lambda/(lambda+mu k) binom(lambda+mu k, k)`.
pub fn phi_closed(q: &OmegaQuery) -> Result<ExactRational> {
    let lambda = q.lambda_total();
    let top = &lambda + &q.mu * rat(q.k);
    if top.is_zero() {
        return Err(Error::Singular(format!("lambda + mu k = 0 for {}", q.describe())));
    }
    Ok(&lambda / &top * binom_gen(&top, q.k))
}

/// Both sides of the `mu = -1` specialization with `lambda_i = n_i + 1`:
/// the composition sum of `binom(n_i+1-k_i, k_i)` and
/// `sum_j binom(m+j-2, j) binom(n+1-k-2j, k-2j)` with `n = sum n_i`.
pub fn hwang_wei_check(n_list: &[i64], k: i64) -> Result<(ExactRational, ExactRational)> {
    require(!n_list.is_empty(), || "need at least one part".to_string())?;
    require(k >= 0, || format!("need k >= 0, got {k}"))?;
    let m = n_list.len() as i64;
    let n: i64 = n_list.iter().sum();
    let query = OmegaQuery::new(n_list.iter().map(|&ni| rat(ni + 1)).collect(), rat(-1), k)?;
    let lhs = omega_direct(&query);
    let rhs = (0..=k / 2).map(|j| binom_gen(&rat(m + j - 2), j) * binom_gen(&rat(n + 1 - k - 2 * j), k - 2 * j)).sum();
    Ok((lhs, rhs))
}

/// Both sides of the two-term convolution
/// `sum_{i=0}^{n} a/(a+ci) binom(a+ci, i) b/(b+c(n-i)) binom(b+c(n-i), n-i)`
/// `= (a+b)/(a+b+cn) binom(a+b+cn, n)`.
pub fn gould_check(
    a: &ExactRational,
    b: &ExactRational,
    c: &ExactRational,
    n: i64,
) -> Result<(ExactRational, ExactRational)> {
    require(n >= 0, || format!("need n >= 0, got {n}"))?;
    let abel = |x: &ExactRational, i: i64| -> Result<ExactRational> {
        let top = x + c * rat(i);
        if top.is_zero() {
            return Err(Error::Singular(format!("denominator {} + {}*{} vanishes", display_rat(x), display_rat(c), i)));
        }
        Ok(x / &top * binom_gen(&top, i))
    };
    let mut lhs = BigRational::zero();
    for i in 0..=n {
        lhs += abel(a, i)? * abel(b, n - i)?;
    }
    let rhs = abel(&(a + b), n)?;
    Ok((lhs, rhs))
}
