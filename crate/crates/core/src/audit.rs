//! Grid sweeps that evaluate both sides of every identity and collect
//! counterexamples.
//!
//! Identities relating shifted counts reach cells outside the range where the
//! closed forms count anything. Under [`TermConvention::Extended`] such cells
//! take the residue continuation of the closed form, which is the quantity the
//! algebraic derivations manipulate; inside the range they are true counts.
//! [`TermConvention::Literal`] instead uses true counts everywhere and zero for
//! negative lengths, and exposes where the identities break at their
//! boundaries.

use std::fmt;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binom_nat, display_rat, frac, pow_int, rat, ExactInt, ExactRational};
use crate::counting::{g_closed, h_closed_1, h_closed_2, h_closed_3, h_composition, partition_sizes, Variant};
use crate::error::{Error, Result};
use crate::lemma::{
    gould_check, hwang_wei_check, omega_closed_1, omega_closed_2, omega_closed_3, omega_direct, phi_closed, phi_direct,
    OmegaQuery,
};
use crate::oracle::Oracle;
use crate::params::{CountQuery, SeparationParams, Topology};
use crate::series::{g_residue, h_residue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Eq2_1,
    Eq2_2,
    Eq3_1,
    Eq3_2,
    Eq3_3Printed,
    Eq3_3Corrected,
    Eq3_4,
    Eq3_5,
    ThmH1,
    ThmH2,
    ThmH3Printed,
    ThmH3Corrected,
    Eq4_1,
    Eq4_2Printed,
    Eq4_2Corrected,
    Eq4_4,
    Eq4_5,
    HwangWei,
    Gould,
    BijectionCount,
}

impl IdentityId {
    pub const ALL: [IdentityId; 20] = [
        IdentityId::Eq2_1,
        IdentityId::Eq2_2,
        IdentityId::Eq3_1,
        IdentityId::Eq3_2,
        IdentityId::Eq3_3Printed,
        IdentityId::Eq3_3Corrected,
        IdentityId::Eq3_4,
        IdentityId::Eq3_5,
        IdentityId::ThmH1,
        IdentityId::ThmH2,
        IdentityId::ThmH3Printed,
        IdentityId::ThmH3Corrected,
        IdentityId::Eq4_1,
        IdentityId::Eq4_2Printed,
        IdentityId::Eq4_2Corrected,
        IdentityId::Eq4_4,
        IdentityId::Eq4_5,
        IdentityId::HwangWei,
        IdentityId::Gould,
        IdentityId::BijectionCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Eq2_1 => "Eq2.1",
            IdentityId::Eq2_2 => "Eq2.2",
            IdentityId::Eq3_1 => "Eq3.1",
            IdentityId::Eq3_2 => "Eq3.2",
            IdentityId::Eq3_3Printed => "Eq3.3-printed",
            IdentityId::Eq3_3Corrected => "Eq3.3-corrected",
            IdentityId::Eq3_4 => "Eq3.4",
            IdentityId::Eq3_5 => "Eq3.5",
            IdentityId::ThmH1 => "Thm-H1",
            IdentityId::ThmH2 => "Thm-H2",
            IdentityId::ThmH3Printed => "Thm-H3-printed",
            IdentityId::ThmH3Corrected => "Thm-H3-corrected",
            IdentityId::Eq4_1 => "Eq4.1",
            IdentityId::Eq4_2Printed => "Eq4.2-printed",
            IdentityId::Eq4_2Corrected => "Eq4.2-corrected",
            IdentityId::Eq4_4 => "Eq4.4",
            IdentityId::Eq4_5 => "Eq4.5",
            IdentityId::HwangWei => "HwangWei",
            IdentityId::Gould => "Gould",
            IdentityId::BijectionCount => "BijectionCount",
        }
    }

    /// Whether the identity is typeset in a form known not to hold.
    pub fn is_printed_erratum(self) -> bool {
        matches!(self, IdentityId::Eq3_3Printed | IdentityId::ThmH3Printed | IdentityId::Eq4_2Printed)
    }

    /// Human-readable statement of both sides and the checked range.
    pub fn statement(self) -> &'static str {
        match self {
            IdentityId::Eq2_1 => "H(n,k) by row decomposition = brute-force line count; n,k >= 0",
            IdentityId::Eq2_2 => "G(n,k) = sum_j C(m,j) p^j H(n-pm-pj-j, k-j); n >= mpk+1",
            IdentityId::Eq3_1 => "Omega = sum_j C(m+j-2,j) C(lambda+mu k+m-1,k-j) (mu-1)^j",
            IdentityId::Eq3_2 => "Omega = sum_j C(lambda+(mu-1)k+j,j) C(lambda+mu k+m-1,k-j) (1-mu)^j mu^(k-j)",
            IdentityId::Eq3_3Printed => "Omega = sum_j (lambda+mu(m+j))/k C(m+j-1,j) C(lambda+mu k+m-1,k-j) (mu-1)^j",
            IdentityId::Eq3_3Corrected => {
                "Omega = sum_j (lambda+mu(m+j))/k C(m+j-1,j) C(lambda+mu k+m-1,k-1-j) (mu-1)^j"
            }
            IdentityId::Eq3_4 => "Phi = lambda/(lambda+mu k) C(lambda+mu k,k)",
            IdentityId::Eq3_5 => "G(n,k) = n/(n-pk) C(n-pk,k); n >= mpk+1",
            IdentityId::ThmH1 => "H(n,k) = first closed form; n >= pm(k-1)",
            IdentityId::ThmH2 => "H(n,k) = second closed form; n >= pm(k-1)",
            IdentityId::ThmH3Printed => "H(n,k) = third closed form with C(.,k-j); n >= pm(k-1)",
            IdentityId::ThmH3Corrected => "H(n,k) = third closed form with C(.,k-1-j); n >= pm(k-1)",
            IdentityId::Eq4_1 => "H(n,k) = H(n-1,k) + H(n-p-1,k-1); n >= pm(k-1)",
            IdentityId::Eq4_2Printed => "G(n,k) = G(n-1,k) + G(n-p,k-1); n >= m(pk+1)",
            IdentityId::Eq4_2Corrected => "G(n,k) = G(n-1,k) + G(n-p-1,k-1); n >= m(pk+1)",
            IdentityId::Eq4_4 => "G(n,k) = sum_j (-1)^j C(m,j) p^j (p+1)^(m-j) H(n-pm-j,k); n >= m(pk+1)",
            IdentityId::Eq4_5 => "H(n,k) = sum_j (-1)^j C(m+j-1,j) p^j G(n+pm-pj-j,k-j); n >= mp(k-1)",
            IdentityId::HwangWei => "Omega at mu=-1, lambda_i=n_i+1 = sum_j C(m+j-2,j) C(n+1-k-2j,k-2j)",
            IdentityId::Gould => "two-term Abel convolution = (a+b)/(a+b+cn) C(a+b+cn,n)",
            IdentityId::BijectionCount => "#N_m^p-separate = #N_1^p-separate circular k-subsets; n >= mpk+1",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// How cells outside a closed form's counting range are valued.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermConvention {
    #[default]
    Extended,
    Literal,
}

impl fmt::Display for TermConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TermConvention::Extended => "extended",
            TermConvention::Literal => "literal",
        })
    }
}

impl FromStr for TermConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "extended" => Ok(TermConvention::Extended),
            "literal" => Ok(TermConvention::Literal),
            other => Err(Error::Precondition(format!("convention must be `extended` or `literal`, got `{other}`"))),
        }
    }
}

/// Inclusive ranges for `m`, `p`, `k`, `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub m: RangeInclusive<i64>,
    pub p: RangeInclusive<i64>,
    pub k: RangeInclusive<i64>,
    pub n: RangeInclusive<i64>,
}

const LOWER: [(char, i64); 4] = [('m', 1), ('p', 1), ('k', 0), ('n', 0)];

impl Grid {
    pub fn new(m: RangeInclusive<i64>, p: RangeInclusive<i64>, k: RangeInclusive<i64>, n: RangeInclusive<i64>) -> Self {
        Self { m, p, k, n }
    }

    /// `m <= 3, p <= 2, k <= 4, n <= 24`.
    pub fn standard() -> Self {
        Self::new(1..=3, 1..=2, 0..=4, 0..=24)
    }

    fn dims(&self) -> [(char, &RangeInclusive<i64>); 4] {
        [('m', &self.m), ('p', &self.p), ('k', &self.k), ('n', &self.n)]
    }

    fn dim_mut(&mut self, name: char) -> &mut RangeInclusive<i64> {
        match name {
            'm' => &mut self.m,
            'p' => &mut self.p,
            'k' => &mut self.k,
            _ => &mut self.n,
        }
    }

    /// Grid points in `m, p, k, n` nesting order.
    pub fn points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        self.m.clone().flat_map(move |m| {
            self.p.clone().flat_map(move |p| {
                self.k.clone().flat_map(move |k| self.n.clone().map(move |n| GridPoint { m, p, k, n }))
            })
        })
    }
}

impl Default for Grid {
    fn default() -> Self {
        Self::standard()
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .dims()
            .iter()
            .zip(LOWER)
            .map(|((name, r), (_, lo))| {
                if *r.start() == lo {
                    format!("{name}<={}", r.end())
                } else {
                    format!("{}<={name}<={}", r.start(), r.end())
                }
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Grid {
    type Err = Error;

    /// Parses `m<=3,p<=2,k<=4,n<=24`. Each clause is `x<=N`, `x>=N`, `x=N`
    /// or `A<=x<=B`; unmentioned bounds come from [`Grid::standard`], which
    /// is also what the bare word `standard` means.
    fn from_str(s: &str) -> Result<Self> {
        let mut grid = Grid::standard();
        if s.trim().eq_ignore_ascii_case("standard") {
            return Ok(grid);
        }
        let bad = |clause: &str, why: &str| Error::Grid(format!("`{clause}`: {why}"));
        let num = |clause: &str, t: &str| t.trim().parse::<i64>().map_err(|_| bad(clause, "expected an integer bound"));
        let var = |clause: &str, t: &str| -> Result<char> {
            match t.trim() {
                v @ ("m" | "p" | "k" | "n") => Ok(v.chars().next().unwrap()),
                _ => Err(bad(clause, "variable must be one of m, p, k, n")),
            }
        };
        if s.trim().is_empty() {
            return Err(Error::Grid("empty grid".into()));
        }
        for clause in s.split(',').map(str::trim) {
            let pieces: Vec<&str> = clause.split("<=").collect();
            let (name, lo, hi) = match pieces.as_slice() {
                [a, b, c] => (var(clause, b)?, Some(num(clause, a)?), Some(num(clause, c)?)),
                [a, b] => (var(clause, a)?, None, Some(num(clause, b)?)),
                [single] => {
                    if let Some((a, b)) = single.split_once(">=") {
                        (var(clause, a)?, Some(num(clause, b)?), None)
                    } else if let Some((a, b)) = single.split_once('=') {
                        let v = num(clause, b)?;
                        (var(clause, a)?, Some(v), Some(v))
                    } else {
                        return Err(bad(clause, "expected a comparison such as m<=3"));
                    }
                }
                _ => return Err(bad(clause, "too many comparisons")),
            };
            let floor = LOWER.iter().find(|(c, _)| *c == name).map(|(_, v)| *v).unwrap();
            let range = grid.dim_mut(name);
            let lo = lo.unwrap_or(*range.start());
            let hi = hi.unwrap_or(*range.end());
            if lo < floor {
                return Err(bad(clause, &format!("{name} must be >= {floor}")));
            }
            if lo > hi {
                return Err(bad(clause, "empty range"));
            }
            *range = lo..=hi;
        }
        Ok(grid)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridPoint {
    pub m: i64,
    pub p: i64,
    pub k: i64,
    pub n: i64,
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={},p={},k={},n={})", self.m, self.p, self.k, self.n)
    }
}

/// One mismatch, with enough context to re-evaluate both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub params: GridPoint,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub instance: Option<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub identity: String,
    pub grid: String,
    pub convention: TermConvention,
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status =
            if self.passed() { "PASS".to_string() } else { format!("FAIL ({} mismatches)", self.failures.len()) };
        let _ = writeln!(out, "identity    {}", self.identity);
        let _ = writeln!(out, "grid        {}", self.grid);
        let _ = writeln!(out, "convention  {}", self.convention);
        let _ = writeln!(out, "checked     {} (skipped {})", self.checked, self.skipped);
        let _ = writeln!(out, "status      {status}");
        if !self.failures.is_empty() {
            let _ =
                writeln!(out, "  {:>3} {:>3} {:>3} {:>4}  {:>14}  {:>14}  instance", "m", "p", "k", "n", "lhs", "rhs");
            for f in &self.failures {
                let _ = writeln!(
                    out,
                    "  {:>3} {:>3} {:>3} {:>4}  {:>14}  {:>14}  {}",
                    f.params.m,
                    f.params.p,
                    f.params.k,
                    f.params.n,
                    f.lhs,
                    f.rhs,
                    f.instance.as_deref().unwrap_or("-")
                );
            }
        }
        out
    }
}

/// Renders several reports as a JSON array.
pub fn reports_to_json(reports: &[AuditReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

struct Check {
    instance: Option<String>,
    lhs: ExactRational,
    rhs: ExactRational,
}

impl Check {
    fn ints(lhs: ExactInt, rhs: ExactInt) -> Self {
        Self { instance: None, lhs: BigRational::from_integer(lhs), rhs: BigRational::from_integer(rhs) }
    }
}

/// Runs identity sweeps with a chosen oracle cap and term convention.
#[derive(Debug, Clone, Copy, Default)]
pub struct Auditor {
    pub oracle: Oracle,
    pub convention: TermConvention,
}

pub fn run_audit(identity: IdentityId, grid: &Grid) -> Result<AuditReport> {
    Auditor::default().run(identity, grid)
}

impl Auditor {
    pub fn new(oracle: Oracle, convention: TermConvention) -> Self {
        Self { oracle, convention }
    }

    pub fn run(&self, identity: IdentityId, grid: &Grid) -> Result<AuditReport> {
        let mut report = AuditReport {
            identity: identity.name().to_string(),
            grid: grid.to_string(),
            convention: self.convention,
            checked: 0,
            skipped: 0,
            failures: Vec::new(),
        };
        for pt in grid.points() {
            let checks = self.evaluate(identity, pt, grid)?;
            if checks.is_empty() {
                report.skipped += 1;
            }
            for c in checks {
                report.checked += 1;
                if c.lhs != c.rhs {
                    report.failures.push(Failure {
                        params: pt,
                        instance: c.instance,
                        lhs: display_rat(&c.lhs),
                        rhs: display_rat(&c.rhs),
                    });
                }
            }
        }
        Ok(report)
    }

    pub fn run_all(&self, identities: &[IdentityId], grid: &Grid) -> Result<Vec<AuditReport>> {
        identities.iter().map(|&id| self.run(id, grid)).collect()
    }

    /// Line count term `H(n,k)`.
    pub fn line_term(&self, n: i64, k: i64, sep: SeparationParams) -> Result<ExactInt> {
        if k < 0 {
            return Ok(BigInt::zero());
        }
        match self.convention {
            TermConvention::Literal if n < 0 => Ok(BigInt::zero()),
            TermConvention::Literal => Ok(h_composition(n, k, sep)),
            TermConvention::Extended => {
                if n >= 0 && n >= sep.p() * sep.m() * (k - 1) {
                    Ok(h_composition(n, k, sep))
                } else {
                    h_residue(n, k, sep.m(), sep.p())
                }
            }
        }
    }

    /// Circle count term `G(n,k)`.
    pub fn circle_term(&self, n: i64, k: i64, sep: SeparationParams) -> Result<ExactInt> {
        if k < 0 {
            return Ok(BigInt::zero());
        }
        match self.convention {
            TermConvention::Literal if n < 0 => Ok(BigInt::zero()),
            TermConvention::Literal => self.oracle.count(&CountQuery::new(Topology::Circle, n, k, sep)?),
            TermConvention::Extended => {
                if k == 0 {
                    Ok(BigInt::one())
                } else if n > sep.m() * sep.p() * k {
                    if n <= self.oracle.cap() {
                        self.oracle.count(&CountQuery::new(Topology::Circle, n, k, sep)?)
                    } else {
                        g_closed(n, k, sep)
                    }
                } else {
                    g_residue(n, k, sep.p())
                }
            }
        }
    }

    fn evaluate(&self, id: IdentityId, pt: GridPoint, grid: &Grid) -> Result<Vec<Check>> {
        let GridPoint { m, p, k, n } = pt;
        let sep = SeparationParams::new(m, p)?;
        let line_range = k >= 1 && n >= p * m * (k - 1);
        let circle_range = n > m * p * k;
        let recurrence_range = k >= 1 && n >= m * (p * k + 1);
        let first_p = p == *grid.p.start();
        let checks = match id {
            IdentityId::Eq2_1 => {
                let brute = self.oracle.count(&CountQuery::line(n, k, m, p)?)?;
                vec![Check::ints(h_composition(n, k, sep), brute)]
            }
            IdentityId::Eq2_2 if circle_range => {
                let mut rhs = BigInt::zero();
                for j in 0..=k.min(m) {
                    rhs += binom_nat(m, j) * pow_int(p, j) * self.line_term(n - p * m - p * j - j, k - j, sep)?;
                }
                vec![Check::ints(self.circle_term(n, k, sep)?, rhs)]
            }
            IdentityId::Eq3_1
            | IdentityId::Eq3_2
            | IdentityId::Eq3_3Printed
            | IdentityId::Eq3_3Corrected
            | IdentityId::Eq3_4 => {
                if n < 1 || (k < 1 && matches!(id, IdentityId::Eq3_3Printed | IdentityId::Eq3_3Corrected)) {
                    Vec::new()
                } else {
                    lemma_instances(m, p, k, n)?.into_iter().filter_map(|q| lemma_check(id, &q)).collect()
                }
            }
            IdentityId::Eq3_5 if k >= 1 && circle_range => {
                vec![Check::ints(self.circle_term(n, k, sep)?, g_closed(n, k, sep)?)]
            }
            IdentityId::ThmH1 if line_range => vec![Check::ints(h_composition(n, k, sep), h_closed_1(n, k, sep)?)],
            IdentityId::ThmH2 if line_range => vec![Check::ints(h_composition(n, k, sep), h_closed_2(n, k, sep)?)],
            IdentityId::ThmH3Printed | IdentityId::ThmH3Corrected if line_range => {
                let variant = if id == IdentityId::ThmH3Printed { Variant::Printed } else { Variant::Corrected };
                vec![Check {
                    instance: None,
                    lhs: BigRational::from_integer(h_composition(n, k, sep)),
                    rhs: h_closed_3(n, k, sep, variant)?,
                }]
            }
            IdentityId::Eq4_1 if line_range => {
                let rhs = self.line_term(n - 1, k, sep)? + self.line_term(n - p - 1, k - 1, sep)?;
                vec![Check::ints(self.line_term(n, k, sep)?, rhs)]
            }
            IdentityId::Eq4_2Printed | IdentityId::Eq4_2Corrected if recurrence_range => {
                let back = if id == IdentityId::Eq4_2Printed { p } else { p + 1 };
                let rhs = self.circle_term(n - 1, k, sep)? + self.circle_term(n - back, k - 1, sep)?;
                vec![Check::ints(self.circle_term(n, k, sep)?, rhs)]
            }
            IdentityId::Eq4_4 if recurrence_range => {
                let mut rhs = BigInt::zero();
                for j in 0..=m {
                    rhs += pow_int(-1, j)
                        * binom_nat(m, j)
                        * pow_int(p, j)
                        * pow_int(p + 1, m - j)
                        * self.line_term(n - p * m - j, k, sep)?;
                }
                vec![Check::ints(self.circle_term(n, k, sep)?, rhs)]
            }
            IdentityId::Eq4_5 if line_range => {
                let mut rhs = BigInt::zero();
                for j in 0..=k {
                    rhs += pow_int(-1, j)
                        * binom_nat(m + j - 1, j)
                        * pow_int(p, j)
                        * self.circle_term(n + p * m - p * j - j, k - j, sep)?;
                }
                vec![Check::ints(self.line_term(n, k, sep)?, rhs)]
            }
            IdentityId::HwangWei if first_p => {
                let mut lists = vec![partition_sizes(n.max(1), m)?.sizes];
                if m >= 2 {
                    let mut lopsided = vec![0; m as usize];
                    lopsided[0] = n;
                    lists.push(lopsided);
                }
                if n == 0 {
                    lists = vec![vec![0; m as usize]];
                }
                let mut out = Vec::new();
                for list in lists {
                    let (lhs, rhs) = hwang_wei_check(&list, k)?;
                    out.push(Check { instance: Some(format!("n_list={list:?},k={k}")), lhs, rhs });
                }
                out
            }
            IdentityId::Gould => gould_instances(m, p, k, n)
                .into_iter()
                .filter_map(|(a, b, c, top)| {
                    let (lhs, rhs) = gould_check(&a, &b, &c, top).ok()?;
                    let instance = format!("a={},b={},c={},n={top}", display_rat(&a), display_rat(&b), display_rat(&c));
                    Some(Check { instance: Some(instance), lhs, rhs })
                })
                .collect(),
            IdentityId::BijectionCount if k >= 1 && circle_range => {
                let general = self.oracle.count(&CountQuery::circle(n, k, m, p)?)?;
                let adjacent = self.oracle.count(&CountQuery::circle(n, k, 1, p)?)?;
                vec![Check::ints(general, adjacent)]
            }
            _ => Vec::new(),
        };
        Ok(checks)
    }
}

/// Deterministic rational instances for the composition-sum identities at a
/// grid point: the row sizes of `[n]` with `mu = p`, the shifted sizes with
/// `mu = -p`, and a perturbed fractional instance.
fn lemma_instances(m: i64, p: i64, k: i64, n: i64) -> Result<Vec<OmegaQuery>> {
    let sizes = partition_sizes(n, m)?.sizes;
    let plain: Vec<ExactRational> = sizes.iter().map(|&s| rat(s)).collect();
    let shifted: Vec<ExactRational> = sizes.iter().map(|&s| rat(s + p)).collect();
    let perturbed: Vec<ExactRational> =
        sizes.iter().enumerate().map(|(i, &s)| rat(s) + frac(i as i64 + 1, m + 1)).collect();
    let sign = if n % 2 == 0 { 1 } else { -1 };
    Ok(vec![
        OmegaQuery::new(plain, rat(p), k)?,
        OmegaQuery::new(shifted, rat(-p), k)?,
        OmegaQuery::new(perturbed, frac(sign * p, p + 1), k)?,
    ])
}

fn lemma_check(id: IdentityId, q: &OmegaQuery) -> Option<Check> {
    let (lhs, rhs) = match id {
        IdentityId::Eq3_1 => (omega_direct(q), omega_closed_1(q)),
        IdentityId::Eq3_2 => (omega_direct(q), omega_closed_2(q)),
        IdentityId::Eq3_3Printed => (omega_direct(q), omega_closed_3(q, Variant::Printed).ok()?),
        IdentityId::Eq3_3Corrected => (omega_direct(q), omega_closed_3(q, Variant::Corrected).ok()?),
        // Singular instances are outside the identity's hypotheses.
        IdentityId::Eq3_4 => (phi_direct(q).ok()?, phi_closed(q).ok()?),
        _ => return None,
    };
    Some(Check { instance: Some(q.describe()), lhs, rhs })
}

fn gould_instances(m: i64, p: i64, k: i64, n: i64) -> Vec<(ExactRational, ExactRational, ExactRational, i64)> {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    vec![(rat(m), rat(n), rat(p), k), (frac(2 * m - 1, p + 1), frac(-(2 * n + 1), m + 2), frac(sign * p, 3), k)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        assert!("Eq9.9".parse::<IdentityId>().is_err());
    }

    #[test]
    fn grid_parsing() {
        let g: Grid = "m<=2,p<=1,k<=2,n<=10".parse().unwrap();
        assert_eq!(g, Grid::new(1..=2, 1..=1, 0..=2, 0..=10));
        assert_eq!(g.to_string(), "m<=2,p<=1,k<=2,n<=10");
        let g: Grid = "2<=m<=3, p=2, k>=1, n<=20".parse().unwrap();
        assert_eq!(g, Grid::new(2..=3, 2..=2, 1..=4, 0..=20));
        assert_eq!(g.to_string(), "2<=m<=3,2<=p<=2,1<=k<=4,n<=20");
        assert_eq!("standard".parse::<Grid>().unwrap(), Grid::standard());
        for bad in ["", "m<3", "q<=2", "m<=x", "m<=0", "k>=5,k<=2", "1<=m<=2<=3"] {
            assert!(matches!(bad.parse::<Grid>(), Err(Error::Grid(_))), "{bad}");
        }
    }

    #[test]
    fn grid_points_are_ordered() {
        let g = Grid::new(1..=2, 1..=1, 0..=1, 0..=1);
        let pts: Vec<_> = g.points().map(|p| (p.m, p.p, p.k, p.n)).collect();
        assert_eq!(
            pts,
            [
                (1, 1, 0, 0),
                (1, 1, 0, 1),
                (1, 1, 1, 0),
                (1, 1, 1, 1),
                (2, 1, 0, 0),
                (2, 1, 0, 1),
                (2, 1, 1, 0),
                (2, 1, 1, 1)
            ]
        );
    }

    #[test]
    fn printed_recurrence_witness() {
        let g: Grid = "m<=2,p<=1,k<=2,n<=10".parse().unwrap();
        let report = run_audit(IdentityId::Eq4_2Printed, &g).unwrap();
        assert!(!report.passed());
        let hit = report.failures.iter().find(|f| f.params == GridPoint { m: 2, p: 1, k: 2, n: 7 }).unwrap();
        assert_eq!((hit.lhs.as_str(), hit.rhs.as_str()), ("14", "15"));
        assert!(run_audit(IdentityId::Eq4_2Corrected, &g).unwrap().passed());
    }

    #[test]
    fn literal_convention_breaks_the_boundary_of_the_decomposition() {
        let g: Grid = "m=2,p=1,k=2,n=5".parse().unwrap();
        assert!(run_audit(IdentityId::Eq2_2, &g).unwrap().passed());
        let literal = Auditor::new(Oracle::default(), TermConvention::Literal);
        let report = literal.run(IdentityId::Eq2_2, &g).unwrap();
        assert_eq!(report.failures.len(), 1);
        assert_eq!((report.failures[0].lhs.as_str(), report.failures[0].rhs.as_str()), ("5", "4"));
    }

    #[test]
    fn report_renderings() {
        let g: Grid = "m=2,p=1,k=2,n=6".parse().unwrap();
        let report = run_audit(IdentityId::ThmH3Printed, &g).unwrap();
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["identity"], "Thm-H3-printed");
        assert_eq!(json["checked"], 1);
        assert_eq!(json["failures"][0]["params"]["n"], 6);
        assert_eq!(json["failures"][0]["lhs"], "11");
        assert_eq!(json["failures"][0]["rhs"], "17");
        let text = report.to_text();
        assert!(text.contains("FAIL (1 mismatches)"));
        assert!(text.contains("17"));
        let back: AuditReport = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(back, report);
    }
}
