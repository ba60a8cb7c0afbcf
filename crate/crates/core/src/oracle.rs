//! Brute-force ground truth: enumerate k-subsets in lexicographic order and
//! keep the separated ones.
//!
//! On a circle each pair of chosen objects splits the remaining objects into
//! two arcs, and both arc gaps must be allowed. That reading is the one under
//! which `{x_5, x_1}` is separated for `n = 5, m = 2, p = 1` while
//! `{x_1, x_3}` is not.

use num_bigint::BigInt;

use crate::arith::ExactInt;
use crate::error::{require, Error, Result};
use crate::params::{CountQuery, SeparationParams, Topology};

pub const DEFAULT_CAP: i64 = 32;

/// Sorted distinct 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetSelection(Vec<i64>);

impl SubsetSelection {
    pub fn new(positions: Vec<i64>, n: i64) -> Result<Self> {
        require(positions.windows(2).all(|w| w[0] < w[1]), || {
            format!("positions must be strictly increasing: {positions:?}")
        })?;
        require(positions.iter().all(|&x| 1 <= x && x <= n), || {
            format!("positions must lie in 1..={n}: {positions:?}")
        })?;
        Ok(Self(positions))
    }

    pub fn positions(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Comma-separated positions; the empty selection renders as "".
    pub fn render(&self) -> String {
        self.0.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
    }
}

fn line_pair_ok(a: i64, b: i64, sep: &SeparationParams) -> bool {
    !sep.is_forbidden_diff((b - a).abs())
}

fn circle_pair_ok(a: i64, b: i64, n: i64, sep: &SeparationParams) -> bool {
    let d = (b - a).abs();
    !sep.is_forbidden_diff(d) && !sep.is_forbidden_diff(n - d)
}

pub fn is_separate_line(s: &SubsetSelection, sep: &SeparationParams) -> bool {
    let pos = s.positions();
    pos.iter().enumerate().all(|(i, &a)| pos[i + 1..].iter().all(|&b| line_pair_ok(a, b, sep)))
}

pub fn is_separate_circle(s: &SubsetSelection, n: i64, sep: &SeparationParams) -> bool {
    let pos = s.positions();
    pos.iter().enumerate().all(|(i, &a)| pos[i + 1..].iter().all(|&b| circle_pair_ok(a, b, n, sep)))
}

/// Brute-force counter with an explicit bound on `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    cap: i64,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

impl Oracle {
    pub fn with_cap(cap: i64) -> Self {
        Self { cap }
    }

    pub fn cap(&self) -> i64 {
        self.cap
    }

    fn check(&self, q: &CountQuery) -> Result<()> {
        if q.n > self.cap {
            return Err(Error::CapExceeded { n: q.n, cap: self.cap });
        }
        Ok(())
    }

    pub fn list(&self, q: &CountQuery) -> Result<SeparateSubsets> {
        self.check(q)?;
        Ok(SeparateSubsets::new(*q))
    }

    pub fn count(&self, q: &CountQuery) -> Result<ExactInt> {
        self.check(q)?;
        if q.k < 0 {
            return Ok(BigInt::from(0));
        }
        let mut chosen = Vec::with_capacity(q.k as usize);
        Ok(BigInt::from(count_from(q, &mut chosen, 1)))
    }
}

// Depth-first count; faster than draining the iterator since no selection
// is materialized.
fn count_from(q: &CountQuery, chosen: &mut Vec<i64>, start: i64) -> u64 {
    let need = q.k - chosen.len() as i64;
    if need == 0 {
        return 1;
    }
    let mut total = 0;
    let mut cand = start;
    while cand + need - 1 <= q.n {
        if compatible(q, chosen, cand) {
            chosen.push(cand);
            total += count_from(q, chosen, cand + 1);
            chosen.pop();
        }
        cand += 1;
    }
    total
}

fn compatible(q: &CountQuery, chosen: &[i64], cand: i64) -> bool {
    match q.topology {
        Topology::Line => chosen.iter().all(|&a| line_pair_ok(a, cand, &q.params)),
        Topology::Circle => chosen.iter().all(|&a| circle_pair_ok(a, cand, q.n, &q.params)),
    }
}

pub fn count_brute(q: &CountQuery) -> Result<ExactInt> {
    Oracle::default().count(q)
}

pub fn list_brute(q: &CountQuery) -> Result<SeparateSubsets> {
    Oracle::default().list(q)
}

/// Lexicographic stream of separated selections, pruned on the newest pick.
#[derive(Debug, Clone)]
pub struct SeparateSubsets {
    query: CountQuery,
    chosen: Vec<i64>,
    started: bool,
    done: bool,
}

impl SeparateSubsets {
    fn new(query: CountQuery) -> Self {
        Self { query, chosen: Vec::new(), started: false, done: query.k < 0 }
    }
}

impl Iterator for SeparateSubsets {
    type Item = SubsetSelection;

    fn next(&mut self) -> Option<SubsetSelection> {
        if self.done {
            return None;
        }
        let (n, k) = (self.query.n, self.query.k);
        let mut cand = if self.started {
            match self.chosen.pop() {
                Some(last) => last + 1,
                None => {
                    self.done = true;
                    return None;
                }
            }
        } else {
            self.started = true;
            if k == 0 {
                self.done = true;
                return Some(SubsetSelection(Vec::new()));
            }
            1
        };
        loop {
            let need = k - self.chosen.len() as i64;
            if cand + need - 1 > n {
                match self.chosen.pop() {
                    Some(last) => cand = last + 1,
                    None => {
                        self.done = true;
                        return None;
                    }
                }
                continue;
            }
            if compatible(&self.query, &self.chosen, cand) {
                self.chosen.push(cand);
                if self.chosen.len() as i64 == k {
                    return Some(SubsetSelection(self.chosen.clone()));
                }
            }
            cand += 1;
        }
    }
}
