//! Weak compositions of `k` into `m` ordered nonnegative parts.

use crate::arith::binom_nat;
use crate::arith::ExactInt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<i64>,
}

impl Composition {
    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn total(&self) -> i64 {
        self.parts.iter().sum()
    }
}

/// Lexicographic stream of all weak compositions of `k` into `m` parts.
///
/// Yields nothing when `k < 0` or `m == 0`.
pub fn compositions(k: i64, m: usize) -> Compositions {
    let current = if k >= 0 && m >= 1 {
        let mut parts = vec![0; m];
        parts[m - 1] = k;
        Some(parts)
    } else {
        None
    };
    Compositions { current }
}

/// Number of weak compositions: `binom(k+m-1, m-1)`.
pub fn composition_count(k: i64, m: usize) -> ExactInt {
    binom_nat(k + m as i64 - 1, m as i64 - 1)
}

#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<i64>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let parts = self.current.take()?;
        let out = Composition { parts: parts.clone() };
        let m = parts.len();
        // Successor: bump the rightmost non-final position whose tail is
        // nonzero, then move the remaining tail into the last slot.
        let mut next = parts;
        let mut i = m.saturating_sub(1);
        while i > 0 {
            i -= 1;
            let tail: i64 = next[i + 1..].iter().sum();
            if tail > 0 {
                next[i] += 1;
                for slot in &mut next[i + 1..] {
                    *slot = 0;
                }
                next[m - 1] = tail - 1;
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}
