use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};

/// Separation modulus `m` and multiplicity bound `p`.
///
/// Two chosen objects may not have `m-1, 2m-1, ..., pm-1` objects between
/// them; equivalently their positions may not differ by `m, 2m, ..., pm`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeparationParams {
    m: i64,
    p: i64,
}

impl SeparationParams {
    pub fn new(m: i64, p: i64) -> Result<Self> {
        require(m >= 1, || format!("separation modulus m must be >= 1, got {m}"))?;
        require(p >= 1, || format!("multiplicity bound p must be >= 1, got {p}"))?;
        Ok(Self { m, p })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// `{m-1, 2m-1, ..., pm-1}`: object counts not allowed between two picks.
    pub fn forbidden_gaps(&self) -> Vec<i64> {
        (1..=self.p).map(|i| i * self.m - 1).collect()
    }

    /// `{m, 2m, ..., pm}`: position differences not allowed between two picks.
    pub fn forbidden_diffs(&self) -> Vec<i64> {
        (1..=self.p).map(|i| i * self.m).collect()
    }

    #[inline]
    pub fn is_forbidden_diff(&self, d: i64) -> bool {
        d > 0 && d % self.m == 0 && d / self.m <= self.p
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    Line,
    Circle,
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Topology::Line => "line",
            Topology::Circle => "circle",
        })
    }
}

impl FromStr for Topology {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "line" => Ok(Topology::Line),
            "circle" => Ok(Topology::Circle),
            other => Err(Error::Precondition(format!("topology must be `line` or `circle`, got `{other}`"))),
        }
    }
}

/// One counting request: choose `k` of `n` objects on a line or circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CountQuery {
    pub topology: Topology,
    pub n: i64,
    pub k: i64,
    pub params: SeparationParams,
}

impl CountQuery {
    pub fn new(topology: Topology, n: i64, k: i64, params: SeparationParams) -> Result<Self> {
        require(n >= 0, || format!("number of objects n must be >= 0, got {n}"))?;
        Ok(Self { topology, n, k, params })
    }

    pub fn line(n: i64, k: i64, m: i64, p: i64) -> Result<Self> {
        Self::new(Topology::Line, n, k, SeparationParams::new(m, p)?)
    }

    pub fn circle(n: i64, k: i64, m: i64, p: i64) -> Result<Self> {
        Self::new(Topology::Circle, n, k, SeparationParams::new(m, p)?)
    }
}
