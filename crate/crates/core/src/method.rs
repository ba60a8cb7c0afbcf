//! Method selection for single counts and `(n, k)` tables.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::{to_int, ExactInt};
use crate::counting::{g_closed, g_from_h, h_closed_1, h_closed_2, h_closed_3, h_composition, Variant};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::params::{CountQuery, SeparationParams, Topology};
use crate::recurrence::{g_alternating, g_recurrence_with, LineRecurrence};
use crate::series::{g_series, h_series};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodChoice {
    #[default]
    Auto,
    Closed1,
    Closed2,
    Closed3,
    Composition,
    Series,
    Recurrence,
    Brute,
}

impl MethodChoice {
    pub const ALL: [MethodChoice; 8] = [
        MethodChoice::Auto,
        MethodChoice::Closed1,
        MethodChoice::Closed2,
        MethodChoice::Closed3,
        MethodChoice::Composition,
        MethodChoice::Series,
        MethodChoice::Recurrence,
        MethodChoice::Brute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodChoice::Auto => "auto",
            MethodChoice::Closed1 => "closed1",
            MethodChoice::Closed2 => "closed2",
            MethodChoice::Closed3 => "closed3",
            MethodChoice::Composition => "composition",
            MethodChoice::Series => "series",
            MethodChoice::Recurrence => "recurrence",
            MethodChoice::Brute => "brute",
        }
    }

    /// Concrete method `auto` picks for a query.
    pub fn resolve(self, q: &CountQuery) -> MethodChoice {
        if self != MethodChoice::Auto {
            return self;
        }
        let (m, p) = (q.params.m(), q.params.p());
        match q.topology {
            Topology::Line if q.k >= 0 && q.n >= p * m * (q.k - 1) => MethodChoice::Closed1,
            Topology::Line => MethodChoice::Composition,
            Topology::Circle if q.k >= 0 && q.n > m * p * q.k => MethodChoice::Closed1,
            Topology::Circle => MethodChoice::Brute,
        }
    }
}

impl fmt::Display for MethodChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MethodChoice::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown method `{s}`")))
    }
}

/// Counts a query with the chosen method.
///
/// Line methods: the three closed forms, the row decomposition, coefficient
/// extraction, the memoized recurrence, brute force. Circle methods:
/// `closed1` is `n/(n-pk) C(n-pk,k)`, `closed2` the alternating sum over line
/// counts, `composition` the decomposition into line counts, plus `series`,
/// `recurrence` and `brute`; there is no third circle closed form.
pub fn count_with(q: &CountQuery, method: MethodChoice, oracle: Oracle) -> Result<ExactInt> {
    let (n, k, sep) = (q.n, q.k, q.params);
    let method = method.resolve(q);
    if k < 0 && method != MethodChoice::Brute {
        return Ok(BigInt::zero());
    }
    match (q.topology, method) {
        (_, MethodChoice::Brute) => oracle.count(q),
        (Topology::Line, MethodChoice::Closed1) => h_closed_1(n, k, sep),
        (Topology::Line, MethodChoice::Closed2) => h_closed_2(n, k, sep),
        (Topology::Line, MethodChoice::Closed3) => {
            let v = h_closed_3(n, k, sep, Variant::Corrected)?;
            Ok(to_int(&v).expect("third closed form is integral on its range"))
        }
        (Topology::Line, MethodChoice::Composition) => Ok(h_composition(n, k, sep)),
        (Topology::Line, MethodChoice::Series) => h_series(n, k, sep.m(), sep.p()),
        (Topology::Line, MethodChoice::Recurrence) => Ok(LineRecurrence::new(sep).get(n, k)),
        (Topology::Circle, MethodChoice::Closed1) => g_closed(n, k, sep),
        (Topology::Circle, MethodChoice::Closed2) => g_alternating(n, k, sep),
        (Topology::Circle, MethodChoice::Closed3) => {
            Err(Error::Precondition("closed3 has no circle counterpart; use closed1 or closed2".into()))
        }
        (Topology::Circle, MethodChoice::Composition) => g_from_h(n, k, sep),
        (Topology::Circle, MethodChoice::Series) => g_series(n, k, sep.m(), sep.p()),
        (Topology::Circle, MethodChoice::Recurrence) => g_recurrence_with(n, k, sep, Variant::Corrected, oracle),
        (_, MethodChoice::Auto) => unreachable!("auto is resolved above"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(Error::Precondition(format!("format must be `csv` or `json`, got `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRequest {
    pub topology: Topology,
    pub params: SeparationParams,
    pub n_max: i64,
    pub k_max: i64,
    pub format: TableFormat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: i64,
    pub k: i64,
    #[serde(serialize_with = "as_decimal")]
    pub count: ExactInt,
    pub method: MethodChoice,
}

// JSON number when it fits in i64, decimal string beyond that.
fn as_decimal<S: serde::Serializer>(v: &ExactInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(small) => s.serialize_i64(small),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

/// All cells `0 <= n <= n_max`, `0 <= k <= k_max`, n-major, auto method.
pub fn table_rows(req: &TableRequest, oracle: Oracle) -> Result<Vec<TableRow>> {
    if req.n_max < 0 || req.k_max < 0 {
        return Err(Error::Precondition("n_max and k_max must be >= 0".into()));
    }
    let mut rows = Vec::new();
    for n in 0..=req.n_max {
        for k in 0..=req.k_max {
            let q = CountQuery::new(req.topology, n, k, req.params)?;
            let method = MethodChoice::Auto.resolve(&q);
            let count = count_with(&q, method, oracle)?;
            rows.push(TableRow { n, k, count, method });
        }
    }
    Ok(rows)
}

/// CSV uses the header `n,k,count`; JSON rows also carry the method used.
pub fn render_table(rows: &[TableRow], format: TableFormat) -> String {
    match format {
        TableFormat::Csv => {
            let mut out = String::from("n,k,count\n");
            for r in rows {
                out.push_str(&format!("{},{},{}\n", r.n, r.k, r.count));
            }
            out
        }
        TableFormat::Json => {
            let mut out = serde_json::to_string_pretty(rows).expect("rows serialize");
            out.push('\n');
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auto_resolution() {
        let q = CountQuery::line(6, 2, 2, 1).unwrap();
        assert_eq!(MethodChoice::Auto.resolve(&q), MethodChoice::Closed1);
        let q = CountQuery::line(1, 2, 2, 1).unwrap();
        assert_eq!(MethodChoice::Auto.resolve(&q), MethodChoice::Composition);
        let q = CountQuery::circle(5, 2, 2, 1).unwrap();
        assert_eq!(MethodChoice::Auto.resolve(&q), MethodChoice::Closed1);
        let q = CountQuery::circle(4, 2, 2, 1).unwrap();
        assert_eq!(MethodChoice::Auto.resolve(&q), MethodChoice::Brute);
    }

    #[test]
    fn methods_agree_where_defined() {
        let oracle = Oracle::default();
        for topo in [Topology::Line, Topology::Circle] {
            for (m, p) in [(1, 1), (2, 1), (3, 2)] {
                for n in 0..16 {
                    for k in 0..4 {
                        let q = CountQuery::new(topo, n, k, SeparationParams::new(m, p).unwrap()).unwrap();
                        let truth = oracle.count(&q).unwrap();
                        for method in MethodChoice::ALL {
                            if let Ok(v) = count_with(&q, method, oracle) {
                                assert_eq!(v, truth, "{topo} {method} n={n} k={k} m={m} p={p}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn table_layout() {
        let req = TableRequest {
            topology: Topology::Circle,
            params: SeparationParams::new(2, 1).unwrap(),
            n_max: 6,
            k_max: 2,
            format: TableFormat::Csv,
        };
        let rows = table_rows(&req, Oracle::default()).unwrap();
        let row = rows.iter().find(|r| r.n == 5 && r.k == 2).unwrap();
        assert_eq!(row.count, 5.into());
        assert_eq!(row.method, MethodChoice::Closed1);
        assert_eq!(rows.iter().find(|r| r.n == 4 && r.k == 2).unwrap().method, MethodChoice::Brute);
        let csv = render_table(&rows, TableFormat::Csv);
        assert!(csv.starts_with("n,k,count\n0,0,1\n"));
        assert!(csv.contains("\n5,2,5\n"));
        let json: serde_json::Value = serde_json::from_str(&render_table(&rows, TableFormat::Json)).unwrap();
        assert_eq!(json[0]["n"], 0);
        assert_eq!(json[0]["count"], 1);
        assert_eq!(json[0]["method"], "brute");
    }
}
