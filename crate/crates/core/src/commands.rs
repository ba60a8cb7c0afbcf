//! Command implementations behind the `sepcount` binary. Each returns the
//! text destined for stdout; the binary maps errors to exit code 1.

use std::fmt::Write as _;

use crate::audit::{reports_to_json, Auditor, Grid, IdentityId};
use crate::error::Result;
use crate::method::{count_with, render_table, table_rows, MethodChoice, TableRequest};
use crate::oracle::Oracle;
use crate::params::CountQuery;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

pub fn cmd_count(q: &CountQuery, method: MethodChoice, oracle: Oracle) -> Result<String> {
    Ok(format!("{}\n", count_with(q, method, oracle)?))
}

/// One selection per line; the empty selection is an empty line.
pub fn cmd_list(q: &CountQuery, oracle: Oracle) -> Result<String> {
    let mut out = String::new();
    for s in oracle.list(q)? {
        out.push_str(&s.render());
        out.push('\n');
    }
    Ok(out)
}

pub fn cmd_table(req: &TableRequest, oracle: Oracle) -> Result<String> {
    Ok(render_table(&table_rows(req, oracle)?, req.format))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Json,
}

/// Identity selector: a single id or `all`.
pub fn parse_identities(s: &str) -> Result<Vec<IdentityId>> {
    if s.eq_ignore_ascii_case("all") {
        Ok(IdentityId::ALL.to_vec())
    } else {
        s.split(',').map(|t| t.trim().parse()).collect()
    }
}

/// Returns the rendered reports and the exit code: 0 when every identity
/// holds on the grid, 2 when any has a mismatch.
pub fn cmd_audit(
    identities: &[IdentityId],
    grid: &Grid,
    format: ReportFormat,
    auditor: &Auditor,
) -> Result<(String, i32)> {
    let reports = auditor.run_all(identities, grid)?;
    let code = if reports.iter().all(|r| r.passed()) { EXIT_OK } else { EXIT_MISMATCH };
    let out = match format {
        ReportFormat::Json => format!("{}\n", reports_to_json(&reports)),
        ReportFormat::Text => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&r.to_text());
                out.push('\n');
            }
            let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.identity.as_str()).collect();
            let _ = writeln!(
                out,
                "summary: {} identities, {} passed, {} failed{}",
                reports.len(),
                reports.len() - failed.len(),
                failed.len(),
                if failed.is_empty() { String::new() } else { format!(" ({})", failed.join(", ")) }
            );
            out
        }
    };
    Ok((out, code))
}
