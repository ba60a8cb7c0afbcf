//! Audit every identity on a small grid; the printed variants fail.

use sepcount::{run_audit, Auditor, Grid, IdentityId, Oracle, TermConvention};

fn main() -> sepcount::Result<()> {
    let grid: Grid = "m<=2,p<=2,k<=3,n<=12".parse()?;
    for id in IdentityId::ALL {
        let report = run_audit(id, &grid)?;
        let first = report.failures.first().map(|f| format!("  e.g. {} lhs={} rhs={}", f.params, f.lhs, f.rhs));
        println!(
            "{:<18} checked {:>4}  {}{}",
            id.name(),
            report.checked,
            if report.passed() { "ok" } else { "FAIL" },
            first.unwrap_or_default()
        );
    }

    // Plain counts (zero below n = 0) instead of the residue continuation.
    let literal = Auditor::new(Oracle::default(), TermConvention::Literal);
    let report = literal.run(IdentityId::Eq2_2, &"m=2,p=1,k=2,n=5".parse()?)?;
    print!("{}", report.to_text());
    Ok(())
}
