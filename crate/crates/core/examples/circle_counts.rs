//! Circle evaluators, including the ones that go through line counts.

use sepcount::counting::{g_closed, g_from_h};
use sepcount::oracle::count_brute;
use sepcount::recurrence::{g_alternating, g_recurrence, h_from_g};
use sepcount::series::g_series;
use sepcount::{CountQuery, SeparationParams, Variant};

fn main() -> sepcount::Result<()> {
    let sep = SeparationParams::new(3, 1)?;
    println!(
        "{:>3} {:>3} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}",
        "n", "k", "closed", "from_h", "series", "alt", "rec", "brute"
    );
    for k in 1..=3 {
        for n in (3 * k + 1)..=16 {
            let rec =
                if n >= 3 * (k + 1) { g_recurrence(n, k, sep, Variant::Corrected)?.to_string() } else { "-".into() };
            println!(
                "{n:>3} {k:>3} {:>8} {:>8} {:>8} {:>8} {rec:>8} {:>8}",
                g_closed(n, k, sep)?,
                g_from_h(n, k, sep)?,
                g_series(n, k, 3, 1)?,
                g_alternating(n, k, sep)?,
                count_brute(&CountQuery::circle(n, k, 3, 1)?)?,
            );
        }
    }
    println!("line count recovered from circle counts: H(12,3) = {}", h_from_g(12, 3, sep)?);
    Ok(())
}
