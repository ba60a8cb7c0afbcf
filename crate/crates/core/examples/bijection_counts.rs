//! Above n = mpk, the circle count does not depend on m.

use sepcount::recurrence::bijection_count_check;
use sepcount::SeparationParams;

fn main() -> sepcount::Result<()> {
    for m in 2..=3 {
        let sep = SeparationParams::new(m, 1)?;
        for k in 1..=3 {
            let n = m * k + 1;
            let (general, adjacent) = bijection_count_check(n, k, sep)?;
            println!("m={m} k={k} n={n}: {general} vs {adjacent}");
        }
    }
    Ok(())
}
