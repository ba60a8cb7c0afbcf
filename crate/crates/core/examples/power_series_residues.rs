//! Truncated power series and the residue forms of the counts.

use sepcount::arith::{display_rat, frac, rat};
use sepcount::series::{binomial_series, g_residue, h_residue, phi_residue};

fn main() -> sepcount::Result<()> {
    let s = binomial_series(&rat(-3), &rat(2), 4);
    println!("(1+2x)^-3       = {s}");
    let cube = s.mul(&s)?.mul(&s)?;
    println!("its cube        = {}", cube);
    let half = binomial_series(&frac(1, 2), &rat(1), 4);
    println!("(1+x)^(1/2)     = {half}");
    println!("squared         = {}", half.mul(&half)?);

    println!("phi(3/2, -1/3, 4) = {}", display_rat(&phi_residue(&frac(3, 2), &frac(-1, 3), 4)?));

    // Residue forms continue the counts past their range. For k = 2, m = 2,
    // p = 1 the line range starts at n = 2 and the circle range at n = 5;
    // below that the values are no longer counts (h_residue(0) = 2, g_residue(1) = -1).
    for n in 0..=6 {
        println!("n={n}: h_residue {:>3}  g_residue {:>3}", h_residue(n, 2, 2, 1)?, g_residue(n, 2, 1)?);
    }
    Ok(())
}
