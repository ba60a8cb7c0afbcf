//! Every line evaluator on one query, plus where the closed forms stop applying.

use sepcount::counting::{h_closed_1, h_closed_2, h_closed_3, h_composition};
use sepcount::recurrence::h_recurrence;
use sepcount::series::h_series;
use sepcount::{SeparationParams, Variant};

fn main() -> sepcount::Result<()> {
    let sep = SeparationParams::new(2, 2)?;
    let (n, k) = (14, 4);
    println!("composition {}", h_composition(n, k, sep));
    println!("closed 1    {}", h_closed_1(n, k, sep)?);
    println!("closed 2    {}", h_closed_2(n, k, sep)?);
    println!("closed 3    {}", h_closed_3(n, k, sep, Variant::Corrected)?);
    println!("series      {}", h_series(n, k, sep.m(), sep.p())?);
    println!("recurrence  {}", h_recurrence(n, k, sep));

    // Below pm(k-1) only the composition sum (and brute force) are defined.
    match h_closed_1(8, 4, sep) {
        Ok(v) => println!("unexpected {v}"),
        Err(err) => println!("h_closed_1(8, 4): {err}; composition gives {}", h_composition(8, 4, sep)),
    }
    Ok(())
}
