//! The composition-sum lemma on a rational instance, and its two classical
//! special cases.

use sepcount::arith::{display_rat, frac};
use sepcount::lemma::*;
use sepcount::Variant;

fn main() -> sepcount::Result<()> {
    let q = OmegaQuery::new(vec![frac(5, 2), frac(-1, 3), frac(7, 4)], frac(2, 5), 4)?;
    println!("{}", q.describe());
    println!("  direct          {}", display_rat(&omega_direct(&q)));
    println!("  closed 1        {}", display_rat(&omega_closed_1(&q)));
    println!("  closed 2        {}", display_rat(&omega_closed_2(&q)));
    println!("  closed 3        {}", display_rat(&omega_closed_3(&q, Variant::Corrected)?));
    println!("  closed 3 (as printed) {}", display_rat(&omega_closed_3(&q, Variant::Printed)?));
    println!("  phi direct      {}", display_rat(&phi_direct(&q)?));
    println!("  phi closed      {}", display_rat(&phi_closed(&q)?));

    let (l, r) = hwang_wei_check(&[4, 2, 5], 4)?;
    println!("Hwang-Wei: {} = {}", display_rat(&l), display_rat(&r));
    let (l, r) = gould_check(&frac(3, 2), &frac(-2, 7), &frac(5, 3), 5)?;
    println!("Gould:     {} = {}", display_rat(&l), display_rat(&r));
    Ok(())
}
