//! Enumerate separated subsets lazily, in lexicographic order.

use sepcount::oracle::{is_separate_circle, SubsetSelection};
use sepcount::{CountQuery, Oracle, SeparationParams};

fn main() -> sepcount::Result<()> {
    let oracle = Oracle::default();
    let q = CountQuery::line(9, 3, 2, 1)?;
    let all: Vec<_> = oracle.list(&q)?.collect();
    println!("{} separated 3-subsets of a line of 9 (m=2, p=1):", all.len());
    for s in all.iter().take(5) {
        println!("  {}", s.render());
    }
    println!("  ...");

    let sep = SeparationParams::new(2, 1)?;
    let s = SubsetSelection::new(vec![1, 3, 8], 9)?;
    println!("{{{}}} separated on a circle of 9: {}", s.render(), is_separate_circle(&s, 9, &sep));

    // The oracle refuses n above its cap unless raised explicitly.
    let big = CountQuery::line(40, 2, 2, 1)?;
    println!("default cap: {}", oracle.count(&big).unwrap_err());
    println!("cap 40: {}", Oracle::with_cap(40).count(&big)?);
    Ok(())
}
