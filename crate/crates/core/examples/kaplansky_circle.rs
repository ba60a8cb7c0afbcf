//! Pairs from five objects on a circle with m = 2, p = 1: two chosen objects
//! may not sit 2 apart in either direction, so on a circle of 5 only the
//! adjacent pairs survive.

use sepcount::oracle::list_brute;
use sepcount::{CountQuery, MethodChoice, Oracle};

fn main() -> sepcount::Result<()> {
    let q = CountQuery::circle(5, 2, 2, 1)?;
    for method in [MethodChoice::Closed1, MethodChoice::Composition, MethodChoice::Series, MethodChoice::Brute] {
        let count = sepcount::method::count_with(&q, method, Oracle::default())?;
        println!("{:<12} {count}", method.name());
    }
    for subset in list_brute(&q)? {
        println!("{{{}}}", subset.render());
    }
    Ok(())
}
