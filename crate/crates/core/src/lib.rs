//! Exact counting and enumeration of separated k-subsets.
//!
//! Objects `x_1, ..., x_n` sit on a line or a circle. For integers `m, p >= 1`
//! a selection is *separated* when no two chosen objects have exactly
//! `m-1, 2m-1, ..., pm-1` objects between them. `H(n,k)` counts separated
//! k-subsets of the line and `G(n,k)` those of the circle.
//!
//! The crate provides
//!
//! * exact binomials under both the counting and the generalized convention
//!   ([`arith`]);
//! * truncated power series and coefficient extraction ([`series`]);
//! * the row decomposition, three closed forms for `H` and the closed form
//!   `n/(n-pk) C(n-pk,k)` for `G` ([`counting`]);
//! * composition sums of generalized binomials with their closed forms
//!   ([`lemma`]);
//! * a brute-force oracle ([`oracle`]) and recurrence evaluators
//!   ([`recurrence`]);
//! * grid audits that evaluate both sides of every identity and record
//!   counterexamples ([`audit`]).
//!
//! ```
//! use sepcount::{counting::g_closed, oracle::count_brute, CountQuery, SeparationParams};
//!
//! let sep = SeparationParams::new(2, 1).unwrap();
//! let q = CountQuery::circle(5, 2, 2, 1).unwrap();
//! assert_eq!(g_closed(5, 2, sep).unwrap(), count_brute(&q).unwrap());
//! ```

pub mod arith;
pub mod audit;
pub mod commands;
pub mod compositions;
pub mod counting;
pub mod error;
pub mod lemma;
pub mod method;
pub mod oracle;
pub mod params;
pub mod recurrence;
pub mod series;

pub use arith::{ExactInt, ExactRational};
pub use audit::{run_audit, AuditReport, Auditor, Grid, IdentityId, TermConvention};
pub use counting::Variant;
pub use error::{Error, Result};
pub use method::MethodChoice;
pub use oracle::Oracle;
pub use params::{CountQuery, SeparationParams, Topology};
pub use series::PowerSeries;
