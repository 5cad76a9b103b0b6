//! Exact inverse categories at desk scale.
//!
//! Every statement is checked by enumeration over small finite instances:
//! the category of partial bijections ([`pbij`]), two-object categories
//! built from inverse monoids ([`monoid`]), or any hand-written composition
//! table ([`table`]). Checkers return a [`report::VerificationReport`] whose
//! failed clauses carry a concrete counterexample.
//!
//! ```
//! use invcat::budget::Bound;
//! use invcat::exactness::check_exactness;
//! use invcat::pbij::PbijCategory;
//!
//! let cat = PbijCategory::canonical(&[0, 1, 2]);
//! let report = check_exactness(&cat, &Bound::exhaustive()).unwrap();
//! assert!(report.verdicts["exact"]);
//! ```

pub mod budget;
pub mod error;
pub mod report;

pub mod category;
pub mod table;

pub mod partial_fn;
pub mod pbij;

pub mod exactness;
pub mod projections;
pub mod transfer;

pub mod harness;
pub mod monoid;
