//! Exact computer algebra for Ore extensions `A[x; sigma, delta]` over a
//! finite-dimensional algebra `A` on a finite field, deciding Frobenius-type
//! properties of the ring extension `F[x] <= A[x; sigma, delta]` with explicit
//! witnesses.
//!
//! The pipeline is: present `A` by structure constants over `GF(p^k)`
//! ([`algebra`]), attach an automorphism `sigma` and a `sigma`-derivation
//! `delta` to get the skew polynomial ring ([`ore`]), then run the decision
//! procedures ([`decide`]), each of which returns a checkable certificate
//! (a linear functional, a separability tensor, or a proof of emptiness by
//! exhaustion of a finite solution space).
//!
//! ```
//! use orefrob::builtin::biseparable_not_frobenius;
//! use orefrob::decide::{analyze, AnalyzeOptions, Status};
//!
//! let cx = biseparable_not_frobenius();
//! let report = analyze(&cx.ore, &AnalyzeOptions::default());
//! assert_eq!(report.frobenius.unwrap().status, Status::No);
//! assert_eq!(report.split_certificate.unwrap().status, Status::Yes);
//! assert_eq!(report.separability_certificate.unwrap().status, Status::Yes);
//! ```

pub mod algebra;
pub mod builtin;
pub mod decide;
pub mod field;
pub mod linalg;
pub mod ore;
pub mod spec;
