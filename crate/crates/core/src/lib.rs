//! Exact arithmetic for multiple logarithms and the number families they
//! generate.
//!
//! Everything here is computed over arbitrary-precision rationals with an
//! explicit truncation order, so every stated identity can be checked as an
//! exact coefficient-by-coefficient equality rather than a floating-point
//! approximation. The layers build on each other:
//!
//! * [`series`]: truncated formal power series over [`Rational`]
//! * [`multilog`]: coefficients of the multiple logarithm `Li_{k_1,...,k_r}`
//! * [`classical`]: Stirling, Lah, Bell, Fubini and higher-order Bernoulli
//!   numbers, each computed by two independent routes
//! * [`multi`]: the multi-index generalizations of those families
//! * [`identity`]: an exact verification harness for the identities tying the
//!   families together
//!
//! All types are immutable after construction and all operations are pure, so
//! values can be shared freely across threads.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classical;
pub mod identity;
pub mod multi;
pub mod multilog;
pub mod number;
pub mod series;

pub use multilog::MultiIndex;
pub use number::Rational;
pub use series::TruncSeries;
