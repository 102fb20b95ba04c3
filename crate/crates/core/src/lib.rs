//! Certified upper bounds for the size of the ideal class monoid of
//! quadratic orders and of the Cappell-Shaneson cubic orders
//! `Z[x]/(x^3 - m x^2 + (m-1) x - 1)`, with a brute-force oracle for
//! imaginary quadratic orders.
//!
//! All arithmetic is exact; irrational constants (`pi`, square roots) enter
//! only through certified rational enclosures.

pub mod arith;
pub mod bounds;
pub mod classnum;
mod error;
pub mod local;
pub mod oracle;

pub use error::{Error, Result};
