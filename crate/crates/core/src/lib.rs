//! Exact second-order linear recurrences and the sum-proportionality
//! identities `S_n = A x_m` they admit.
//!
//! * [`exact`]: big integers, rationals, dense polynomials and matrices.
//! * [`sequences`]: the recurrence engine, Fibonacci and Lucas numbers.
//! * [`polynomials`]: Chebyshev-like, Fibonacci and Lucas polynomial families.
//! * [`identity`]: construction, certification and discovery of identities.
//! * [`algebraic`]: the positive root of `r^{p+1} - r^p - r - 1` and the
//!   polynomial equations satisfied by `a = rho - 1/rho`.
//! * [`cli`]: the command-line front end and its JSON reports.

pub mod algebraic;
pub mod cli;
pub mod error;
pub mod exact;
pub mod identity;
pub mod polynomials;
pub mod sequences;

pub use error::{Error, Result};
pub use exact::{binomial, solve_linear, ExactInt, ExactMatrix, Rational, Ring, Tolerance, UniPoly};
