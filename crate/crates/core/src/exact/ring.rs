use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::UniPoly;

/// Comparison tolerance for floating rings. Exact rings ignore it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Tolerance {
    /// Default for plain float recurrences.
    pub const SEQUENCE: Tolerance = Tolerance { rel: 1e-9, abs: 1e-12 };
    /// Identities built on a numeric root, which is only known to ~1e-14.
    pub const IDENTITY: Tolerance = Tolerance { rel: 1e-8, abs: 1e-12 };

    pub fn relative(rel: f64) -> Self {
        Tolerance { rel, abs: 0.0 }
    }

    pub fn close(&self, x: f64, y: f64) -> bool {
        let scale = x.abs().max(y.abs());
        (x - y).abs() <= self.abs.max(self.rel * scale)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::SEQUENCE
    }
}

/// A commutative ring that recurrences and identities can run over.
///
/// Implemented for `BigInt`, `BigRational`, `UniPoly` (a symbolic parameter)
/// and `f64`; `zero`/`one` come from `num_traits`.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;

    /// Equality for exact rings, tolerance comparison for floats.
    fn close_to(&self, other: &Self, _tol: Tolerance) -> bool {
        self == other
    }

    /// Magnitude used for relative error scaling; exact rings return 0.
    fn magnitude(&self) -> f64 {
        0.0
    }
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Ring for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
}

impl Ring for UniPoly {
    fn from_i64(v: i64) -> Self {
        UniPoly::constant(super::rat(v))
    }
}

impl Ring for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn close_to(&self, other: &Self, tol: Tolerance) -> bool {
        tol.close(*self, *other)
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}
