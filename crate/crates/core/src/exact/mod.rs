//! Exact arithmetic substrate: big integers, reduced fractions, dense
//! univariate polynomials over the rationals and dense rational matrices.
//!
//! `ExactInt` and `Rational` are the `num` crate's `BigInt` and
//! `BigRational`. A `BigRational` is always kept reduced with a positive
//! denominator, so structural equality is value equality.

mod matrix;
mod poly;
mod ring;

pub use matrix::{solve_linear, ExactMatrix};
pub use poly::UniPoly;
pub use ring::{Ring, Tolerance};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};

pub type ExactInt = BigInt;
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational `num / den`, reduced. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Parses `"n"` or `"n/d"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let parse_int = |x: &str| {
        x.trim().parse::<BigInt>().map_err(|_| crate::Error::Parse {
            input: s.to_string(),
            what: "rational",
        })
    };
    match t.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(t)?)),
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(crate::Error::Parse {
                    input: s.to_string(),
                    what: "rational (zero denominator)",
                });
            }
            Ok(Rational::new(parse_int(n)?, d))
        }
    }
}

/// Binomial coefficient with the grid convention `C(n, k) = 0` for `k < 0`
/// or `k > n`. Negative `n` is rejected.
pub fn binomial(n: i64, k: i64) -> Result<ExactInt> {
    if n < 0 {
        return Err(invalid(format!("binomial: negative n = {n}")));
    }
    Ok(binomial_unchecked(n as u64, k))
}

pub(crate) fn binomial_unchecked(n: u64, k: i64) -> ExactInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    // acc = C(n, i) after step i; each division is exact
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial with a possibly negative upper index treated as the grid
/// convention (zero whenever `n < 0`). Used by the triangular matrices where
/// entries such as `C(2j - 1, j - i)` are written for `j = 0`.
pub(crate) fn binomial_grid(n: i64, k: i64) -> ExactInt {
    if n < 0 {
        BigInt::zero()
    } else {
        binomial_unchecked(n as u64, k)
    }
}
