use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{rat, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial with rational coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. The vector is always trimmed, so
/// the zero polynomial is the empty vector and the last entry, when present,
/// is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate.
    pub fn x() -> Self {
        UniPoly { coeffs: vec![Rational::zero(), Rational::one()] }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, or an error naming the first fractional one.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral(c.to_string()))
                }
            })
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: v }
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in binary64.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Euclidean division by a nonzero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::InvalidArgument("division by the zero polynomial".into()))?;
        let lead = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &UniPoly) -> Result<UniPoly> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Renders with the given variable name, highest degree first,
    /// e.g. `a^3 - a^2 + 3a - 2`.
    pub fn display_var<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, var }
    }
}

struct PolyDisplay<'a> {
    poly: &'a UniPoly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let coeff = if mag.is_integer() {
                mag.to_integer().to_string()
            } else {
                format!("({mag})")
            };
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        f.write_str(&coeff)?;
                    }
                    f.write_str(self.var)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_var("x").fmt(f)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

fn add_coeffs(a: &[Rational], b: &[Rational], negate_b: bool) -> UniPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i);
        let y = b.get(i);
        let v = match (x, y) {
            (Some(x), Some(y)) if negate_b => x - y,
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) if negate_b => -y,
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        };
        out.push(v);
    }
    UniPoly::from_coeffs(out)
}

/// `Some((k, negative))` when the coefficients are `±x^k`.
fn unit_monomial(c: &[Rational]) -> Option<(usize, bool)> {
    let (last, rest) = c.split_last()?;
    if !rest.iter().all(|v| v.is_zero()) {
        return None;
    }
    let neg = if last.is_one() {
        false
    } else if (-last).is_one() {
        true
    } else {
        return None;
    };
    Some((rest.len(), neg))
}

fn mul_coeffs(a: &[Rational], b: &[Rational]) -> UniPoly {
    if a.is_empty() || b.is_empty() {
        return UniPoly::zero();
    }
    // multiplying by x^k or -x^k is a shift, which dominates recurrence work
    for (unit, other) in [(a, b), (b, a)] {
        if let Some((k, neg)) = unit_monomial(unit) {
            let mut v = vec![Rational::zero(); k];
            if neg {
                v.extend(other.iter().map(|c| -c));
            } else {
                v.extend(other.iter().cloned());
            }
            return UniPoly { coeffs: v };
        }
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    UniPoly::from_coeffs(out)
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&UniPoly> for &UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
        impl $tr<UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
        impl $tr<UniPoly> for &UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_coeffs(a, b, false));
forward_binop!(Sub, sub, |a, b| add_coeffs(a, b, true));
forward_binop!(Mul, mul, mul_coeffs);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -self.clone()
    }
}

impl Zero for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for UniPoly {
    fn one() -> Self {
        UniPoly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn products() {
        assert_eq!(p(&[1, 1]) * p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(p(&[2, 0, 1]) * UniPoly::x(), p(&[0, 2, 0, 1]));
        let q = p(&[3, -1, 4]);
        assert_eq!(&q + &UniPoly::zero(), q);
        assert_eq!(&q * &UniPoly::zero(), UniPoly::zero());
    }

    #[test]
    fn trimming_and_degree() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(p(&[1, 2, 3]) - p(&[0, 0, 3]), p(&[1, 2]));
        assert!((p(&[5, 1]) - p(&[5, 1])).is_zero());
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[-2, 0, 1]).eval(&rat(2)), rat(2));
        assert_eq!(UniPoly::zero().eval(&ratio(7, 3)), rat(0));
        assert_eq!(p(&[4, 1, 1]).eval(&rat(0)), rat(4));
        let cubic = p(&[-2, 3, -1, 1]);
        assert!(cubic.eval_f64(0.71523).abs() < 1e-3);
    }

    #[test]
    fn division() {
        let cubic = p(&[-2, 3, -1, 1]);
        let x5 = UniPoly::monomial(rat(1), 5);
        let (q, r) = x5.div_rem(&cubic).unwrap();
        assert_eq!(r, p(&[-4, 8, -3]));
        assert_eq!(&q * &cubic + &r, x5);
        assert!(x5.div_rem(&UniPoly::zero()).is_err());
        let half = UniPoly::from_coeffs(vec![ratio(1, 2), rat(2)]);
        let (q, r) = p(&[1, 0, 4]).div_rem(&half).unwrap();
        assert_eq!(&q * &half + &r, p(&[1, 0, 4]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-2, 3, -1, 1]).display_var("a").to_string(), "a^3 - a^2 + 3a - 2");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(UniPoly::zero().to_string(), "0");
        let h = UniPoly::from_coeffs(vec![ratio(-1, 2), ratio(3, 4)]);
        assert_eq!(h.to_string(), "(3/4)x - 1/2");
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..7).prop_map(|v| {
            UniPoly::from_coeffs(v.into_iter().map(|(n, d)| ratio(n, d)).collect())
        })
    }

    proptest! {
        #[test]
        fn degree_of_product(a in small_poly(), b in small_poly()) {
            let prod = &a * &b;
            match (a.degree(), b.degree()) {
                (Some(da), Some(db)) => prop_assert_eq!(prod.degree(), Some(da + db)),
                _ => prop_assert!(prod.is_zero()),
            }
        }

        #[test]
        fn evaluation_is_multiplicative(a in small_poly(), b in small_poly(),
                                        n in -30i64..30, d in 1i64..9) {
            let x = ratio(n, d);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }
    }
}
