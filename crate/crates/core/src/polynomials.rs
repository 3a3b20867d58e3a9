//! Chebyshev-like polynomials `T̃_n(x) = 2 T_n(x/2)`, `Ũ_n(x) = U_{n-1}(x/2)`
//! and the Fibonacci and Lucas polynomials `F_n`, `L_n`.
//!
//! Every family is available from its three-term recurrence and, where a
//! binomial expansion exists, from that expansion as an independent route.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{invalid, Error, Result};
use crate::exact::{binomial_unchecked, ratio, Rational, Ring, Tolerance, UniPoly};
use crate::sequences::Recurrence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `T̃_0 = 2, T̃_1 = x, T̃_{n+2} = x T̃_{n+1} - T̃_n`
    ChebTildeT,
    /// `Ũ_0 = 0, Ũ_1 = 1, Ũ_{n+2} = x Ũ_{n+1} - Ũ_n`
    ChebTildeU,
    /// `F_0 = 0, F_1 = 1, F_{n+2} = x F_{n+1} + F_n`
    FibPoly,
    /// `L_0 = 2, L_1 = x, L_{n+2} = x L_{n+1} + L_n`
    LucasPoly,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] =
        [FamilyKind::ChebTildeT, FamilyKind::ChebTildeU, FamilyKind::FibPoly, FamilyKind::LucasPoly];

    /// Sign `b` in `P_{n+2} = x P_{n+1} + b P_n`.
    pub fn b(self) -> i64 {
        match self {
            FamilyKind::ChebTildeT | FamilyKind::ChebTildeU => -1,
            FamilyKind::FibPoly | FamilyKind::LucasPoly => 1,
        }
    }

    /// `(P_0, P_1)` as functions of the evaluation point.
    fn initial<R: Ring>(self, x: &R) -> (R, R) {
        match self {
            FamilyKind::ChebTildeT | FamilyKind::LucasPoly => (R::from_i64(2), x.clone()),
            FamilyKind::ChebTildeU | FamilyKind::FibPoly => (R::zero(), R::one()),
        }
    }

    /// Degree of `P_n`; `None` when `P_n = 0`.
    pub fn expected_degree(self, n: usize) -> Option<usize> {
        match self {
            FamilyKind::ChebTildeT | FamilyKind::LucasPoly => Some(n),
            FamilyKind::ChebTildeU | FamilyKind::FibPoly => n.checked_sub(1),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            FamilyKind::ChebTildeT => "T",
            FamilyKind::ChebTildeU => "U",
            FamilyKind::FibPoly => "F",
            FamilyKind::LucasPoly => "L",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Self> {
        FamilyKind::ALL.into_iter().find(|k| k.symbol().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// One member of a family together with its index.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedFamily {
    pub kind: FamilyKind,
    pub n: usize,
    pub poly: UniPoly,
}

impl NamedFamily {
    pub fn by_recurrence(kind: FamilyKind, n: usize) -> Self {
        NamedFamily { kind, n, poly: family_by_recurrence(kind, n) }
    }

    /// Checks the three-term recurrence against indices `n-1`, `n-2` and the
    /// degree formula for the family.
    pub fn is_consistent(&self) -> bool {
        let deg_ok = self.poly.degree() == self.kind.expected_degree(self.n);
        if self.n < 2 {
            return deg_ok && self.poly == family_by_recurrence(self.kind, self.n);
        }
        let prev = family_by_recurrence(self.kind, self.n - 1);
        let prev2 = family_by_recurrence(self.kind, self.n - 2);
        let rebuilt = UniPoly::x() * prev + UniPoly::from_i64(self.kind.b()) * prev2;
        deg_ok && rebuilt == self.poly
    }
}

/// Values `P_0(x) .. P_{len-1}(x)` of a family at a point of any ring.
pub fn family_values<R: Ring>(kind: FamilyKind, len: usize, x: &R) -> Vec<R> {
    let (p0, p1) = kind.initial(x);
    Recurrence::new(x.clone(), R::from_i64(kind.b()), p0, p1).terms(len)
}

/// `P_0 .. P_{len-1}` as polynomials.
pub fn family_sequence(kind: FamilyKind, len: usize) -> Vec<UniPoly> {
    family_values(kind, len, &UniPoly::x())
}

pub fn family_by_recurrence(kind: FamilyKind, n: usize) -> UniPoly {
    family_sequence(kind, n + 1).pop().expect("len >= 1")
}

/// Builds `P_n` from its binomial expansion. `T̃_n` has none and is reported
/// as unsupported.
pub fn family_explicit(kind: FamilyKind, n: usize) -> Result<UniPoly> {
    let n64 = n as u64;
    match kind {
        FamilyKind::ChebTildeT => Err(Error::Unsupported(
            "no explicit expansion for the T family; use the recurrence".into(),
        )),
        FamilyKind::ChebTildeU | FamilyKind::FibPoly => {
            let alternate = kind == FamilyKind::ChebTildeU;
            let mut coeffs = vec![Rational::zero(); n];
            if n == 0 {
                return Ok(UniPoly::zero());
            }
            for k in 0..=(n64 - 1) / 2 {
                let c = binomial_unchecked(n64 - k - 1, k as i64);
                let c = if alternate && k % 2 == 1 { -c } else { c };
                coeffs[(n64 - 2 * k - 1) as usize] = c.into();
            }
            Ok(UniPoly::from_coeffs(coeffs))
        }
        FamilyKind::LucasPoly => {
            if n == 0 {
                return Ok(UniPoly::from_i64(2));
            }
            let mut coeffs = vec![Rational::zero(); n + 1];
            for k in 0..=n64 / 2 {
                let c = ratio(n as i64, (n64 - k) as i64)
                    * Rational::from_integer(binomial_unchecked(n64 - k, k as i64));
                if !c.is_integer() {
                    return Err(Error::NonIntegral(format!("L_{n}, k = {k}: {c}")));
                }
                coeffs[(n64 - 2 * k) as usize] = c;
            }
            Ok(UniPoly::from_coeffs(coeffs))
        }
    }
}

/// `i^e` restricted to the real axis: `Some(±1)` for even `e`, `None` otherwise.
fn real_power_of_i(e: i64) -> Option<i64> {
    if e.rem_euclid(2) == 1 {
        None
    } else if e.rem_euclid(4) == 0 {
        Some(1)
    } else {
        Some(-1)
    }
}

/// `P(ix) = i^shift Q(x)` compared coefficientwise: `p_j i^j = i^shift q_j`,
/// so `p_j = i^{shift - j} q_j`, which must vanish when that power is imaginary.
fn i_substitution_holds(p: &UniPoly, q: &UniPoly, shift: i64) -> bool {
    let len = p.coeffs().len().max(q.coeffs().len());
    (0..len).all(|j| {
        let (pj, qj) = (p.coeff(j), q.coeff(j));
        match real_power_of_i(shift - j as i64) {
            Some(s) => pj == qj * Rational::from_integer(BigInt::from(s)),
            None => pj.is_zero() && qj.is_zero(),
        }
    })
}

/// `T̃_n(ix) = i^n L_n(x)` and `Ũ_n(ix) = i^{n-1} F_n(x)`, checked over the
/// integers one coefficient at a time.
pub fn cheb_fib_coeff_relation(n: usize) -> bool {
    let t = family_by_recurrence(FamilyKind::ChebTildeT, n);
    let l = family_by_recurrence(FamilyKind::LucasPoly, n);
    let u = family_by_recurrence(FamilyKind::ChebTildeU, n);
    let f = family_by_recurrence(FamilyKind::FibPoly, n);
    i_substitution_holds(&t, &l, n as i64) && i_substitution_holds(&u, &f, n as i64 - 1)
}

/// `sum_{k<n} T̃_k(a) = A T̃_m(a)` and `sum_{k<n} Ũ_k(a) = A Ũ_m(a)` with
/// `m = (n-1)/2`, `A = Ũ_{m+1}(a) + Ũ_m(a)`, for odd `n`.
pub fn cheb_sum_identity<R: Ring>(n: usize, a: &R) -> Result<bool> {
    if n.is_multiple_of(2) {
        return Err(invalid(format!("n = {n} must be odd")));
    }
    let m = (n - 1) / 2;
    let len = n.max(m + 2);
    let t = family_values(FamilyKind::ChebTildeT, len, a);
    let u = family_values(FamilyKind::ChebTildeU, len, a);
    let factor = u[m + 1].clone() + u[m].clone();
    let sum = |v: &[R]| v.iter().cloned().fold(R::zero(), |acc, x| acc + x);
    let tol = Tolerance::IDENTITY;
    Ok(sum(&t[..n]).close_to(&(factor.clone() * t[m].clone()), tol)
        && sum(&u[..n]).close_to(&(factor * u[m].clone()), tol))
}

/// `F_{s+t} + F_{s-t}` equals `L_t F_s` (both even) or `F_t L_s` (both odd).
pub fn fib_lucas_shift_identity(s: usize, t: usize) -> Result<bool> {
    if s < t {
        return Err(invalid(format!("need s >= t, got s = {s}, t = {t}")));
    }
    if (s + t) % 2 == 1 {
        return Err(invalid(format!("s = {s} and t = {t} have different parity")));
    }
    let f = family_sequence(FamilyKind::FibPoly, s + t + 1);
    let l = family_sequence(FamilyKind::LucasPoly, s + 1);
    let lhs = &f[s + t] + &f[s - t];
    let rhs = if s.is_multiple_of(2) { &l[t] * &f[s] } else { &f[t] * &l[s] };
    Ok(lhs == rhs)
}

/// `T̃_n(x)`, which equals `2 cos(nθ)` at `x = 2 cos θ`.
pub fn cheb_t_at(n: usize, x: f64) -> f64 {
    family_values(FamilyKind::ChebTildeT, n + 1, &x)[n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use std::f64::consts::PI;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn recurrence_small_members() {
        use FamilyKind::*;
        assert_eq!(family_by_recurrence(ChebTildeT, 0), p(&[2]));
        assert_eq!(family_by_recurrence(ChebTildeT, 1), p(&[0, 1]));
        assert_eq!(family_by_recurrence(ChebTildeT, 2), p(&[-2, 0, 1]));
        assert_eq!(family_by_recurrence(FibPoly, 4), p(&[0, 2, 0, 1]));
        assert_eq!(family_by_recurrence(ChebTildeU, 0), UniPoly::zero());
        assert_eq!(family_by_recurrence(LucasPoly, 3), p(&[0, 3, 0, 1]));
    }

    #[test]
    fn explicit_small_members() {
        use FamilyKind::*;
        assert_eq!(family_explicit(ChebTildeU, 3).unwrap(), p(&[-1, 0, 1]));
        assert_eq!(family_explicit(FibPoly, 6).unwrap(), p(&[0, 3, 0, 4, 0, 1]));
        assert_eq!(family_explicit(LucasPoly, 2).unwrap(), p(&[2, 0, 1]));
        assert_eq!(family_explicit(LucasPoly, 0).unwrap(), p(&[2]));
        assert!(matches!(family_explicit(ChebTildeT, 3), Err(Error::Unsupported(_))));
    }

    #[test]
    fn both_constructions_agree() {
        for kind in [FamilyKind::ChebTildeU, FamilyKind::FibPoly, FamilyKind::LucasPoly] {
            let seq = family_sequence(kind, 65);
            for (n, poly) in seq.iter().enumerate() {
                assert_eq!(*poly, family_explicit(kind, n).unwrap(), "{kind}_{n}");
            }
        }
    }

    #[test]
    fn named_members_are_consistent() {
        for kind in FamilyKind::ALL {
            for n in 0..20 {
                assert!(NamedFamily::by_recurrence(kind, n).is_consistent(), "{kind}_{n}");
            }
        }
        let bad = NamedFamily { kind: FamilyKind::FibPoly, n: 4, poly: p(&[0, 3, 0, 1]) };
        assert!(!bad.is_consistent());
    }

    #[test]
    fn i_substitution() {
        for n in 1..=64 {
            assert!(cheb_fib_coeff_relation(n), "n = {n}");
        }
        assert!(i_substitution_holds(&p(&[-2, 0, 1]), &p(&[2, 0, 1]), 2));
        assert!(!i_substitution_holds(&p(&[2, 0, 1]), &p(&[2, 0, 1]), 2));
    }

    #[test]
    fn u_and_f_differ_only_by_alternating_sign() {
        let u = family_sequence(FamilyKind::ChebTildeU, 65);
        let f = family_sequence(FamilyKind::FibPoly, 65);
        for n in 1..=64 {
            for j in 0..n {
                let (a, b) = (u[n].coeff(j), f[n].coeff(j));
                assert_eq!(a.clone() * a.clone(), b.clone() * b.clone());
            }
        }
    }

    #[test]
    fn cheb_sums() {
        assert!(cheb_sum_identity(1, &UniPoly::x()).unwrap());
        assert!(cheb_sum_identity(11, &UniPoly::x()).unwrap());
        assert!(cheb_sum_identity(7, &rat(2)).unwrap());
        assert!(cheb_sum_identity(9, &crate::exact::ratio(-5, 3)).unwrap());
        assert!(cheb_sum_identity(13, &0.37f64).unwrap());
        assert!(cheb_sum_identity(4, &UniPoly::x()).is_err());
        let u = family_sequence(FamilyKind::ChebTildeU, 7);
        assert_eq!(&u[6] + &u[5], p(&[1, 3, -3, -4, 1, 1]));
    }

    #[test]
    fn shift_identity() {
        assert!(fib_lucas_shift_identity(2, 2).unwrap());
        assert!(fib_lucas_shift_identity(3, 1).unwrap());
        assert!(fib_lucas_shift_identity(0, 0).unwrap());
        for s in 0..25 {
            for t in (s % 2..=s).step_by(2) {
                assert!(fib_lucas_shift_identity(s, t).unwrap());
            }
        }
        assert!(fib_lucas_shift_identity(3, 2).is_err());
        assert!(fib_lucas_shift_identity(1, 3).is_err());
    }

    #[test]
    fn trigonometric_values() {
        for theta in [PI / 7.0, PI / 5.0, 1.0, 2.0] {
            let x = 2.0 * theta.cos();
            let t = family_values(FamilyKind::ChebTildeT, 21, &x);
            let u = family_values(FamilyKind::ChebTildeU, 21, &x);
            for n in 0..=20 {
                let nf = n as f64;
                assert!((t[n] - 2.0 * (nf * theta).cos()).abs() <= 1e-9);
                assert!((u[n] * theta.sin() - (nf * theta).sin()).abs() <= 1e-9);
            }
        }
        assert!((cheb_t_at(5, 2.0 * 0.3f64.cos()) - 2.0 * 1.5f64.cos()).abs() < 1e-12);
    }

    #[test]
    fn hyperbolic_values() {
        for theta in [0.3f64, 1.0] {
            let x = 2.0 * theta.sinh();
            let f = family_values(FamilyKind::FibPoly, 21, &x);
            let l = family_values(FamilyKind::LucasPoly, 21, &x);
            for n in 0..=20 {
                let nf = n as f64;
                let (fe, le) = if n % 2 == 0 {
                    ((nf * theta).sinh(), 2.0 * (nf * theta).cosh())
                } else {
                    ((nf * theta).cosh(), 2.0 * (nf * theta).sinh())
                };
                let got = f[n] * theta.cosh();
                assert!((got - fe).abs() <= 1e-7 * fe.abs().max(1.0), "F_{n}");
                assert!((l[n] - le).abs() <= 1e-7 * le.abs().max(1.0), "L_{n}");
            }
        }
    }
}
