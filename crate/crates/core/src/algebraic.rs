//! The positive root of `r^{p+1} - r^p - r - 1` and the polynomial
//! equations satisfied by `a = rho - 1/rho`.
//!
//! The equations come from matching coefficients of `rho^i + (-1)^i rho^{-i}`;
//! nothing here proves irreducibility, so a [`MinPoly`] is an annihilating
//! polynomial of `a` and not necessarily its minimal polynomial.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::exact::{binomial_grid, solve_linear, ExactMatrix, Rational, UniPoly};
use crate::identity::root_poly_value;

const BRACKET: (f64, f64) = (1.0, 2.5);
const MAX_ITER: u32 = 200;
/// Residual bound for an accepted root.
pub const ROOT_RESIDUAL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    pub p: u32,
    pub rho: f64,
    pub a: f64,
    pub residual: f64,
}

fn check_odd(p: u32) -> Result<()> {
    if p.is_multiple_of(2) {
        return Err(invalid(format!("p = {p} must be odd and positive")));
    }
    Ok(())
}

fn root_poly_derivative(p: u32, r: f64) -> f64 {
    let p = p as i32;
    (p + 1) as f64 * r.powi(p) - p as f64 * r.powi(p - 1) - 1.0
}

/// Unique positive root of `r^{p+1} - r^p - r - 1`, by bisection on
/// `(1, 2.5)` followed by a Newton polish.
pub fn find_rho(p: u32) -> Result<RootResult> {
    check_odd(p)?;
    let (mut lo, mut hi) = BRACKET;
    let f = |r| root_poly_value(p, r);
    if f(lo).signum() == f(hi).signum() {
        return Err(Error::NoBracket { p, lo, hi });
    }
    let mut iter = 0;
    while hi - lo > 1e-15 * hi && iter < MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if f(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iter += 1;
    }
    let mut rho = 0.5 * (lo + hi);
    for _ in 0..4 {
        let step = f(rho) / root_poly_derivative(p, rho);
        if !step.is_finite() {
            break;
        }
        let next = rho - step;
        if f(next).abs() >= f(rho).abs() {
            break;
        }
        rho = next;
    }
    let residual = f(rho).abs();
    if residual > ROOT_RESIDUAL || !(BRACKET.0..BRACKET.1).contains(&rho) {
        return Err(Error::NoConvergence(p));
    }
    Ok(RootResult { p, rho, a: rho - 1.0 / rho, residual })
}

/// The real root of `a^3 - a^2 + 3a - 2` by Cardano's formula.
pub fn cardano_a() -> f64 {
    let s = 12.0 * 321f64.sqrt();
    ((116.0 + s).cbrt() - (s - 116.0).cbrt()) / 6.0 + 1.0 / 3.0
}

/// All real roots of `r^{p+1} - r^p - r - 1`, located by sign changes on a
/// uniform grid over `[-3, 3]`, which contains every root by Cauchy's bound, and refined by
/// bisection. Ascending.
pub fn real_roots(p: u32) -> Result<Vec<f64>> {
    check_odd(p)?;
    const STEPS: usize = 60_000;
    let f = |r| root_poly_value(p, r);
    let at = |k: usize| -3.0 + 6.0 * k as f64 / STEPS as f64;
    let mut roots = Vec::new();
    for k in 0..STEPS {
        let (mut lo, mut hi) = (at(k), at(k + 1));
        let (flo, fhi) = (f(lo), f(hi));
        if flo == 0.0 {
            roots.push(lo);
            continue;
        }
        if flo.signum() == fhi.signum() || fhi == 0.0 {
            continue;
        }
        for _ in 0..MAX_ITER {
            let mid = 0.5 * (lo + hi);
            if mid == lo || mid == hi {
                break;
            }
            if f(mid).signum() == flo.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    Ok(roots)
}

/// `p = 4q + 1` or `p = 4q - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    Plus,
    Minus,
}

impl Case {
    pub fn name(self) -> &'static str {
        match self {
            Case::Plus => "plus",
            Case::Minus => "minus",
        }
    }
}

fn split_p(p: u32) -> Result<(u32, Case)> {
    if p.is_multiple_of(2) || p < 3 {
        return Err(invalid(format!("p = {p}: annihilating polynomials need odd p >= 3")));
    }
    Ok(if p % 4 == 1 { ((p - 1) / 4, Case::Plus) } else { ((p + 1) / 4, Case::Minus) })
}

/// Monic integer polynomial with `poly(rho - 1/rho) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinPoly {
    pub p: u32,
    pub q: u32,
    pub case: Case,
    pub poly: UniPoly,
}

impl MinPoly {
    pub fn degree(&self) -> usize {
        match self.case {
            Case::Plus => 2 * self.q as usize + 1,
            Case::Minus => 2 * self.q as usize - 1,
        }
    }

    pub fn residual_at(&self, a: f64) -> f64 {
        self.poly.eval_f64(a).abs()
    }
}

fn big(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

fn c(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial_grid(n, k))
}

fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `x^top - sum alpha_j x^j`, checking every coefficient is an integer.
fn assemble(top: usize, alpha: &[(usize, Rational)]) -> Result<UniPoly> {
    let mut coeffs = vec![Rational::zero(); top + 1];
    coeffs[top] = Rational::one();
    for (j, value) in alpha {
        if !value.is_integer() {
            return Err(Error::NonIntegral(format!("alpha_{j} = {value}")));
        }
        coeffs[*j] -= value;
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Coefficients from the closed forms.
pub fn minpoly_closed(p: u32) -> Result<MinPoly> {
    let (q, case) = split_p(p)?;
    let qi = q as i64;
    let mut alpha = Vec::new();
    let top = match case {
        Case::Plus => {
            for i in 0..=qi {
                let v = big(2 * qi) / big(qi + i) * c(qi + i, 2 * i);
                alpha.push((2 * i as usize, v));
            }
            for i in 0..qi {
                let v = big(2 * qi + 1) / big(qi + i + 1) * c(qi + i + 1, 2 * i + 1);
                alpha.push((2 * i as usize + 1, -v));
            }
            2 * q as usize + 1
        }
        Case::Minus => {
            for i in 0..qi {
                alpha.push((2 * i as usize, c(qi + i - 1, 2 * i)));
            }
            for i in 1..qi {
                alpha.push((2 * i as usize - 1, -c(qi + i - 1, 2 * i - 1)));
            }
            2 * q as usize - 1
        }
    };
    Ok(MinPoly { p, q, case, poly: assemble(top, &alpha)? })
}

/// The triangular systems `T1 A1 = B1` (even coefficients) and
/// `T2 A2 = B2` (odd coefficients).
#[derive(Debug, Clone, PartialEq)]
pub struct TriangularSystem {
    pub q: u32,
    pub case: Case,
    pub t1: ExactMatrix,
    pub t2: ExactMatrix,
    pub b1: ExactMatrix,
    pub b2: ExactMatrix,
}

/// Which triangular matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TKind {
    /// `[(-1)^j C(2j, j-i)]`, `0 <= i, j < q`
    T1,
    /// `[(-1)^j C(2j+1, j-i)]`, `0 <= i, j < q`
    T2,
}

pub fn t_matrix(q: u32, kind: TKind) -> ExactMatrix {
    let q = q as usize;
    ExactMatrix::from_fn(q, q, |i, j| {
        let (i, j) = (i as i64, j as i64);
        let top = match kind {
            TKind::T1 => 2 * j,
            TKind::T2 => 2 * j + 1,
        };
        sign(j) * c(top, j - i)
    })
}

/// Closed-form inverse of [`t_matrix`].
pub fn t_inverse_closed(q: u32, kind: TKind) -> ExactMatrix {
    let q = q as usize;
    ExactMatrix::from_fn(q, q, |i, j| {
        let (i, j) = (i as i64, j as i64);
        let entry = match kind {
            TKind::T1 if i == 0 && j == 0 => Rational::one(),
            TKind::T1 => big(2 * j) / big(i + j) * c(i + j, 2 * i),
            TKind::T2 => big(2 * j + 1) / big(i + j + 1) * c(i + j + 1, 2 * i + 1),
        };
        sign(j) * entry
    })
}

pub fn build_system(p: u32) -> Result<TriangularSystem> {
    let (q, case) = split_p(p)?;
    let qi = q as i64;
    let n = q as usize;
    let t1 = t_matrix(q, TKind::T1);
    let (t2, b1, b2) = match case {
        Case::Plus => {
            let b1 = (0..qi).map(|i| sign(qi + 1) * c(2 * qi, qi - i)).collect();
            let b2 = (0..qi).map(|i| sign(qi) * c(2 * qi + 1, qi - i)).collect();
            (t_matrix(q, TKind::T2), b1, b2)
        }
        Case::Minus => {
            // indices 1..q-1, stored from row 0
            let t2 = ExactMatrix::from_fn(n - 1, n - 1, |r, s| {
                let (i, j) = (r as i64 + 1, s as i64 + 1);
                sign(j) * c(2 * j - 1, j - i)
            });
            let b1 = vec![sign(qi - 1); n];
            let b2 = (1..qi).map(|i| sign(qi) * (c(2 * qi - 1, qi - i) - Rational::one())).collect();
            (t2, b1, b2)
        }
    };
    Ok(TriangularSystem { q, case, t1, t2, b1: ExactMatrix::column(b1), b2: ExactMatrix::column(b2) })
}

fn solve_or_empty(t: &ExactMatrix, b: &ExactMatrix) -> Result<Vec<Rational>> {
    if t.rows() == 0 {
        return Ok(Vec::new());
    }
    Ok(solve_linear(t, b)?.column_entries(0))
}

/// Coefficients by exact solution of the triangular systems.
pub fn minpoly_oracle(p: u32) -> Result<MinPoly> {
    let sys = build_system(p)?;
    let even = solve_or_empty(&sys.t1, &sys.b1)?;
    let odd = solve_or_empty(&sys.t2, &sys.b2)?;
    let q = sys.q as usize;
    let mut alpha: Vec<(usize, Rational)> = even.into_iter().enumerate().map(|(i, v)| (2 * i, v)).collect();
    let top = match sys.case {
        Case::Plus => {
            alpha.push((2 * q, Rational::one()));
            alpha.extend(odd.into_iter().enumerate().map(|(i, v)| (2 * i + 1, v)));
            2 * q + 1
        }
        Case::Minus => {
            alpha.extend(odd.into_iter().enumerate().map(|(i, v)| (2 * i + 1, v)));
            2 * q - 1
        }
    };
    Ok(MinPoly { p, q: sys.q, case: sys.case, poly: assemble(top, &alpha)? })
}

/// `sum_{k=0}^m (-1)^k (k+l-1)!/(k+l-m)! C(m, k)`, which vanishes for
/// `l >= m >= 1`.
pub fn lemma_sum(l: u32, m: u32) -> Result<BigInt> {
    if m < 1 || l < m {
        return Err(invalid(format!("lemma needs l >= m >= 1 (l = {l}, m = {m})")));
    }
    let (l, m) = (l as i64, m as i64);
    let mut total = BigInt::zero();
    for k in 0..=m {
        let falling: BigInt = (k + l - m + 1..=k + l - 1).map(BigInt::from).product();
        let term = falling * binomial_grid(m, k);
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// `a^3 - a^2 + 3a - 2`, the `p = 5` equation.
pub fn p5_cubic() -> UniPoly {
    UniPoly::from_ints(&[-2, 3, -1, 1])
}

/// `a^k` reduced modulo [`p5_cubic`].
pub fn power_reduce(k: usize) -> UniPoly {
    UniPoly::monomial(Rational::one(), k)
        .rem(&p5_cubic())
        .expect("the cubic is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::Recurrence;

    const TABLE: [(u32, f64, f64); 10] = [
        (1, 2.414, 2.0),
        (3, 1.618, 1.0),
        (5, 1.420, 0.715),
        (7, 1.325, 0.570),
        (9, 1.268, 0.479),
        (11, 1.230, 0.416),
        (13, 1.202, 0.370),
        (15, 1.181, 0.334),
        (17, 1.164, 0.305),
        (19, 1.150, 0.281),
    ];

    #[test]
    fn roots_match_table() {
        for (p, rho, a) in TABLE {
            let r = find_rho(p).unwrap();
            assert!((r.rho - rho).abs() < 1e-3, "p = {p}: {}", r.rho);
            assert!((r.a - a).abs() < 1e-3, "p = {p}: {}", r.a);
            assert!(r.residual <= ROOT_RESIDUAL);
        }
        let r = find_rho(1).unwrap();
        assert!((r.rho - (1.0 + 2f64.sqrt())).abs() < 1e-14);
        let r = find_rho(3).unwrap();
        assert!((r.rho - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-14);
        assert!(find_rho(99).is_ok());
        assert!(find_rho(4).is_err());
        assert!(find_rho(0).is_err());
    }

    #[test]
    fn cardano() {
        let a = cardano_a();
        assert!(p5_cubic().eval_f64(a).abs() < 1e-12);
        assert!((a - 0.715).abs() < 5e-4);
        assert!((a - find_rho(5).unwrap().a).abs() < 1e-10);
    }

    #[test]
    fn two_real_roots() {
        for p in (1..=19).step_by(2) {
            let rho = find_rho(p).unwrap().rho;
            let roots = real_roots(p).unwrap();
            assert_eq!(roots.len(), 2, "p = {p}: {roots:?}");
            assert!((roots[0] + 1.0 / rho).abs() < 1e-9);
            assert!((roots[1] - rho).abs() < 1e-9);
        }
    }

    #[test]
    fn printed_examples() {
        let printed: [(u32, &[i64]); 8] = [
            (3, &[-1, 1]),
            (5, &[-2, 3, -1, 1]),
            (7, &[-1, 2, -1, 1]),
            (9, &[-2, 5, -4, 5, -1, 1]),
            (11, &[-1, 3, -3, 4, -1, 1]),
            (13, &[-2, 7, -9, 14, -6, 7, -1, 1]),
            (15, &[-1, 4, -6, 10, -5, 6, -1, 1]),
            (17, &[-2, 9, -16, 30, -20, 27, -8, 9, -1, 1]),
        ];
        for (p, coeffs) in printed {
            let closed = minpoly_closed(p).unwrap();
            assert_eq!(closed.poly, UniPoly::from_ints(coeffs), "p = {p}");
            assert_eq!(closed.poly.degree(), Some(closed.degree()));
            assert_eq!(minpoly_oracle(p).unwrap(), closed);
        }
        assert!(minpoly_closed(1).is_err());
        assert!(minpoly_oracle(6).is_err());
    }

    #[test]
    fn closed_equals_oracle_and_vanishes() {
        for p in (3..=25).step_by(2) {
            let closed = minpoly_closed(p).unwrap();
            assert!(closed.poly.is_monic() && closed.poly.is_integral());
            assert_eq!(minpoly_oracle(p).unwrap(), closed, "p = {p}");
            if p <= 19 {
                let a = find_rho(p).unwrap().a;
                assert!(closed.residual_at(a) <= 1e-9, "p = {p}");
            }
        }
    }

    #[test]
    fn systems() {
        let s = build_system(5).unwrap();
        assert_eq!(s.t1, ExactMatrix::column(vec![Rational::one()]));
        assert_eq!(s.b1, ExactMatrix::column(vec![big(2)]));
        let s = build_system(9).unwrap();
        assert_eq!(s.t1, ExactMatrix::new(2, 2, vec![big(1), big(-2), big(0), big(-1)]).unwrap());
        assert!(s.t1.is_upper_triangular() && s.t2.is_upper_triangular());
        let a1 = solve_linear(&s.t1, &s.b1).unwrap().column_entries(0);
        assert_eq!(a1, vec![big(2), big(4)]);
        let s = build_system(7).unwrap();
        assert_eq!(s.b1, ExactMatrix::column(vec![big(-1), big(-1)]));
        assert_eq!((s.t2.rows(), s.t2.cols()), (1, 1));
        let s = build_system(3).unwrap();
        assert_eq!(s.t2.rows(), 0);
    }

    #[test]
    fn inverses() {
        assert_eq!(t_inverse_closed(1, TKind::T1), ExactMatrix::identity(1));
        assert_eq!(*t_inverse_closed(3, TKind::T1).get(0, 1), big(-2));
        for q in 1..=12 {
            for kind in [TKind::T1, TKind::T2] {
                let t = t_matrix(q, kind);
                let inv = t_inverse_closed(q, kind);
                assert!(t.mul(&inv).unwrap().is_identity(), "q = {q}, {kind:?}");
                assert!(inv.mul(&t).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn minus_t2_is_negated_plus_t2() {
        for q in 2..=8 {
            let minus = build_system(4 * q - 1).unwrap().t2;
            let plus = t_matrix(q - 1, TKind::T2);
            for i in 0..plus.rows() {
                for j in 0..plus.cols() {
                    assert_eq!(*minus.get(i, j), -plus.get(i, j).clone());
                }
            }
        }
    }

    #[test]
    fn lemma() {
        assert_eq!(lemma_sum(1, 1).unwrap(), BigInt::zero());
        assert_eq!(lemma_sum(3, 2).unwrap(), BigInt::zero());
        assert_eq!(lemma_sum(30, 17).unwrap(), BigInt::zero());
        for l in 1..=30 {
            for m in 1..=l {
                assert!(lemma_sum(l, m).unwrap().is_zero());
            }
        }
        assert!(lemma_sum(2, 3).is_err());
        assert!(lemma_sum(2, 0).is_err());
    }

    #[test]
    fn reductions() {
        assert_eq!(power_reduce(0), UniPoly::one());
        assert_eq!(power_reduce(5), UniPoly::from_ints(&[-4, 8, -3]));
        assert_eq!(power_reduce(10), UniPoly::from_ints(&[-62, 71, 22]));
        let chain: [(usize, [i64; 3]); 7] = [
            (4, [2, -1, -2]),
            (5, [-4, 8, -3]),
            (6, [-6, 5, 5]),
            (7, [10, -21, 10]),
            (8, [20, -20, -11]),
            (9, [-22, 53, -31]),
            (10, [-62, 71, 22]),
        ];
        for (k, c) in chain {
            assert_eq!(power_reduce(k), UniPoly::from_ints(&c), "a^{k}");
        }
    }

    #[test]
    fn worked_p5_example() {
        let cubic = p5_cubic();
        let sym = Recurrence::symbolic(UniPoly::x(), UniPoly::one());
        let u = Recurrence::basis_x1(UniPoly::x(), UniPoly::one()).terms(7);
        let factor = (&u[2] + &u[6]).rem(&cubic).unwrap();
        assert_eq!(factor, UniPoly::from_ints(&[4, 0, 1]));
        let s8 = sym.prefix_sum(8);
        assert_eq!(s8.coeff_x0, UniPoly::from_ints(&[4, 6, 4, 5, 1, 1]));
        assert_eq!(s8.coeff_x1, UniPoly::from_ints(&[4, 6, 10, 5, 6, 1, 1]));
        assert_eq!(s8.coeff_x0.rem(&cubic).unwrap(), UniPoly::from_ints(&[12, -2, 4]));
        assert_eq!(s8.coeff_x1.rem(&cubic).unwrap(), UniPoly::from_ints(&[16, -2, 5]));
        let rhs = sym.term(6).scale(&factor);
        assert_eq!(rhs.coeff_x0.rem(&cubic).unwrap(), UniPoly::from_ints(&[12, -2, 4]));
        assert_eq!(rhs.coeff_x1.rem(&cubic).unwrap(), UniPoly::from_ints(&[16, -2, 5]));
    }
}
