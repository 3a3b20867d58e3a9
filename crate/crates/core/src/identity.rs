//! Sum-proportionality identities `S_n = A x_m`.
//!
//! An identity is certified on the two basis initial conditions `(1, 0)` and
//! `(0, 1)`; by linearity it then holds for every `(x0, x1)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::exact::{binomial_grid, Rational, Ring, Tolerance, UniPoly};
use crate::polynomials::{family_by_recurrence, FamilyKind};
use crate::sequences::{lucas_number, Recurrence};

/// Which construction an identity came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `x_{n+2} = x_{n+1} + x_n`
    Fibonacci,
    /// `x_{n+2} = -x_{n+1} + x_n`
    NegFibonacci,
    /// `x_{n+2} = a x_{n+1} - x_n`
    Chebyshev,
    /// `x_{n+2} = a x_{n+1} + x_n` with `a = rho - 1/rho`,
    /// `rho^{p+1} - rho^p - rho - 1 = 0`
    FibPoly { p: u32 },
    /// Anything found by [`discover`].
    General,
}

/// `S_n = factor * x_m` for every choice of `x0`, `x1` of the recurrence
/// `x_{n+2} = a x_{n+1} + b x_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProportionalityIdentity<R> {
    pub family: Family,
    pub a: R,
    pub b: R,
    pub n: usize,
    pub m: usize,
    pub factor: R,
}

impl<R: Ring> ProportionalityIdentity<R> {
    /// Certifies the identity on both basis sequences.
    pub fn verify(&self) -> bool {
        self.verify_with(Tolerance::IDENTITY)
    }

    pub fn verify_with(&self, tol: Tolerance) -> bool {
        let sym = Recurrence::symbolic(self.a.clone(), self.b.clone());
        let sum = sym.prefix_sum(self.n);
        let target = sym.term(self.m).scale(&self.factor);
        sum.coeff_x0.close_to(&target.coeff_x0, tol) && sum.coeff_x1.close_to(&target.coeff_x1, tol)
    }

    /// `(S_n, A x_m)` for concrete initial conditions.
    pub fn sides(&self, x0: R, x1: R) -> (R, R) {
        let rec = Recurrence::new(self.a.clone(), self.b.clone(), x0, x1);
        let terms = rec.terms(self.n.max(self.m + 1));
        let sum = terms[..self.n].iter().cloned().fold(R::zero(), |acc, t| acc + t);
        (sum, self.factor.clone() * terms[self.m].clone())
    }

    pub fn holds_for(&self, x0: R, x1: R, tol: Tolerance) -> bool {
        let (lhs, rhs) = self.sides(x0, x1);
        lhs.close_to(&rhs, tol)
    }
}

fn require_2_mod_4(n: usize) -> Result<()> {
    if n < 2 || n % 4 != 2 {
        return Err(invalid(format!("n = {n} must be a multiple of 4 plus 2")));
    }
    Ok(())
}

fn require_odd(n: usize) -> Result<()> {
    if n.is_multiple_of(2) {
        return Err(invalid(format!("n = {n} must be odd")));
    }
    Ok(())
}

/// `S_n = L_{n/2} x_{n/2+1}` for `x_{n+2} = x_{n+1} + x_n`, `n ≡ 2 (mod 4)`.
pub fn fibo_identity(n: usize) -> Result<ProportionalityIdentity<BigInt>> {
    require_2_mod_4(n)?;
    Ok(ProportionalityIdentity {
        family: Family::Fibonacci,
        a: BigInt::one(),
        b: BigInt::one(),
        n,
        m: n / 2 + 1,
        factor: lucas_number((n / 2) as u64),
    })
}

/// `S_n = L_{n/2} x_{n/2-2}` for `x_{n+2} = -x_{n+1} + x_n`, `n ≡ 2 (mod 4)`,
/// `n >= 6`.
pub fn neg_fibo_identity(n: usize) -> Result<ProportionalityIdentity<BigInt>> {
    require_2_mod_4(n)?;
    if n < 6 {
        return Err(invalid(format!("n = {n}: the target index n/2 - 2 would be negative")));
    }
    Ok(ProportionalityIdentity {
        family: Family::NegFibonacci,
        a: -BigInt::one(),
        b: BigInt::one(),
        n,
        m: n / 2 - 2,
        factor: lucas_number((n / 2) as u64),
    })
}

/// `S_n = (u_{(n+1)/2} + u_{(n-1)/2}) x_{(n-1)/2}` for
/// `x_{n+2} = a x_{n+1} - x_n`, odd `n`, where `u` starts `0, 1`.
/// Works for any ring, including `a = ±2` and a symbolic `a`.
pub fn cheb_identity<R: Ring>(n: usize, a: R) -> Result<ProportionalityIdentity<R>> {
    require_odd(n)?;
    let m = (n - 1) / 2;
    let u = Recurrence::basis_x1(a.clone(), -R::one()).terms(m + 2);
    Ok(ProportionalityIdentity {
        family: Family::Chebyshev,
        a,
        b: -R::one(),
        n,
        m,
        factor: u[m + 1].clone() + u[m].clone(),
    })
}

/// The same with `a` left as the indeterminate.
pub fn cheb_identity_symbolic(n: usize) -> Result<ProportionalityIdentity<UniPoly>> {
    cheb_identity(n, UniPoly::x())
}

/// Factor of [`cheb_identity`] from the double binomial sum
/// `sum_k (-1)^k [C(l - 1 - k, k) a^{l-1-2k} + C(l - k, k) a^{l-2k}]`,
/// `l = (n-1)/2`.
pub fn cheb_identity_explicit_a(n: usize) -> Result<UniPoly> {
    require_odd(n)?;
    let l = ((n - 1) / 2) as i64;
    let mut coeffs = vec![Rational::zero(); l as usize + 1];
    for k in 0..=l / 2 {
        let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        for top in [l - 1, l] {
            let exp = top - 2 * k;
            let c = binomial_grid(top - k, k);
            if exp < 0 {
                debug_assert!(c.is_zero());
                continue;
            }
            coeffs[exp as usize] += Rational::from_integer(&sign * c);
        }
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// `u_k` of `x_{n+2} = a x_{n+1} + x_n` (start `0, 1`) for any integer `k`,
/// extended backwards by `u_k = u_{k+2} - a u_{k+1}`.
pub fn u_signed<R: Ring>(a: &R, k: i64) -> R {
    if k >= 0 {
        return Recurrence::basis_x1(a.clone(), R::one()).term(k as usize);
    }
    let (mut next, mut cur) = (R::one(), R::zero()); // u_1, u_0
    for _ in 0..(-k) {
        let prev = next - a.clone() * cur.clone();
        next = cur;
        cur = prev;
    }
    cur
}

fn check_fibpoly_indices(p: u32, n: usize) -> Result<()> {
    if p.is_multiple_of(2) {
        return Err(invalid(format!("p = {p} must be odd")));
    }
    if n == 0 || n % 2 == 1 {
        return Err(invalid(format!("n = {n} must be positive and even")));
    }
    if !(n + p as usize - 1).is_multiple_of(4) {
        return Err(invalid(format!(
            "n + p - 1 = {} must be a multiple of 4 (p = {p}, n = {n})",
            n + p as usize - 1
        )));
    }
    Ok(())
}

/// A `b = 1` identity with its factor computed three independent ways.
#[derive(Debug, Clone, PartialEq)]
pub struct FibPolyIdentity {
    pub identity: ProportionalityIdentity<f64>,
    pub rho: f64,
    /// `u_{(n-p+1)/2} + u_{(n+p-1)/2}` by iterating the recurrence.
    pub factor_usum: f64,
    /// `v_{(p-1)/2} u_{n/2}` or `u_{(p-1)/2} v_{n/2}` from powers of `rho`.
    pub factor_product: f64,
    /// `L_{(p-1)/2}(a) F_{n/2}(a)` or `F_{(p-1)/2}(a) L_{n/2}(a)` from the
    /// polynomial families.
    pub factor_poly: f64,
}

impl FibPolyIdentity {
    pub fn p(&self) -> u32 {
        match self.identity.family {
            Family::FibPoly { p } => p,
            _ => unreachable!("constructed by fibpoly_identity"),
        }
    }
}

/// Root polynomial `r^{p+1} - r^p - r - 1`.
pub(crate) fn root_poly_value(p: u32, r: f64) -> f64 {
    r.powi(p as i32 + 1) - r.powi(p as i32) - r - 1.0
}

/// `S_n = A x_{(n+p-1)/2}` for `x_{n+2} = a x_{n+1} + x_n`, `a = rho - 1/rho`.
pub fn fibpoly_identity(p: u32, n: usize, rho: f64) -> Result<FibPolyIdentity> {
    check_fibpoly_indices(p, n)?;
    if !rho.is_finite() || rho == 0.0 {
        return Err(invalid(format!("rho = {rho} is not a usable root")));
    }
    if (rho * rho + 1.0).abs() < 1e-6 {
        return Err(invalid("rho is too close to ±i"));
    }
    let residual = root_poly_value(p, rho);
    if residual.abs() > 1e-9 * rho.abs().powi(p as i32 + 1).max(1.0) {
        return Err(invalid(format!(
            "rho = {rho} is not a root of r^{} - r^{p} - r - 1 (residual {residual:e})",
            p + 1
        )));
    }
    let a = rho - 1.0 / rho;
    let half_n = n / 2;
    let half_p = (p as usize - 1) / 2;
    let hi = (n + p as usize - 1) / 2;
    let lo = n as i64 - p as i64 + 1;
    debug_assert!(lo % 2 == 0);
    let lo = lo / 2;

    let factor_usum = u_signed(&a, lo) + u_signed(&a, hi as i64);

    let (r1, r2) = (rho, -1.0 / rho);
    let u = |q: usize| (r1.powi(q as i32) - r2.powi(q as i32)) / (r1 - r2);
    let v = |q: usize| r1.powi(q as i32) + r2.powi(q as i32);
    let multiple_of_4 = n.is_multiple_of(4);
    let factor_product = if multiple_of_4 {
        v(half_p) * u(half_n)
    } else {
        u(half_p) * v(half_n)
    };

    let fib = |q: usize| family_by_recurrence(FamilyKind::FibPoly, q).eval_f64(a);
    let luc = |q: usize| family_by_recurrence(FamilyKind::LucasPoly, q).eval_f64(a);
    let factor_poly = if multiple_of_4 {
        luc(half_p) * fib(half_n)
    } else {
        fib(half_p) * luc(half_n)
    };

    let tol = Tolerance::IDENTITY;
    if !tol.close(factor_usum, factor_product) || !tol.close(factor_usum, factor_poly) {
        return Err(Error::FormsDisagree(format!(
            "p = {p}, n = {n}: u-sum {factor_usum}, product {factor_product}, polynomial {factor_poly}"
        )));
    }

    Ok(FibPolyIdentity {
        identity: ProportionalityIdentity {
            family: Family::FibPoly { p },
            a,
            b: 1.0,
            n,
            m: hi,
            factor: factor_usum,
        },
        rho,
        factor_usum,
        factor_product,
        factor_poly,
    })
}

/// Exact `b = 1` identity for the two integral parameters: `p = 1` (`a = 2`)
/// and `p = 3` (`a = 1`).
pub fn fibpoly_identity_exact(p: u32, n: usize) -> Result<ProportionalityIdentity<BigInt>> {
    check_fibpoly_indices(p, n)?;
    let a = match p {
        1 => BigInt::from(2),
        3 => BigInt::one(),
        _ => {
            return Err(Error::Unsupported(format!(
                "p = {p}: the parameter a is irrational, use fibpoly_identity"
            )))
        }
    };
    let lo = (n as i64 - p as i64 + 1) / 2;
    let hi = (n + p as usize - 1) / 2;
    let factor = u_signed(&a, lo) + u_signed(&a, hi as i64);
    Ok(ProportionalityIdentity { family: Family::FibPoly { p }, a, b: BigInt::one(), n, m: hi, factor })
}

/// One `(m, A)` pair found by [`discover`]; `factor` is `None` when both
/// basis terms vanish at `m` and any `A` works.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscoveryHit {
    pub m: usize,
    pub factor: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscoveryReport {
    pub a: Rational,
    pub b: Rational,
    pub n: usize,
    /// Inclusive search range `0..=m_max`.
    pub m_max: usize,
    /// Sorted by `m`.
    pub hits: Vec<DiscoveryHit>,
    pub exact: bool,
}

impl DiscoveryReport {
    pub fn contains(&self, m: usize, factor: &Rational) -> bool {
        self.hits.iter().any(|h| h.m == m && h.factor.as_ref() == Some(factor))
    }
}

/// Exhaustive exact search for every `m <= m_max` with `S_n = A x_m` for all
/// initial conditions of `x_{n+2} = a x_{n+1} + b x_n`.
pub fn discover(a: &Rational, b: &Rational, n: usize, m_max: usize) -> DiscoveryReport {
    let len = n.max(m_max + 1);
    let e0 = Recurrence::basis_x0(a.clone(), b.clone()).terms(len);
    let e1 = Recurrence::basis_x1(a.clone(), b.clone()).terms(len);
    let s0: Rational = e0[..n].iter().sum();
    let s1: Rational = e1[..n].iter().sum();

    let hits = (0..=m_max)
        .filter_map(|m| {
            let (t0, t1) = (&e0[m], &e1[m]);
            if !t0.is_zero() {
                let factor = &s0 / t0;
                (s1 == &factor * t1).then_some(DiscoveryHit { m, factor: Some(factor) })
            } else if !t1.is_zero() {
                let factor = &s1 / t1;
                s0.is_zero().then_some(DiscoveryHit { m, factor: Some(factor) })
            } else {
                (s0.is_zero() && s1.is_zero()).then_some(DiscoveryHit { m, factor: None })
            }
        })
        .collect();

    DiscoveryReport { a: a.clone(), b: b.clone(), n, m_max, hits, exact: true }
}

/// Compares the `b = -1` factor with its trigonometric or hyperbolic closed
/// form: `sin(nθ/2)/sin(θ/2)` for `|a| < 2`, `sinh(nθ/2)/sinh(θ/2)` for
/// `a > 2`, `(-1)^{(n-1)/2} cosh(nθ/2)/cosh(θ/2)` for `a < -2`.
pub fn trig_a_check(a: f64, n: usize) -> Result<bool> {
    require_odd(n)?;
    if !a.is_finite() {
        return Err(invalid(format!("a = {a} is not finite")));
    }
    if a.abs() == 2.0 {
        return Err(invalid("a = ±2 is degenerate; use cheb_identity"));
    }
    let m = (n - 1) / 2;
    let u = Recurrence::basis_x1(a, -1.0).terms(m + 2);
    let usum = u[m + 1] + u[m];
    let half = n as f64 / 2.0;
    let closed = if a.abs() < 2.0 {
        let t = (a / 2.0).acos();
        (half * t).sin() / (t / 2.0).sin()
    } else if a > 2.0 {
        let t = (a / 2.0).acosh();
        (half * t).sinh() / (t / 2.0).sinh()
    } else {
        let t = (-a / 2.0).acosh();
        let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
        sign * (half * t).cosh() / (t / 2.0).cosh()
    };
    Ok(Tolerance::SEQUENCE.close(usum, closed))
}

/// Compares the `b = 1` factor `u_{(n-p+1)/2} + u_{(n+p-1)/2}` with
/// `2 sinh(nθ/2) cosh((p-1)θ/2) / cosh θ`, `a = 2 sinh θ`.
pub fn sinh_a_check(a: f64, p: u32, n: usize) -> Result<bool> {
    check_fibpoly_indices(p, n)?;
    if !a.is_finite() {
        return Err(invalid(format!("a = {a} is not finite")));
    }
    let lo = (n as i64 - p as i64 + 1) / 2;
    let hi = ((n + p as usize - 1) / 2) as i64;
    let usum = u_signed(&a, lo) + u_signed(&a, hi);
    let t = (a / 2.0).asinh();
    let closed = 2.0 * (n as f64 * t / 2.0).sinh() * ((p as f64 - 1.0) * t / 2.0).cosh() / t.cosh();
    Ok(Tolerance::IDENTITY.close(usum, closed))
}
