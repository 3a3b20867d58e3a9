//! Second-order linear recurrences `x_{n+2} = a x_{n+1} + b x_n` over any
//! [`Ring`], the classical Fibonacci and Lucas numbers, and the
//! Fibonacci-number identities built on them.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::exact::{binomial_unchecked, ExactInt, Ring, UniPoly};

/// Coefficients and initial conditions of a second-order recurrence.
#[derive(Debug, Clone, PartialEq)]
pub struct Recurrence<R> {
    pub a: R,
    pub b: R,
    pub x0: R,
    pub x1: R,
}

impl<R: Ring> Recurrence<R> {
    pub fn new(a: R, b: R, x0: R, x1: R) -> Self {
        Recurrence { a, b, x0, x1 }
    }

    /// The sequence with `(x0, x1) = (1, 0)`.
    pub fn basis_x0(a: R, b: R) -> Self {
        Self::new(a, b, R::one(), R::zero())
    }

    /// The sequence with `(x0, x1) = (0, 1)`; the `u` sequence of the family.
    pub fn basis_x1(a: R, b: R) -> Self {
        Self::new(a, b, R::zero(), R::one())
    }

    fn step(&self, prev: &R, cur: &R) -> R {
        self.a.clone() * cur.clone() + self.b.clone() * prev.clone()
    }

    /// Terms `x_0 .. x_{len-1}`.
    pub fn terms(&self, len: usize) -> Vec<R> {
        let mut out = Vec::with_capacity(len.max(2));
        out.push(self.x0.clone());
        out.push(self.x1.clone());
        while out.len() < len {
            let k = out.len();
            let next = self.step(&out[k - 2], &out[k - 1]);
            out.push(next);
        }
        out.truncate(len);
        out
    }

    pub fn term(&self, n: usize) -> R {
        match n {
            0 => self.x0.clone(),
            1 => self.x1.clone(),
            _ => {
                let (mut prev, mut cur) = (self.x0.clone(), self.x1.clone());
                for _ in 1..n {
                    let next = self.step(&prev, &cur);
                    prev = std::mem::replace(&mut cur, next);
                }
                cur
            }
        }
    }

    /// `S_n = x_0 + ... + x_{n-1}`, with `S_0 = 0`.
    pub fn prefix_sum(&self, n: usize) -> R {
        self.terms(n).into_iter().fold(R::zero(), |acc, t| acc + t)
    }

    /// Runs the recurrence over linear forms in `(x0, x1)`.
    pub fn symbolic(a: R, b: R) -> SymbolicRecurrence<R> {
        SymbolicRecurrence {
            e0: Self::basis_x0(a.clone(), b.clone()),
            e1: Self::basis_x1(a, b),
        }
    }
}

/// `coeff_x0 * x0 + coeff_x1 * x1` with coefficients in `R`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearForm<R> {
    pub coeff_x0: R,
    pub coeff_x1: R,
}

impl<R: Ring> LinearForm<R> {
    pub fn new(coeff_x0: R, coeff_x1: R) -> Self {
        LinearForm { coeff_x0, coeff_x1 }
    }

    pub fn eval(&self, x0: &R, x1: &R) -> R {
        self.coeff_x0.clone() * x0.clone() + self.coeff_x1.clone() * x1.clone()
    }

    pub fn scale(&self, c: &R) -> Self {
        LinearForm::new(c.clone() * self.coeff_x0.clone(), c.clone() * self.coeff_x1.clone())
    }
}

/// A term written as polynomials in the parameter `a` times `x0` and `x1`.
pub type SymbolicPair = LinearForm<UniPoly>;

/// A recurrence whose initial conditions stay symbolic, carried as the two
/// basis sequences.
#[derive(Debug, Clone)]
pub struct SymbolicRecurrence<R> {
    e0: Recurrence<R>,
    e1: Recurrence<R>,
}

impl<R: Ring> SymbolicRecurrence<R> {
    pub fn term(&self, n: usize) -> LinearForm<R> {
        LinearForm::new(self.e0.term(n), self.e1.term(n))
    }

    pub fn prefix_sum(&self, n: usize) -> LinearForm<R> {
        LinearForm::new(self.e0.prefix_sum(n), self.e1.prefix_sum(n))
    }

    pub fn terms(&self, len: usize) -> Vec<LinearForm<R>> {
        self.e0
            .terms(len)
            .into_iter()
            .zip(self.e1.terms(len))
            .map(|(c0, c1)| LinearForm::new(c0, c1))
            .collect()
    }
}

/// Generic symbolic-parameter recurrence `x_{n+2} = a x_{n+1} + b x_n` with
/// `a` the indeterminate.
pub fn symbolic_in_a(b: i64) -> SymbolicRecurrence<UniPoly> {
    Recurrence::symbolic(UniPoly::x(), UniPoly::from_i64(b))
}

/// Fibonacci number; `n = -1` gives `F_{-1} = 1`, lower indices are rejected.
pub fn fib_number(n: i64) -> Result<ExactInt> {
    match n {
        -1 => Ok(BigInt::one()),
        n if n < -1 => Err(invalid(format!("Fibonacci index {n} below -1"))),
        n => Ok(Recurrence::new(BigInt::one(), BigInt::one(), BigInt::zero(), BigInt::one())
            .term(n as usize)),
    }
}

pub fn lucas_number(n: u64) -> ExactInt {
    Recurrence::new(BigInt::one(), BigInt::one(), BigInt::from(2), BigInt::one()).term(n as usize)
}

fn fib(n: u64) -> ExactInt {
    fib_number(n as i64).expect("non-negative index")
}

/// `F_{p+q} + (-1)^q F_{p-q} == F_p L_q`.
pub fn check_pq_identity(p: u64, q: u64) -> Result<bool> {
    if p < q {
        return Err(invalid(format!("need p >= q, got p = {p}, q = {q}")));
    }
    let sign = if q.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let lhs = fib(p + q) + sign * fib(p - q);
    Ok(lhs == fib(p) * lucas_number(q))
}

fn require_2_mod_4(n: u64) -> Result<()> {
    if n < 2 || n % 4 != 2 {
        return Err(invalid(format!("n = {n} is not of the form 4k + 2")));
    }
    Ok(())
}

/// `sum_{k<n} F_{k+r} == F_{n+r+1} - F_{r+1} == L_{n/2} F_{r+n/2+1}`
/// for `n ≡ 2 (mod 4)`.
pub fn shifted_sum_identity(r: u64, n: u64) -> Result<bool> {
    require_2_mod_4(n)?;
    let direct: BigInt = (0..n).map(|k| fib(k + r)).sum();
    let telescoped = fib(n + r + 1) - fib(r + 1);
    let product = lucas_number(n / 2) * fib(r + n / 2 + 1);
    Ok(direct == telescoped && telescoped == product)
}

/// First `count` power-series coefficients of `z / (1 - (a z - z^2))`,
/// expanded as `sum_l z (a z - z^2)^l` by truncated convolution.
pub fn gf_coefficients<R: Ring>(a: &R, count: usize) -> Vec<R> {
    let mut total = vec![R::zero(); count];
    if count < 2 {
        return total;
    }
    // `power` holds z * (a z - z^2)^l truncated to `count` terms
    let mut power = vec![R::zero(); count];
    power[1] = R::one();
    let step = [R::zero(), a.clone(), -R::one()];
    // (a z - z^2)^l starts at z^l, so l < count suffices
    for _ in 0..count {
        if power.iter().all(|c| c.is_zero()) {
            break;
        }
        for (t, p) in total.iter_mut().zip(&power) {
            *t = t.clone() + p.clone();
        }
        let mut next = vec![R::zero(); count];
        for (i, p) in power.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (j, s) in step.iter().enumerate() {
                if i + j < count && !s.is_zero() {
                    next[i + j] = next[i + j].clone() + p.clone() * s.clone();
                }
            }
        }
        power = next;
    }
    total
}

/// Explicit `u_n = sum_k (-1)^k C(n-k-1, k) a^{n-2k-1}` for the `b = -1`
/// family, as a polynomial in `a`.
pub fn u_explicit_minus(n: u64) -> UniPoly {
    let mut acc = UniPoly::zero();
    if n == 0 {
        return acc;
    }
    for k in 0..=(n - 1) / 2 {
        let c = binomial_unchecked(n - k - 1, k as i64);
        let c = if k % 2 == 0 { c } else { -c };
        acc = acc + UniPoly::monomial(c.into(), (n - 2 * k - 1) as usize);
    }
    acc
}

/// Roots of the characteristic equations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormConstants {
    pub phi1: f64,
    pub phi2: f64,
    pub r1: Complex64,
    pub r2: Complex64,
}

impl ClosedFormConstants {
    /// Golden pair plus the roots of `r^2 = a r + b`.
    pub fn new(a: f64, b: f64) -> Self {
        let s5 = 5f64.sqrt();
        let (r1, r2) = characteristic_roots(a, b);
        ClosedFormConstants { phi1: (1.0 + s5) / 2.0, phi2: (1.0 - s5) / 2.0, r1, r2 }
    }
}

/// Roots of `r^2 = a r + b`, larger real part first.
pub fn characteristic_roots(a: f64, b: f64) -> (Complex64, Complex64) {
    let disc = Complex64::new(a * a + 4.0 * b, 0.0).sqrt();
    let half = Complex64::new(a / 2.0, 0.0);
    (half + disc / 2.0, half - disc / 2.0)
}

/// `x_n` from the root decomposition `alpha1 r1^n + alpha2 r2^n`, with the
/// weights solved from `x0, x1`. Requires distinct roots.
pub fn binet_term(a: f64, b: f64, x0: f64, x1: f64, n: u32) -> Result<f64> {
    let (r1, r2) = characteristic_roots(a, b);
    let d = r1 - r2;
    if d.norm() < 1e-12 {
        return Err(invalid("repeated characteristic root (a^2 + 4b = 0)"));
    }
    // alpha1 + alpha2 = x0, alpha1 r1 + alpha2 r2 = x1
    let alpha1 = (Complex64::new(x1, 0.0) - r2 * x0) / d;
    let alpha2 = Complex64::new(x0, 0.0) - alpha1;
    Ok((alpha1 * r1.powu(n) + alpha2 * r2.powu(n)).re)
}
