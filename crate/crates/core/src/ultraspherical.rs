//! Classical ultraspherical polynomials `P_n^{(α,α)}(x)`.
//!
//! Three independent hypergeometric-style expansions are provided. The first
//! is the one used everywhere else in the crate; the other two exist as
//! cross-checks. All three are polynomial identities in `α`, so any rational
//! `α` is accepted, including the negative parameters `-α-i-1` that the
//! inversion formulas need.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::combinatorics::{factorial, gen_binomial, pochhammer};
use crate::rational::{self, frac, int, Rational};
use crate::{Error, Poly, Result};

/// `(x - 1) / 2`
fn half_x_minus_one() -> Poly {
    Poly::linear(frac(-1, 2), frac(1, 2))
}

/// Repeated multiplication in the ring, one factor at a time.
fn powers(base: &Poly, n: usize) -> Vec<Poly> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Poly::one());
    for k in 1..=n {
        let next = &out[k - 1] * base;
        out.push(next);
    }
    out
}

/// `P_n^{(α,α)}` as `Σ_k (n+2α+1)_k/k! · (α+k+1)_{n-k}/(n-k)! · ((x-1)/2)^k`.
pub fn ultra_def1(n: usize, alpha: &Rational) -> Poly {
    let shift = int(n as i64) + int(2) * alpha + Rational::one();
    let pw = powers(&half_x_minus_one(), n);
    (0..=n)
        .map(|k| {
            let c = pochhammer(&shift, k) / factorial(k)
                * pochhammer(&(alpha + int(k as i64 + 1)), n - k)
                / factorial(n - k);
            pw[k].scale(&c)
        })
        .sum()
}

/// `(-1)^n Σ_k (-n-k-2α)_k/k! · (-n-α)_{n-k}/(n-k)! · ((x-1)/2)^k`.
pub fn ultra_def2(n: usize, alpha: &Rational) -> Poly {
    let n_r = int(n as i64);
    let pw = powers(&half_x_minus_one(), n);
    let sum: Poly = (0..=n)
        .map(|k| {
            let a = -&n_r - int(k as i64) - int(2) * alpha;
            let b = -&n_r - alpha;
            let c = pochhammer(&a, k) / factorial(k) * pochhammer(&b, n - k) / factorial(n - k);
            pw[k].scale(&c)
        })
        .sum();
    sum.scale(&rational::sign_pow(n))
}

/// `2^{-n} Σ_k C(n+α, n-k) C(n+α, k) (x-1)^k (x+1)^{n-k}`.
pub fn ultra_def3(n: usize, alpha: &Rational) -> Poly {
    let top = int(n as i64) + alpha;
    let minus = powers(&Poly::linear(int(-1), int(1)), n);
    let plus = powers(&Poly::linear(int(1), int(1)), n);
    let sum: Poly = (0..=n)
        .map(|k| {
            let c = gen_binomial(&top, (n - k) as i64) * gen_binomial(&top, k as i64);
            (&minus[k] * &plus[n - k]).scale(&c)
        })
        .sum();
    sum.scale(&rational::pow2(-(n as i64)))
}

/// Right side of the derivative formula:
/// `(n+2α+1)_i / 2^i · P_{n-i}^{(α+i,α+i)}`.
pub fn ultra_derivative_rhs(n: usize, i: usize, alpha: &Rational) -> Result<Poly> {
    if i > n {
        return Err(Error::Domain(format!(
            "derivative order i = {i} exceeds degree n = {n}"
        )));
    }
    let shift = int(n as i64) + int(2) * alpha + Rational::one();
    let c = pochhammer(&shift, i) * rational::pow2(-(i as i64));
    Ok(ultra_def1(n - i, &(alpha + int(i as i64))).scale(&c))
}

/// `(1-x²)y'' - 2(α+1)x y' + n(n+2α+1) y`
pub fn classical_ode_residual(y: &Poly, n: usize, alpha: &Rational) -> Poly {
    let n_r = int(n as i64);
    let one_minus_x2 = Poly::from_coeffs(vec![int(1), int(0), int(-1)]);
    let drift = Poly::monomial(int(-2) * (alpha + int(1)), 1);
    let eigen = &n_r * (&n_r + int(2) * alpha + int(1));
    &(&(&one_minus_x2 * &y.derivative(2)) + &(&drift * &y.derivative(1))) + &y.scale(&eigen)
}

/// `P_n(-x) - (-1)^n P_n(x)`
pub fn symmetry_residual(n: usize, alpha: &Rational) -> Poly {
    let p = ultra_def1(n, alpha);
    &p.reflect() - &p.scale(&rational::sign_pow(n))
}

/// The three-term relations among neighbouring ultraspherical families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `2x D P_n = 2n P_n + (n+α) P_{n-2}^{(α+1)}`
    Rel1,
    /// `(n+2α+1)(n+2α+2) P_n^{(α+1)} - (n+α)(n+α+1) P_{n-2}^{(α+1)}
    ///  = 2(n+α+1)(2n+2α+1) P_n^{(α)}`
    Rel2,
    /// `(α+1) P_n^{(α+1)} - (n+α+1) P_n^{(α)} = (n+α+1)(1-x²) P_{n-2}^{(α+2)} / 4`
    Rel3,
}

impl Relation {
    pub const ALL: [Relation; 3] = [Relation::Rel1, Relation::Rel2, Relation::Rel3];
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Rel1 => "rel1",
            Relation::Rel2 => "rel2",
            Relation::Rel3 => "rel3",
        })
    }
}

impl FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rel1" => Ok(Relation::Rel1),
            "rel2" => Ok(Relation::Rel2),
            "rel3" => Ok(Relation::Rel3),
            other => Err(Error::Domain(format!("unknown relation {other:?}"))),
        }
    }
}

/// Left side minus right side of `rel` at `(n, α)`.
pub fn relation_residual(rel: Relation, n: usize, alpha: &Rational) -> Result<Poly> {
    if n < 2 {
        return Err(Error::Domain(format!("{rel} needs n >= 2, got n = {n}")));
    }
    let n_r = int(n as i64);
    let a1 = alpha + int(1);
    let a2 = alpha + int(2);
    Ok(match rel {
        Relation::Rel1 => {
            let p = ultra_def1(n, alpha);
            let lhs = &Poly::monomial(int(2), 1) * &p.derivative(1);
            let rhs = &p.scale(&(int(2) * &n_r)) + &ultra_def1(n - 2, &a1).scale(&(&n_r + alpha));
            &lhs - &rhs
        }
        Relation::Rel2 => {
            let c1 = (&n_r + int(2) * alpha + int(1)) * (&n_r + int(2) * alpha + int(2));
            let c2 = (&n_r + alpha) * (&n_r + alpha + int(1));
            let c3 = int(2) * (&n_r + alpha + int(1)) * (int(2) * &n_r + int(2) * alpha + int(1));
            let lhs = &ultra_def1(n, &a1).scale(&c1) - &ultra_def1(n - 2, &a1).scale(&c2);
            &lhs - &ultra_def1(n, alpha).scale(&c3)
        }
        Relation::Rel3 => {
            let lhs = &ultra_def1(n, &a1).scale(&a1)
                - &ultra_def1(n, alpha).scale(&(&n_r + alpha + int(1)));
            let one_minus_x2 = Poly::from_coeffs(vec![int(1), int(0), int(-1)]);
            let rhs = (&one_minus_x2 * &ultra_def1(n - 2, &a2))
                .scale(&((&n_r + alpha + int(1)) / int(4)));
            &lhs - &rhs
        }
    })
}
