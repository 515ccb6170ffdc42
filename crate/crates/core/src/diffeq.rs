//! Generalized ultraspherical polynomials and their differential equation
//!
//! `M Σ_{i≥0} a_i(x) y^{(i)} + (1-x²)y'' - 2(α+1)x y' + n(n+2α+1) y = 0`.
//!
//! The coefficient family is `a_0(n,α) = a_0(1,α) b_0(n) + c_0(n,α)` and
//! `a_i(x) = a_0(1,α) b_i(x) + c_i(x)` for `i ≥ 1`, where `a_0(1,α)` is a free
//! parameter. The closed forms live here next to the inversion route that
//! derives them, and next to checks of every intermediate system.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::combinatorics::{factorial, gen_binomial};
use crate::inversion::{self, inversion_weight, RhsSequence};
use crate::linfactor::{LinFactorRatio, LinearFactor};
use crate::rational::{self, int, Rational};
use crate::report::VerifyReport;
use crate::ultraspherical::{classical_ode_residual, ultra_def1};
use crate::{Error, Poly, Result};

/// Parameters of `P_n^{α,α,M,M}`: `α > -1`, `M ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub alpha: Rational,
    pub m: Rational,
    pub n: usize,
}

impl GenParams {
    pub fn new(alpha: Rational, m: Rational, n: usize) -> Result<Self> {
        check_alpha(&alpha)?;
        if m.is_negative() {
            return Err(Error::Domain(format!(
                "point mass M must be >= 0, got {}",
                rational::format(&m)
            )));
        }
        Ok(Self { alpha, m, n })
    }
}

pub fn check_alpha(alpha: &Rational) -> Result<()> {
    if *alpha <= int(-1) {
        return Err(Error::Domain(format!(
            "alpha must be > -1, got {}",
            rational::format(alpha)
        )));
    }
    Ok(())
}

fn one_minus_x2() -> Poly {
    Poly::from_coeffs(vec![int(1), int(0), int(-1)])
}

/// `C(n+2α, n) / (2α+1)` in cancelled form, i.e. `(2α+2)_{n-1} / n!`.
///
/// Zero at `n = 0`: every use multiplies `D²P_0` or `x DP_0`, both zero, and
/// the uncancelled pole at `2α+1 = 0` is dropped with it.
pub fn binomial_over_two_alpha_plus_one(n: usize, alpha: &Rational) -> Result<Rational> {
    if n == 0 {
        return Ok(Rational::zero());
    }
    let two = int(2);
    let r = &LinFactorRatio::pochhammer(&two, &int(1), n)
        / &LinFactorRatio::new(factorial(n), [LinearFactor::new(two, int(1))], []);
    r.eval(alpha)
}

/// The pair `(C_0, C_1)` in `P_n^{α,α,M,M} = C_0 P_n - C_1 x D P_n`.
pub fn gen_c0c1(n: usize, alpha: &Rational, m: &Rational) -> Result<(Rational, Rational)> {
    let params = GenParams::new(alpha.clone(), m.clone(), n)?;
    let (alpha, m) = (&params.alpha, &params.m);
    let n_i = n as i64;
    let a1 = alpha + int(1);
    let b_n = gen_binomial(&(int(n_i) + int(2) * alpha + int(1)), n_i);
    let b_nm1 = gen_binomial(&(int(n_i) + int(2) * alpha + int(1)), n_i - 1);
    let c0 = Rational::one() + int(2) * m * int(n_i) / &a1 * &b_n + int(4) * m * m * &b_nm1 * &b_nm1;
    let c1 = if n == 0 {
        Rational::zero()
    } else {
        let first = int(2) * m * binomial_over_two_alpha_plus_one(n, alpha)?;
        let second = int(2) * m * m / &a1
            * gen_binomial(&(int(n_i) + int(2) * alpha), n_i - 1)
            * &b_n;
        first + second
    };
    Ok((c0, c1))
}

/// `P_n^{α,α,M,M}(x) = C_0 P_n^{(α,α)}(x) - C_1 x D P_n^{(α,α)}(x)`.
pub fn gen_poly(n: usize, alpha: &Rational, m: &Rational) -> Result<Poly> {
    let (c0, c1) = gen_c0c1(n, alpha, m)?;
    let p = ultra_def1(n, alpha);
    let xdp = &Poly::x() * &p.derivative(1);
    Ok(&p.scale(&c0) - &xdp.scale(&c1))
}

/// `b_0(n) = (1 - (-1)^n) / 2`
pub fn b0(n: usize) -> Rational {
    if n % 2 == 1 {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// `c_0(n, α) = 4(2α+3) C(n+2α+2, n-2)`
pub fn c0(n: usize, alpha: &Rational) -> Rational {
    let n_i = n as i64;
    int(4) * (int(2) * alpha + int(3)) * gen_binomial(&(int(n_i) + int(2) * alpha + int(2)), n_i - 2)
}

/// `a_0(n, α) = a_0(1,α) b_0(n) + c_0(n, α)`.
pub fn a0_closed(n: usize, alpha: &Rational, a0_1: &Rational) -> Rational {
    a0_1 * b0(n) + c0(n, alpha)
}

/// `a_0(n, α)` for `n = 0 ..= bound` from the second-order difference
/// equation `a_0(n+2) - a_0(n) = 4(2n+2α+3) C(n+2α+2, n)`.
pub fn a0_recurrence(bound: usize, alpha: &Rational, a0_1: &Rational) -> Vec<Rational> {
    let mut table = vec![Rational::zero()];
    if bound >= 1 {
        table.push(a0_1.clone());
    }
    for n in 0..bound.saturating_sub(1) {
        let n_i = n as i64;
        let step = int(4)
            * (int(2 * n_i) + int(2) * alpha + int(3))
            * gen_binomial(&(int(n_i) + int(2) * alpha + int(2)), n_i);
        let next = &table[n] + step;
        table.push(next);
    }
    table
}

/// `b_i(x) = 2^{i-1}/i! · (-x)^i`
pub fn b_coeff(i: usize) -> Result<Poly> {
    if i == 0 {
        return Err(Error::Domain("b_0 is the scalar table b0(n), not a polynomial".into()));
    }
    let c = rational::pow2(i as i64 - 1) / factorial(i) * rational::sign_pow(i);
    Ok(Poly::monomial(c, i))
}

/// `c_1 = 0`; `c_i(x) = (2α+3)(1-x²) 2^i/i! · P_{i-2}^{(α-i+3, α-i+3)}(x)`.
pub fn c_coeff(i: usize, alpha: &Rational) -> Result<Poly> {
    match i {
        0 => Err(Error::Domain("c_0 is the scalar table c0(n), not a polynomial".into())),
        1 => Ok(Poly::zero()),
        _ => {
            let scale = (int(2) * alpha + int(3)) * rational::pow2(i as i64) / factorial(i);
            let p = ultra_def1(i - 2, &(alpha - int(i as i64) + int(3)));
            Ok((&one_minus_x2() * &p).scale(&scale))
        }
    }
}

/// The coefficients `{a_0(n,α)}` and `{a_i(x)}` with their `b`/`c` split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffSet {
    alpha: Rational,
    a0_1: Rational,
    b: Vec<Poly>,
    c: Vec<Poly>,
    a0: Vec<Rational>,
}

impl CoeffSet {
    /// `b[i-1] = b_i`, `c[i-1] = c_i`, `a0[n] = a_0(n, α)`.
    pub fn from_parts(
        alpha: Rational,
        a0_1: Rational,
        b: Vec<Poly>,
        c: Vec<Poly>,
        a0: Vec<Rational>,
    ) -> Result<Self> {
        if b.is_empty() || b.len() != c.len() {
            return Err(Error::Domain(format!(
                "need matching nonempty b/c lists, got {} and {}",
                b.len(),
                c.len()
            )));
        }
        Ok(Self {
            alpha,
            a0_1,
            b,
            c,
            a0,
        })
    }

    /// Closed forms for `1 <= i <= max_i` and `a_0(n)` for `n <= a0_bound`.
    pub fn closed_form(alpha: &Rational, a0_1: &Rational, max_i: usize, a0_bound: usize) -> Result<Self> {
        if max_i == 0 {
            return Err(Error::Domain("max_i must be at least 1".into()));
        }
        let b = (1..=max_i).map(b_coeff).collect::<Result<Vec<_>>>()?;
        let c = (1..=max_i)
            .map(|i| c_coeff(i, alpha))
            .collect::<Result<Vec<_>>>()?;
        let a0 = (0..=a0_bound).map(|n| a0_closed(n, alpha, a0_1)).collect();
        Self::from_parts(alpha.clone(), a0_1.clone(), b, c, a0)
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn a0_1(&self) -> &Rational {
        &self.a0_1
    }

    pub fn max_i(&self) -> usize {
        self.b.len()
    }

    pub fn b(&self, i: usize) -> Option<&Poly> {
        i.checked_sub(1).and_then(|k| self.b.get(k))
    }

    pub fn c(&self, i: usize) -> Option<&Poly> {
        i.checked_sub(1).and_then(|k| self.c.get(k))
    }

    /// `a_i = a_0(1,α) b_i + c_i` for `1 <= i <= max_i`.
    pub fn a(&self, i: usize) -> Option<Poly> {
        Some(&self.b(i)?.scale(&self.a0_1) + self.c(i)?)
    }

    pub fn a_all(&self) -> Vec<Poly> {
        (1..=self.max_i()).filter_map(|i| self.a(i)).collect()
    }

    pub fn a0_table(&self) -> &[Rational] {
        &self.a0
    }

    /// Tabulated `a_0(n,α)`, falling back to the closed form past the table.
    pub fn a0(&self, n: usize) -> Rational {
        self.a0
            .get(n)
            .cloned()
            .unwrap_or_else(|| a0_closed(n, &self.alpha, &self.a0_1))
    }

    pub fn b_all(&self) -> &[Poly] {
        &self.b
    }

    pub fn c_all(&self) -> &[Poly] {
        &self.c
    }

    /// `a_0(n) p + Σ_{i≥1} a_i D^i p`, truncated where `D^i p` vanishes.
    /// Needs `max_i >= deg p`.
    pub fn apply(&self, a0: &Rational, p: &Poly) -> Result<Poly> {
        let deg = p.degree().unwrap_or(0);
        if deg > self.max_i() {
            return Err(Error::Domain(format!(
                "coefficient set stops at i = {}, operator applied to degree {deg}",
                self.max_i()
            )));
        }
        let mut acc = p.scale(a0);
        for i in 1..=deg {
            let ai = self.a(i).expect("i <= max_i");
            acc = &acc + &(&ai * &p.derivative(i));
        }
        Ok(acc)
    }
}

/// `F_n` of the shifted system at parameter `α+1`, for a given `a_0(1,α)`.
fn shifted_rhs(n: usize, alpha: &Rational, a0_1: &Rational) -> Poly {
    let n_i = n as i64;
    let lead = int(8) / (int(n_i) + alpha + int(2))
        * gen_binomial(&(int(n_i) + int(2) * alpha + int(2)), n_i);
    let d2 = ultra_def1(n + 2, alpha).derivative(2);
    &d2.scale(&lead) - &ultra_def1(n, &(alpha + int(1))).scale(&a0_closed(n + 2, alpha, a0_1))
}

/// Synthesizes `{b_i}`, `{c_i}` for `i <= max_i` by solving the shifted
/// derivative system with the inversion formula at parameter `α+1`.
pub fn coeffs_via_inversion(alpha: &Rational, a0_1: &Rational, max_i: usize) -> Result<CoeffSet> {
    check_alpha(alpha)?;
    if max_i == 0 {
        return Err(Error::Domain("max_i must be at least 1".into()));
    }
    let f0 = shifted_rhs(0, alpha, a0_1);
    if !f0.is_zero() {
        return Err(Error::Consistency(format!("F_0 must vanish, got {f0}")));
    }
    let shifted = alpha + int(1);
    let solve = |a: &Rational| -> Result<Vec<Poly>> {
        let entries = (1..=max_i).map(|n| shifted_rhs(n, alpha, a)).collect();
        let rhs = RhsSequence::new(shifted.clone(), entries)?;
        Ok(inversion::solve_system(&rhs)?.into_entries())
    };
    // a_i is affine in a_0(1,α): c from a_0(1,α) = 0, b from the unit slope
    let c = solve(&Rational::zero())?;
    let with_one = solve(&Rational::one())?;
    let b: Vec<Poly> = with_one.iter().zip(&c).map(|(a, c)| a - c).collect();
    let a0 = (0..=max_i + 2).map(|n| a0_closed(n, alpha, a0_1)).collect();
    CoeffSet::from_parts(alpha.clone(), a0_1.clone(), b, c, a0)
}

/// Residual of the full equation for `y = P_n^{α,α,M,M}` with a given
/// coefficient set (which must reach `i = n`).
pub fn ode_residual_with(coeffs: &CoeffSet, m: &Rational, n: usize) -> Result<Poly> {
    let alpha = coeffs.alpha();
    let y = gen_poly(n, alpha, m)?;
    let krall = coeffs.apply(&coeffs.a0(n), &y)?;
    Ok(&krall.scale(m) + &classical_ode_residual(&y, n, alpha))
}

/// `M[a_0(n) y + Σ_{i=1}^{n} a_i y^{(i)}] + (1-x²)y'' - 2(α+1)x y' + n(n+2α+1)y`
/// at `y = P_n^{α,α,M,M}`, using the closed-form coefficients.
pub fn ode_residual(alpha: &Rational, m: &Rational, n: usize, a0_1: &Rational) -> Result<Poly> {
    GenParams::new(alpha.clone(), m.clone(), n)?;
    let coeffs = CoeffSet::closed_form(alpha, a0_1, n.max(1), n)?;
    ode_residual_with(&coeffs, m, n)
}

/// Residual of one defining system at one `n`.
fn system_residuals(coeffs: &CoeffSet, n: usize) -> Result<Vec<(&'static str, Poly)>> {
    let alpha = coeffs.alpha();
    let n_i = n as i64;
    let a0n = coeffs.a0(n);
    let p = ultra_def1(n, alpha);
    let d2p = p.derivative(2);
    let rhs1 = d2p.scale(&(int(4) * binomial_over_two_alpha_plus_one(n, alpha)?));

    let sum_full = coeffs.apply(&a0n, &p)?;
    let sum_tail = coeffs.apply(&Rational::zero(), &p)?;

    let mut out = Vec::with_capacity(5);
    out.push(("sys1", &sum_full - &rhs1));

    // Σ i a_i D^i P_n + x Σ_{i≥0} a_i D^{i+1} P_n
    let mut lhs2 = &Poly::x() * &p.derivative(1).scale(&a0n);
    for i in 1..=n {
        let ai = coeffs.a(i).expect("max_i >= n");
        let term = &ai * &(&p.derivative(i).scale(&int(i as i64)) + &(&Poly::x() * &p.derivative(i + 1)));
        lhs2 = &lhs2 + &term;
    }
    let rhs2 = d2p.scale(&(int(4) * gen_binomial(&(int(n_i) + int(2) * alpha + int(1)), n_i - 1)));
    out.push(("sys2", &lhs2 - &rhs2));

    out.push(("sys4", &sum_tail - &(&rhs1 - &p.scale(&a0n))));

    if n >= 2 {
        let q = ultra_def1(n - 2, &(alpha + int(1)));
        let rhs3 = d2p.scale(
            &(int(8) / (int(n_i) + alpha) * gen_binomial(&(int(n_i) + int(2) * alpha), n_i - 2)),
        );
        out.push(("sys3", &coeffs.apply(&a0n, &q)? - &rhs3));
        out.push(("sys5", &coeffs.apply(&Rational::zero(), &q)? - &(&rhs3 - &q.scale(&a0n))));
    }
    Ok(out)
}

/// Checks the five defining systems for `0 <= n <= n_max` with closed-form
/// coefficients.
pub fn verify_original_systems(alpha: &Rational, a0_1: &Rational, n_max: usize) -> Result<VerifyReport> {
    check_alpha(alpha)?;
    let coeffs = CoeffSet::closed_form(alpha, a0_1, n_max.max(1), n_max)?;
    verify_systems_with(&coeffs, n_max)
}

pub fn verify_systems_with(coeffs: &CoeffSet, n_max: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("systems");
    for n in 0..=n_max {
        for (name, residual) in system_residuals(coeffs, n)? {
            report.record(
                format_args!(
                    "{name}, n={n}, alpha={}, a01={}",
                    rational::format(coeffs.alpha()),
                    rational::format(coeffs.a0_1())
                ),
                residual,
            );
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// `(2m+2α+3) C(m+2α+2, m) - (2α+3)[C(m+2α+4, m) - C(m+2α+2, m-2)]`
pub fn stepping_residual(m: usize, alpha: &Rational) -> Rational {
    let m_i = m as i64;
    let two_a = int(2) * alpha;
    let lhs = (int(2 * m_i) + &two_a + int(3)) * gen_binomial(&(int(m_i) + &two_a + int(2)), m_i);
    let rhs = (&two_a + int(3))
        * (gen_binomial(&(int(m_i) + &two_a + int(4)), m_i)
            - gen_binomial(&(int(m_i) + &two_a + int(2)), m_i - 2));
    lhs - rhs
}

/// Telescoped partial sums of the `a_0` difference equation, together with
/// the stepping identity at every index the sum consumes.
pub fn telescope_check(n: usize, alpha: &Rational, parity: Parity) -> Result<VerifyReport> {
    if n == 0 {
        return Err(Error::Domain("telescope check needs n >= 1".into()));
    }
    let two_a = int(2) * alpha;
    let n_i = n as i64;
    let (sum, closed) = match parity {
        Parity::Even => {
            let sum: Rational = (0..n_i)
                .map(|k| gen_binomial(&(int(2 * k) + &two_a + int(2)), 2 * k) * (int(4 * k) + &two_a + int(3)))
                .sum();
            let closed = (&two_a + int(3)) * gen_binomial(&(int(2 * n_i) + &two_a + int(2)), 2 * n_i - 2);
            (sum, closed)
        }
        Parity::Odd => {
            let sum: Rational = (0..n_i)
                .map(|k| {
                    gen_binomial(&(int(2 * k) + &two_a + int(3)), 2 * k + 1) * (int(4 * k) + &two_a + int(5))
                })
                .sum();
            let closed = (&two_a + int(3)) * gen_binomial(&(int(2 * n_i) + &two_a + int(3)), 2 * n_i - 1);
            (sum, closed)
        }
    };
    let a = rational::format(alpha);
    let mut report = VerifyReport::new("telescope");
    report.record(format_args!("{parity} sum, n={n}, alpha={a}"), Poly::constant(sum - closed));
    let start = if parity == Parity::Even { 0 } else { 1 };
    for m in (start..2 * n).step_by(2) {
        report.record(
            format_args!("stepping, m={m}, alpha={a}"),
            Poly::constant(stepping_residual(m, alpha)),
        );
    }
    Ok(report)
}

/// Both sides of
/// `Σ_{j=2}^{i} (2α+2j+3)/(2α+j+3)_{i+1} C(j+2α+4, j) P_{i-j}^{(-α-i-2)} P_{j-2}^{(α+3)}
///  = P_{i-2}^{(α-i+3)} / i!`.
pub fn cc_sides(i: usize, alpha: &Rational) -> Result<(Poly, Poly)> {
    if i < 2 {
        return Err(Error::Domain(format!("cc identity needs i >= 2, got {i}")));
    }
    let shifted = alpha + int(1);
    let mirror_param = -alpha - int(i as i64 + 2);
    let a3 = alpha + int(3);
    let mut lhs = Poly::zero();
    for j in 2..=i {
        let w = inversion_weight(i, 0, j).eval(&shifted)?;
        let j_i = j as i64;
        let binom = gen_binomial(&(int(j_i) + int(2) * alpha + int(4)), j_i);
        let term = &ultra_def1(i - j, &mirror_param) * &ultra_def1(j - 2, &a3);
        lhs = &lhs + &term.scale(&(w * binom));
    }
    let rhs = ultra_def1(i - 2, &(alpha - int(i as i64) + int(3))).scale(&factorial(i).recip());
    Ok((lhs, rhs))
}

pub fn cc_check(i: usize, alpha: &Rational) -> Result<VerifyReport> {
    let (lhs, rhs) = cc_sides(i, alpha)?;
    let mut report = VerifyReport::new("cc");
    report.record(format_args!("i={i}, alpha={}", rational::format(alpha)), &lhs - &rhs);
    Ok(report)
}

/// Order of the equation for integer `α >= 0` with `a_0(1,α) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteOrder {
    pub order: usize,
    pub leading: Poly,
}

/// `-4(2α+3)/(2α+4)! · (x²-1)^{α+2}`
pub fn leading_coefficient(alpha: usize) -> Poly {
    let a = alpha as i64;
    let c = -int(4) * int(2 * a + 3) / factorial(2 * alpha + 4);
    Poly::from_coeffs(vec![int(-1), int(0), int(1)])
        .pow(alpha + 2)
        .scale(&c)
}

/// Confirms that `c_i` vanishes for `2α+4 < i <= probe_bound` and that
/// `c_{2α+4}` is the nonzero closed-form leading coefficient.
pub fn finite_order(alpha: &Rational, probe_bound: usize) -> Result<FiniteOrder> {
    let Some(a) = rational::to_nonneg_usize(alpha) else {
        return Err(Error::Domain(format!(
            "finite order requires a nonnegative integer alpha (and a0(1,alpha) = 0), got {}",
            rational::format(alpha)
        )));
    };
    let order = 2 * a + 4;
    if probe_bound < order + 1 {
        return Err(Error::Domain(format!(
            "probe bound {probe_bound} must be at least 2*alpha+5 = {}",
            order + 1
        )));
    }
    let leading = c_coeff(order, alpha)?;
    let expected = leading_coefficient(a);
    if leading.is_zero() || leading != expected {
        return Err(Error::Consistency(format!(
            "c_{order} = {leading}, expected {expected}"
        )));
    }
    for i in order + 1..=probe_bound {
        let ci = c_coeff(i, alpha)?;
        if !ci.is_zero() {
            return Err(Error::Consistency(format!("c_{i} = {ci} should vanish")));
        }
    }
    Ok(FiniteOrder { order, leading })
}

fn check_index(i: usize) -> Result<()> {
    if i == 0 {
        return Err(Error::Domain("index i must be at least 1".into()));
    }
    Ok(())
}

/// `b_i` obtained by inverting the unshifted system:
/// `2^{i-1} Σ_{j=1}^{i} w_j P_{i-j}^{(-α-i-1)} P_j^{(α)} [(-1)^j - 1]`.
pub fn alt_b_star(i: usize, alpha: &Rational) -> Result<Poly> {
    check_index(i)?;
    let mirror_param = -alpha - int(i as i64 + 1);
    let mut acc = Poly::zero();
    // only odd j contribute, with factor -2
    for j in (1..=i).step_by(2) {
        let w = inversion_weight(i, 0, j).eval(alpha)? * int(-2);
        let term = &ultra_def1(i - j, &mirror_param) * &ultra_def1(j, alpha);
        acc = &acc + &term.scale(&w);
    }
    Ok(acc.scale(&rational::pow2(i as i64 - 1)))
}

/// `c_i` obtained by inverting the unshifted system:
/// `2^{i+2} Σ_{j=1}^{i} w_j P_{i-j}^{(-α-i-1)} [C(j+2α,j)/(2α+1) D²P_j - (2α+3) C(j+2α+2, j-2) P_j]`.
pub fn alt_c_star(i: usize, alpha: &Rational) -> Result<Poly> {
    check_index(i)?;
    let mirror_param = -alpha - int(i as i64 + 1);
    let mut acc = Poly::zero();
    for j in 1..=i {
        let j_i = j as i64;
        let w = inversion_weight(i, 0, j).eval(alpha)?;
        let p = ultra_def1(j, alpha);
        let g = &p.derivative(2).scale(&binomial_over_two_alpha_plus_one(j, alpha)?)
            - &p.scale(
                &((int(2) * alpha + int(3)) * gen_binomial(&(int(j_i) + int(2) * alpha + int(2)), j_i - 2)),
            );
        acc = &acc + &(&ultra_def1(i - j, &mirror_param) * &g).scale(&w);
    }
    Ok(acc.scale(&rational::pow2(i as i64 + 2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn c0c1_examples() {
        let alpha = frac(3, 5);
        assert_eq!(gen_c0c1(4, &alpha, &int(0)).unwrap(), (int(1), int(0)));
        let m = frac(2, 3);
        let (c0, c1) = gen_c0c1(1, &alpha, &m).unwrap();
        let one_2m = int(1) + int(2) * &m;
        assert_eq!(c0, &one_2m * &one_2m);
        assert_eq!(c1, int(2) * &m + int(4) * &m * &m);
        assert_eq!(gen_c0c1(0, &frac(-1, 2), &int(3)).unwrap(), (int(1), int(0)));
    }

    #[test]
    fn c0c1_rejects_invalid_params() {
        assert!(gen_c0c1(2, &int(-1), &int(1)).is_err());
        assert!(gen_c0c1(2, &int(0), &int(-1)).is_err());
    }

    #[test]
    fn c1_first_term_matches_uncancelled_form_off_singularity() {
        // 2M/(2α+1) C(n+2α, n) away from α = -1/2
        let alpha = frac(1, 3);
        for n in 1..8 {
            let direct = gen_binomial(&(int(n) + int(2) * &alpha), n) / (int(2) * &alpha + int(1));
            assert_eq!(binomial_over_two_alpha_plus_one(n as usize, &alpha).unwrap(), direct);
        }
        // continuity value at α = -1/2: (1)_{n-1}/n! = 1/n
        assert_eq!(binomial_over_two_alpha_plus_one(4, &frac(-1, 2)).unwrap(), frac(1, 4));
    }

    #[test]
    fn gen_poly_examples() {
        let alpha = frac(7, 3);
        assert_eq!(gen_poly(5, &alpha, &int(0)).unwrap(), ultra_def1(5, &alpha));
        assert_eq!(gen_poly(0, &alpha, &int(4)).unwrap(), Poly::one());
        let m = frac(1, 2);
        let expected = Poly::monomial((int(1) + int(2) * &m) * (&alpha + int(1)), 1);
        assert_eq!(gen_poly(1, &alpha, &m).unwrap(), expected);
    }

    #[test]
    fn a0_anchors() {
        let alpha = frac(-1, 4);
        let a01 = frac(5, 2);
        assert_eq!(a0_closed(0, &alpha, &a01), int(0));
        assert_eq!(a0_closed(1, &alpha, &a01), a01);
        assert_eq!(a0_closed(2, &alpha, &a01), int(4) * (int(2) * &alpha + int(3)));
    }

    #[test]
    fn a0_two_routes_at_small_n() {
        let t = a0_recurrence(4, &int(0), &int(0));
        assert_eq!(t[2], int(12));
        assert_eq!(t[4], int(180));
        assert_eq!(a0_closed(4, &int(0), &int(0)), int(180));
        let alpha = frac(2, 9);
        let a01 = int(7);
        let expected = &a01 + int(4) * (int(2) * &alpha + int(3)) * (int(2) * &alpha + int(5));
        assert_eq!(a0_recurrence(3, &alpha, &a01)[3], expected);
        assert_eq!(a0_closed(3, &alpha, &a01), expected);
        assert_eq!(a0_recurrence(0, &alpha, &a01), vec![int(0)]);
    }

    #[test]
    fn b_examples() {
        assert_eq!(b_coeff(1).unwrap(), Poly::monomial(int(-1), 1));
        assert_eq!(b_coeff(2).unwrap(), Poly::monomial(int(1), 2));
        assert_eq!(b_coeff(3).unwrap(), Poly::monomial(frac(-2, 3), 3));
        assert!(b_coeff(0).is_err());
    }

    #[test]
    fn c_examples() {
        let alpha = frac(1, 2);
        assert!(c_coeff(1, &alpha).unwrap().is_zero());
        let k = int(2) * &alpha + int(3);
        assert_eq!(c_coeff(2, &alpha).unwrap(), one_minus_x2().scale(&(int(2) * &k)));
        let c3 = (&one_minus_x2() * &Poly::x()).scale(&(frac(4, 3) * &k * (&alpha + int(1))));
        assert_eq!(c_coeff(3, &alpha).unwrap(), c3);
        assert!(c_coeff(0, &alpha).is_err());
    }

    #[test]
    fn inversion_route_small() {
        let alpha = frac(1, 2);
        let a01 = int(3);
        let set = coeffs_via_inversion(&alpha, &a01, 4).unwrap();
        for i in 1..=4 {
            assert_eq!(set.b(i).unwrap(), &b_coeff(i).unwrap(), "b_{i}");
            assert_eq!(set.c(i).unwrap(), &c_coeff(i, &alpha).unwrap(), "c_{i}");
        }
        assert_eq!(set.a(1).unwrap(), Poly::monomial(-&a01, 1));
        assert!(coeffs_via_inversion(&int(-1), &a01, 3).is_err());
    }

    #[test]
    fn ode_residual_examples() {
        assert!(ode_residual(&frac(7, 3), &int(0), 6, &int(4)).unwrap().is_zero());
        assert!(ode_residual(&frac(-1, 4), &frac(5, 2), 1, &int(-3)).unwrap().is_zero());
        assert!(ode_residual(&frac(1, 2), &int(1), 6, &int(3)).unwrap().is_zero());
        assert!(ode_residual(&frac(-1, 2), &int(3), 7, &int(1)).unwrap().is_zero());
    }

    #[test]
    fn corrupted_coefficient_is_detected() {
        let alpha = int(0);
        let set = CoeffSet::closed_form(&alpha, &int(0), 6, 6).unwrap();
        let mut a0 = set.a0_table().to_vec();
        a0[6] += int(1);
        let bad = CoeffSet::from_parts(alpha, int(0), set.b_all().to_vec(), set.c_all().to_vec(), a0).unwrap();
        assert!(!ode_residual_with(&bad, &int(1), 6).unwrap().is_zero());
    }

    #[test]
    fn systems_small() {
        let report = verify_original_systems(&frac(1, 2), &int(-2), 5).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks, 3 * 6 + 2 * 4);
    }

    #[test]
    fn telescope_examples() {
        assert!(telescope_check(1, &int(0), Parity::Even).unwrap().passed());
        assert!(telescope_check(1, &int(0), Parity::Odd).unwrap().passed());
        assert!(stepping_residual(0, &frac(3, 11)).is_zero());
        assert!(telescope_check(0, &int(0), Parity::Odd).is_err());
    }

    #[test]
    fn cc_examples() {
        let (lhs, rhs) = cc_sides(2, &frac(5, 7)).unwrap();
        assert_eq!(lhs, Poly::constant(frac(1, 2)));
        assert_eq!(rhs, Poly::constant(frac(1, 2)));
        assert!(cc_check(3, &int(0)).unwrap().passed());
        assert!(cc_check(8, &frac(-1, 2)).unwrap().passed());
        assert!(cc_check(1, &int(0)).is_err());
    }

    #[test]
    fn finite_order_examples() {
        let r0 = finite_order(&int(0), 12).unwrap();
        assert_eq!(r0.order, 4);
        let sq = Poly::from_coeffs(vec![int(-1), int(0), int(1)]).pow(2);
        assert_eq!(r0.leading, sq.scale(&frac(-1, 2)));
        let r1 = finite_order(&int(1), 14).unwrap();
        assert_eq!(r1.order, 6);
        let cube = Poly::from_coeffs(vec![int(-1), int(0), int(1)]).pow(3);
        assert_eq!(r1.leading, cube.scale(&frac(-1, 36)));
        assert!(matches!(finite_order(&frac(1, 2), 20), Err(Error::Domain(_))));
        assert!(matches!(finite_order(&int(-1), 20), Err(Error::Domain(_))));
        assert!(matches!(finite_order(&int(0), 4), Err(Error::Domain(_))));
    }

    #[test]
    fn alt_forms_examples() {
        for alpha in [int(0), frac(1, 2), frac(-1, 4)] {
            assert_eq!(alt_b_star(1, &alpha).unwrap(), Poly::monomial(int(-1), 1));
        }
        assert_eq!(alt_b_star(2, &int(0)).unwrap(), b_coeff(2).unwrap());
        assert_eq!(alt_b_star(5, &frac(-1, 2)).unwrap(), b_coeff(5).unwrap());
        assert!(alt_c_star(1, &frac(3, 4)).unwrap().is_zero());
        assert_eq!(alt_c_star(2, &int(0)).unwrap(), one_minus_x2().scale(&int(6)));
        assert_eq!(alt_c_star(6, &frac(7, 3)).unwrap(), c_coeff(6, &frac(7, 3)).unwrap());
        assert!(alt_b_star(0, &int(0)).is_err());
    }
}
