//! Grid sweeps over the identity checks.
//!
//! Each [`Suite`] runs one family of checks over a parameter grid and
//! returns a single [`VerifyReport`]. Cases for different `α` are
//! independent and run on the rayon pool; reports are merged in grid order
//! so output is deterministic.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;

use crate::diffeq::{self, Parity};
use crate::inversion::{self, RhsSequence};
use crate::rational::{self, frac, int, Rational};
use crate::ultraspherical::{self as us, Relation};
use crate::{Error, Poly, Result, VerifyReport};

/// `{-1/2, -1/4, 0, 1/2, 1, 3, 7/3}`: the removable-singularity point, a
/// negative non-half-integer, integers, and a non-dyadic rational.
pub fn alpha_grid() -> Vec<Rational> {
    vec![frac(-1, 2), frac(-1, 4), int(0), frac(1, 2), int(1), int(3), frac(7, 3)]
}

/// Five point masses; the residual is cubic in `M`, so four would suffice.
pub fn mass_grid() -> Vec<Rational> {
    vec![int(0), frac(1, 2), int(1), int(3), int(10)]
}

pub fn a01_grid() -> Vec<Rational> {
    vec![int(0), int(1), int(-2)]
}

pub fn integer_alpha_grid() -> Vec<Rational> {
    (0..=3).map(int).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Inversion,
    Spec,
    Definitions,
    Relations,
    Systems,
    Telescope,
    Cc,
    Alt,
    Ode,
    Synthesis,
    A0,
    Order,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `All` runs them.
    pub const CONCRETE: [Suite; 12] = [
        Suite::Definitions,
        Suite::Relations,
        Suite::Inversion,
        Suite::Spec,
        Suite::A0,
        Suite::Telescope,
        Suite::Systems,
        Suite::Synthesis,
        Suite::Cc,
        Suite::Alt,
        Suite::Ode,
        Suite::Order,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Inversion => "inversion",
            Suite::Spec => "spec",
            Suite::Definitions => "definitions",
            Suite::Relations => "relations",
            Suite::Systems => "systems",
            Suite::Telescope => "telescope",
            Suite::Cc => "cc",
            Suite::Alt => "alt",
            Suite::Ode => "ode",
            Suite::Synthesis => "synthesis",
            Suite::A0 => "a0",
            Suite::Order => "order",
            Suite::All => "all",
        }
    }

    /// Default upper index of the sweep.
    pub fn default_bound(self) -> usize {
        match self {
            Suite::Inversion | Suite::Spec | Suite::Definitions | Suite::Relations | Suite::Cc => 12,
            Suite::Systems | Suite::Alt | Suite::Ode | Suite::Synthesis => 10,
            Suite::Telescope => 20,
            Suite::A0 => 30,
            Suite::Order => 8,
            Suite::All => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::CONCRETE
            .iter()
            .chain(std::iter::once(&Suite::All))
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

/// Grid overrides. `None` means the suite's default.
#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub alphas: Option<Vec<Rational>>,
    pub bound: Option<usize>,
    pub masses: Option<Vec<Rational>>,
    pub a01s: Option<Vec<Rational>>,
}

impl SuiteConfig {
    fn alphas(&self) -> Vec<Rational> {
        self.alphas.clone().unwrap_or_else(alpha_grid)
    }

    fn bound(&self, suite: Suite) -> usize {
        self.bound.unwrap_or_else(|| suite.default_bound())
    }
}

fn fmt_a(alpha: &Rational) -> String {
    rational::format(alpha)
}

fn sweep<F>(name: &str, alphas: &[Rational], f: F) -> Result<VerifyReport>
where
    F: Fn(&Rational) -> Result<VerifyReport> + Sync + Send,
{
    let parts = alphas.par_iter().map(f).collect::<Result<Vec<_>>>()?;
    let mut report = VerifyReport::new(name);
    for p in parts {
        report.merge(p);
    }
    Ok(report)
}

fn definitions(alpha: &Rational, bound: usize) -> Result<VerifyReport> {
    let a = fmt_a(alpha);
    let mut r = VerifyReport::new("definitions");
    for n in 0..=bound {
        let p = us::ultra_def1(n, alpha);
        r.record(format_args!("def1=def2, n={n}, alpha={a}"), &p - &us::ultra_def2(n, alpha));
        r.record(format_args!("def1=def3, n={n}, alpha={a}"), &p - &us::ultra_def3(n, alpha));
        r.record(format_args!("sym, n={n}, alpha={a}"), us::symmetry_residual(n, alpha));
        r.record(format_args!("dv, n={n}, alpha={a}"), us::classical_ode_residual(&p, n, alpha));
        for i in 0..=n {
            r.record(
                format_args!("diff, n={n}, i={i}, alpha={a}"),
                &p.derivative(i) - &us::ultra_derivative_rhs(n, i, alpha)?,
            );
        }
    }
    Ok(r)
}

fn relations(alpha: &Rational, bound: usize) -> Result<VerifyReport> {
    let a = fmt_a(alpha);
    let mut r = VerifyReport::new("relations");
    for n in 2..=bound {
        for rel in Relation::ALL {
            r.record(format_args!("{rel}, n={n}, alpha={a}"), us::relation_residual(rel, n, alpha)?);
        }
    }
    Ok(r)
}

fn kronecker(alpha: &Rational, bound: usize) -> Result<VerifyReport> {
    let a = fmt_a(alpha);
    let mut r = VerifyReport::new("inversion");
    for i in 0..=bound {
        for j in 0..=i {
            let expected = if i == j { Poly::one() } else { Poly::zero() };
            r.record(
                format_args!("i={i}, j={j}, alpha={a}"),
                &inversion::inversion_sum(i, j, alpha)? - &expected,
            );
        }
    }
    Ok(r)
}

fn power(alpha: &Rational, bound: usize) -> Result<VerifyReport> {
    let a = fmt_a(alpha);
    let mut r = VerifyReport::new("spec");
    for i in 0..=bound {
        for j in 0..=i {
            let d = i - j;
            let expected = Poly::monomial(crate::combinatorics::factorial(d).recip(), d);
            r.record(
                format_args!("i={i}, j={j}, alpha={a}"),
                &inversion::spec_sum(i, j, alpha)? - &expected,
            );
        }
    }
    Ok(r)
}

fn a0_agreement(alpha: &Rational, bound: usize, a01s: &[Rational]) -> Result<VerifyReport> {
    let a = fmt_a(alpha);
    let mut r = VerifyReport::new("a0");
    for a01 in a01s {
        let table = diffeq::a0_recurrence(bound, alpha, a01);
        for (n, v) in table.iter().enumerate() {
            r.record(
                format_args!("n={n}, alpha={a}, a01={}", fmt_a(a01)),
                Poly::constant(v - diffeq::a0_closed(n, alpha, a01)),
            );
        }
        r.record(format_args!("a0(0)=0, alpha={a}"), Poly::constant(table[0].clone()));
        if bound >= 2 {
            let anchor = int(4) * (int(2) * alpha + int(3));
            r.record(format_args!("a0(2)=4(2a+3), alpha={a}"), Poly::constant(&table[2] - anchor));
        }
    }
    Ok(r)
}

fn telescope(alpha: &Rational, bound: usize) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("telescope");
    for n in 1..=bound {
        r.merge(diffeq::telescope_check(n, alpha, Parity::Even)?);
        r.merge(diffeq::telescope_check(n, alpha, Parity::Odd)?);
    }
    Ok(r)
}

fn systems(alpha: &Rational, bound: usize, a01s: &[Rational]) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("systems");
    for a01 in a01s {
        r.merge(diffeq::verify_original_systems(alpha, a01, bound)?);
    }
    Ok(r)
}

/// Compares the inversion-route coefficients with the closed forms, and
/// checks degree and parity structure.
pub fn synthesis_check(alpha: &Rational, a01: &Rational, max_i: usize) -> Result<VerifyReport> {
    let a = fmt_a(alpha);
    let mut r = VerifyReport::new("synthesis");
    let set = diffeq::coeffs_via_inversion(alpha, a01, max_i)?;
    for i in 1..=max_i {
        let case = |what: &str| format!("{what}, i={i}, alpha={a}, a01={}", fmt_a(a01));
        let b = set.b(i).expect("i <= max_i");
        let c = set.c(i).expect("i <= max_i");
        r.record(case("b"), b - &diffeq::b_coeff(i)?);
        r.record(case("c"), c - &diffeq::c_coeff(i, alpha)?);
        let ai = set.a(i).expect("i <= max_i");
        // degree above i shows up as a nonzero residual
        let over: Poly = Poly::from_coeffs(ai.coeffs().iter().skip(i + 1).cloned().collect());
        r.record(case("deg a <= i"), over);
        let odd_part: Poly = Poly::from_coeffs(
            c.coeffs()
                .iter()
                .enumerate()
                .map(|(k, v)| if (k + i) % 2 == 1 { v.clone() } else { Rational::zero() })
                .collect(),
        );
        r.record(case("parity c"), odd_part);
        let b_low = Poly::from_coeffs(b.coeffs().iter().take(i).cloned().collect());
        r.record(case("b monomial"), b_low);
    }
    Ok(r)
}

fn synthesis(alpha: &Rational, bound: usize, a01s: &[Rational]) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("synthesis");
    for a01 in a01s {
        r.merge(synthesis_check(alpha, a01, bound)?);
    }
    Ok(r)
}

fn cc(alpha: &Rational, bound: usize) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("cc");
    for i in 2..=bound {
        r.merge(diffeq::cc_check(i, alpha)?);
    }
    Ok(r)
}

fn alt(alpha: &Rational, bound: usize) -> Result<VerifyReport> {
    let a = fmt_a(alpha);
    let mut r = VerifyReport::new("alt");
    for i in 1..=bound {
        r.record(
            format_args!("b*, i={i}, alpha={a}"),
            &diffeq::alt_b_star(i, alpha)? - &diffeq::b_coeff(i)?,
        );
        r.record(
            format_args!("c*, i={i}, alpha={a}"),
            &diffeq::alt_c_star(i, alpha)? - &diffeq::c_coeff(i, alpha)?,
        );
    }
    Ok(r)
}

fn ode(alpha: &Rational, bound: usize, masses: &[Rational], a01s: &[Rational]) -> Result<VerifyReport> {
    let a = fmt_a(alpha);
    let mut r = VerifyReport::new("ode");
    for a01 in a01s {
        for m in masses {
            for n in 0..=bound {
                r.record(
                    format_args!("n={n}, alpha={a}, M={}, a01={}", fmt_a(m), fmt_a(a01)),
                    diffeq::ode_residual(alpha, m, n, a01)?,
                );
            }
        }
    }
    Ok(r)
}

/// Finite order for integer `α`: probes `c_i` up to `2α+4+extra`.
fn order(alpha: &Rational, extra: usize) -> Result<VerifyReport> {
    let mut r = VerifyReport::new("order");
    let Some(a) = rational::to_nonneg_usize(alpha) else {
        return Ok(r);
    };
    let probe = 2 * a + 4 + extra.max(1);
    let case = format!("alpha={a}, probe={probe}");
    match diffeq::finite_order(alpha, probe) {
        Ok(fo) => r.record(case, &fo.leading - &diffeq::leading_coefficient(a)),
        Err(Error::Consistency(msg)) => {
            // keep the offending c_i visible in the report
            r.checks += 1;
            r.failures.push(crate::Failure {
                case: format!("{case}: {msg}"),
                residual: Poly::one(),
            });
        }
        Err(e) => return Err(e),
    }
    Ok(r)
}

/// Runs `suite` (or every suite for [`Suite::All`]) and returns one report
/// per concrete suite.
pub fn run(suite: Suite, config: &SuiteConfig) -> Result<Vec<VerifyReport>> {
    if suite == Suite::All {
        let mut cfg = config.clone();
        if let Some(alphas) = cfg.alphas.as_mut() {
            let half = frac(-1, 2);
            if !alphas.contains(&half) {
                alphas.push(half);
            }
        }
        return Suite::CONCRETE.iter().map(|&s| run_one(s, &cfg)).collect();
    }
    Ok(vec![run_one(suite, config)?])
}

pub fn run_one(suite: Suite, config: &SuiteConfig) -> Result<VerifyReport> {
    let alphas = config.alphas();
    let bound = config.bound(suite);
    let masses = config.masses.clone().unwrap_or_else(mass_grid);
    let a01s = config.a01s.clone().unwrap_or_else(a01_grid);
    let a01_binary = config.a01s.clone().unwrap_or_else(|| vec![int(0), int(1)]);
    let name = suite.name();
    match suite {
        Suite::Definitions => sweep(name, &alphas, |a| definitions(a, bound)),
        Suite::Relations => sweep(name, &alphas, |a| relations(a, bound)),
        Suite::Inversion => sweep(name, &alphas, |a| kronecker(a, bound)),
        Suite::Spec => sweep(name, &alphas, |a| power(a, bound)),
        Suite::A0 => sweep(name, &alphas, |a| a0_agreement(a, bound, &a01_binary)),
        Suite::Telescope => sweep(name, &alphas, |a| telescope(a, bound)),
        Suite::Systems => sweep(name, &alphas, |a| systems(a, bound, &a01s)),
        Suite::Synthesis => sweep(name, &alphas, |a| synthesis(a, bound.max(1), &a01_binary)),
        Suite::Cc => sweep(name, &alphas, |a| cc(a, bound)),
        Suite::Alt => sweep(name, &alphas, |a| alt(a, bound)),
        Suite::Ode => sweep(name, &alphas, |a| ode(a, bound, &masses, &a01s)),
        Suite::Order => {
            let ints = match &config.alphas {
                Some(a) => a.clone(),
                None => integer_alpha_grid(),
            };
            sweep(name, &ints, |a| order(a, bound))
        }
        Suite::All => Err(Error::Domain("run_one needs a concrete suite".into())),
    }
}

/// Round trip through the solver: `F_n = Σ Q_i D^i P_n`, then solve and
/// compare with `Q`.
pub fn round_trip(alpha: &Rational, q: &[Poly]) -> Result<VerifyReport> {
    let rhs = RhsSequence::from_coefficients(alpha.clone(), q, q.len())?;
    let sol = inversion::solve_system(&rhs)?;
    let mut r = inversion::verify_system(&rhs, &sol)?;
    r.suite = "round-trip".into();
    for (i, (got, want)) in sol.entries().iter().zip(q).enumerate() {
        r.record(format_args!("A_{}, alpha={}", i + 1, fmt_a(alpha)), got - want);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::CONCRETE.iter().chain([Suite::All].iter()) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        let cfg = SuiteConfig {
            alphas: Some(vec![frac(-1, 2), frac(7, 3)]),
            bound: Some(4),
            ..Default::default()
        };
        for s in Suite::CONCRETE {
            let r = run_one(s, &cfg).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn all_keeps_continuity_point() {
        let cfg = SuiteConfig {
            alphas: Some(vec![int(1)]),
            bound: Some(2),
            ..Default::default()
        };
        let reports = run(Suite::All, &cfg).unwrap();
        assert_eq!(reports.len(), Suite::CONCRETE.len());
        let inv = reports.iter().find(|r| r.suite == "inversion").unwrap();
        // two alphas, (0..=2) triangle of 6 pairs each
        assert_eq!(inv.checks, 12);
    }

    #[test]
    fn order_skips_non_integer_alpha() {
        let r = order(&frac(1, 2), 4).unwrap();
        assert_eq!(r.checks, 0);
        assert!(order(&int(2), 8).unwrap().passed());
    }
}
