//! Inversion of triangular derivative systems in the ultraspherical basis.
//!
//! The system `Σ_{i≥1} A_i(x) D^i P_n^{(α,α)}(x) = F_n(x)`, `n = 1, 2, ...`,
//! with `A_i` independent of `n`, is triangular because `D^i P_n = 0` for
//! `i > n`. Its unique solution is an explicit finite sum over the "mirror"
//! family `P^{(-α-i-1,-α-i-1)}`, which follows from the biorthogonality
//! relation computed by [`inversion_sum`].

use num_traits::One;

use crate::linfactor::{LinFactorRatio, LinearFactor};
use crate::rational::{self, int, Rational};
use crate::report::VerifyReport;
use crate::ultraspherical::ultra_def1;
use crate::{Error, Poly, Result};

/// `(2α+2k+1) / (2α+k+j+1)_{i-j+1}`, cancelled in `α`.
///
/// At `α = -1/2`, `j = k = 0` the factor `2α+1` sits on both sides and
/// cancels, which yields the continuous extension.
pub fn inversion_weight(i: usize, j: usize, k: usize) -> LinFactorRatio {
    debug_assert!(j <= i);
    let two = int(2);
    let num = LinearFactor::new(two.clone(), int(2 * k as i64 + 1));
    let den = LinFactorRatio::pochhammer(&two, &int((k + j + 1) as i64), i - j + 1);
    &LinFactorRatio::new(Rational::one(), [num], []) / &den
}

/// `P_m^{(-α-i-1, -α-i-1)}`
fn mirror(m: usize, i: usize, alpha: &Rational) -> Poly {
    ultra_def1(m, &(-alpha - int(i as i64 + 1)))
}

fn check_order(i: usize, j: usize) -> Result<()> {
    if j > i {
        return Err(Error::Domain(format!("inversion sum needs j <= i, got i = {i}, j = {j}")));
    }
    Ok(())
}

fn weighted_sum(i: usize, j: usize, alpha: &Rational, reflect: bool) -> Result<Poly> {
    check_order(i, j)?;
    let upper = alpha + int(j as i64);
    let mut acc = Poly::zero();
    for k in j..=i {
        let w = inversion_weight(i, j, k).eval(alpha)?;
        let mut left = mirror(i - k, i, alpha);
        if reflect {
            left = left.reflect();
        }
        acc = &acc + &(&left * &ultra_def1(k - j, &upper)).scale(&w);
    }
    Ok(acc)
}

/// `Σ_{k=j}^{i} w(i,j,k) P_{i-k}^{(-α-i-1)}(x) P_{k-j}^{(α+j)}(x)`; equals `δ_ij`.
pub fn inversion_sum(i: usize, j: usize, alpha: &Rational) -> Result<Poly> {
    weighted_sum(i, j, alpha, false)
}

/// As [`inversion_sum`] with the mirror factor evaluated at `-x`;
/// equals `x^{i-j} / (i-j)!`.
pub fn spec_sum(i: usize, j: usize, alpha: &Rational) -> Result<Poly> {
    weighted_sum(i, j, alpha, true)
}

/// Right-hand sides `F_1, ..., F_N` of a derivative system at parameter `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhsSequence {
    alpha: Rational,
    entries: Vec<Poly>,
}

impl RhsSequence {
    /// `entries[n-1]` is `F_n`.
    pub fn new(alpha: Rational, entries: Vec<Poly>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("right-hand side sequence must be nonempty".into()));
        }
        Ok(Self { alpha, entries })
    }

    /// `F_n = Σ_{i=1}^{min(n, len q)} Q_i(x) D^i P_n^{(α,α)}(x)` for `n = 1 ..= len`,
    /// with `q[i-1] = Q_i`.
    pub fn from_coefficients(alpha: Rational, q: &[Poly], len: usize) -> Result<Self> {
        let entries = (1..=len)
            .map(|n| apply_operator(q, n, &alpha))
            .collect();
        Self::new(alpha, entries)
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    /// `F_n` for `1 <= n <= N`.
    pub fn get(&self, n: usize) -> Option<&Poly> {
        n.checked_sub(1).and_then(|k| self.entries.get(k))
    }

    pub fn set(&mut self, n: usize, f: Poly) {
        self.entries[n - 1] = f;
    }
}

/// Coefficients `A_1, ..., A_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSequence {
    alpha: Rational,
    entries: Vec<Poly>,
}

impl SolutionSequence {
    /// `entries[i-1]` is `A_i`.
    pub fn new(alpha: Rational, entries: Vec<Poly>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("solution sequence must be nonempty".into()));
        }
        Ok(Self { alpha, entries })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Poly> {
        self.entries
    }

    /// `A_i` for `1 <= i <= N`.
    pub fn get(&self, i: usize) -> Option<&Poly> {
        i.checked_sub(1).and_then(|k| self.entries.get(k))
    }
}

/// `Σ_{i=1}^{min(n, len a)} A_i(x) D^i P_n^{(α,α)}(x)`; terms past `i = n` vanish.
pub fn apply_operator(a: &[Poly], n: usize, alpha: &Rational) -> Poly {
    let p = ultra_def1(n, alpha);
    a.iter()
        .enumerate()
        .take(n)
        .map(|(k, ai)| ai * &p.derivative(k + 1))
        .sum()
}

/// `A_i = 2^i Σ_{j=1}^{i} (2α+2j+1)/(2α+j+1)_{i+1} · P_{i-j}^{(-α-i-1)}(x) F_j(x)`.
pub fn solve_system(rhs: &RhsSequence) -> Result<SolutionSequence> {
    let alpha = rhs.alpha();
    let mut out = Vec::with_capacity(rhs.len());
    for i in 1..=rhs.len() {
        let mut acc = Poly::zero();
        for j in 1..=i {
            let f = &rhs.entries[j - 1];
            if f.is_zero() {
                continue;
            }
            // same weight as the inversion sum with lower index 0
            let w = inversion_weight(i, 0, j).eval(alpha)?;
            acc = &acc + &(&mirror(i - j, i, alpha) * f).scale(&w);
        }
        out.push(acc.scale(&rational::pow2(i as i64)));
    }
    SolutionSequence::new(alpha.clone(), out)
}

/// Checks `Σ_{i=1}^{n} A_i D^i P_n = F_n` for every `n = 1 ..= N`.
pub fn verify_system(rhs: &RhsSequence, sol: &SolutionSequence) -> Result<VerifyReport> {
    if rhs.len() != sol.len() {
        return Err(Error::Domain(format!(
            "length mismatch: {} right-hand sides, {} coefficients",
            rhs.len(),
            sol.len()
        )));
    }
    if rhs.alpha() != sol.alpha() {
        return Err(Error::Domain("right-hand sides and solution use different alpha".into()));
    }
    let alpha = rhs.alpha();
    let mut report = VerifyReport::new("system");
    for (idx, f) in rhs.entries().iter().enumerate() {
        let n = idx + 1;
        let residual = &apply_operator(sol.entries(), n, alpha) - f;
        report.record(format_args!("n={n}, alpha={}", rational::format(alpha)), residual);
    }
    Ok(report)
}
