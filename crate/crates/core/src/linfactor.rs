//! Ratios of products of linear factors in `α`.
//!
//! Several prefactors have removable singularities at `2α + 1 = 0`. They are
//! built here as `scalar · Π(pα + q) / Π(p'α + q')` and cancelled
//! symbolically before any value of `α` is substituted, so the value at a
//! removable singularity is the limit value rather than `0/0`.

use std::fmt;
use std::ops::{Div, Mul};

use num_traits::{One, Zero};

use crate::rational::{self, Rational};
use crate::{Error, Result};

/// The linear form `slope·α + offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearFactor {
    pub slope: Rational,
    pub offset: Rational,
}

impl LinearFactor {
    pub fn new(slope: Rational, offset: Rational) -> Self {
        Self { slope, offset }
    }

    pub fn eval(&self, alpha: &Rational) -> Rational {
        &self.slope * alpha + &self.offset
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}*a + {})",
            rational::format(&self.slope),
            rational::format(&self.offset)
        )
    }
}

/// `scalar · Π numerator / Π denominator`, kept fully cancelled.
///
/// Factors with nonzero slope are stored monic (slope 1), with the slope
/// folded into `scalar`; constant factors are folded into `scalar` entirely.
/// A constant zero in the denominator is kept as the factor `0·α + 0`, which
/// poles at every `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinFactorRatio {
    numerator: Vec<LinearFactor>,
    denominator: Vec<LinearFactor>,
    scalar: Rational,
}

impl LinFactorRatio {
    pub fn new(
        scalar: Rational,
        numerator: impl IntoIterator<Item = LinearFactor>,
        denominator: impl IntoIterator<Item = LinearFactor>,
    ) -> Self {
        let mut r = Self {
            numerator: Vec::new(),
            denominator: Vec::new(),
            scalar,
        };
        for f in numerator {
            r.push(f, true);
        }
        for f in denominator {
            r.push(f, false);
        }
        r.cancel();
        r
    }

    pub fn constant(scalar: Rational) -> Self {
        Self::new(scalar, [], [])
    }

    /// `(slope·α + offset)_k` as a product of `k` numerator factors.
    pub fn pochhammer(slope: &Rational, offset: &Rational, k: usize) -> Self {
        Self::new(Rational::one(), pochhammer_factors(slope, offset, k), [])
    }

    fn push(&mut self, f: LinearFactor, numerator: bool) {
        if f.slope.is_zero() {
            if numerator {
                self.scalar *= &f.offset;
            } else if f.offset.is_zero() {
                self.denominator.push(f);
            } else {
                self.scalar /= &f.offset;
            }
            return;
        }
        let monic = LinearFactor::new(Rational::one(), &f.offset / &f.slope);
        if numerator {
            self.scalar *= &f.slope;
            self.numerator.push(monic);
        } else {
            self.scalar /= &f.slope;
            self.denominator.push(monic);
        }
    }

    fn cancel(&mut self) {
        if self.scalar.is_zero() {
            self.numerator.clear();
            // A genuine zero still poles where the denominator vanishes
            // uncancelled; keep the denominator so evaluation reports it.
        }
        let mut kept = Vec::with_capacity(self.denominator.len());
        for d in self.denominator.drain(..) {
            if let Some(pos) = self.numerator.iter().position(|n| *n == d) {
                self.numerator.swap_remove(pos);
            } else {
                kept.push(d);
            }
        }
        self.denominator = kept;
        self.numerator.sort();
        self.denominator.sort();
    }

    pub fn numerator(&self) -> &[LinearFactor] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[LinearFactor] {
        &self.denominator
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar
    }

    pub fn is_cancelled(&self) -> bool {
        !self.denominator.iter().any(|d| self.numerator.contains(d))
    }

    /// Value at `alpha`; a pole error when an uncancelled denominator factor
    /// vanishes there.
    pub fn eval(&self, alpha: &Rational) -> Result<Rational> {
        let mut den = Rational::one();
        for d in &self.denominator {
            let v = d.eval(alpha);
            if v.is_zero() {
                return Err(Error::Pole {
                    alpha: alpha.clone(),
                });
            }
            den *= v;
        }
        let num: Rational = self.numerator.iter().map(|n| n.eval(alpha)).product();
        Ok(&self.scalar * num / den)
    }
}

fn pochhammer_factors(slope: &Rational, offset: &Rational, k: usize) -> Vec<LinearFactor> {
    (0..k)
        .map(|t| LinearFactor::new(slope.clone(), offset + rational::int(t as i64)))
        .collect()
}

impl Mul for &LinFactorRatio {
    type Output = LinFactorRatio;
    fn mul(self, rhs: &LinFactorRatio) -> LinFactorRatio {
        LinFactorRatio::new(
            &self.scalar * &rhs.scalar,
            self.numerator.iter().chain(&rhs.numerator).cloned(),
            self.denominator.iter().chain(&rhs.denominator).cloned(),
        )
    }
}

impl Div for &LinFactorRatio {
    type Output = LinFactorRatio;
    /// Panics if `rhs` has a zero scalar.
    fn div(self, rhs: &LinFactorRatio) -> LinFactorRatio {
        LinFactorRatio::new(
            &self.scalar / &rhs.scalar,
            self.numerator.iter().chain(&rhs.denominator).cloned(),
            self.denominator.iter().chain(&rhs.numerator).cloned(),
        )
    }
}

impl fmt::Display for LinFactorRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", rational::format(&self.scalar))?;
        for n in &self.numerator {
            write!(f, "*{n}")?;
        }
        for d in &self.denominator {
            write!(f, "/{d}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::pochhammer;
    use crate::rational::{frac, int};

    fn lf(p: i64, q: i64) -> LinearFactor {
        LinearFactor::new(int(p), int(q))
    }

    #[test]
    fn removable_singularity_cancels() {
        let r = LinFactorRatio::new(int(1), [lf(2, 1)], [lf(2, 1)]);
        assert!(r.denominator().is_empty());
        assert!(r.numerator().is_empty());
        assert_eq!(r.eval(&frac(-1, 2)).unwrap(), int(1));
        assert_eq!(r.eval(&int(5)).unwrap(), int(1));
    }

    #[test]
    fn proportional_factors_cancel() {
        // (2α+1) / (4α+2) = 1/2
        let r = LinFactorRatio::new(int(1), [lf(2, 1)], [lf(4, 2)]);
        assert!(r.denominator().is_empty());
        assert_eq!(r.eval(&frac(-1, 2)).unwrap(), frac(1, 2));
    }

    #[test]
    fn zero_numerator_at_root() {
        let r = LinFactorRatio::new(int(1), [lf(2, 1)], []);
        assert_eq!(r.eval(&frac(-1, 2)).unwrap(), int(0));
    }

    #[test]
    fn uncancelled_pole() {
        let r = LinFactorRatio::new(int(1), [], [lf(2, 1)]);
        assert_eq!(
            r.eval(&frac(-1, 2)),
            Err(Error::Pole {
                alpha: frac(-1, 2)
            })
        );
        assert_eq!(r.eval(&int(0)).unwrap(), int(1));
    }

    #[test]
    fn constant_zero_denominator_always_poles() {
        let r = LinFactorRatio::new(int(3), [], [lf(0, 0)]);
        assert!(r.eval(&int(1)).is_err());
    }

    #[test]
    fn pochhammer_in_alpha_matches_scalar() {
        let alpha = frac(7, 3);
        let r = LinFactorRatio::pochhammer(&int(2), &int(3), 5);
        assert_eq!(r.eval(&alpha).unwrap(), pochhammer(&(int(2) * &alpha + int(3)), 5));
    }

    #[test]
    fn ratio_of_pochhammers_cancels_overlap() {
        // (2α+1)_4 / (2α+1) = (2α+2)_3
        let top = LinFactorRatio::pochhammer(&int(2), &int(1), 4);
        let bottom = LinFactorRatio::new(int(1), [lf(2, 1)], []);
        let q = &top / &bottom;
        assert!(q.denominator().is_empty());
        assert!(q.is_cancelled());
        let expected = LinFactorRatio::pochhammer(&int(2), &int(2), 3);
        assert_eq!(q, expected);
        assert_eq!(q.eval(&frac(-1, 2)).unwrap(), int(6));
    }
}
