//! Pochhammer symbols, factorials and generalized binomial coefficients.

use num_traits::{One, Zero};

use crate::rational::{int, Rational};

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..k {
        if term.is_zero() {
            return Rational::zero();
        }
        acc *= &term;
        term += Rational::one();
    }
    acc
}

pub fn factorial(k: usize) -> Rational {
    (1..=k).map(|t| int(t as i64)).product()
}

/// `(z choose k) = (z-k+1)_k / k!` for any rational `z`; zero for `k < 0`.
pub fn gen_binomial(z: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let k = k as usize;
    let start = z - int(k as i64) + Rational::one();
    pochhammer(&start, k) / factorial(k)
}
