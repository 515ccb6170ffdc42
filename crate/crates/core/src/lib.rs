//! Exact arithmetic toolkit for the symmetric generalized ultraspherical
//! (Koornwinder) polynomials `P_n^{α,α,M,M}` and the infinite-order
//! differential equation they satisfy.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point is involved anywhere. The modules are layered bottom-up:
//!
//! - [`rational`], [`poly`], [`combinatorics`], [`linfactor`]: scalars,
//!   dense polynomials in `x`, Pochhammer symbols and generalized binomials,
//!   and ratios of linear factors in `α` with symbolic cancellation.
//! - [`ultraspherical`]: the classical `P_n^{(α,α)}` by three independent
//!   expansions, plus residuals of their standard identities.
//! - [`inversion`]: the inversion sum and the solver for triangular
//!   derivative systems `Σ A_i(x) D^i P_n = F_n`.
//! - [`diffeq`]: the generalized polynomials, the coefficient family of
//!   their differential equation, and checks of every derived identity.
//! - [`suites`]: grid sweeps that aggregate the checks into reports.

pub mod combinatorics;
pub mod diffeq;
pub mod error;
pub mod inversion;
pub mod linfactor;
pub mod poly;
pub mod rational;
pub mod report;
pub mod suites;
pub mod ultraspherical;

pub use error::{Error, Result};
pub use linfactor::{LinFactorRatio, LinearFactor};
pub use poly::Poly;
pub use rational::Rational;
pub use report::{Failure, VerifyReport};
