//! Exact power sums, Bernoulli numbers and Faulhaber forms.
//!
//! Everything here is computed over unbounded rationals; there is no floating
//! point anywhere. The crate is organised bottom-up:
//!
//! - [`exact_arith`]: [`Rational`] and exact binomial coefficients.
//! - [`polynomial`]: dense univariate polynomials tagged with the variable
//!   they are written in (`n` or the triangular number `T = n(n+1)/2`).
//! - [`faulhaber`]: Bernoulli numbers, power-sum polynomials, the `T`-basis
//!   Faulhaber forms of odd power sums, and the identity checks built on them.
//! - [`cli`]: the `faulhaber` command-line front end.

pub mod cli;
pub mod error;
pub mod exact_arith;
pub mod faulhaber;
pub mod polynomial;

pub use error::{Error, Result};
pub use exact_arith::{binomial, binomial_u64, rat_arith, ArithOp, Rational};
pub use faulhaber::{
    bernoulli, faulhaber_coefficients, infer_odd_bernoulli, power_sum_direct, power_sum_poly_n,
    power_sum_tform, telescoping_check, verify_faulhaber, verify_pascal_identity, BernoulliTable,
    FaulhaberForm, VerificationReport,
};
pub use polynomial::{poly_arith, PolyOp, Polynomial, Var};
