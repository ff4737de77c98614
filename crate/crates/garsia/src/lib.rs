//! Certification toolkit for Garsia's entropy of Bernoulli convolutions.
//!
//! For `beta` in `(1, 2)` the Bernoulli convolution is the distribution of
//! `sum a_k beta^-k` over fair independent bits. This crate computes
//! rigorous lower bounds on the associated Garsia entropy by exact
//! arithmetic: prefix-interval overlap counts, transition-point isolation,
//! a piecewise-constant certification sweep over the parameter axis, exact
//! entropy upper bounds, and algebraic criteria certifying full dimension.
//!
//! Everything is deterministic and exact; floating point never influences a
//! result.

pub mod certify;
pub mod classify;
pub mod entropy;
pub mod expansions;
pub mod numeric;
pub mod overlap;
pub mod transitions;

pub mod cli;

pub use numeric::{AlgebraicReal, IntPolynomial, Rational, RationalInterval};
