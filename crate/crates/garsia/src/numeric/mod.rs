//! Exact arithmetic substrate: big rationals, integer polynomials,
//! Sturm-sequence root isolation, and certified operations on real
//! algebraic numbers.

pub mod algebraic;
pub mod logarithm;
pub mod poly;
pub mod rational;
pub mod sturm;

pub use algebraic::{sign_at, AlgebraicReal};
pub use logarithm::{ln2_enclosure, ln_point, log_enclosure};
pub use poly::IntPolynomial;
pub use rational::{parse_rational, rat, rat_int, NumericError, Rational, RationalInterval};
pub use sturm::{count_roots_closed, sturm_isolate, SturmChain};
