//! Exact rational scalars and closed rational intervals.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator (the representation `num-rational` maintains on
//! construction). `RationalInterval` is a closed interval with rational
//! endpoints, used as the certified enclosure type throughout the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum NumericError {
    #[error("interval endpoints out of order: {0} > {1}")]
    EmptyInterval(String, String),
    #[error("logarithm of a non-positive value")]
    NonPositiveLog,
    #[error("cannot parse `{0}` as an exact rational")]
    Parse(String),
    #[error("polynomial input must be nonzero")]
    ZeroPolynomial,
    #[error("interval [{0}, {1}] does not isolate exactly one root")]
    NotIsolating(String, String),
    #[error("value must be positive")]
    NotPositive,
}

/// Shorthand for `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exponentiation with a small non-negative exponent.
pub fn rat_pow(r: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut base = r.clone();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Parses `p/q`, an integer, or a plain decimal such as `1.8391`, all exactly.
pub fn parse_rational(s: &str) -> Result<Rational, NumericError> {
    let s = s.trim();
    let err = || NumericError::Parse(s.to_string());
    if s.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err())?;
        let d: BigInt = den.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let (sign, int_digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let int_digits = if int_digits.is_empty() { "0" } else { int_digits };
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let joined = format!("{int_digits}{frac_part}");
        let numer: BigInt = joined.parse().map_err(|_| err())?;
        let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
        return Ok(Rational::new(BigInt::from(sign) * numer, denom));
    }
    let n: BigInt = s.parse().map_err(|_| err())?;
    Ok(Rational::from_integer(n))
}

/// A closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, NumericError> {
        if lo > hi {
            return Err(NumericError::EmptyInterval(lo.to_string(), hi.to_string()));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(v: Rational) -> Self {
        Self { lo: v.clone(), hi: v }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_interval(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = candidates[0].clone();
        let mut hi = candidates[0].clone();
        for c in &candidates[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        Self { lo, hi }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_negative() {
            Self {
                lo: &self.hi * c,
                hi: &self.lo * c,
            }
        } else {
            Self {
                lo: &self.lo * c,
                hi: &self.hi * c,
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }
}

/// Outward-rounded quotient of two enclosures; the denominator must be
/// strictly positive.
pub fn div_enclosure(num: &RationalInterval, den: &RationalInterval) -> RationalInterval {
    debug_assert!(den.lo.is_positive());
    let lo = if num.lo.is_negative() {
        &num.lo / &den.lo
    } else {
        &num.lo / &den.hi
    };
    let hi = if num.hi.is_negative() {
        &num.hi / &den.hi
    } else {
        &num.hi / &den.lo
    };
    RationalInterval { lo, hi }
}

/// `2^(-bits)` as an exact rational.
pub fn pow2_neg(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat_int(-7));
        assert_eq!(parse_rational("1.8391").unwrap(), rat(18391, 10000));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("0.05655621525").unwrap(), rat(5655621525, 100000000000));
        assert!(parse_rational("1.6e3").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn interval_ops() {
        let a = RationalInterval::new(rat(1, 2), rat(3, 2)).unwrap();
        let b = RationalInterval::new(rat(-1, 1), rat(2, 1)).unwrap();
        let p = a.mul(&b);
        assert_eq!(p.lo, rat(-3, 2));
        assert_eq!(p.hi, rat(3, 1));
        assert!(a.intersects(&b));
        assert!(RationalInterval::new(rat(2, 1), rat(1, 1)).is_err());
    }

    #[test]
    fn outward_division() {
        let num = RationalInterval::new(rat(1, 1), rat(2, 1)).unwrap();
        let den = RationalInterval::new(rat(3, 1), rat(4, 1)).unwrap();
        let q = div_enclosure(&num, &den);
        assert_eq!(q.lo, rat(1, 4));
        assert_eq!(q.hi, rat(2, 3));
    }

    #[test]
    fn pow_small() {
        assert_eq!(rat_pow(&rat(3, 2), 4), rat(81, 16));
        assert_eq!(rat_pow(&rat(5, 3), 0), rat_int(1));
    }
}
