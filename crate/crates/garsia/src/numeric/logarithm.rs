//! Certified natural-logarithm enclosures over exact rationals.
//!
//! Arguments are reduced by powers of two into `[2/3, 4/3]`, where the
//! series for `ln(1+x)` has an explicit remainder bound; every returned
//! interval is outward-rounded and provably contains the true value.

use super::rational::{pow2_neg, rat, rat_int, NumericError, Rational, RationalInterval};
use num_traits::{One, Signed, Zero};

/// Enclosure of `ln(1+x)` for `|x| <= 1/2`, with width at most `2^-bits`.
fn ln_one_plus(x: &Rational, bits: u32) -> RationalInterval {
    debug_assert!(x.abs() <= rat(1, 2));
    let tol = pow2_neg(bits);
    let mut sum = Rational::zero();
    let mut term = Rational::one(); // x^j
    let mut j = 0u32;
    loop {
        j += 1;
        term *= x;
        let contribution = &term / rat_int(j as i64);
        if j % 2 == 1 {
            sum += &contribution;
        } else {
            sum -= &contribution;
        }
        // remainder after j terms: |x|^(j+1)/(j+1) * 1/(1-|x|) covers both the
        // alternating and the one-signed case; 1/(1-|x|) <= 2 here
        let rem = term.abs() * x.abs() * rat(2, (j + 1) as i64);
        if rem <= tol {
            return RationalInterval {
                lo: &sum - &rem,
                hi: sum + rem,
            };
        }
    }
}

/// Enclosure of `ln 2 = ln(4/3) + ln(3/2)`.
pub fn ln2_enclosure(bits: u32) -> RationalInterval {
    let a = ln_one_plus(&rat(1, 3), bits + 1);
    let b = ln_one_plus(&rat(1, 2), bits + 1);
    a.add(&b)
}

/// Certified enclosure of `ln t` for a positive rational `t`.
pub fn ln_point(t: &Rational, bits: u32) -> Result<RationalInterval, NumericError> {
    if !t.is_positive() {
        return Err(NumericError::NonPositiveLog);
    }
    let mut s = t.clone();
    let mut e: i64 = 0;
    let four_thirds = rat(4, 3);
    let two_thirds = rat(2, 3);
    while s > four_thirds {
        s /= rat_int(2);
        e += 1;
    }
    while s < two_thirds {
        s *= rat_int(2);
        e -= 1;
    }
    let x = s - Rational::one();
    let series = ln_one_plus(&x, bits + 2);
    if e == 0 {
        return Ok(series);
    }
    let extra = 64 - (e.unsigned_abs().leading_zeros() as u32);
    let ln2 = ln2_enclosure(bits + 2 + extra);
    let scaled = ln2.scale(&rat_int(e));
    Ok(series.add(&scaled))
}

/// Certified enclosure of `{ln t : t in x}` for a positive interval, with
/// width at most `2^-precision_bits` plus the input-width contribution.
pub fn log_enclosure(
    x: &RationalInterval,
    precision_bits: u32,
) -> Result<RationalInterval, NumericError> {
    let bits = precision_bits.max(8);
    if !x.lo.is_positive() {
        return Err(NumericError::NonPositiveLog);
    }
    let lo = ln_point(&x.lo, bits + 1)?;
    if x.lo == x.hi {
        return Ok(lo);
    }
    let hi = ln_point(&x.hi, bits + 1)?;
    Ok(RationalInterval { lo: lo.lo, hi: hi.hi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::parse_rational;

    /// Independent oracle: `ln t = 2*atanh(u)` with `u = (t-1)/(t+1)`,
    /// summed with an explicit geometric tail bound.
    fn atanh_oracle(t: &Rational, bits: u32) -> RationalInterval {
        assert!(t.is_positive());
        let u = (t - rat_int(1)) / (t + rat_int(1));
        let u2 = &u * &u;
        let tol = pow2_neg(bits);
        let mut sum = Rational::zero();
        let mut pow = u.clone();
        let mut k = 0u32;
        loop {
            sum += &pow / rat_int((2 * k + 1) as i64);
            pow *= &u2;
            k += 1;
            // geometric tail: |u|^(2k+1)/(2k+1) * 1/(1-u^2)
            let rem = pow.abs() / (rat_int((2 * k + 1) as i64) * (rat_int(1) - &u2));
            if rem <= tol {
                let two = rat_int(2);
                return RationalInterval {
                    lo: (&sum - &rem) * &two,
                    hi: (sum + rem) * two,
                };
            }
        }
    }

    #[test]
    fn ln_one_is_zero_width() {
        let enc = log_enclosure(&RationalInterval::point(rat_int(1)), 32).unwrap();
        assert!(enc.contains(&Rational::zero()));
        assert!(enc.width() <= pow2_neg(32));
    }

    #[test]
    fn ln_two_matches_reference_digits() {
        // 50-digit reference value of ln 2
        let reference =
            parse_rational("0.69314718055994530941723212145817656807550013436025").unwrap();
        let enc = log_enclosure(&RationalInterval::point(rat_int(2)), 64).unwrap();
        assert!(enc.lo <= reference && reference <= enc.hi);
        assert!(enc.width() <= pow2_neg(64));
    }

    #[test]
    fn ln_1526_per_mille_supports_the_082_bound() {
        let t = rat(1526, 1000);
        let enc = log_enclosure(&RationalInterval::point(t), 64).unwrap();
        let lo_ref = parse_rational("0.422649").unwrap();
        let hi_ref = parse_rational("0.422651").unwrap();
        assert!(enc.lo >= lo_ref && enc.hi <= hi_ref);
        // log 2 / (2 ln 1.526) > 0.82
        let ln2 = ln2_enclosure(64);
        let denom = enc.scale(&rat_int(2));
        let bound = &ln2.lo / &denom.hi;
        assert!(bound > parse_rational("0.82").unwrap());
    }

    #[test]
    fn domain_error_on_nonpositive() {
        assert!(log_enclosure(&RationalInterval::new(rat_int(0), rat_int(1)).unwrap(), 32).is_err());
        assert!(log_enclosure(&RationalInterval::new(rat_int(-2), rat_int(-1)).unwrap(), 32).is_err());
    }

    #[test]
    fn contains_truth_on_random_rationals() {
        // seeded LCG over rationals in (1, 4); oracle computed at higher
        // precision by an independent series
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for _ in 0..1000 {
            let den = (next() % 999 + 1) as i64;
            let num = den + (next() % (3 * den as u64)) as i64 + 1;
            let t = rat(num, den);
            let enc = ln_point(&t, 48).unwrap();
            let oracle = atanh_oracle(&t, 80);
            assert!(
                enc.lo <= oracle.hi && oracle.lo <= enc.hi,
                "disjoint enclosures for {t}"
            );
            assert!(enc.lo <= oracle.lo && oracle.hi <= enc.hi || enc.width() >= oracle.width());
        }
    }

    #[test]
    fn interval_argument_is_outward() {
        let x = RationalInterval::new(rat(2, 1), rat(3, 1)).unwrap();
        let enc = log_enclosure(&x, 40).unwrap();
        let at2 = atanh_oracle(&rat_int(2), 60);
        let at3 = atanh_oracle(&rat_int(3), 60);
        assert!(enc.lo <= at2.lo && at3.hi <= enc.hi);
    }
}
