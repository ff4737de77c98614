//! Maximal overlap counts `m_n(beta)` of length-`n` prefix intervals.
//!
//! All `2^n` prefix intervals share the width `b^-n/(b-1)`, so sorting by
//! lower endpoints also sorts the upper endpoints and a single linear pass
//! over the sorted endpoint lists computes the supremum of the closed-cover
//! count. At a rational `beta = p/q` every endpoint clears to an integer
//! over the common denominator `p^n (p - q)`; at an algebraic `beta` the
//! comparisons reduce to exact sign queries on small integer polynomials.

use crate::expansions::PrefixWord;
use crate::numeric::{rat_int, AlgebraicReal, IntPolynomial, Rational, RationalInterval};
use num_bigint::BigInt;
use num_traits::One;
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OverlapError {
    #[error("beta must lie strictly inside (1, 2)")]
    BetaOutOfRange,
    #[error("n = {0} exceeds the supported limit {1}")]
    TooLarge(u32, u32),
}

/// Endpoint event of the sweep; kept for auditability of individual runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepEvent {
    pub coordinate: Rational,
    pub is_start: bool,
    pub word: PrefixWord,
}

const MAX_SWEEP_N: u32 = 26;
const MAX_BRUTE_N: u32 = 12;

fn check_rational_beta(n: u32, beta: &Rational) -> Result<(), OverlapError> {
    if n == 0 {
        return Err(OverlapError::TooLarge(0, MAX_SWEEP_N));
    }
    if beta <= &rat_int(1) || beta >= &rat_int(2) {
        return Err(OverlapError::BetaOutOfRange);
    }
    Ok(())
}

/// Integer lower endpoints over the common denominator `p^n (p-q)`, in word
/// order, plus the shared width numerator `q^(n+1)`.
fn integer_endpoints(n: u32, beta: &Rational) -> (Vec<BigInt>, BigInt, BigInt) {
    let p = beta.numer().clone();
    let q = beta.denom().clone();
    let n = n as usize;
    // powers q^i * p^(n-i)
    let mut weights = Vec::with_capacity(n + 1);
    let mut pw = BigInt::one();
    for _ in 0..=n {
        weights.push(pw.clone());
        pw *= &q;
    }
    let mut pp = BigInt::one();
    for i in (0..=n).rev() {
        weights[i] *= &pp;
        pp *= &p;
    }
    let p_minus_q = &p - &q;
    let width_num = weights[n].clone() * &q; // q^(n+1)
    let starts: Vec<BigInt> = PrefixWord::all(n)
        .map(|w| {
            let mut acc = BigInt::ZERO;
            for i in 1..=n {
                if w.digit(i) == 1 {
                    acc += &weights[i];
                }
            }
            acc * &p_minus_q
        })
        .collect();
    let denom = {
        let mut d = BigInt::one();
        for _ in 0..n {
            d *= &p;
        }
        d * &p_minus_q
    };
    (starts, width_num, denom)
}

/// `m_n(beta)` with a witness point attaining the maximum, by the sorted
/// two-pointer sweep over closed intervals (starts win ties).
pub fn max_overlap(n: u32, beta: &Rational) -> Result<(u32, Rational), OverlapError> {
    check_rational_beta(n, beta)?;
    if n > MAX_SWEEP_N {
        return Err(OverlapError::TooLarge(n, MAX_SWEEP_N));
    }
    let (mut starts, width, denom) = integer_endpoints(n, beta);
    starts.sort_unstable();
    let ends: Vec<BigInt> = starts.iter().map(|s| s + &width).collect();
    let mut count = 0i64;
    let mut best = 0i64;
    let mut best_at = starts[0].clone();
    let (mut i, mut j) = (0usize, 0usize);
    while i < starts.len() {
        if starts[i] <= ends[j] {
            count += 1;
            if count > best {
                best = count;
                best_at = starts[i].clone();
            }
            i += 1;
        } else {
            count -= 1;
            j += 1;
        }
    }
    let witness = Rational::new(best_at, denom);
    Ok((best as u32, witness))
}

/// Independent oracle: evaluates the cover count at every interval endpoint
/// by direct containment tests. Quadratic in `2^n`, so `n` is capped.
pub fn brute_force_overlap(n: u32, beta: &Rational) -> Result<u32, OverlapError> {
    check_rational_beta(n, beta)?;
    if n > MAX_BRUTE_N {
        return Err(OverlapError::TooLarge(n, MAX_BRUTE_N));
    }
    let (starts, width, _denom) = integer_endpoints(n, beta);
    let ends: Vec<BigInt> = starts.iter().map(|s| s + &width).collect();
    let mut best = 0u32;
    for x in starts.iter().chain(ends.iter()) {
        let mut c = 0u32;
        for (s, e) in starts.iter().zip(ends.iter()) {
            if s <= x && x <= e {
                c += 1;
            }
        }
        if c > best {
            best = c;
        }
    }
    Ok(best)
}

/// Exact `m_n` at an algebraic parameter value, resolving every endpoint
/// comparison symbolically when interval enclosures cannot separate them.
///
/// Start keys are `A(b)(b-1)` and end keys `A(b)(b-1) + 1` after clearing
/// the positive factor `b^n (b-1)`, so ties are decided by sign queries on
/// difference polynomials at `beta`.
pub fn max_overlap_at_algebraic(n: u32, beta: &AlgebraicReal) -> Result<u32, OverlapError> {
    if let Some(q) = beta.rational_value() {
        return max_overlap(n, q).map(|(m, _)| m);
    }
    if n == 0 || n > MAX_SWEEP_N {
        return Err(OverlapError::TooLarge(n, MAX_SWEEP_N));
    }
    if beta.cmp_rational(&rat_int(1)) != Ordering::Greater
        || beta.cmp_rational(&rat_int(2)) != Ordering::Less
    {
        return Err(OverlapError::BetaOutOfRange);
    }
    let x_minus_1 = IntPolynomial::from_i64(&[-1, 1]);
    let keys: Vec<IntPolynomial> = PrefixWord::all(n as usize)
        .map(|w| w.cleared_lower_poly().mul(&x_minus_1))
        .collect();
    // enclosure per key at a refined parameter interval; refinement depth is
    // a heuristic only, exactness comes from the sign_at fallback
    let refined = beta.refined_to_width(&Rational::new(
        BigInt::one(),
        BigInt::one() << (2 * n + 32),
    ));
    let window = refined.enclosure();
    let enclosures: Vec<RationalInterval> = keys.iter().map(|k| k.eval_interval(&window)).collect();
    let one = rat_int(1);

    // exact comparison of key[a] + shift_a against key[b] + shift_b
    let cmp_keys = |a: usize, sa: i64, b: usize, sb: i64| -> Ordering {
        let (ea, eb) = (&enclosures[a], &enclosures[b]);
        let (alo, ahi) = (&ea.lo + rat_int(sa), &ea.hi + rat_int(sa));
        let (blo, bhi) = (&eb.lo + rat_int(sb), &eb.hi + rat_int(sb));
        if ahi < blo {
            return Ordering::Less;
        }
        if bhi < alo {
            return Ordering::Greater;
        }
        let diff = keys[a]
            .sub(&keys[b])
            .add(&IntPolynomial::constant(BigInt::from(sa - sb)));
        match refined.sign_at(&diff) {
            0 => Ordering::Equal,
            s if s < 0 => Ordering::Less,
            _ => Ordering::Greater,
        }
    };

    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| cmp_keys(a, 0, b, 0));

    // two-pointer sweep: ends are the same keys shifted by +1, in the same
    // sorted order; closed intervals mean starts are processed at ties
    let mut count = 0i64;
    let mut best = 0i64;
    let (mut i, mut j) = (0usize, 0usize);
    let _ = &one;
    while i < order.len() {
        if cmp_keys(order[i], 0, order[j], 1) != Ordering::Greater {
            count += 1;
            if count > best {
                best = count;
            }
            i += 1;
        } else {
            count -= 1;
            j += 1;
        }
    }
    Ok(best as u32)
}

/// Deterministic sweep-event listing for audit output.
pub fn sweep_events(n: u32, beta: &Rational) -> Result<Vec<SweepEvent>, OverlapError> {
    check_rational_beta(n, beta)?;
    if n > MAX_SWEEP_N {
        return Err(OverlapError::TooLarge(n, MAX_SWEEP_N));
    }
    let mut events = Vec::new();
    for w in PrefixWord::all(n as usize) {
        let (l, u) = crate::expansions::prefix_bounds_at(&w, beta)
            .map_err(|_| OverlapError::BetaOutOfRange)?;
        events.push(SweepEvent {
            coordinate: l,
            is_start: true,
            word: w,
        });
        events.push(SweepEvent {
            coordinate: u,
            is_start: false,
            word: w,
        });
    }
    events.sort_by(|a, b| {
        a.coordinate
            .cmp(&b.coordinate)
            .then_with(|| b.is_start.cmp(&a.is_start))
    });
    Ok(events)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, sturm_isolate};

    fn golden() -> AlgebraicReal {
        sturm_isolate(
            &IntPolynomial::from_i64(&[-1, -1, 1]),
            &RationalInterval::new(rat(1, 1), rat(2, 1)).unwrap(),
        )
        .pop()
        .unwrap()
    }

    #[test]
    fn m1_is_two_for_any_beta() {
        for beta in [rat(11, 10), rat(3, 2), rat(19, 10), rat(1999, 1000)] {
            assert_eq!(max_overlap(1, &beta).unwrap().0, 2);
            assert_eq!(brute_force_overlap(1, &beta).unwrap(), 2);
        }
    }

    #[test]
    fn n2_at_19_tenths() {
        let (m, witness) = max_overlap(2, &rat(19, 10)).unwrap();
        assert_eq!(m, 2);
        assert_eq!(brute_force_overlap(2, &rat(19, 10)).unwrap(), 2);
        // witness must be an interval endpoint
        let endpoints: Vec<Rational> = PrefixWord::all(2)
            .flat_map(|w| {
                let (l, u) = crate::expansions::prefix_bounds_at(&w, &rat(19, 10)).unwrap();
                [l, u]
            })
            .collect();
        assert!(endpoints.contains(&witness));
    }

    #[test]
    fn sweep_equals_oracle_at_8_fifths() {
        let beta = rat(8, 5);
        let m = brute_force_overlap(2, &beta).unwrap();
        assert_eq!(max_overlap(2, &beta).unwrap().0, m);
        let m3 = brute_force_overlap(3, &rat(7, 4)).unwrap();
        assert_eq!(max_overlap(3, &rat(7, 4)).unwrap().0, m3);
        let m32 = brute_force_overlap(2, &rat(3, 2)).unwrap();
        assert_eq!(max_overlap(2, &rat(3, 2)).unwrap().0, m32);
    }

    #[test]
    fn golden_ratio_triple_contact_at_n2() {
        // the point 1/beta sits in the closed intervals of 00, 01 and 10
        assert_eq!(max_overlap_at_algebraic(2, &golden()).unwrap(), 3);
    }

    #[test]
    fn symbolic_triple_contact_matches_brute_symbolic_count() {
        // independent check by direct symbolic containment of all 4 words
        // at x = (10)_L, using exact sign evaluation
        let g = golden();
        let x_minus_1 = IntPolynomial::from_i64(&[-1, 1]);
        let keys: Vec<IntPolynomial> = PrefixWord::all(2)
            .map(|w| w.cleared_lower_poly().mul(&x_minus_1))
            .collect();
        let x_key = &keys[2]; // word 10
        let mut count = 0;
        for k in &keys {
            let lower_ok = g.sign_at(&x_key.sub(k)) >= 0;
            let upper = k.add(&IntPolynomial::constant(1.into()));
            let upper_ok = g.sign_at(&x_key.sub(&upper)) <= 0;
            if lower_ok && upper_ok {
                count += 1;
            }
        }
        assert_eq!(count, 3);
    }

    #[test]
    fn sqrt2_n1_symbolic() {
        let sqrt2 = AlgebraicReal::new_checked(
            &IntPolynomial::from_i64(&[-2, 0, 1]),
            rat(1, 1),
            rat(2, 1),
        )
        .unwrap();
        assert_eq!(max_overlap_at_algebraic(1, &sqrt2).unwrap(), 2);
    }

    #[test]
    fn algebraic_path_matches_rational_at_rational_points() {
        for beta in [rat(3, 2), rat(7, 4), rat(19, 12)] {
            let alg = AlgebraicReal::from_rational(beta.clone());
            for n in 1..=5 {
                assert_eq!(
                    max_overlap_at_algebraic(n, &alg).unwrap(),
                    max_overlap(n, &beta).unwrap().0
                );
            }
        }
    }

    #[test]
    fn bounds_and_never_full_at_n2() {
        // m_2 = 4 can only happen for beta <= sqrt(2), so scan above it
        for k in 0..=20i64 {
            let beta = rat(145, 100) + rat(k, 40);
            if beta >= rat(2, 1) {
                continue;
            }
            for n in 1..=4 {
                let (m, _) = max_overlap(n, &beta).unwrap();
                assert!(m >= 1 && m <= 1 << n);
                if n == 2 {
                    assert!(m < 4, "m_2 = 4 at beta = {beta}");
                }
            }
        }
    }

    #[test]
    fn submultiplicative_in_n() {
        for beta in [rat(3, 2), rat(17, 10), rat(19, 10)] {
            let m = |n| max_overlap(n, &beta).unwrap().0;
            assert!(m(3) <= m(1) * m(2));
            assert!(m(4) <= m(2) * m(2));
            assert!(m(5) <= m(2) * m(3));
        }
    }

    #[test]
    fn witness_is_an_endpoint_everywhere() {
        for denom in [7i64, 10, 13] {
            for numer in (denom + 1)..(2 * denom) {
                let beta = rat(numer, denom);
                let (_, witness) = max_overlap(4, &beta).unwrap();
                let mut found = false;
                for w in PrefixWord::all(4) {
                    let (l, u) = crate::expansions::prefix_bounds_at(&w, &beta).unwrap();
                    if witness == l || witness == u {
                        found = true;
                        break;
                    }
                }
                assert!(found, "witness {witness} is not an endpoint for beta {beta}");
            }
        }
    }

    #[test]
    fn rejects_out_of_range_and_oversized() {
        assert!(max_overlap(2, &rat(5, 2)).is_err());
        assert!(max_overlap(2, &rat(1, 1)).is_err());
        assert!(brute_force_overlap(13, &rat(3, 2)).is_err());
    }

    #[test]
    fn event_listing_orders_starts_before_ends() {
        let events = sweep_events(2, &rat(8, 5)).unwrap();
        assert_eq!(events.len(), 8);
        for pair in events.windows(2) {
            assert!(pair[0].coordinate <= pair[1].coordinate);
            if pair[0].coordinate == pair[1].coordinate {
                assert!(pair[0].is_start >= pair[1].is_start);
            }
        }
    }
}
