//! Real algebraic numbers as (squarefree defining polynomial, isolating
//! rational interval), with exact comparison and sign evaluation.
//!
//! Values are immutable; refinement returns a new value with a tighter
//! interval for the same number, so concurrent readers are always safe.

use super::poly::IntPolynomial;
use super::rational::{rat_int, rat_pow, NumericError, Rational, RationalInterval};
use super::sturm::count_roots_closed;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone)]
pub struct AlgebraicReal {
    defining: IntPolynomial,
    lo: Rational,
    hi: Rational,
    /// Sign of `defining` at `lo`; zero exactly when `lo == hi` (rational).
    lo_sign: i32,
}

impl AlgebraicReal {
    pub fn from_rational(value: Rational) -> Self {
        let defining = IntPolynomial::linear_from_rational(&value).normalized();
        Self {
            defining,
            lo: value.clone(),
            hi: value,
            lo_sign: 0,
        }
    }

    pub fn from_int(value: i64) -> Self {
        Self::from_rational(rat_int(value))
    }

    /// Trusted constructor used by root isolation: exactly one root of the
    /// squarefree `defining` lies in `[lo, hi]` and the endpoint signs differ.
    pub(crate) fn from_isolating_unchecked(
        defining: IntPolynomial,
        lo: Rational,
        hi: Rational,
    ) -> Self {
        let lo_sign = defining.sign_at_rational(&lo);
        debug_assert!(lo_sign != 0 && defining.sign_at_rational(&hi) == -lo_sign);
        Self {
            defining,
            lo,
            hi,
            lo_sign,
        }
    }

    pub(crate) fn rational_root_of(defining: &IntPolynomial, value: Rational) -> Self {
        debug_assert_eq!(defining.sign_at_rational(&value), 0);
        Self::from_rational(value)
    }

    /// Checked constructor: `poly` (after squarefree reduction) must have
    /// exactly one real root in the closed interval `[lo, hi]`.
    pub fn new_checked(
        poly: &IntPolynomial,
        lo: Rational,
        hi: Rational,
    ) -> Result<Self, NumericError> {
        if poly.is_zero() {
            return Err(NumericError::ZeroPolynomial);
        }
        if lo > hi {
            return Err(NumericError::EmptyInterval(lo.to_string(), hi.to_string()));
        }
        let sqf = poly.squarefree_part();
        if sqf.degree().unwrap_or(0) == 0 {
            return Err(NumericError::NotIsolating(lo.to_string(), hi.to_string()));
        }
        if lo == hi {
            if sqf.sign_at_rational(&lo) == 0 {
                return Ok(Self::from_rational(lo));
            }
            return Err(NumericError::NotIsolating(lo.to_string(), hi.to_string()));
        }
        if count_roots_closed(&sqf, &lo, &hi) != 1 {
            return Err(NumericError::NotIsolating(lo.to_string(), hi.to_string()));
        }
        if sqf.sign_at_rational(&lo) == 0 {
            return Ok(Self::from_rational(lo));
        }
        if sqf.sign_at_rational(&hi) == 0 {
            return Ok(Self::from_rational(hi));
        }
        Ok(Self::from_isolating_unchecked(sqf, lo, hi))
    }

    pub fn defining(&self) -> &IntPolynomial {
        &self.defining
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn enclosure(&self) -> RationalInterval {
        RationalInterval {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    pub fn rational_value(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.lo)
        } else {
            None
        }
    }

    /// One bisection step; collapses to the exact rational when the midpoint
    /// is a root.
    pub fn refined_once(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let mid = (&self.lo + &self.hi) / rat_int(2);
        let s = self.defining.sign_at_rational(&mid);
        if s == 0 {
            return Self::from_rational(mid);
        }
        if s == self.lo_sign {
            Self {
                defining: self.defining.clone(),
                lo: mid,
                hi: self.hi.clone(),
                lo_sign: self.lo_sign,
            }
        } else {
            Self {
                defining: self.defining.clone(),
                lo: self.lo.clone(),
                hi: mid,
                lo_sign: self.lo_sign,
            }
        }
    }

    pub fn refined_to_width(&self, width: &Rational) -> Self {
        let mut cur = self.clone();
        while &cur.width() > width {
            cur = cur.refined_once();
        }
        cur
    }

    /// Exact comparison against a rational.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        if let Some(v) = self.rational_value() {
            return v.cmp(q);
        }
        if self.defining.sign_at_rational(q) == 0 && &self.lo <= q && q <= &self.hi {
            return Ordering::Equal;
        }
        let mut cur = self.clone();
        loop {
            if q < &cur.lo {
                return Ordering::Greater;
            }
            if q > &cur.hi {
                return Ordering::Less;
            }
            cur = cur.refined_once();
        }
    }

    /// Exact trichotomy; equality is decided by a gcd-based common-root test.
    pub fn compare(&self, other: &Self) -> Ordering {
        match (self.rational_value(), other.rational_value()) {
            (Some(a), Some(b)) => return a.cmp(b),
            (Some(a), None) => return other.cmp_rational(a).reverse(),
            (None, Some(b)) => return self.cmp_rational(b),
            (None, None) => {}
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let g = a.defining.gcd(&b.defining);
        let has_common_factor = g.degree().unwrap_or(0) >= 1;
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            if has_common_factor {
                let olo = if a.lo >= b.lo { a.lo.clone() } else { b.lo.clone() };
                let ohi = if a.hi <= b.hi { a.hi.clone() } else { b.hi.clone() };
                if olo <= ohi && count_roots_closed(&g, &olo, &ohi) >= 1 {
                    return Ordering::Equal;
                }
            }
            a = a.refined_once();
            b = b.refined_once();
            if let (Some(x), Some(y)) = (a.rational_value(), b.rational_value()) {
                return x.cmp(y);
            }
            if let Some(x) = a.rational_value() {
                return b.cmp_rational(x).reverse();
            }
            if let Some(y) = b.rational_value() {
                return a.cmp_rational(y);
            }
        }
    }

    /// Exact sign of `p` evaluated at this number.
    pub fn sign_at(&self, p: &IntPolynomial) -> i32 {
        if p.is_zero() {
            return 0;
        }
        if let Some(v) = self.rational_value() {
            return p.sign_at_rational(v);
        }
        let g = p.gcd(&self.defining);
        if g.degree().unwrap_or(0) >= 1 && count_roots_closed(&g, &self.lo, &self.hi) >= 1 {
            return 0;
        }
        let mut cur = self.clone();
        loop {
            let enc = p.eval_interval(&cur.enclosure());
            if enc.is_positive() {
                return 1;
            }
            if enc.is_negative() {
                return -1;
            }
            cur = cur.refined_once();
            if let Some(v) = cur.rational_value() {
                return p.sign_at_rational(v);
            }
        }
    }

    /// The positive real `k`-th root; the value must be positive.
    pub fn nth_root(&self, k: u32) -> Self {
        assert!(k >= 1);
        if k == 1 {
            return self.clone();
        }
        if let Some(v) = self.rational_value() {
            assert!(v.is_positive(), "k-th root requires a positive value");
            let num = v.numer();
            let den = v.denom();
            let rn = num.nth_root(k);
            let rd = den.nth_root(k);
            if &rn.pow(k) == num && &rd.pow(k) == den {
                return Self::from_rational(Rational::new(rn, rd));
            }
            let mut coeffs = vec![-num.clone()];
            coeffs.extend(std::iter::repeat(num_bigint::BigInt::zero()).take(k as usize - 1));
            coeffs.push(den.clone());
            let poly = IntPolynomial::from_coeffs(coeffs).normalized();
            let upper = if v >= &rat_int(1) {
                v + rat_int(1)
            } else {
                rat_int(1)
            };
            return Self::from_isolating_unchecked(poly, Rational::zero(), upper);
        }
        let mut me = self.clone();
        while !me.lo.is_positive() {
            me = me.refined_once();
        }
        let mut defining = me.defining.clone();
        if defining.coeff(0).is_zero() {
            // strip the x factor so the composed polynomial stays squarefree
            defining = defining
                .exact_div(&IntPolynomial::from_i64(&[0, 1]))
                .expect("x divides a polynomial with zero constant term");
        }
        let composed = defining.compose_x_pow(k as usize).normalized();
        let (lo, hi) = (me.lo.clone(), me.hi.clone());
        let mut u = Rational::zero();
        let mut v = if hi >= rat_int(1) {
            &hi + rat_int(1)
        } else {
            rat_int(2)
        };
        loop {
            let uk = rat_pow(&u, k);
            let vk = rat_pow(&v, k);
            if u.is_positive() && uk >= lo && vk <= hi {
                break;
            }
            let m = (&u + &v) / rat_int(2);
            match me.cmp_rational(&rat_pow(&m, k)) {
                Ordering::Greater => u = m,
                Ordering::Less => v = m,
                Ordering::Equal => {
                    // the value is the exact k-th power of a rational
                    return Self::from_rational(m);
                }
            }
        }
        Self::from_isolating_unchecked(composed, u, v)
    }

    /// Exact comparison of `self^k` against `other`; `self` must be
    /// non-negative.
    pub fn pow_cmp(&self, k: u32, other: &Self) -> Ordering {
        if k == 1 {
            return self.compare(other);
        }
        if let Some(a) = self.rational_value() {
            let p = rat_pow(a, k);
            return other.cmp_rational(&p).reverse();
        }
        let mut a = self.clone();
        while a.lo.is_negative() {
            a = a.refined_once();
        }
        if let Some(b) = other.rational_value() {
            // self irrational; self^k may still be rational
            let composed = IntPolynomial::linear_from_rational(b).compose_x_pow(k as usize);
            if a.sign_at(&composed) == 0 {
                return Ordering::Equal;
            }
            let mut cur = a;
            loop {
                let pk_lo = rat_pow(&cur.lo, k);
                let pk_hi = rat_pow(&cur.hi, k);
                if &pk_hi < b {
                    return Ordering::Less;
                }
                if b < &pk_lo {
                    return Ordering::Greater;
                }
                cur = cur.refined_once();
            }
        }
        let composed = other.defining.compose_x_pow(k as usize);
        let vanishes = a.sign_at(&composed) == 0;
        let mut b = other.clone();
        loop {
            let pk_lo = rat_pow(&a.lo, k);
            let pk_hi = rat_pow(&a.hi, k);
            if pk_hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < pk_lo {
                return Ordering::Greater;
            }
            if vanishes {
                // self^k is some root of other's defining polynomial; it
                // equals other exactly when the power enclosure singles out
                // the root isolated by other's interval
                let isolated = count_roots_closed(&other.defining, &pk_lo, &pk_hi) == 1;
                if isolated {
                    let olo = if pk_lo >= b.lo { pk_lo.clone() } else { b.lo.clone() };
                    let ohi = if pk_hi <= b.hi { pk_hi.clone() } else { b.hi.clone() };
                    if olo <= ohi && count_roots_closed(&other.defining, &olo, &ohi) >= 1 {
                        return Ordering::Equal;
                    }
                }
            }
            a = a.refined_once();
            b = b.refined_once();
            if a.is_rational() || b.is_rational() {
                return a.pow_cmp(k, &b);
            }
        }
    }
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.compare(other))
    }
}

impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.rational_value() {
            write!(f, "{v}")
        } else {
            write!(f, "root of {} in [{}, {}]", self.defining, self.lo, self.hi)
        }
    }
}

/// Free-function form of exact sign evaluation.
pub fn sign_at(p: &IntPolynomial, x: &AlgebraicReal) -> i32 {
    x.sign_at(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::rat;
    use crate::numeric::sturm::sturm_isolate;

    fn golden() -> AlgebraicReal {
        let f = IntPolynomial::from_i64(&[-1, -1, 1]);
        sturm_isolate(
            &f,
            &RationalInterval::new(rat(1, 1), rat(2, 1)).unwrap(),
        )
        .pop()
        .unwrap()
    }

    fn sqrt2() -> AlgebraicReal {
        AlgebraicReal::new_checked(&IntPolynomial::from_i64(&[-2, 0, 1]), rat(1, 1), rat(2, 1))
            .unwrap()
    }

    #[test]
    fn sign_at_defining_is_zero() {
        let g = golden();
        assert_eq!(g.sign_at(&IntPolynomial::from_i64(&[-1, -1, 1])), 0);
        assert_eq!(g.sign_at(&IntPolynomial::from_i64(&[-1, 1])), 1);
    }

    #[test]
    fn sign_of_two_x2_minus_five_at_sqrt2() {
        // exact substitution: 2*2 - 5 = -1
        assert_eq!(sqrt2().sign_at(&IntPolynomial::from_i64(&[-5, 0, 2])), -1);
    }

    #[test]
    fn compare_examples() {
        let g1 = golden();
        let g2 = AlgebraicReal::new_checked(
            &IntPolynomial::from_i64(&[-1, -1, 1]),
            rat(3, 2),
            rat(7, 4),
        )
        .unwrap();
        assert_eq!(sqrt2().compare(&g1), Ordering::Less);
        assert_eq!(g1.compare(&g2), Ordering::Equal);
        let three_halves = AlgebraicReal::from_rational(rat(3, 2));
        assert_eq!(three_halves.compare(&sqrt2()), Ordering::Greater);
    }

    #[test]
    fn compare_is_consistent_with_refinement() {
        let mut values = vec![
            sqrt2(),
            golden(),
            AlgebraicReal::from_rational(rat(3, 2)),
            AlgebraicReal::from_rational(rat(7, 5)),
            AlgebraicReal::new_checked(&IntPolynomial::from_i64(&[-3, 0, 1]), rat(1, 1), rat(2, 1))
                .unwrap(),
        ];
        values.sort();
        let approx: Vec<f64> = values
            .iter()
            .map(|v| {
                let r = v.refined_to_width(&rat(1, 1_000_000));
                let m = (r.lo() + r.hi()) / rat(2, 1);
                m.numer().to_string().parse::<f64>().unwrap()
                    / m.denom().to_string().parse::<f64>().unwrap()
            })
            .collect();
        for w in approx.windows(2) {
            assert!(w[0] <= w[1] + 1e-9);
        }
    }

    #[test]
    fn rational_collapse_during_refinement() {
        // 3/2 is a root; bisection of [1, 2] hits it exactly
        let f = IntPolynomial::from_i64(&[-3, 2]);
        let v = AlgebraicReal::new_checked(&f, rat(1, 1), rat(2, 1))
            .unwrap()
            .refined_once();
        assert!(v.is_rational());
        assert_eq!(v.rational_value().unwrap(), &rat(3, 2));
    }

    #[test]
    fn nth_root_of_two_is_sqrt2() {
        let two = AlgebraicReal::from_int(2);
        let root = two.nth_root(2);
        assert!(!root.is_rational());
        assert_eq!(root.compare(&sqrt2()), Ordering::Equal);
        assert_eq!(root.pow_cmp(2, &two), Ordering::Equal);
        let four = AlgebraicReal::from_int(4);
        assert_eq!(four.nth_root(2).rational_value().unwrap(), &rat(2, 1));
    }

    #[test]
    fn nth_root_of_algebraic() {
        // (golden)^(1/2) squares back to golden and sits near 1.272
        let g = golden();
        let r = g.nth_root(2);
        assert_eq!(r.pow_cmp(2, &g), Ordering::Equal);
        assert_eq!(r.cmp_rational(&rat(127, 100)), Ordering::Greater);
        assert_eq!(r.cmp_rational(&rat(128, 100)), Ordering::Less);
    }

    #[test]
    fn pow_cmp_orders_strictly() {
        let g = golden();
        let two = AlgebraicReal::from_int(2);
        assert_eq!(g.pow_cmp(2, &two), Ordering::Greater); // golden^2 ≈ 2.618
        assert_eq!(sqrt2().pow_cmp(2, &g), Ordering::Greater); // 2 > 1.618
        assert_eq!(sqrt2().pow_cmp(4, &AlgebraicReal::from_int(4)), Ordering::Equal);
    }
}
