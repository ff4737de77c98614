//! Integer-coefficient polynomials with the exact operations needed for
//! Sturm sequences, squarefree reduction, and sign evaluation.

use super::rational::{Rational, RationalInterval};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense polynomial over the integers; `coeffs[i]` is the coefficient of
/// `x^i` and the last entry is nonzero (the zero polynomial is empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(coef: BigInt, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = coef;
        Self::from_coeffs(coeffs)
    }

    /// `den*x - num`, the defining polynomial of the rational `num/den`.
    pub fn linear_from_rational(value: &Rational) -> Self {
        Self::from_coeffs(vec![-value.numer().clone(), value.denom().clone()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn sign_at_rational(&self, x: &Rational) -> i32 {
        let v = self.eval_rational(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Interval extension by Horner's rule with outward rounding-free exact
    /// rational interval arithmetic.
    pub fn eval_interval(&self, x: &RationalInterval) -> RationalInterval {
        let mut acc = RationalInterval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            let shifted = acc.mul(x);
            let c = Rational::from_integer(c.clone());
            acc = RationalInterval {
                lo: shifted.lo + c.clone(),
                hi: shifted.hi + c,
            };
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitutes `x -> x^k`.
    pub fn compose_x_pow(&self, k: usize) -> Self {
        assert!(k >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// Substitutes `x -> c*x`.
    pub fn scale_argument(&self, c: &BigInt) -> Self {
        let mut pow = BigInt::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a * &pow;
                pow = &pow * c;
                out
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// The reciprocal polynomial `x^deg * p(1/x)`.
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_coeffs(coeffs)
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Divides out the positive content only; signs are preserved, which the
    /// Sturm chain construction depends on.
    fn content_reduced(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.content();
        Self {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Pseudo-remainder of `self` by `div`, scaled so that its sign function
    /// agrees with the exact rational remainder. Requires `div` nonzero with
    /// `deg(self) >= deg(div)`.
    fn signed_pseudo_rem(&self, div: &Self) -> Self {
        let dd = div.degree().expect("nonzero divisor");
        let lead = div.leading();
        let mut r = self.clone();
        let mut scale_steps = 0usize;
        let total_steps = self.degree().unwrap() - dd + 1;
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let factor = r.leading();
            let shifted = div.scale(&factor).mul_x_pow(rd - dd);
            r = r.scale(&lead).sub(&shifted);
            scale_steps += 1;
        }
        // normalize the total multiplier to lead^(total_steps), then correct
        // the sign when that multiplier is negative
        for _ in scale_steps..total_steps {
            r = r.scale(&lead);
        }
        let multiplier_negative = lead.is_negative() && total_steps % 2 == 1;
        if multiplier_negative {
            r = r.neg();
        }
        r
    }

    fn mul_x_pow(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.normalized();
        let mut b = other.normalized();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.signed_pseudo_rem(&b).normalized();
            a = b;
            b = r;
        }
        a.normalized()
    }

    /// Exact quotient, if `div` divides `self` over the rationals and the
    /// quotient has integer coefficients.
    pub fn exact_div(&self, div: &Self) -> Option<Self> {
        if div.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = div.degree().unwrap();
        let sd = self.degree().unwrap();
        if sd < dd {
            return None;
        }
        let lead = Rational::from_integer(div.leading());
        let mut rem: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let q = &rem[i + dd] / &lead;
            quot[i] = q.clone();
            if q.is_zero() {
                continue;
            }
            for (j, c) in div.coeffs.iter().enumerate() {
                let delta = &q * Rational::from_integer(c.clone());
                rem[i + j] -= delta;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut out = Vec::with_capacity(quot.len());
        for q in quot {
            if !q.denom().is_one() {
                return None;
            }
            out.push(q.numer().clone());
        }
        Some(Self::from_coeffs(out))
    }

    /// The squarefree part `p / gcd(p, p')`, normalized.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if self.degree() == Some(0) {
            return Self::constant(BigInt::one());
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.normalized();
        }
        self.normalized()
            .exact_div(&g)
            .expect("gcd divides the polynomial")
            .normalized()
    }

    /// Builds the signed remainder chain used by Sturm-style counting,
    /// starting from the pair `(f, g)`. Requires `deg(f) >= deg(g)` when both
    /// are nonzero; reduction by positive content preserves all signs.
    pub fn signed_remainder_chain(f: &Self, g: &Self) -> Vec<Self> {
        let mut chain = Vec::new();
        if f.is_zero() {
            return chain;
        }
        chain.push(f.content_reduced());
        if g.is_zero() {
            return chain;
        }
        assert!(f.degree() >= g.degree(), "chain inputs out of degree order");
        chain.push(g.content_reduced());
        while chain.last().unwrap().degree() > Some(0) {
            let n = chain.len();
            let r = chain[n - 2].signed_pseudo_rem(&chain[n - 1]);
            let next = r.neg().content_reduced();
            if next.is_zero() {
                break;
            }
            chain.push(next);
        }
        chain
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 => {
                    if a.is_one() {
                        write!(f, "x")?
                    } else {
                        write!(f, "{a}*x")?
                    }
                }
                _ => {
                    if a.is_one() {
                        write!(f, "x^{i}")?
                    } else {
                        write!(f, "{a}*x^{i}")?
                    }
                }
            }
        }
        Ok(())
    }
}
