//! 0-1 prefix words and their value intervals.
//!
//! A word `a_1..a_n` pins an expansion value into
//! `[(a)_L, (a)_U] = [sum a_i b^-i, sum a_i b^-i + b^-n/(b-1)]`.
//! Both endpoint functions are non-increasing in `b`, which gives exact
//! range enclosures over a parameter window and powers the prefix-tree
//! pruning used by the transition search.

use crate::numeric::rational::rat_pow;
use crate::numeric::{rat_int, IntPolynomial, NumericError, Rational, RationalInterval};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

/// A 0-1 word of length 1..=64, bit-packed with `a_1` as the most
/// significant of the `len` low bits; lexicographic order over a fixed
/// length coincides with numeric order of `bits`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrefixWord {
    len: u8,
    bits: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExpansionError {
    #[error("word length must be between 1 and 64, got {0}")]
    BadLength(usize),
    #[error("digits must be 0 or 1")]
    BadDigit,
    #[error("beta must exceed 1")]
    BetaOutOfRange,
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

impl PrefixWord {
    pub fn new(len: usize, bits: u64) -> Result<Self, ExpansionError> {
        if len == 0 || len > 64 {
            return Err(ExpansionError::BadLength(len));
        }
        if len < 64 && bits >> len != 0 {
            return Err(ExpansionError::BadDigit);
        }
        Ok(Self {
            len: len as u8,
            bits,
        })
    }

    pub fn from_digits(digits: &[u8]) -> Result<Self, ExpansionError> {
        if digits.is_empty() || digits.len() > 64 {
            return Err(ExpansionError::BadLength(digits.len()));
        }
        let mut bits = 0u64;
        for &d in digits {
            if d > 1 {
                return Err(ExpansionError::BadDigit);
            }
            bits = (bits << 1) | d as u64;
        }
        Ok(Self {
            len: digits.len() as u8,
            bits,
        })
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Digit `a_i`, 1-indexed.
    pub fn digit(&self, i: usize) -> u8 {
        debug_assert!(1 <= i && i <= self.len());
        ((self.bits >> (self.len() - i)) & 1) as u8
    }

    /// All words of length `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = PrefixWord> {
        assert!(n >= 1 && n <= 63, "exhaustive enumeration needs n <= 63");
        (0..(1u64 << n)).map(move |bits| PrefixWord {
            len: n as u8,
            bits,
        })
    }

    /// The cleared-denominator lower bound `A(b) = b^n * (a)_L`, an integer
    /// polynomial of degree at most `n-1` with 0-1 coefficients.
    pub fn cleared_lower_poly(&self) -> IntPolynomial {
        let n = self.len();
        let mut coeffs = vec![BigInt::zero(); n];
        for i in 1..=n {
            if self.digit(i) == 1 {
                coeffs[n - i] = BigInt::one();
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for PrefixWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len() {
            write!(f, "{}", self.digit(i))?;
        }
        Ok(())
    }
}

/// A word with its symbolic lower-bound polynomial in `y = 1/b` (zero
/// constant term, 0-1 coefficients); the shared upper tail `b^-n/(b-1)`
/// stays symbolic and is materialized only at evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixInterval {
    pub word: PrefixWord,
    pub lower_poly: IntPolynomial,
}

impl PrefixInterval {
    pub fn new(word: PrefixWord) -> Self {
        let n = word.len();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for i in 1..=n {
            if word.digit(i) == 1 {
                coeffs[i] = BigInt::one();
            }
        }
        Self {
            word,
            lower_poly: IntPolynomial::from_coeffs(coeffs),
        }
    }
}

/// The shared interval width `b^-n / (b - 1)`.
pub fn tail_term(n: usize, beta: &Rational) -> Rational {
    let bn = rat_pow(beta, n as u32);
    (beta - rat_int(1)).recip() / bn
}

/// Exact `((a)_L, (a)_U)` at a rational `beta > 1`.
pub fn prefix_bounds_at(
    word: &PrefixWord,
    beta: &Rational,
) -> Result<(Rational, Rational), ExpansionError> {
    if beta <= &rat_int(1) {
        return Err(ExpansionError::BetaOutOfRange);
    }
    let inv = beta.recip();
    let mut lower = Rational::zero();
    for i in (1..=word.len()).rev() {
        lower = (lower + rat_int(word.digit(i) as i64)) * &inv;
    }
    let upper = &lower + tail_term(word.len(), beta);
    Ok((lower, upper))
}

/// Certified enclosures of the ranges of `(a)_L` and `(a)_U` over the
/// window; both bound functions are non-increasing in `beta`, so the ranges
/// are `[f(window.hi), f(window.lo)]`.
pub fn prefix_bounds_over_window(
    word: &PrefixWord,
    window: &RationalInterval,
) -> Result<(RationalInterval, RationalInterval), ExpansionError> {
    if window.lo <= rat_int(1) {
        return Err(ExpansionError::BetaOutOfRange);
    }
    let (l_at_hi, u_at_hi) = prefix_bounds_at(word, &window.hi)?;
    let (l_at_lo, u_at_lo) = prefix_bounds_at(word, &window.lo)?;
    Ok((
        RationalInterval::new(l_at_hi, l_at_lo)?,
        RationalInterval::new(u_at_hi, u_at_lo)?,
    ))
}

/// Enclosure of every value reachable with prefix `word` over all `beta` in
/// the window: `[L(window.hi), U(window.lo)]`.
pub fn value_range_over_window(
    word: &PrefixWord,
    window: &RationalInterval,
) -> Result<RationalInterval, ExpansionError> {
    let (l_at_hi, _) = prefix_bounds_at(word, &window.hi)?;
    let (_, u_at_lo) = prefix_bounds_at(word, &window.lo)?;
    Ok(RationalInterval::new(l_at_hi, u_at_lo)?)
}

/// Lexicographic stream of the length-`n` words whose window-wide value
/// range can intersect `value_filter` (all words when no filter); subtrees
/// failing the filter on best-case bounds are cut without expansion.
pub fn enumerate_prefixes(
    n: usize,
    window: &RationalInterval,
    value_filter: Option<&RationalInterval>,
) -> Result<PrefixEnumerator, ExpansionError> {
    if n == 0 || n > 64 {
        return Err(ExpansionError::BadLength(n));
    }
    if window.lo <= rat_int(1) {
        return Err(ExpansionError::BetaOutOfRange);
    }
    let inv_lo = window.lo.recip();
    let inv_hi = window.hi.recip();
    let mut pow_lo = Vec::with_capacity(n + 1);
    let mut pow_hi = Vec::with_capacity(n + 1);
    pow_lo.push(Rational::one());
    pow_hi.push(Rational::one());
    for i in 1..=n {
        pow_lo.push(&pow_lo[i - 1] * &inv_lo);
        pow_hi.push(&pow_hi[i - 1] * &inv_hi);
    }
    Ok(PrefixEnumerator {
        n,
        filter: value_filter.cloned(),
        pow_lo,
        pow_hi,
        tail_lo_beta: (&window.lo - rat_int(1)).recip(),
        stack: vec![Frame {
            depth: 0,
            bits: 0,
            l_at_lo: Rational::zero(),
            l_at_hi: Rational::zero(),
            next_digit: 0,
        }],
    })
}

struct Frame {
    depth: usize,
    bits: u64,
    l_at_lo: Rational,
    l_at_hi: Rational,
    next_digit: u8,
}

/// Depth-first enumerator with exact best-case pruning.
pub struct PrefixEnumerator {
    n: usize,
    filter: Option<RationalInterval>,
    pow_lo: Vec<Rational>,
    pow_hi: Vec<Rational>,
    /// `1/(window.lo - 1)`
    tail_lo_beta: Rational,
    stack: Vec<Frame>,
}

impl PrefixEnumerator {
    /// Best-case value range over all completions of a depth-`d` partial
    /// word: the all-zero completion at `window.hi` gives the minimum, and
    /// the all-one completion plus the tail telescopes to the full remaining
    /// tail at `window.lo` for the maximum.
    fn subtree_range(&self, depth: usize, l_at_lo: &Rational, l_at_hi: &Rational) -> RationalInterval {
        let max = l_at_lo + &self.pow_lo[depth] * &self.tail_lo_beta;
        RationalInterval {
            lo: l_at_hi.clone(),
            hi: max,
        }
    }
}

impl Iterator for PrefixEnumerator {
    type Item = PrefixWord;

    fn next(&mut self) -> Option<PrefixWord> {
        while let Some(top) = self.stack.last() {
            if top.depth == self.n {
                let word = PrefixWord {
                    len: self.n as u8,
                    bits: top.bits,
                };
                self.stack.pop();
                return Some(word);
            }
            if top.next_digit > 1 {
                self.stack.pop();
                continue;
            }
            let (depth, bits, digit, l_at_lo, l_at_hi) = {
                let top = self.stack.last_mut().unwrap();
                let d = top.next_digit;
                top.next_digit += 1;
                (
                    top.depth,
                    top.bits,
                    d,
                    top.l_at_lo.clone(),
                    top.l_at_hi.clone(),
                )
            };
            let (mut l_lo, mut l_hi) = (l_at_lo, l_at_hi);
            if digit == 1 {
                l_lo += &self.pow_lo[depth + 1];
                l_hi += &self.pow_hi[depth + 1];
            }
            let keep = match &self.filter {
                None => true,
                Some(f) => self.subtree_range(depth + 1, &l_lo, &l_hi).intersects(f),
            };
            if keep {
                self.stack.push(Frame {
                    depth: depth + 1,
                    bits: (bits << 1) | digit as u64,
                    l_at_lo: l_lo,
                    l_at_hi: l_hi,
                    next_digit: 0,
                });
            }
        }
        None
    }
}
