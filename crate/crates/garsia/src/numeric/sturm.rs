//! Sturm sequences: exact root counting, the Cauchy index, and certified
//! isolation of real roots in a rational window.

use super::algebraic::AlgebraicReal;
use super::poly::IntPolynomial;
use super::rational::{rat_int, Rational, RationalInterval};
use num_traits::Zero;

/// Signed remainder chain of a squarefree polynomial and its derivative.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut count = 0;
    let mut last = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_at_pos_inf(p: &IntPolynomial) -> i32 {
    use num_traits::Signed;
    let l = p.leading();
    if l.is_zero() {
        0
    } else if l.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_at_neg_inf(p: &IntPolynomial) -> i32 {
    match p.degree() {
        None => 0,
        Some(d) => {
            let s = sign_at_pos_inf(p);
            if d % 2 == 0 {
                s
            } else {
                -s
            }
        }
    }
}

impl SturmChain {
    /// Chain for root counting of `p`, which must be squarefree.
    pub fn new(p: &IntPolynomial) -> Self {
        Self {
            chain: IntPolynomial::signed_remainder_chain(p, &p.derivative()),
        }
    }

    /// Generalized chain for the Cauchy index of `g/f`.
    pub fn new_pair(f: &IntPolynomial, g: &IntPolynomial) -> Self {
        Self {
            chain: IntPolynomial::signed_remainder_chain(f, g),
        }
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        variations(self.chain.iter().map(|p| p.sign_at_rational(x)))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        variations(self.chain.iter().map(sign_at_neg_inf))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        variations(self.chain.iter().map(sign_at_pos_inf))
    }

    /// Number of distinct roots of the (squarefree) polynomial in `(a, b]`.
    pub fn count_roots_halfopen(&self, a: &Rational, b: &Rational) -> usize {
        debug_assert!(a <= b);
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct real roots on the whole line.
    pub fn count_real_roots(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }

    /// Cauchy index of `g/f` over the real line for a chain built with
    /// `new_pair(f, g)`.
    pub fn cauchy_index(&self) -> isize {
        self.variations_at_neg_inf() as isize - self.variations_at_pos_inf() as isize
    }
}

/// Number of distinct roots of squarefree `p` in the closed interval
/// `[a, b]`.
pub fn count_roots_closed(p: &IntPolynomial, a: &Rational, b: &Rational) -> usize {
    if a > b {
        return 0;
    }
    let chain = SturmChain::new(p);
    let mut n = chain.count_roots_halfopen(a, b);
    if p.sign_at_rational(a) == 0 {
        n += 1;
    }
    n
}

/// Isolates all distinct real roots of `p` strictly inside the open window.
///
/// The polynomial is replaced by its squarefree part first, so repeated
/// factors are harmless. Roots are returned in ascending order with pairwise
/// disjoint isolating intervals contained in the window.
pub fn sturm_isolate(p: &IntPolynomial, window: &RationalInterval) -> Vec<AlgebraicReal> {
    assert!(!p.is_zero(), "cannot isolate roots of the zero polynomial");
    assert!(window.lo < window.hi, "empty isolation window");
    let sqf = p.squarefree_part();
    if sqf.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = SturmChain::new(&sqf);
    let mut out = Vec::new();
    subdivide(
        &sqf,
        &chain,
        &window.lo,
        &window.hi,
        chain.variations_at(&window.lo),
        chain.variations_at(&window.hi),
        &mut out,
    );
    // roots exactly at the right window edge were counted by the half-open
    // convention; drop them to honor the strict interior contract
    out.retain(|r| !(r.is_rational() && r.lo() == &window.hi));
    separate_neighbors(&mut out);
    out
}

fn subdivide(
    p: &IntPolynomial,
    chain: &SturmChain,
    a: &Rational,
    b: &Rational,
    va: usize,
    vb: usize,
    out: &mut Vec<AlgebraicReal>,
) {
    let count = va - vb;
    if count == 0 {
        return;
    }
    if count == 1 {
        if p.sign_at_rational(b) == 0 {
            out.push(AlgebraicReal::rational_root_of(p, b.clone()));
        } else {
            out.push(AlgebraicReal::from_isolating_unchecked(
                p.clone(),
                a.clone(),
                b.clone(),
            ));
        }
        return;
    }
    let mid = (a + b) / rat_int(2);
    let vm = chain.variations_at(&mid);
    subdivide(p, chain, a, &mid, va, vm, out);
    subdivide(p, chain, &mid, b, vm, vb, out);
}

/// Refines neighbors until their closed isolating intervals are disjoint.
fn separate_neighbors(roots: &mut [AlgebraicReal]) {
    for i in 1..roots.len() {
        let (left, right) = roots.split_at_mut(i);
        let l = &mut left[i - 1];
        let r = &mut right[0];
        while l.hi() >= r.lo() {
            if l.width() >= r.width() {
                *l = l.refined_once();
            } else {
                *r = r.refined_once();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::rat;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    fn window(lo: (i64, i64), hi: (i64, i64)) -> RationalInterval {
        RationalInterval::new(rat(lo.0, lo.1), rat(hi.0, hi.1)).unwrap()
    }

    #[test]
    fn golden_ratio_in_unit_window() {
        // sign change between 1.6 and 1.7 pins the root of x^2 - x - 1
        let f = p(&[-1, -1, 1]);
        assert_eq!(f.sign_at_rational(&rat(16, 10)), -1);
        assert_eq!(f.sign_at_rational(&rat(17, 10)), 1);
        let roots = sturm_isolate(&f, &window((1, 1), (2, 1)));
        assert_eq!(roots.len(), 1);
        assert!(roots[0].lo() >= &rat(1, 1) && roots[0].hi() <= &rat(2, 1));
        let refined = roots[0].refined_to_width(&rat(1, 100));
        assert!(refined.lo() <= &rat(1619, 1000) && refined.hi() >= &rat(1618, 1000));
    }

    #[test]
    fn no_roots_in_window() {
        let f = p(&[-3, 1]); // root 3, outside
        assert!(sturm_isolate(&f, &window((1526, 1000), (2, 1))).is_empty());
    }

    #[test]
    fn product_yields_sorted_roots() {
        // brute sign scan on a coarse grid agrees: exactly two roots in (1,2)
        let f = p(&[-1, -1, 1]).mul(&p(&[-2, 0, 1]));
        let roots = sturm_isolate(&f, &window((1, 1), (2, 1)));
        assert_eq!(roots.len(), 2);
        let a = roots[0].refined_to_width(&rat(1, 10000));
        let b = roots[1].refined_to_width(&rat(1, 10000));
        assert!(a.hi() < b.lo());
        assert!(a.lo() <= &rat(14143, 10000) && a.hi() >= &rat(14142, 10000));
        assert!(b.lo() <= &rat(16181, 10000) && b.hi() >= &rat(16180, 10000));
        let mut grid_count = 0;
        let mut prev = f.sign_at_rational(&rat(10000, 10000));
        for k in 10001..=20000i64 {
            let s = f.sign_at_rational(&rat(k, 10000));
            if s != 0 && prev != 0 && s != prev {
                grid_count += 1;
            }
            if s != 0 {
                prev = s;
            }
        }
        assert_eq!(grid_count, 2);
    }

    #[test]
    fn rational_roots_detected_exactly() {
        // (2x - 3)(x^2 - 2): rational root 3/2 plus sqrt(2)
        let f = p(&[-3, 2]).mul(&p(&[-2, 0, 1]));
        let roots = sturm_isolate(&f, &window((1, 1), (2, 1)));
        assert_eq!(roots.len(), 2);
        assert!(!roots[0].is_rational());
        assert!(roots[1].is_rational());
        assert_eq!(roots[1].lo(), &rat(3, 2));
    }

    #[test]
    fn right_edge_root_excluded() {
        let f = p(&[-2, 1]); // root exactly 2
        assert!(sturm_isolate(&f, &window((1, 1), (2, 1))).is_empty());
        let g = p(&[-1, 1]); // root exactly 1 = left edge, also excluded
        assert!(sturm_isolate(&g, &window((1, 1), (2, 1))).is_empty());
    }

    #[test]
    fn repeated_factors_are_reduced() {
        let f = p(&[-1, -1, 1]);
        let sq = f.mul(&f);
        let roots = sturm_isolate(&sq, &window((1, 1), (2, 1)));
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].defining(), &f);
    }

    #[test]
    fn counts_are_stable_under_refinement() {
        let f = p(&[-1, -1, 1]).mul(&p(&[-2, 0, 1])).mul(&p(&[-5, 0, 1]));
        let roots = sturm_isolate(&f, &window((1, 1), (3, 1)));
        assert_eq!(roots.len(), 3);
        for r in &roots {
            let tight = r.refined_to_width(&rat(1, 1 << 20));
            let again = sturm_isolate(
                r.defining(),
                &RationalInterval::new(tight.lo().clone(), tight.hi().clone()).unwrap(),
            );
            // re-isolating inside a refined enclosure finds the same root only
            let strictly_inside = again.len();
            assert!(strictly_inside <= 1);
        }
    }
}
