//! Transition-point discovery and the certified parameter partition.
//!
//! The overlap count `m_n` can only change where two prefix-interval
//! endpoints coincide. Clearing denominators by the positive factor
//! `b^n (b-1)` turns each coincidence into an integer polynomial equation:
//! with `D = A_a - A_b` the lower/upper coincidence reads
//! `(b-1) D(b) - 1 = 0` and the lower/lower one `D(b) = 0`. Collecting all
//! real roots of these polynomials in a window therefore yields a superset
//! of the discontinuity locus, and between consecutive roots the endpoint
//! order, hence `m_n`, is constant.

use crate::expansions::{value_range_over_window, PrefixWord};
use crate::numeric::{
    rat_int, sturm_isolate, AlgebraicReal, IntPolynomial, Rational, RationalInterval,
};
use num_bigint::BigInt;
use rayon::prelude::*;
use std::cmp::Ordering;
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoincidenceKind {
    /// `(a)_L = (b)_U`
    LowerUpper,
    /// `(a)_L = (b)_L` (equivalently upper/upper, the tails cancel)
    LowerLower,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub a: PrefixWord,
    pub b: PrefixWord,
    pub kind: CoincidenceKind,
    pub poly: IntPolynomial,
}

#[derive(Debug, Clone)]
pub struct TransitionPoint {
    pub value: AlgebraicReal,
    pub generators: Vec<Generator>,
}

#[derive(Debug, Clone)]
pub struct TransitionSet {
    pub n: u32,
    pub window: RationalInterval,
    pub points: Vec<TransitionPoint>,
}

/// Emits the deduplicated coincidence polynomials for all word pairs, each
/// with one witnessing generator. Pairs whose window-wide value ranges
/// cannot meet are pruned before any polynomial is formed.
pub fn pair_difference_polys(n: u32, window: &RationalInterval, prune: bool) -> Vec<Generator> {
    let n = n as usize;
    let words: Vec<PrefixWord> = PrefixWord::all(n).collect();
    let ranges: Vec<RationalInterval> = words
        .iter()
        .map(|w| value_range_over_window(w, window).expect("window above 1"))
        .collect();
    let polys: Vec<IntPolynomial> = words.iter().map(|w| w.cleared_lower_poly()).collect();
    let x_minus_1 = IntPolynomial::from_i64(&[-1, 1]);

    let chunks: Vec<Vec<Generator>> = (0..words.len())
        .into_par_iter()
        .map(|i| {
            let mut local = Vec::new();
            for j in (i + 1)..words.len() {
                if prune && !ranges[i].intersects(&ranges[j]) {
                    continue;
                }
                let d = polys[i].sub(&polys[j]);
                let one = IntPolynomial::constant(BigInt::from(1));
                local.push(Generator {
                    a: words[i],
                    b: words[j],
                    kind: CoincidenceKind::LowerUpper,
                    poly: d.mul(&x_minus_1).sub(&one).normalized(),
                });
                local.push(Generator {
                    a: words[j],
                    b: words[i],
                    kind: CoincidenceKind::LowerUpper,
                    poly: d.neg().mul(&x_minus_1).sub(&one).normalized(),
                });
                local.push(Generator {
                    a: words[i],
                    b: words[j],
                    kind: CoincidenceKind::LowerLower,
                    poly: d.normalized(),
                });
            }
            local
        })
        .collect();

    let mut seen: HashSet<IntPolynomial> = HashSet::new();
    let mut out = Vec::new();
    for chunk in chunks {
        for g in chunk {
            if g.poly.degree().unwrap_or(0) == 0 {
                continue; // constant equations have no roots
            }
            if seen.insert(g.poly.clone()) {
                out.push(g);
            }
        }
    }
    out
}

/// All candidate transition points of `m_n` strictly inside the window,
/// merged across generators by exact equality and sorted ascending.
pub fn isolate_transitions(n: u32, window: &RationalInterval) -> TransitionSet {
    isolate_transitions_impl(n, window, true)
}

/// Pruning-free variant used to validate that pruning never changes the
/// result.
pub fn isolate_transitions_unpruned(n: u32, window: &RationalInterval) -> TransitionSet {
    isolate_transitions_impl(n, window, false)
}

fn isolate_transitions_impl(n: u32, window: &RationalInterval, prune: bool) -> TransitionSet {
    let generators = pair_difference_polys(n, window, prune);
    let found: Vec<(AlgebraicReal, Generator)> = generators
        .par_iter()
        .map(|g| {
            sturm_isolate(&g.poly, window)
                .into_iter()
                .map(|r| (r, g.clone()))
                .collect::<Vec<_>>()
        })
        .flatten()
        .collect();

    // merge identical points from different generators; pre-refined
    // enclosures keep most comparisons on the fast interval path
    let mut points: Vec<TransitionPoint> = Vec::new();
    let width = Rational::new(BigInt::from(1), BigInt::from(1) << 40);
    for (root, gen) in found {
        let root = root.refined_to_width(&width);
        match points.binary_search_by(|p| p.value.compare(&root)) {
            Ok(i) => points[i].generators.push(gen),
            Err(i) => points.insert(
                i,
                TransitionPoint {
                    value: root,
                    generators: vec![gen],
                },
            ),
        }
    }
    TransitionSet {
        n,
        window: window.clone(),
        points,
    }
}

/// One maximal region of constant endpoint order: either an open interval
/// with a deterministic rational sample in its interior, or a single
/// transition point.
#[derive(Debug, Clone)]
pub enum PartitionCell {
    Open {
        lo: AlgebraicReal,
        hi: AlgebraicReal,
        sample: Rational,
    },
    Point {
        value: AlgebraicReal,
    },
}

#[derive(Debug, Clone)]
pub struct Partition {
    pub cells: Vec<PartitionCell>,
}

/// Refines two ordered endpoints until their isolating intervals separate,
/// then samples the midpoint of the gap. Deterministic by construction.
pub fn interior_sample(
    lo: &AlgebraicReal,
    hi: &AlgebraicReal,
) -> (AlgebraicReal, AlgebraicReal, Rational) {
    debug_assert_eq!(lo.compare(hi), Ordering::Less);
    let mut a = lo.clone();
    let mut b = hi.clone();
    while a.hi() >= b.lo() {
        if a.width() >= b.width() {
            a = a.refined_once();
        } else {
            b = b.refined_once();
        }
    }
    let sample = (a.hi() + b.lo()) / rat_int(2);
    (a, b, sample)
}

/// Builds the alternating open/singleton covering of an interval from the
/// ascending interior points.
pub fn partition_with_edges(
    lo: &AlgebraicReal,
    hi: &AlgebraicReal,
    points: &[AlgebraicReal],
) -> Partition {
    let mut cells = Vec::with_capacity(2 * points.len() + 1);
    let mut cursor = lo.clone();
    for p in points {
        debug_assert_eq!(cursor.compare(p), Ordering::Less);
        let (a, b, sample) = interior_sample(&cursor, p);
        cells.push(PartitionCell::Open {
            lo: a,
            hi: b.clone(),
            sample,
        });
        cells.push(PartitionCell::Point { value: b });
        cursor = p.clone();
    }
    let (a, b, sample) = interior_sample(&cursor, hi);
    cells.push(PartitionCell::Open { lo: a, hi: b, sample });
    Partition { cells }
}

/// Partition of the transition set's rational window.
pub fn build_partition(set: &TransitionSet) -> Partition {
    let lo = AlgebraicReal::from_rational(set.window.lo.clone());
    let hi = AlgebraicReal::from_rational(set.window.hi.clone());
    let points: Vec<AlgebraicReal> = set.points.iter().map(|p| p.value.clone()).collect();
    partition_with_edges(&lo, &hi, &points)
}
