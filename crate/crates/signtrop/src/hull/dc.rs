//! Systems of difference constraints `x_j − x_i ≤ w` and `x_j − x_i < w`
//! kept in all-pairs closed form, with incremental insertion.
//!
//! Strict constraints are handled symbolically: a bound is a pair `(w, s)`
//! standing for `w − s·ε` with an infinitesimal ε > 0.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::rat;

/// Integer weights used by the constraint systems.
pub(crate) trait Weight:
    Clone + Ord + Debug + Send + Sync + Zero + Add<Output = Self> + Sub<Output = Self> + Neg<Output = Self>
{
    fn from_bigint(v: &BigInt) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl Weight for i128 {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        // Keep a wide margin so that path sums over a few dozen edges cannot overflow.
        v.to_i64().map(i128::from)
    }

    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Weight for BigInt {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }

    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// The bound `w − s·ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Bound<W> {
    pub w: W,
    pub s: u32,
}

impl<W: Weight> Bound<W> {
    pub fn new(w: W, strict: bool) -> Self {
        Bound { w, s: u32::from(strict) }
    }

    fn zero() -> Self {
        Bound { w: W::zero(), s: 0 }
    }

    fn plus(&self, other: &Bound<W>) -> Bound<W> {
        Bound { w: self.w.clone() + other.w.clone(), s: self.s + other.s }
    }

    fn is_negative(&self) -> bool {
        self.w < W::zero() || (self.w.is_zero() && self.s > 0)
    }
}

impl<W: Weight> Ord for Bound<W> {
    /// Smaller means tighter: compares `w − s·ε` for infinitesimal ε.
    fn cmp(&self, other: &Self) -> Ordering {
        self.w.cmp(&other.w).then(other.s.cmp(&self.s))
    }
}

impl<W: Weight> PartialOrd for Bound<W> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A consistent system over `n` variables with all implied bounds.
#[derive(Clone, Debug)]
pub(crate) struct Dc<W> {
    n: usize,
    /// `ub[i * n + j]`: tightest implied upper bound on `x_j − x_i`.
    ub: Vec<Option<Bound<W>>>,
}

impl<W: Weight> Dc<W> {
    pub fn new(n: usize) -> Self {
        let mut ub = vec![None; n * n];
        for i in 0..n {
            ub[i * n + i] = Some(Bound::zero());
        }
        Dc { n, ub }
    }

    /// Upper bound on `x_j − x_i`, if any.
    pub fn upper(&self, i: usize, j: usize) -> Option<&Bound<W>> {
        self.ub[i * self.n + j].as_ref()
    }

    /// Whether `x_j − x_i ≤ w` (strictly, if `strict`) already follows.
    pub fn implies(&self, i: usize, j: usize, w: &W, strict: bool) -> bool {
        let want = Bound::new(w.clone(), strict);
        self.upper(i, j).is_some_and(|b| *b <= want)
    }

    /// Whether `x_j − x_i = w` already follows.
    pub fn implies_eq(&self, i: usize, j: usize, w: &W) -> bool {
        self.implies(i, j, w, false) && self.implies(j, i, &-w.clone(), false)
    }

    /// Adds `x_j − x_i ≤ w` (or `< w`); returns `false` if the system becomes
    /// inconsistent, in which case `self` must be discarded.
    pub fn add(&mut self, i: usize, j: usize, w: W, strict: bool) -> bool {
        let b = Bound::new(w, strict);
        if self.upper(i, j).is_some_and(|cur| *cur <= b) {
            return true;
        }
        if let Some(back) = self.upper(j, i) {
            if back.plus(&b).is_negative() {
                return false;
            }
        }
        let n = self.n;
        let into_i: Vec<Option<Bound<W>>> = (0..n).map(|p| self.ub[p * n + i].clone()).collect();
        let from_j: Vec<Option<Bound<W>>> = (0..n).map(|q| self.ub[j * n + q].clone()).collect();
        for p in 0..n {
            let Some(pi) = &into_i[p] else { continue };
            let pij = pi.plus(&b);
            for q in 0..n {
                let Some(jq) = &from_j[q] else { continue };
                let cand = pij.plus(jq);
                let slot = &mut self.ub[p * n + q];
                if slot.as_ref().is_none_or(|cur| cand < *cur) {
                    *slot = Some(cand);
                }
            }
        }
        (0..n).all(|p| !self.ub[p * n + p].as_ref().is_some_and(Bound::is_negative))
    }

    /// Adds `x_j − x_i = w`.
    pub fn add_eq(&mut self, i: usize, j: usize, w: W) -> bool {
        self.add(i, j, w.clone(), false) && self.add(j, i, -w, false)
    }

    /// A feasible assignment relative to variable `origin` (which gets 0),
    /// as exact rationals after dividing by `scale`.
    pub fn solution(&self, origin: usize, scale: &BigInt) -> Vec<BigRational> {
        let n = self.n;
        // Shortest distances from a virtual source joined to every node by a
        // zero edge; these satisfy every constraint of the closed system.
        let dist: Vec<Bound<W>> = (0..n)
            .map(|j| {
                (0..n)
                    .filter_map(|i| self.ub[i * n + j].clone())
                    .min()
                    .expect("diagonal entries are present")
            })
            .collect();
        // ε must be small against the unit gap between distinct integer
        // weights; path sums carry at most 2n strict edges.
        let eps = rat::frac(1, 2 * n as i64 + 2);
        let value = |b: &Bound<W>| {
            BigRational::from_integer(b.w.to_bigint()) - eps.clone() * rat::int(i64::from(b.s))
        };
        let base = value(&dist[origin]);
        let scale = BigRational::from_integer(scale.clone());
        dist.iter().map(|b| (value(b) - base.clone()) / scale.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_negative_cycles() {
        let mut d: Dc<i128> = Dc::new(3);
        assert!(d.add(0, 1, 2, false));
        assert!(d.add(1, 2, 1, false));
        assert!(d.implies(0, 2, &3, false));
        let mut e = d.clone();
        assert!(!e.add(2, 0, -3, true));
        let mut f = d.clone();
        assert!(f.add(2, 0, -3, false));
        assert!(f.implies_eq(0, 2, &3));
    }

    #[test]
    fn solution_satisfies_strict_constraints() {
        let mut d: Dc<i128> = Dc::new(4);
        assert!(d.add(0, 1, 0, true));
        assert!(d.add(1, 2, 0, true));
        assert!(d.add(2, 3, 0, true));
        assert!(d.add(3, 0, 1, false));
        let x = d.solution(0, &BigInt::from(1));
        assert!(x[1] < x[0] && x[2] < x[1] && x[3] < x[2]);
        assert!(&x[0] - &x[3] <= rat::int(1));
    }

    #[test]
    fn bigint_weights_behave_like_machine_weights() {
        let mut d: Dc<BigInt> = Dc::new(2);
        assert!(d.add(0, 1, BigInt::from(5), true));
        assert!(!d.add(1, 0, BigInt::from(-5), false));
    }
}
