//! The TC-interval `whull(x, y)` as a finite description.
//!
//! The pairs `(λ, μ)` with `λ ⊕ μ = ⊕0` are parametrised by τ ∈ [−∞, +∞]:
//! `(⊕0, ⊕τ)` for τ ≤ 0 and `(⊕(−τ), ⊕0)` for τ ≥ 0, so τ = −∞ gives `x`
//! and τ = +∞ gives `y`.  Ties between `λ + |x_k|` and `μ + |y_k|` happen
//! only at τ = |x_k| − |y_k|.  At those critical values (and at 0, ±∞) the
//! region contributes a face complex; strictly between two of them every
//! coordinate is dominated by a single term, so `λ ⊙ x ⊕ μ ⊙ y` is a single
//! point moving along an arc.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{check_dim, Result};
use crate::rat;
use crate::sym::{Sign, SignedTrop};
use crate::vector::{faces_complex, FaceComplex, SignedVector};

/// `Faces(λ ⊙ x, μ ⊙ y)` at a critical pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub lambda: SignedTrop,
    pub mu: SignedTrop,
    pub complex: FaceComplex,
}

/// The points `λ ⊙ x ⊕ μ ⊙ y` for τ in the open interval `(lo, hi)`
/// (`None` is −∞ resp. +∞).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub lo: Option<BigRational>,
    pub hi: Option<BigRational>,
}

impl Arc {
    /// A parameter strictly inside the arc.
    pub fn interior(&self) -> BigRational {
        match (&self.lo, &self.hi) {
            (Some(a), Some(b)) => rat::midpoint(a, b),
            (Some(a), None) => a + BigRational::one(),
            (None, Some(b)) => b - BigRational::one(),
            (None, None) => BigRational::zero(),
        }
    }

    fn contains_param(&self, t: &BigRational) -> bool {
        self.lo.as_ref().is_none_or(|a| a < t) && self.hi.as_ref().is_none_or(|b| t < b)
    }
}

/// `whull(x, y)`: the union of the pieces and of the arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionDescription {
    x: SignedVector,
    y: SignedVector,
    pub pieces: Vec<Piece>,
    pub arcs: Vec<Arc>,
}

/// `(λ, μ)` for a finite parameter.
pub fn pair_at(t: &BigRational) -> (SignedTrop, SignedTrop) {
    if *t <= BigRational::zero() {
        (SignedTrop::one(), SignedTrop::pos(t.clone()))
    } else {
        (SignedTrop::pos(-t.clone()), SignedTrop::one())
    }
}

/// Describes the TC-interval between `x` and `y`.
pub fn tc_interval(x: &SignedVector, y: &SignedVector) -> Result<RegionDescription> {
    check_dim(x.dim(), y.dim())?;
    let mut crit: BTreeSet<BigRational> = BTreeSet::new();
    crit.insert(BigRational::zero());
    for (a, b) in x.iter().zip(y.iter()) {
        if let (Some(p), Some(q)) = (a.mag(), b.mag()) {
            crit.insert(p - q);
        }
    }
    let mut pairs = vec![(SignedTrop::one(), SignedTrop::zero())];
    pairs.extend(crit.iter().map(pair_at));
    pairs.push((SignedTrop::zero(), SignedTrop::one()));
    let mut pieces: Vec<Piece> = Vec::new();
    for (lambda, mu) in pairs {
        let pts: Vec<SignedVector> =
            [(x, &lambda), (y, &mu)].iter().filter(|(_, l)| !l.is_zero()).map(|(p, l)| p.scale(l)).collect();
        let complex = faces_complex(&pts)?;
        if !pieces.iter().any(|p| p.complex == complex) {
            pieces.push(Piece { lambda, mu, complex });
        }
    }
    let bounds: Vec<Option<BigRational>> =
        std::iter::once(None).chain(crit.into_iter().map(Some)).chain(std::iter::once(None)).collect();
    let arcs = bounds.windows(2).map(|w| Arc { lo: w[0].clone(), hi: w[1].clone() }).collect();
    Ok(RegionDescription { x: x.clone(), y: y.clone(), pieces, arcs })
}

impl RegionDescription {
    /// The point of an arc at parameter `t` (which must lie inside it).
    pub fn arc_point(&self, t: &BigRational) -> SignedVector {
        let (lambda, mu) = pair_at(t);
        self.x
            .iter()
            .zip(self.y.iter())
            .map(|(a, b)| {
                let s = a.mul(&lambda).add(&b.mul(&mu));
                s.to_signed().expect("no ties inside an arc")
            })
            .collect()
    }

    /// Whether `z` lies on the arc: solves for the parameter coordinatewise.
    pub fn arc_contains(&self, arc: &Arc, z: &SignedVector) -> bool {
        if z.dim() != self.x.dim() {
            return false;
        }
        let t0 = arc.interior();
        let below = t0 < BigRational::zero();
        let mut fixed: Option<BigRational> = None;
        for k in 0..self.x.dim() {
            let (a, b, zk) = (self.x.get(k), self.y.get(k), z.get(k));
            // Dominating term at t0: (sign, base magnitude, slope in τ).
            let xt = a.mag().map(|m| (a.sign(), m.clone(), if below { 0 } else { -1 }));
            let yt = b.mag().map(|m| (b.sign(), m.clone(), if below { 1 } else { 0 }));
            let at = |(_, m, s): &(Sign, BigRational, i64)| m + &t0 * BigRational::from_integer((*s).into());
            let term = match (xt, yt) {
                (None, None) => {
                    if zk.is_zero() {
                        continue;
                    }
                    return false;
                }
                (Some(p), None) | (None, Some(p)) => p,
                (Some(p), Some(q)) => {
                    if at(&p) > at(&q) {
                        p
                    } else {
                        q
                    }
                }
            };
            let (sign, base, slope) = term;
            let Some(m) = zk.mag() else { return false };
            if zk.sign() != sign {
                return false;
            }
            if slope == 0 {
                if *m != base {
                    return false;
                }
            } else {
                let t = (m - &base) * BigRational::from_integer(slope.into());
                if fixed.as_ref().is_some_and(|f| *f != t) {
                    return false;
                }
                fixed = Some(t);
            }
        }
        match fixed {
            Some(t) => arc.contains_param(&t),
            // Constant along the arc.
            None => true,
        }
    }

    /// Membership in the described region.
    pub fn contains(&self, z: &SignedVector) -> bool {
        self.pieces.iter().any(|p| p.complex.contains(z)) || self.arcs.iter().any(|a| self.arc_contains(a, z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> SignedVector {
        s.parse().unwrap()
    }

    #[test]
    fn balanced_piece_of_the_interval_example() {
        let r = tc_interval(&v("[+0, +0]"), &v("[--2, --2]")).unwrap();
        let piece = r.pieces.iter().find(|p| p.lambda == SignedTrop::pos_int(-2) && p.mu == SignedTrop::one()).unwrap();
        let expected: BTreeSet<SignedVector> = [v("[--2, --2]"), v("[+-2, +-2]")].into_iter().collect();
        assert_eq!(piece.complex.vertex_set, expected);
        for inside in ["[+0, +0]", "[--2, --2]", "[+-2, +-2]", "[+-1, +-1]", "[+-1/2, +-1/2]"] {
            assert!(r.contains(&v(inside)), "{inside}");
        }
        for outside in ["[o, o]", "[+-2, --2]", "[+-1, +-2]", "[--1, --1]"] {
            assert!(!r.contains(&v(outside)), "{outside}");
        }
    }

    #[test]
    fn vertical_segment() {
        let r = tc_interval(&v("[+1, +0]"), &v("[+3, +0]")).unwrap();
        for m in ["1", "3/2", "2", "3"] {
            assert!(r.contains(&v(&format!("[+{m}, +0]"))), "{m}");
        }
        assert!(!r.contains(&v("[+4, +0]")));
        assert!(!r.contains(&v("[+0, +0]")));
        assert!(!r.contains(&v("[+2, +1]")));
    }

    #[test]
    fn degenerate_interval_is_a_point() {
        let x = v("[-1, o, +2]");
        let r = tc_interval(&x, &x).unwrap();
        assert!(r.contains(&x));
        assert!(!r.contains(&v("[-1, o, +1]")));
        assert!(r.pieces.iter().all(|p| p.complex.vertex_set.len() == 1));
    }
}
