//! Finite grids and the local generation rules of TC-convex sets.
//!
//! On a grid whose magnitudes form an arithmetic progression `m_0 < m_1 <
//! …`, scaling by `⊕(−s·step)` moves magnitudes down by `s` levels, so every
//! rule can be checked on integer level codes.

use std::collections::{BTreeSet, HashSet};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::sym::{Sign, SignedTrop};
use crate::vector::SignedVector;

/// All vectors of dimension `dim` with entries in `{𝟘} ∪ {⊕m, ⊖m : m ∈ mags}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    mags: Vec<BigRational>,
    dim: usize,
}

/// Sign (−1, 0, 1) and magnitude level of one coordinate.
type Code = (i8, i64);

impl Grid {
    /// Magnitudes must be distinct and, once sorted, equally spaced.
    pub fn new(mut mags: Vec<BigRational>, dim: usize) -> Result<Self> {
        mags.sort();
        mags.dedup();
        if mags.is_empty() {
            return Err(Error::InvalidGrid("no magnitudes".to_string()));
        }
        if dim == 0 {
            return Err(Error::InvalidGrid("dimension 0".to_string()));
        }
        if let Some(w) = mags.windows(3).find(|w| &w[1] - &w[0] != &w[2] - &w[1]) {
            return Err(Error::InvalidGrid(format!(
                "magnitudes {}, {}, {} are not equally spaced, so the grid is not closed under the critical scalars",
                w[0], w[1], w[2]
            )));
        }
        Ok(Grid { mags, dim })
    }

    /// Integer magnitudes `lo..=hi`.
    pub fn integer(lo: i64, hi: i64, dim: usize) -> Result<Self> {
        Grid::new((lo..=hi).map(|m| BigRational::from_integer(m.into())).collect(), dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn magnitudes(&self) -> &[BigRational] {
        &self.mags
    }

    /// Distance between consecutive magnitudes (0 for a single magnitude).
    pub fn step(&self) -> BigRational {
        if self.mags.len() < 2 {
            BigRational::zero()
        } else {
            &self.mags[1] - &self.mags[0]
        }
    }

    /// The admissible coordinate values in ascending order.
    pub fn values(&self) -> Vec<SignedTrop> {
        let mut v: Vec<SignedTrop> = self.mags.iter().rev().map(|m| SignedTrop::neg(m.clone())).collect();
        v.push(SignedTrop::zero());
        v.extend(self.mags.iter().map(|m| SignedTrop::pos(m.clone())));
        v
    }

    /// All grid points, in lexicographic order of [`Grid::values`].
    pub fn points(&self) -> Vec<SignedVector> {
        let vals = self.values();
        let mut out = vec![Vec::<SignedTrop>::new()];
        for _ in 0..self.dim {
            out = out
                .into_iter()
                .flat_map(|p| {
                    vals.iter().map(move |x| {
                        let mut q = p.clone();
                        q.push(x.clone());
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(SignedVector::new).collect()
    }

    pub fn contains(&self, p: &SignedVector) -> bool {
        self.encode(p).is_some()
    }

    fn encode(&self, p: &SignedVector) -> Option<Vec<Code>> {
        if p.dim() != self.dim {
            return None;
        }
        p.iter()
            .map(|x| match x.mag() {
                None => Some((0, 0)),
                Some(m) => {
                    let level = self.mags.binary_search(m).ok()? as i64;
                    Some((if x.sign() == Sign::Pos { 1 } else { -1 }, level))
                }
            })
            .collect()
    }

    fn on_grid(&self, c: &[Code]) -> bool {
        let top = self.mags.len() as i64;
        c.iter().all(|&(s, l)| s == 0 || (0..top).contains(&l))
    }

    fn decode(&self, c: &[Code]) -> SignedVector {
        c.iter()
            .map(|&(s, l)| match s {
                0 => SignedTrop::zero(),
                1 => SignedTrop::pos(self.mags[l as usize].clone()),
                _ => SignedTrop::neg(self.mags[l as usize].clone()),
            })
            .collect()
    }
}

/// A missing point forced by one of the generation rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureViolation {
    /// `λ ⊙ x ◁ μ ⊙ y` lies on the grid but not in the set.
    LeftSum { x: SignedVector, y: SignedVector, lambda: SignedTrop, mu: SignedTrop, missing: SignedVector },
    /// `x` and `y` differ only by the sign of `coordinate` but `missing`
    /// (that coordinate set to 𝟘) is not in the set.
    Elimination { x: SignedVector, y: SignedVector, coordinate: usize, missing: SignedVector },
}

impl ClosureViolation {
    pub fn missing(&self) -> &SignedVector {
        match self {
            ClosureViolation::LeftSum { missing, .. } | ClosureViolation::Elimination { missing, .. } => missing,
        }
    }
}

/// The violations found, one per missing point and rule.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClosureReport {
    pub violations: Vec<ClosureViolation>,
}

impl ClosureReport {
    /// No violation: the set is TC-convex relative to the grid.
    pub fn is_closed(&self) -> bool {
        self.violations.is_empty()
    }

    /// The distinct missing points.
    pub fn missing(&self) -> BTreeSet<SignedVector> {
        self.violations.iter().map(|v| v.missing().clone()).collect()
    }
}

fn left_sum(a: &[Code], b: &[Code], shift_a: i64, shift_b: i64) -> Vec<Code> {
    a.iter()
        .zip(b)
        .map(|(&(sa, la), &(sb, lb))| {
            let (la, lb) = (la - shift_a, lb - shift_b);
            match (sa, sb) {
                (0, _) => (sb, lb),
                (_, 0) => (sa, la),
                _ if la >= lb => (sa, la),
                _ => (sb, lb),
            }
        })
        .map(|(s, l)| if s == 0 { (0, 0) } else { (s, l) })
        .collect()
}

/// Checks the two local generation rules on `set`, whose points must lie on
/// `grid`: weighted left sums `λ ⊙ x ◁ μ ⊙ y` with `λ ⊕ μ = ⊕0` and
/// magnitudes on the grid's step, and elimination of a coordinate on which two
/// points differ only in sign.
pub fn closure_check(set: &[SignedVector], grid: &Grid) -> Result<ClosureReport> {
    let mut codes: Vec<Vec<Code>> = Vec::with_capacity(set.len());
    for p in set {
        check_dim(grid.dim, p.dim())?;
        let c = grid.encode(p).ok_or_else(|| Error::InvalidGrid(format!("{p} is not a grid point")))?;
        codes.push(c);
    }
    let members: HashSet<Vec<Code>> = codes.iter().cloned().collect();
    let mut codes: Vec<Vec<Code>> = members.iter().cloned().collect();
    codes.sort();
    let step = grid.step();
    let shifts = grid.mags.len() as i64;
    let mut report = ClosureReport::default();
    let mut reported: HashSet<(u8, Vec<Code>)> = HashSet::new();
    let scalar = |s: i64| SignedTrop::pos(-(step.clone() * BigRational::from_integer(s.into())));
    for a in &codes {
        for b in &codes {
            for s in 0..shifts {
                for (sa, sb) in [(0, s), (s, 0)] {
                    let z = left_sum(a, b, sa, sb);
                    if grid.on_grid(&z) && !members.contains(&z) && reported.insert((0, z.clone())) {
                        report.violations.push(ClosureViolation::LeftSum {
                            x: grid.decode(a),
                            y: grid.decode(b),
                            lambda: scalar(sa),
                            mu: scalar(sb),
                            missing: grid.decode(&z),
                        });
                    }
                }
            }
        }
        for k in 0..a.len() {
            if a[k].0 == 0 {
                continue;
            }
            let mut flipped = a.clone();
            flipped[k].0 = -flipped[k].0;
            if !members.contains(&flipped) {
                continue;
            }
            let mut z = a.clone();
            z[k] = (0, 0);
            if !members.contains(&z) && reported.insert((1, z.clone())) {
                report.violations.push(ClosureViolation::Elimination {
                    x: grid.decode(a),
                    y: grid.decode(&flipped),
                    coordinate: k,
                    missing: grid.decode(&z),
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfspace::{Halfspace, HalfspaceKind};
    use crate::rat;

    fn v(s: &str) -> SignedVector {
        s.parse().unwrap()
    }

    #[test]
    fn grid_enumeration() {
        let g = Grid::integer(0, 1, 2).unwrap();
        assert_eq!(g.values().len(), 5);
        assert_eq!(g.points().len(), 25);
        assert!(g.contains(&v("[-1, o]")));
        assert!(!g.contains(&v("[-2, o]")));
        assert!(Grid::new(vec![rat::int(0), rat::int(1), rat::int(3)], 2).is_err());
    }

    #[test]
    fn closed_halfspace_is_closed() {
        let g = Grid::integer(-1, 1, 2).unwrap();
        let h: Halfspace = "closed [+0, -1, +0]".parse().unwrap();
        let s: Vec<SignedVector> = g.points().into_iter().filter(|p| h.member(p).unwrap()).collect();
        assert!(closure_check(&s, &g).unwrap().is_closed());
        assert_eq!(h.kind(), HalfspaceKind::Closed);
    }

    #[test]
    fn antipodal_pair_on_the_sign_grid_is_closed() {
        let g = Grid::integer(0, 0, 2).unwrap();
        let s = vec![v("[+0, +0]"), v("[-0, -0]")];
        assert!(closure_check(&s, &g).unwrap().is_closed());
    }

    #[test]
    fn elimination_fires() {
        let g = Grid::integer(0, 5, 2).unwrap();
        let s = vec![v("[+0, +5]"), v("[-0, +5]")];
        let r = closure_check(&s, &g).unwrap();
        assert!(r.missing().contains(&v("[o, +5]")));
    }

    #[test]
    fn left_sum_rule_fires() {
        let g = Grid::integer(0, 2, 1).unwrap();
        let s = vec![v("[+0]"), v("[+2]")];
        assert_eq!(closure_check(&s, &g).unwrap().missing(), [v("[+1]")].into_iter().collect());
    }
}
