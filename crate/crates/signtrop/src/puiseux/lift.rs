//! Vectors over the Puiseux field, lifts of signed tropical vectors, convex
//! and conic membership, and lifted witnesses for TC-hull membership.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use super::lp::{lp_feasible, lp_solve, FeasibilityProblem, LpOutcome};
use super::num::PuiseuxNum;
use crate::error::{check_dim, Error, Result};
use crate::halfspace::{hs_type, Halfspace};
use crate::hull::{self, CandidateSpace, PointSet};
use crate::par::{self, Exec};
use crate::rat;
use crate::sym::{Sign, SignedTrop};
use crate::vector::SignedVector;

/// A vector of Puiseux numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PuiseuxVector(Vec<PuiseuxNum>);

impl PuiseuxVector {
    pub fn new(entries: Vec<PuiseuxNum>) -> Self {
        PuiseuxVector(entries)
    }

    pub fn zeros(d: usize) -> Self {
        PuiseuxVector(vec![PuiseuxNum::zero(); d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[PuiseuxNum] {
        &self.0
    }

    pub fn get(&self, k: usize) -> &PuiseuxNum {
        &self.0[k]
    }

    /// Coordinate-wise signed valuation.
    pub fn sval(&self) -> SignedVector {
        self.0.iter().map(PuiseuxNum::sval).collect()
    }

    /// Coordinate-wise signs ⊕, ⊖ or 𝟘.
    pub fn tsgn(&self) -> Vec<Sign> {
        self.0.iter().map(|v| v.sval().sign()).collect()
    }

    pub fn add(&self, other: &PuiseuxVector) -> Result<PuiseuxVector> {
        check_dim(self.dim(), other.dim())?;
        Ok(PuiseuxVector(self.0.iter().zip(&other.0).map(|(a, b)| a.add(b)).collect()))
    }

    pub fn scale(&self, c: &PuiseuxNum) -> PuiseuxVector {
        PuiseuxVector(self.0.iter().map(|a| a.mul(c)).collect())
    }

    pub fn dot(&self, other: &PuiseuxVector) -> Result<PuiseuxNum> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.0.iter().zip(&other.0).fold(PuiseuxNum::zero(), |acc, (a, b)| acc.add(&a.mul(b))))
    }
}

impl FromIterator<PuiseuxNum> for PuiseuxVector {
    fn from_iter<I: IntoIterator<Item = PuiseuxNum>>(iter: I) -> Self {
        PuiseuxVector(iter.into_iter().collect())
    }
}

impl fmt::Display for PuiseuxVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for PuiseuxVector {
    type Err = Error;

    /// `[e_1, …, e_d]` with Puiseux entries.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [..] around {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(PuiseuxVector(Vec::new()));
        }
        inner.split(',').map(str::parse).collect::<Result<Vec<_>>>().map(PuiseuxVector)
    }
}

/// `σ t^{|x|}` with σ the sign of `x` (0 for 𝟘), times `factor`.
fn lift_entry(x: &SignedTrop, factor: i64) -> PuiseuxNum {
    match x.mag() {
        None => PuiseuxNum::zero(),
        Some(m) => {
            let c = if x.is_positive() { factor } else { -factor };
            PuiseuxNum::monomial(rat::int(c), m.clone())
        }
    }
}

/// The canonical lift `σ_i t^{|x_i|}`.
pub fn lift_canonical(x: &SignedVector) -> PuiseuxVector {
    x.iter().map(|e| lift_entry(e, 1)).collect()
}

/// Lift of `entries` (indexed from `first`) of type `subset` with constant
/// `c`: coefficient `c` on positive entries in the subset, `−c` on negative
/// entries outside it and `±1` elsewhere.
fn lift_indexed(entries: &SignedVector, first: usize, subset: &BTreeSet<usize>, c: i64) -> PuiseuxVector {
    entries
        .iter()
        .enumerate()
        .map(|(pos, e)| {
            let inside = subset.contains(&(pos + first));
            let big = (e.is_positive() && inside) || (e.is_negative() && !inside);
            lift_entry(e, if big { c } else { 1 })
        })
        .collect()
}

/// The lift of type J (1-based coordinates) with constant `d + 1`.
pub fn lift_typed(x: &SignedVector, j: &BTreeSet<usize>) -> PuiseuxVector {
    lift_indexed(x, 1, j, x.dim() as i64 + 1)
}

/// The lift of coefficients `(a_0, …, a_d)` of type `K = [d]_0 \ J` with
/// constant `d + 1`, pairing with [`lift_typed`] of type J.
pub fn lift_coefficients(a: &SignedVector, j: &BTreeSet<usize>) -> PuiseuxVector {
    let d = a.dim().saturating_sub(1);
    let k: BTreeSet<usize> = (0..=d).filter(|i| !j.contains(i)).collect();
    lift_indexed(a, 0, &k, d as i64 + 1)
}

/// Whether `a_0 + a_1 x_1 + … + a_d x_d ≥ 0`.
pub fn closed_halfspace_contains(a: &PuiseuxVector, x: &PuiseuxVector) -> Result<bool> {
    check_dim(x.dim() + 1, a.dim())?;
    let value = x.0.iter().zip(&a.0[1..]).fold(a.0[0].clone(), |acc, (xi, ai)| acc.add(&ai.mul(xi)));
    Ok(!value.is_negative())
}

fn combination_problem(points: &[PuiseuxVector], q: &PuiseuxVector, convex: bool) -> Result<FeasibilityProblem<PuiseuxNum>> {
    let first = points.first().ok_or(Error::EmptyPointSet)?;
    for p in points {
        check_dim(first.dim(), p.dim())?;
    }
    check_dim(first.dim(), q.dim())?;
    let mut lp = FeasibilityProblem::new(vec![true; points.len()]);
    if convex {
        lp.add_row(vec![PuiseuxNum::one(); points.len()], PuiseuxNum::one())?;
    }
    for k in 0..q.dim() {
        lp.add_row(points.iter().map(|p| p.0[k].clone()).collect(), q.0[k].clone())?;
    }
    Ok(lp)
}

/// Convex weights `λ ≥ 0`, `Σλ = 1`, with `Σ λ_i p_i = q`, if any.
pub fn conv_weights(points: &[PuiseuxVector], q: &PuiseuxVector) -> Result<Option<Vec<PuiseuxNum>>> {
    lp_feasible(&combination_problem(points, q, true)?)
}

pub fn conv_member(points: &[PuiseuxVector], q: &PuiseuxVector) -> Result<bool> {
    Ok(conv_weights(points, q)?.is_some())
}

/// Conic weights `λ ≥ 0` with `Σ λ_i p_i = q`, if any.
pub fn cone_weights(points: &[PuiseuxVector], q: &PuiseuxVector) -> Result<Option<Vec<PuiseuxNum>>> {
    lp_feasible(&combination_problem(points, q, false)?)
}

pub fn cone_member(points: &[PuiseuxVector], q: &PuiseuxVector) -> Result<bool> {
    Ok(cone_weights(points, q)?.is_some())
}

/// Bounds on the leading coefficients of a lifted witness.
fn coefficient_bounds() -> (BigRational, BigRational) {
    (rat::frac(1, 1000), rat::int(1000))
}

/// The system for a point `z ∈ conv(li_J(x_i))` with `sval(z) = y`:
/// variables are the weights `w`, then for every nonzero `y_k` a shifted
/// factor `β'_k ≥ 0` and its upper slack, with
/// `z_k = σ_k t^{|y_k|} (lo + β'_k)` and `β'_k ≤ hi − lo`.
fn witness_problem(lifted: &[PuiseuxVector], y: &SignedVector) -> Result<FeasibilityProblem<PuiseuxNum>> {
    let n = lifted.len();
    let (lo, hi) = coefficient_bounds();
    let signed: Vec<usize> = (0..y.dim()).filter(|&k| !y.get(k).is_zero()).collect();
    let vars = n + 2 * signed.len();
    let mut lp = FeasibilityProblem::new(vec![true; vars]);
    let mut row = vec![PuiseuxNum::zero(); vars];
    row[..n].fill(PuiseuxNum::one());
    lp.add_row(row, PuiseuxNum::one())?;
    for k in 0..y.dim() {
        let mut row = vec![PuiseuxNum::zero(); vars];
        for (i, p) in lifted.iter().enumerate() {
            row[i] = p.0[k].clone();
        }
        let target = lift_entry(y.get(k), 1);
        let rhs = if let Some(pos) = signed.iter().position(|&s| s == k) {
            row[n + 2 * pos] = target.neg();
            target.mul(&PuiseuxNum::constant(lo.clone()))
        } else {
            PuiseuxNum::zero()
        };
        lp.add_row(row, rhs)?;
    }
    for pos in 0..signed.len() {
        let mut row = vec![PuiseuxNum::zero(); vars];
        row[n + 2 * pos] = PuiseuxNum::one();
        row[n + 2 * pos + 1] = PuiseuxNum::one();
        lp.add_row(row, PuiseuxNum::constant(&hi - &lo))?;
    }
    Ok(lp)
}

fn combine(lifted: &[PuiseuxVector], w: &[PuiseuxNum]) -> PuiseuxVector {
    let d = lifted[0].dim();
    (0..d)
        .map(|k| lifted.iter().zip(w).fold(PuiseuxNum::zero(), |acc, (p, wi)| acc.add(&p.0[k].mul(wi))))
        .collect()
}

/// A point of `conv(li_J(x_1), …, li_J(x_n))` whose signed valuation is `y`,
/// found by an exact LP over the field with leading coefficients of the
/// coordinates restricted to `[1/1000, 1000]`.  `None` is a proof that no
/// such point with coefficients in that range exists.
pub fn lift_witness(x: &PointSet, j: &BTreeSet<usize>, y: &SignedVector) -> Result<Option<PuiseuxVector>> {
    check_dim(x.dim(), y.dim())?;
    if let Some(&bad) = j.iter().find(|&&k| k == 0 || k > x.dim()) {
        return Err(Error::InvalidInput(format!("type index {bad} is outside 1..={}", x.dim())));
    }
    let lifted: Vec<PuiseuxVector> = x.points().iter().map(|p| lift_typed(p, j)).collect();
    let lp = witness_problem(&lifted, y)?;
    let Some(sol) = lp_feasible(&lp)? else {
        return Ok(None);
    };
    let z = combine(&lifted, &sol[..lifted.len()]);
    if z.sval() != *y {
        return Err(Error::Inconsistent(format!("lifted witness {z} has signed valuation {}, not {y}", z.sval())));
    }
    Ok(Some(z))
}

/// All subsets of `{1, …, d}`.
pub fn all_types(d: usize) -> Vec<BTreeSet<usize>> {
    (0u32..(1u32 << d)).map(|mask| (1..=d).filter(|&k| mask & (1 << (k - 1)) != 0).collect()).collect()
}

/// [`lift_witness`] for every type J, in order of [`all_types`].
pub fn lift_witness_all_types(x: &PointSet, y: &SignedVector, exec: Exec) -> Result<Vec<(BTreeSet<usize>, Option<PuiseuxVector>)>> {
    let types = all_types(x.dim());
    par::map(&types, exec, |j| lift_witness(x, j, y).map(|w| (j.clone(), w))).into_iter().collect()
}

/// Evidence that `y ∉ whull(X)` on both sides of the signed valuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateChain {
    /// Closed tropical halfspace containing X but not y.
    pub halfspace: Halfspace,
    /// Its type J.
    pub j: BTreeSet<usize>,
    /// The lifted coefficients of type `[d]_0 \ J`.
    pub lifted: PuiseuxVector,
    /// Farkas certificate that no point of `conv(li_J(X))` has valuation y.
    pub farkas: Vec<PuiseuxNum>,
}

/// For `y ∉ whull(X)`: finds a separating halfspace of type J, checks that
/// every `li_J(x_i)` lies in the lifted closed halfspace, and checks that the
/// lifted witness system for J is infeasible.  Returns `None` when `y` is a
/// member.  Any broken link is reported as [`Error::Inconsistent`].
pub fn certificate_chain(x: &PointSet, y: &SignedVector) -> Result<Option<CertificateChain>> {
    let Some(halfspace) = hull::separate(x, y, &CandidateSpace::Exact)? else {
        return Ok(None);
    };
    let a = halfspace.coeffs().clone();
    let j = hs_type(&a);
    let lifted = lift_coefficients(&a, &j);
    for p in x.points() {
        if !closed_halfspace_contains(&lifted, &lift_typed(p, &j))? {
            return Err(Error::Inconsistent(format!("lift of {p} of type {j:?} leaves the lifted halfspace {lifted}")));
        }
    }
    let points: Vec<PuiseuxVector> = x.points().iter().map(|p| lift_typed(p, &j)).collect();
    let farkas = match lp_solve(&witness_problem(&points, y)?)? {
        LpOutcome::Infeasible(cert) => cert,
        LpOutcome::Feasible(_) => {
            return Err(Error::Inconsistent(format!("{y} is separated from X but has a lifted witness of type {j:?}")));
        }
    };
    Ok(Some(CertificateChain { halfspace, j, lifted, farkas }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> SignedVector {
        s.parse().unwrap()
    }

    fn pv(s: &str) -> PuiseuxVector {
        s.parse().unwrap()
    }

    fn set(items: &[usize]) -> BTreeSet<usize> {
        items.iter().copied().collect()
    }

    #[test]
    fn signed_valuations_of_vectors() {
        assert_eq!(pv("[t^2, t^-1, -t^3, 1]").sval(), v("[+2, +-1, -3, +0]"));
        assert_eq!(pv("[-t^-1, -t, 0, t^-2]").sval(), v("[--1, -1, o, +-2]"));
    }

    #[test]
    fn lifts() {
        assert_eq!(lift_canonical(&v("[-3]")), pv("[-t^3]"));
        assert_eq!(lift_canonical(&v("[o]")), pv("[0]"));
        assert_eq!(lift_canonical(&v("[+2, -0]")), pv("[t^2, -1]"));
        // Coordinate 2 is negative and outside J, so it also gets the constant.
        assert_eq!(lift_typed(&v("[+2, -0]"), &set(&[1])), pv("[3*t^2, -3]"));
        assert_eq!(lift_typed(&v("[+2, -0]"), &set(&[1, 2])), pv("[3*t^2, -1]"));
        let nonneg = v("[+2, o, +-1]");
        assert_eq!(lift_typed(&nonneg, &set(&[])), lift_canonical(&nonneg));
        let nonpos = v("[-2, o, --1]");
        assert_eq!(lift_typed(&nonpos, &set(&[1, 2, 3])), lift_canonical(&nonpos));
        for j in all_types(3) {
            let x = v("[+1, -2, o]");
            assert_eq!(lift_typed(&x, &j).sval(), x);
        }
    }

    #[test]
    fn cone_combination_signs() {
        let rows = vec![pv("[-t^-1, -t, 0, t^-2]"), pv("[t^2, t^-1, -t^3, 1]")];
        let q = rows[0].add(&rows[1].scale(&"t^-5".parse().unwrap())).unwrap();
        assert!(cone_member(&rows, &q).unwrap());
        assert_eq!(q.tsgn(), vec![Sign::Neg, Sign::Neg, Sign::Neg, Sign::Pos]);
        assert!(conv_member(&rows, &rows[1]).unwrap());
        let above = pv("[t^3, t^3, t^4, t]");
        assert!(!conv_member(&rows, &above).unwrap());
    }

    #[test]
    fn conv_membership_of_a_scaled_point() {
        let pts = vec![pv("[0, 0]"), pv("[1, 1]")];
        let w = conv_weights(&pts, &pv("[t^-1, t^-1]")).unwrap().unwrap();
        assert_eq!(w[1], "t^-1".parse().unwrap());
    }

    #[test]
    fn witnesses_for_members() {
        let x: PointSet = "[-1, +5]\n[+2, +5]".parse().unwrap();
        let y = v("[+0, +5]");
        for (j, w) in lift_witness_all_types(&x, &y, Exec::Sequential).unwrap() {
            let w = w.unwrap_or_else(|| panic!("no witness for type {j:?}"));
            assert_eq!(w.sval(), y);
        }
        let first = lift_witness(&x, &set(&[2]), &x.points()[0]).unwrap();
        assert_eq!(first.unwrap().sval(), x.points()[0]);
    }

    #[test]
    fn chain_for_a_non_member() {
        let x: PointSet = "[+0, +0]\n[--2, --2]".parse().unwrap();
        let y = v("[+-2, --2]");
        let chain = certificate_chain(&x, &y).unwrap().expect("y is not in the hull");
        assert!(!chain.halfspace.member(&y).unwrap());
        assert!(lift_witness(&x, &chain.j, &y).unwrap().is_none());
        assert!(certificate_chain(&x, &x.points()[1]).unwrap().is_none());
    }

}
