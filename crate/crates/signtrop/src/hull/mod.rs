//! TO- and TC-convex hulls, cones and spans of finite point sets.
//!
//! Membership in a TC-hull (or TC-cone) is decided exactly and certified in
//! both directions:
//!
//! * a **member** comes with a scalar profile λ such that `y ∈ Faces(λ ⊙ S)`
//!   for a support `S` of minimal size, re-checked by the face-domination
//!   criterion;
//! * a **non-member** comes with a closed halfspace containing every
//!   generator but not `y`, re-checked by direct evaluation.
//!
//! The profile search enumerates the combinatorial types of λ as systems of
//! difference constraints (see [`types`]); the halfspace search does the same
//! for the coefficient magnitudes (see [`separation`]).  TO-hull membership
//! uses the same type search with the Uncomp condition in place of Faces.

mod closure;
mod critical;
pub(crate) mod dc;
mod interval;
pub mod separation;
pub(crate) mod types;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use closure::{closure_check, ClosureReport, ClosureViolation, Grid};
pub use critical::{critical_lambdas, dense_lambdas, profile_search_member, sampled_profile_member, HullKind};
pub use interval::{pair_at, tc_interval, Arc, Piece, RegionDescription};
pub use separation::Side;

use crate::error::{check_dim, Error, Result};
use crate::halfspace::{Halfspace, HalfspaceKind};
use crate::par::Exec;
use crate::sym::SignedTrop;
use crate::vector::{faces_member, sym_sum, SignedVector};
use types::{Instance, TypeMode};

/// A nonempty finite set of points of common dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<SignedVector>,
}

impl PointSet {
    pub fn new(points: Vec<SignedVector>) -> Result<Self> {
        let d = points.first().ok_or(Error::EmptyPointSet)?.dim();
        for p in &points {
            check_dim(d, p.dim())?;
        }
        Ok(PointSet { points })
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[SignedVector] {
        &self.points
    }

    /// Distinct points in first-occurrence order, with their original indices.
    pub fn distinct(&self) -> (Vec<SignedVector>, Vec<usize>) {
        let mut seen = BTreeSet::new();
        let mut pts = Vec::new();
        let mut idx = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            if seen.insert(p.clone()) {
                pts.push(p.clone());
                idx.push(i);
            }
        }
        (pts, idx)
    }

    /// X ∪ ⊖X.
    pub fn with_negations(&self) -> PointSet {
        let mut pts = self.points.clone();
        pts.extend(self.points.iter().map(SignedVector::negate));
        PointSet { points: pts }
    }

    /// The set with one more point.
    pub fn with_point(&self, p: SignedVector) -> Result<PointSet> {
        check_dim(self.dim(), p.dim())?;
        let mut pts = self.points.clone();
        pts.push(p);
        Ok(PointSet { points: pts })
    }
}

impl FromStr for PointSet {
    type Err = Error;

    /// One vector per line; blank lines and `#` comments are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let pts = s
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<SignedVector>>>()?;
        PointSet::new(pts)
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.points {
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}

/// How a scalar profile is normalised.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// `⊕_j λ_j = ⊕0`.
    Hull,
    /// No constraint.
    Cone,
}

/// Nonnegative scalars, one per generator (𝟘 for generators not used).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarProfile {
    pub lambdas: Vec<SignedTrop>,
    pub normalization: Normalization,
}

impl ScalarProfile {
    /// The scaled generators `λ_j ⊙ x_j` with `λ_j ≠ 𝟘`.
    pub fn apply(&self, points: &[SignedVector]) -> Vec<SignedVector> {
        points
            .iter()
            .zip(&self.lambdas)
            .filter(|(_, l)| !l.is_zero())
            .map(|(p, l)| p.scale(l))
            .collect()
    }

    /// Number of nonzero scalars.
    pub fn support_size(&self) -> usize {
        self.lambdas.iter().filter(|l| !l.is_zero()).count()
    }
}

impl fmt::Display for ScalarProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: SignedVector = self.lambdas.iter().cloned().collect();
        write!(f, "{v}")
    }
}

/// A certified membership decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    /// Witness profile over the original generators.
    Member(ScalarProfile),
    /// Certificate when one exists: a closed halfspace containing every
    /// generator and excluding the point (TC-hulls and cones).  TO-hull
    /// non-membership is established by exhausting all types and carries none.
    NonMember(Option<Halfspace>),
}

impl Decision {
    pub fn is_member(&self) -> bool {
        matches!(self, Decision::Member(_))
    }
}

/// The Carathéodory bound `d·2^d + 1` for TC-hulls in dimension d.
pub fn caratheodory_bound(d: usize) -> usize {
    d * (1usize << d) + 1
}

/// Runs the type search, trying machine weights first.
fn run_types(
    gens: &[SignedVector],
    target: &SignedVector,
    homogenize: bool,
    mode: TypeMode,
    max_support: usize,
    exec: Exec,
) -> Option<types::Found> {
    match Instance::<i128>::build(gens, target, homogenize, mode) {
        Some(inst) => types::search(&inst, max_support, exec),
        None => {
            let inst = Instance::<BigInt>::build(gens, target, homogenize, mode).expect("BigInt weights always fit");
            types::search(&inst, max_support, exec)
        }
    }
}

/// Spreads a witness over distinct generators back onto the original list.
fn profile_from(found: &types::Found, original_index: &[usize], n: usize, normalization: Normalization) -> ScalarProfile {
    let mut lambdas = vec![SignedTrop::zero(); n];
    for (pos, &g) in found.0.iter().enumerate() {
        lambdas[original_index[g]] = SignedTrop::pos(found.1[pos].clone());
    }
    ScalarProfile { lambdas, normalization }
}

/// Verifies a witness profile exactly.
fn verify_profile(points: &[SignedVector], y: &SignedVector, p: &ScalarProfile, mode: TypeMode) -> Result<()> {
    if p.normalization == Normalization::Hull {
        let top = p.lambdas.iter().max().cloned().unwrap_or_else(SignedTrop::zero);
        if top != SignedTrop::one() {
            return Err(Error::Inconsistent(format!("profile {p} is not normalised")));
        }
    }
    let scaled = p.apply(points);
    let ok = if scaled.is_empty() {
        y.is_zero()
    } else {
        match mode {
            TypeMode::Faces => faces_member(&scaled, y)?,
            TypeMode::Uncomp => sym_sum(&scaled)?.uncomp_contains(y),
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Inconsistent(format!("profile {p} does not witness {y}")))
    }
}

/// Profile witnessing `y ∈ whull(X)` with support at most `max_support`,
/// found by the exact type search alone.
pub fn tc_hull_witness(x: &PointSet, y: &SignedVector, max_support: Option<usize>) -> Result<Option<ScalarProfile>> {
    witness(x, y, true, TypeMode::Faces, max_support, Exec::default())
}

/// Profile witnessing `y ∈ shull(X)`.
pub fn to_hull_witness(x: &PointSet, y: &SignedVector) -> Result<Option<ScalarProfile>> {
    witness(x, y, true, TypeMode::Uncomp, None, Exec::default())
}

fn witness(
    x: &PointSet,
    y: &SignedVector,
    hull: bool,
    mode: TypeMode,
    max_support: Option<usize>,
    exec: Exec,
) -> Result<Option<ScalarProfile>> {
    check_dim(x.dim(), y.dim())?;
    let normalization = if hull { Normalization::Hull } else { Normalization::Cone };
    if !hull && y.is_zero() {
        return Ok(Some(ScalarProfile { lambdas: vec![SignedTrop::zero(); x.len()], normalization }));
    }
    let (pts, idx) = x.distinct();
    let bound = max_support.unwrap_or(pts.len());
    let Some(found) = run_types(&pts, y, hull, mode, bound, exec) else {
        return Ok(None);
    };
    let p = profile_from(&found, &idx, x.len(), normalization);
    verify_profile(x.points(), y, &p, mode)?;
    Ok(Some(p))
}

/// Decides `y ∈ whull(X)` with a certificate.
pub fn tc_hull_decide(x: &PointSet, y: &SignedVector) -> Result<Decision> {
    tc_hull_decide_with(x, y, Exec::default())
}

/// [`tc_hull_decide`] with an explicit execution policy.
pub fn tc_hull_decide_with(x: &PointSet, y: &SignedVector, exec: Exec) -> Result<Decision> {
    decide_tc(x, y, true, exec)
}

fn decide_tc(x: &PointSet, y: &SignedVector, hull: bool, exec: Exec) -> Result<Decision> {
    check_dim(x.dim(), y.dim())?;
    let (pts, _) = x.distinct();
    let mut reqs: Vec<(SignedVector, Side)> = pts.iter().map(|p| (p.clone(), Side::ClosedPlus)).collect();
    reqs.push((y.clone(), Side::OpenMinus));
    let quick_member = pts.contains(y) || (!hull && y.is_zero());
    if !quick_member {
        if let Some(a) = separation::find_coefficients(&reqs, x.dim(), !hull) {
            return Ok(Decision::NonMember(Some(Halfspace::new(a, HalfspaceKind::Closed)?)));
        }
    }
    match witness(x, y, hull, TypeMode::Faces, None, exec)? {
        Some(p) => Ok(Decision::Member(p)),
        None => Err(Error::Inconsistent(format!(
            "{y}: no separating halfspace and no witness profile over {} generators",
            pts.len()
        ))),
    }
}

/// `y ∈ whull(X)`.
pub fn tc_hull_member(x: &PointSet, y: &SignedVector) -> Result<bool> {
    Ok(tc_hull_decide(x, y)?.is_member())
}

/// Decides `y ∈ wcone(X)` with a certificate (a linear closed halfspace for
/// non-members).
pub fn tc_cone_decide(x: &PointSet, y: &SignedVector) -> Result<Decision> {
    decide_tc(x, y, false, Exec::default())
}

/// `y ∈ wcone(X)`.
pub fn tc_cone_member(x: &PointSet, y: &SignedVector) -> Result<bool> {
    Ok(tc_cone_decide(x, y)?.is_member())
}

/// `y ∈ wspan(X) = wcone(X ∪ ⊖X)`.
pub fn wspan_member(x: &PointSet, y: &SignedVector) -> Result<bool> {
    tc_cone_member(&x.with_negations(), y)
}

/// Decides `y ∈ shull(X)`; non-members carry no certificate.
pub fn to_hull_decide(x: &PointSet, y: &SignedVector) -> Result<Decision> {
    Ok(match to_hull_witness(x, y)? {
        Some(p) => Decision::Member(p),
        None => Decision::NonMember(None),
    })
}

/// `y ∈ shull(X)`.
pub fn to_hull_member(x: &PointSet, y: &SignedVector) -> Result<bool> {
    Ok(to_hull_witness(x, y)?.is_some())
}

/// Homogenised generators `{(v, ⊕0)} ∪ {(w, 𝟘)}` of an affine set.
pub fn homogenize(v: &PointSet, w: &PointSet) -> Result<PointSet> {
    check_dim(v.dim(), w.dim())?;
    let mut pts: Vec<SignedVector> = v.points().iter().map(|p| p.extended(SignedTrop::one())).collect();
    pts.extend(w.points().iter().map(|p| p.extended(SignedTrop::zero())));
    PointSet::new(pts)
}

/// Membership in the TC-hull of `{v ◁ λ ⊙ w : v ∈ V, w ∈ W, λ ≥ 𝟘}`, decided
/// as `(y, ⊕0) ∈ wcone(V̂ ∪ Ŵ)`.
pub fn affine_mw_member(v: &PointSet, w: &PointSet, y: &SignedVector) -> Result<bool> {
    check_dim(v.dim(), y.dim())?;
    tc_cone_member(&homogenize(v, w)?, &y.extended(SignedTrop::one()))
}

/// Candidate coefficients for [`separate`] and [`separate_to`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidateSpace {
    /// Magnitudes are unknowns solved for exactly.
    Exact,
    /// Magnitudes drawn from a finite list (constant term from {𝟘, ⊕0, ⊖0}).
    Grid(Vec<BigRational>),
}

fn find_with(space: &CandidateSpace, reqs: &[(SignedVector, Side)], dim: usize, linear: bool) -> Option<SignedVector> {
    match space {
        CandidateSpace::Exact => separation::find_coefficients(reqs, dim, linear),
        CandidateSpace::Grid(m) => separation::find_coefficients_on_grid(reqs, dim, linear, m),
    }
}

/// A closed halfspace containing X and excluding y, if one exists among the
/// candidates.  With a grid, `None` is inconclusive.
pub fn separate(x: &PointSet, y: &SignedVector, space: &CandidateSpace) -> Result<Option<Halfspace>> {
    separate_impl(x, y, space, false)
}

/// As [`separate`] but restricted to linear halfspaces (`a_0 = 𝟘`).
pub fn separate_linear(x: &PointSet, y: &SignedVector, space: &CandidateSpace) -> Result<Option<Halfspace>> {
    separate_impl(x, y, space, true)
}

fn separate_impl(x: &PointSet, y: &SignedVector, space: &CandidateSpace, linear: bool) -> Result<Option<Halfspace>> {
    check_dim(x.dim(), y.dim())?;
    let mut reqs: Vec<(SignedVector, Side)> = x.points().iter().map(|p| (p.clone(), Side::ClosedPlus)).collect();
    reqs.push((y.clone(), Side::OpenMinus));
    find_with(space, &reqs, x.dim(), linear)
        .map(|a| Halfspace::new(a, HalfspaceKind::Closed))
        .transpose()
}

/// Coefficients `a` with `X ⊆ H̄⁺(a)` and `Y ⊆ H⁻(a)`, returned as the pair
/// of closed halfspaces `(H̄⁺(a), H̄⁻(a))`.
///
/// Every point lies on some hyperplane, so closed containment alone would
/// "separate" a set from itself.  Requiring the open side for `Y` makes a
/// returned pair a proof that `X ∩ shull(Y) = ∅`, since open halfspaces are
/// TO-convex.  It does not exclude `shull(X) ∩ Y ≠ ∅`: closed halfspaces are
/// not TO-convex, and points of `X` on the hyperplane can generate points
/// strictly on the minus side.
pub fn separate_to(x: &PointSet, y: &PointSet, space: &CandidateSpace) -> Result<Option<(Halfspace, Halfspace)>> {
    check_dim(x.dim(), y.dim())?;
    let mut reqs: Vec<(SignedVector, Side)> = x.points().iter().map(|p| (p.clone(), Side::ClosedPlus)).collect();
    reqs.extend(y.points().iter().map(|p| (p.clone(), Side::OpenMinus)));
    let Some(a) = find_with(space, &reqs, x.dim(), false) else {
        return Ok(None);
    };
    let plus = Halfspace::new(a, HalfspaceKind::Closed)?;
    let minus = plus.negated();
    Ok(Some((plus, minus)))
}

/// The magnitudes appearing in a list of vectors, sorted and deduplicated.
pub fn magnitude_set(points: &[SignedVector]) -> Vec<BigRational> {
    let set: BTreeSet<BigRational> = points.iter().flat_map(|p| crate::vector::magnitudes(p).cloned()).collect();
    set.into_iter().collect()
}

#[cfg(test)]
mod tests;
