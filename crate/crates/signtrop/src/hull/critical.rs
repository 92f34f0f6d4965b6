//! Reference membership tests that enumerate scalar profiles over a finite
//! candidate set.  They cross-check the exact type search.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::types::combinations;
use super::{caratheodory_bound, Normalization, PointSet, ScalarProfile};
use crate::error::{check_dim, Result};
use crate::par::{self, Exec};
use crate::sym::SignedTrop;
use crate::vector::{faces_member, magnitudes, sym_sum, SignedVector};

/// Which hull a reference search tests membership in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HullKind {
    /// whull: `y ∈ Faces(λ ⊙ S)`.
    Tc,
    /// shull: `y ∈ Uncomp(⊕ λ_j ⊙ x_j)`.
    To,
}

/// `{𝟘, ⊕0}` together with all differences `|u| − |v| ≤ 0` of magnitudes
/// occurring in `X ∪ {y}`, in ascending order.
pub fn critical_lambdas(x: &PointSet, y: &SignedVector) -> Result<Vec<SignedTrop>> {
    check_dim(x.dim(), y.dim())?;
    let mags: BTreeSet<&BigRational> = x.points().iter().chain(std::iter::once(y)).flat_map(magnitudes).collect();
    let mut out: BTreeSet<SignedTrop> = [SignedTrop::zero(), SignedTrop::one()].into_iter().collect();
    for u in &mags {
        for v in &mags {
            if u <= v {
                out.insert(SignedTrop::pos(*u - *v));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// A uniform grid from the smallest critical value to ⊕0 whose step is the
/// smallest gap between critical values divided by `factor`, plus 𝟘.
pub fn dense_lambdas(x: &PointSet, y: &SignedVector, factor: u32) -> Result<Vec<SignedTrop>> {
    let crit: Vec<BigRational> = critical_lambdas(x, y)?.iter().filter_map(|l| l.mag().cloned()).collect();
    let mut out = vec![SignedTrop::zero()];
    let gap = crit.windows(2).map(|w| &w[1] - &w[0]).filter(|g| g.is_positive()).min();
    let Some(gap) = gap else {
        out.push(SignedTrop::one());
        return Ok(out);
    };
    let step = gap / BigRational::from_integer(factor.max(1).into());
    let lowest = crit[0].clone();
    let mut vals = Vec::new();
    let mut cur = BigRational::zero();
    while cur >= lowest {
        vals.push(SignedTrop::pos(cur.clone()));
        cur -= &step;
    }
    vals.reverse();
    out.extend(vals);
    Ok(out)
}

fn holds(kind: HullKind, scaled: &[SignedVector], y: &SignedVector) -> Result<bool> {
    match kind {
        HullKind::Tc => faces_member(scaled, y),
        HullKind::To => Ok(sym_sum(scaled)?.uncomp_contains(y)),
    }
}

/// Exhaustive search over supports of size at most `max_support` (default:
/// `d·2^d + 1` for whull, all points for shull) and hull-normalised profiles
/// with entries from `lambdas`.
pub fn profile_search_member(
    x: &PointSet,
    y: &SignedVector,
    kind: HullKind,
    lambdas: &[SignedTrop],
    max_support: Option<usize>,
) -> Result<Option<ScalarProfile>> {
    check_dim(x.dim(), y.dim())?;
    let (pts, idx) = x.distinct();
    let nonzero: Vec<SignedTrop> = lambdas.iter().filter(|l| !l.is_zero() && l.mag().is_some_and(|m| !m.is_positive())).cloned().collect();
    if nonzero.is_empty() {
        return Ok(None);
    }
    let bound = max_support.unwrap_or(match kind {
        HullKind::Tc => caratheodory_bound(x.dim()),
        HullKind::To => pts.len(),
    });
    for size in 1..=bound.min(pts.len()) {
        let subsets = combinations(pts.len(), size);
        let found = par::find_map_first(&subsets, Exec::default(), |s| search_subset(&pts, s, y, kind, &nonzero));
        if let Some((subset, lams)) = found {
            let mut lambdas = vec![SignedTrop::zero(); x.len()];
            for (pos, &g) in subset.iter().enumerate() {
                lambdas[idx[g]] = lams[pos].clone();
            }
            return Ok(Some(ScalarProfile { lambdas, normalization: Normalization::Hull }));
        }
    }
    Ok(None)
}

type SubsetWitness = (Vec<usize>, Vec<SignedTrop>);

fn search_subset(
    pts: &[SignedVector],
    subset: &[usize],
    y: &SignedVector,
    kind: HullKind,
    vals: &[SignedTrop],
) -> Option<SubsetWitness> {
    let top = SignedTrop::one();
    let mut digits = vec![0usize; subset.len()];
    loop {
        let lams: Vec<SignedTrop> = digits.iter().map(|&i| vals[i].clone()).collect();
        if lams.contains(&top) {
            let scaled: Vec<SignedVector> = subset.iter().zip(&lams).map(|(&g, l)| pts[g].scale(l)).collect();
            if holds(kind, &scaled, y).unwrap_or(false) {
                return Some((subset.to_vec(), lams));
            }
        }
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return None;
            }
            digits[pos] += 1;
            if digits[pos] < vals.len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// Random hull-normalised profiles with entries drawn uniformly from
/// `lambdas` (each profile is shifted so that its maximum is ⊕0).  Returns
/// the first witnessing profile among `samples` draws.
pub fn sampled_profile_member(
    x: &PointSet,
    y: &SignedVector,
    kind: HullKind,
    lambdas: &[SignedTrop],
    samples: usize,
    seed: u64,
) -> Result<Option<ScalarProfile>> {
    check_dim(x.dim(), y.dim())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = x.len();
    for _ in 0..samples {
        let raw: Vec<SignedTrop> = (0..n).map(|_| lambdas[rng.gen_range(0..lambdas.len())].clone()).collect();
        let Some(top) = raw.iter().filter_map(|l| l.mag()).max().cloned() else {
            continue;
        };
        let lams: Vec<SignedTrop> = raw.iter().map(|l| l.shift(&-top.clone())).collect();
        let profile = ScalarProfile { lambdas: lams, normalization: Normalization::Hull };
        if holds(kind, &profile.apply(x.points()), y)? {
            return Ok(Some(profile));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn v(s: &str) -> SignedVector {
        s.parse().unwrap()
    }

    #[test]
    fn critical_values_of_small_instances() {
        let x: PointSet = "[+0, +0]".parse().unwrap();
        let c = critical_lambdas(&x, &v("[+-2, +-2]")).unwrap();
        assert_eq!(c, vec![SignedTrop::zero(), SignedTrop::pos_int(-2), SignedTrop::one()]);
        let x1: PointSet = "[+1]".parse().unwrap();
        assert_eq!(critical_lambdas(&x1, &v("[+1]")).unwrap(), vec![SignedTrop::zero(), SignedTrop::one()]);
    }

    #[test]
    fn dense_grid_refines_critical_values() {
        let x: PointSet = "[+0, +0]".parse().unwrap();
        let d = dense_lambdas(&x, &v("[+-2, +-2]"), 10).unwrap();
        assert_eq!(d.len(), 12);
        assert!(d.contains(&SignedTrop::pos(rat::frac(-1, 5))));
    }

    #[test]
    fn reference_searches_on_the_interval_example() {
        let x: PointSet = "[+0, +0]\n[--2, --2]".parse().unwrap();
        let y = v("[+-2, --2]");
        let crit = critical_lambdas(&x, &y).unwrap();
        assert!(profile_search_member(&x, &y, HullKind::To, &crit, None).unwrap().is_some());
        assert!(profile_search_member(&x, &y, HullKind::Tc, &crit, None).unwrap().is_none());
        let dense = dense_lambdas(&x, &y, 10).unwrap();
        assert!(sampled_profile_member(&x, &y, HullKind::Tc, &dense, 200, 7).unwrap().is_none());
    }
}
