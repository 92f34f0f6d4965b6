//! Exact search for closed halfspaces with prescribed memberships.
//!
//! Fix the sign pattern of the coefficients `a = (a_0, …, a_d)`.  For a point
//! `p` (with `p_0 = ⊕0`) the terms `|a_k| + |p_k|` split into those whose
//! product is positive ("same") and negative ("diff").  `p ∈ H̄⁺(a)` says that
//! some same term is at least every diff term, and `p ∈ H⁻(a)` that some diff
//! term strictly exceeds every same term.  After choosing the dominating term
//! these are difference constraints on the unknown magnitudes `|a_k|`, so the
//! search enumerates sign patterns and dominating terms and closes the
//! constraint system after every choice.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::dc::{Dc, Weight};
use crate::halfspace::{Halfspace, HalfspaceKind};
use crate::rat;
use crate::sym::{Sign, SignedTrop};
use crate::vector::SignedVector;

/// Membership a point must have in the halfspace being searched for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `p ∈ H̄⁺(a)`.
    ClosedPlus,
    /// `p ∈ H⁻(a)`, i.e. `p ∉ H̄⁺(a)`.
    OpenMinus,
    /// `p ∈ H̄⁻(a)`.
    ClosedMinus,
}

impl Side {
    fn check(self, a: &SignedVector, p: &SignedVector) -> bool {
        let closed_plus = Halfspace::new(a.clone(), HalfspaceKind::Closed).expect("validated coefficients");
        match self {
            Side::ClosedPlus => closed_plus.member(p).expect("dimension checked"),
            Side::OpenMinus => !closed_plus.member(p).expect("dimension checked"),
            Side::ClosedMinus => closed_plus.negated().member(p).expect("dimension checked"),
        }
    }
}

/// Finds coefficients `a` with `a_1, …, a_d` not all 𝟘 (and `a_0 = 𝟘` if
/// `linear`) such that every requirement holds.  The answer is re-verified by
/// direct evaluation before it is returned.
pub fn find_coefficients(reqs: &[(SignedVector, Side)], dim: usize, linear: bool) -> Option<SignedVector> {
    let found = match Problem::<i128>::build(reqs, dim) {
        Some(p) => p.solve(linear),
        None => Problem::<BigInt>::build(reqs, dim).expect("BigInt weights always fit").solve(linear),
    }?;
    let ok = reqs.iter().all(|(p, side)| side.check(&found, p));
    assert!(ok, "separation search returned an unverified halfspace {found}");
    Some(found)
}

type Term<W> = (usize, Sign, W);

struct Problem<W> {
    /// Per point, the nonzero homogeneous coordinates `(k, sign, |p_k|·D)`.
    points: Vec<(Vec<Term<W>>, Side)>,
    dim: usize,
    scale: BigInt,
}

impl<W: Weight> Problem<W> {
    fn build(reqs: &[(SignedVector, Side)], dim: usize) -> Option<Self> {
        let scale = rat::common_denominator(reqs.iter().flat_map(|(p, _)| crate::vector::magnitudes(p)));
        let mut points = Vec::with_capacity(reqs.len());
        for (p, side) in reqs {
            let mut terms = vec![(0, Sign::Pos, W::zero())];
            for (k, x) in p.iter().enumerate() {
                if let Some(m) = x.mag() {
                    terms.push((k + 1, x.sign(), W::from_bigint(&rat::scaled_integer(m, &scale))?));
                }
            }
            points.push((terms, *side));
        }
        // Strict requirements first: they have fewer choices and prune most.
        points.sort_by_key(|(_, s)| *s != Side::OpenMinus);
        Some(Problem { points, dim, scale })
    }

    fn solve(&self, linear: bool) -> Option<SignedVector> {
        let n = self.dim + 1;
        let choices = [Sign::Pos, Sign::Neg, Sign::Zero];
        let total = 3usize.pow(n as u32);
        for code in 0..total {
            let mut pattern = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                pattern.push(choices[c % 3]);
                c /= 3;
            }
            if linear && pattern[0] != Sign::Zero {
                continue;
            }
            if pattern[1..].iter().all(|s| *s == Sign::Zero) {
                continue;
            }
            if let Some(dc) = self.dfs(&pattern, 0, Dc::new(n)) {
                let sol = dc.solution(0, &self.scale);
                let coeffs: SignedVector = pattern
                    .iter()
                    .zip(&sol)
                    .map(|(s, m)| match s {
                        Sign::Zero => SignedTrop::zero(),
                        s => SignedTrop::new(*s, m.clone()).expect("signed"),
                    })
                    .collect();
                return Some(coeffs);
            }
        }
        None
    }

    fn dfs(&self, pattern: &[Sign], i: usize, dc: Dc<W>) -> Option<Dc<W>> {
        let Some((terms, side)) = self.points.get(i) else {
            return Some(dc);
        };
        let mut same: Vec<(usize, W)> = Vec::new();
        let mut diff: Vec<(usize, W)> = Vec::new();
        for (k, s, m) in terms {
            match pattern[*k].mul(*s) {
                Sign::Pos => same.push((*k, m.clone())),
                Sign::Neg => diff.push((*k, m.clone())),
                _ => {}
            }
        }
        // `winners` must contain a term dominating every term of `losers`.
        let (winners, losers, strict) = match side {
            Side::ClosedPlus => (&same, &diff, false),
            Side::ClosedMinus => (&diff, &same, false),
            Side::OpenMinus => {
                if diff.is_empty() {
                    return None;
                }
                (&diff, &same, true)
            }
        };
        if losers.is_empty() && !strict {
            return self.dfs(pattern, i + 1, dc);
        }
        if winners.is_empty() {
            return None;
        }
        // α_l + m_l ≤ α_w + m_w  ⟺  α_l − α_w ≤ m_w − m_l.
        let dominated = |dc: &Dc<W>, w: &(usize, W)| {
            losers.iter().all(|l| dc.implies(w.0, l.0, &(w.1.clone() - l.1.clone()), strict))
        };
        if winners.iter().any(|w| dominated(&dc, w)) {
            return self.dfs(pattern, i + 1, dc);
        }
        for w in winners {
            let mut d2 = dc.clone();
            if losers.iter().all(|l| d2.add(w.0, l.0, w.1.clone() - l.1.clone(), strict)) {
                if let Some(done) = self.dfs(pattern, i + 1, d2) {
                    return Some(done);
                }
            }
        }
        None
    }
}

/// Searches coefficients on a finite candidate set: `a_0 ∈ {𝟘, ⊕0, ⊖0}` (or
/// `𝟘` if `linear`) and `a_k ∈ {𝟘} ∪ {⊕m, ⊖m : m ∈ mags}`.
pub fn find_coefficients_on_grid(
    reqs: &[(SignedVector, Side)],
    dim: usize,
    linear: bool,
    mags: &[BigRational],
) -> Option<SignedVector> {
    let mut values = vec![SignedTrop::zero()];
    for m in mags {
        values.push(SignedTrop::pos(m.clone()));
        values.push(SignedTrop::neg(m.clone()));
    }
    let consts: Vec<SignedTrop> = if linear {
        vec![SignedTrop::zero()]
    } else {
        vec![SignedTrop::zero(), SignedTrop::pos_int(0), SignedTrop::neg_int(0)]
    };
    let mut idx = vec![0usize; dim];
    loop {
        if idx.iter().any(|&i| i != 0) {
            for a0 in &consts {
                let a: SignedVector = std::iter::once(a0.clone()).chain(idx.iter().map(|&i| values[i].clone())).collect();
                if reqs.iter().all(|(p, side)| side.check(&a, p)) {
                    return Some(a);
                }
            }
        }
        let mut pos = 0;
        loop {
            if pos == dim {
                return None;
            }
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> SignedVector {
        s.parse().unwrap()
    }

    #[test]
    fn separates_missing_corner() {
        let reqs = vec![
            (v("[+0, +0]"), Side::ClosedPlus),
            (v("[+0, -0]"), Side::ClosedPlus),
            (v("[-0, +0]"), Side::ClosedPlus),
            (v("[o, o]"), Side::OpenMinus),
        ];
        assert!(find_coefficients(&reqs, 2, false).is_some());
        assert!(find_coefficients_on_grid(&reqs, 2, false, &[rat::int(0)]).is_some());
    }

    #[test]
    fn cannot_separate_a_point_from_itself() {
        let reqs = vec![(v("[+1, -2]"), Side::ClosedPlus), (v("[+1, -2]"), Side::OpenMinus)];
        assert!(find_coefficients(&reqs, 2, false).is_none());
    }

    #[test]
    fn full_sign_cube_contains_origin() {
        let mut reqs: Vec<(SignedVector, Side)> =
            ["[+0, +0]", "[+0, -0]", "[-0, +0]", "[-0, -0]"].iter().map(|s| (v(s), Side::ClosedPlus)).collect();
        reqs.push((v("[o, o]"), Side::OpenMinus));
        assert!(find_coefficients(&reqs, 2, false).is_none());
    }
}
