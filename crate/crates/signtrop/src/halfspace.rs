//! Signed tropical halfspaces and hyperplanes.
//!
//! A coefficient vector `a = (a_0, …, a_d)` is evaluated at a point `x` of
//! 𝕋±^d through the homogeneous vector `(⊕0, x)`.  Coefficient indices are
//! used throughout: index 0 is the constant term and index `i ≥ 1` multiplies
//! coordinate `x_i` (stored at position `i - 1` of the point).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::sym::{Sign, SignedTrop, SymNum};
use crate::vector::SignedVector;

/// Which part of the complement of a hyperplane a [`Halfspace`] denotes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HalfspaceKind {
    /// H⁺(a): evaluation strictly positive.
    Open,
    /// H̄⁺(a): evaluation positive, balanced or 𝟘.
    Closed,
    /// H⁺_semi(a): evaluation positive or 𝟘.
    Semi,
    /// H(a): evaluation balanced or 𝟘.
    Hyperplane,
}

impl HalfspaceKind {
    pub fn name(self) -> &'static str {
        match self {
            HalfspaceKind::Open => "open",
            HalfspaceKind::Closed => "closed",
            HalfspaceKind::Semi => "semi",
            HalfspaceKind::Hyperplane => "hyp",
        }
    }

    /// Whether an evaluation result belongs to the set of this kind.
    pub fn accepts(self, e: &SymNum) -> bool {
        match self {
            HalfspaceKind::Open => e.is_positive(),
            HalfspaceKind::Closed => e.is_positive() || e.is_balanced_or_zero(),
            HalfspaceKind::Semi => e.is_nonnegative(),
            HalfspaceKind::Hyperplane => e.is_balanced_or_zero(),
        }
    }
}

impl FromStr for HalfspaceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "open" => Ok(HalfspaceKind::Open),
            "closed" => Ok(HalfspaceKind::Closed),
            "semi" => Ok(HalfspaceKind::Semi),
            "hyp" => Ok(HalfspaceKind::Hyperplane),
            other => Err(Error::Parse(format!("unknown halfspace kind {other:?}"))),
        }
    }
}

/// A halfspace or hyperplane of 𝕋±^d.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Halfspace {
    coeffs: SignedVector,
    kind: HalfspaceKind,
}

/// Argmax(a, x) and domin⁺(a, x) in coefficient indexing.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BoundaryProfile {
    pub argmax: BTreeSet<usize>,
    pub domin_plus: BTreeSet<usize>,
}

/// Checks that `a` has length `d + 1` for a point of dimension `d`.
fn check_affine(a: &SignedVector, x: &SignedVector) -> Result<()> {
    check_dim(x.dim() + 1, a.dim())
}

/// The products `a_k ⊙ x_k` for `k ∈ [d]_0`, with `x_0 = ⊕0`.
fn terms<'a>(a: &'a SignedVector, x: &'a SignedVector) -> impl Iterator<Item = (usize, SignedTrop)> + 'a {
    std::iter::once((0, a.get(0).clone()))
        .chain(x.iter().enumerate().map(move |(k, xk)| (k + 1, a.get(k + 1).mul(xk))))
}

/// `a_0 ⊕ a_1 ⊙ x_1 ⊕ … ⊕ a_d ⊙ x_d` in 𝕊.
pub fn eval_affine(a: &SignedVector, x: &SignedVector) -> Result<SymNum> {
    check_affine(a, x)?;
    Ok(terms(a, x).fold(SymNum::zero(), |acc, (_, t)| acc.add(t.as_sym())))
}

/// Membership through the two-maximum form: compares the largest positive
/// term with the largest negative term.  Used as an independent oracle for
/// [`Halfspace::member`].
pub fn two_max_member(a: &SignedVector, x: &SignedVector, kind: HalfspaceKind) -> Result<bool> {
    check_affine(a, x)?;
    let mut pos: Option<SignedTrop> = None;
    let mut neg: Option<SignedTrop> = None;
    for (_, t) in terms(a, x) {
        let slot = match t.sign() {
            Sign::Pos => &mut pos,
            Sign::Neg => &mut neg,
            _ => continue,
        };
        let m = t.abs();
        if slot.as_ref().is_none_or(|cur| m > *cur) {
            *slot = Some(m);
        }
    }
    // `None` plays the role of −∞.
    let cmp = pos.cmp(&neg);
    Ok(match kind {
        HalfspaceKind::Open => cmp.is_gt(),
        HalfspaceKind::Closed => cmp.is_ge(),
        HalfspaceKind::Semi => cmp.is_gt() || (pos.is_none() && neg.is_none()),
        HalfspaceKind::Hyperplane => cmp.is_eq(),
    })
}

/// The type J = {i ≥ 1 : a_i > 𝟘} of a coefficient vector.
pub fn hs_type(a: &SignedVector) -> BTreeSet<usize> {
    (1..a.dim()).filter(|&i| a.get(i).is_positive()).collect()
}

/// Argmax(a, x): indices of maximal `|a_k ⊙ x_k|` among nonzero products,
/// and domin⁺(a, x): those whose product is positive.
pub fn boundary_profile(a: &SignedVector, x: &SignedVector) -> Result<BoundaryProfile> {
    check_affine(a, x)?;
    let products: Vec<(usize, SignedTrop)> = terms(a, x).filter(|(_, t)| !t.is_zero()).collect();
    let best = products.iter().map(|(_, t)| t.abs()).max();
    let mut profile = BoundaryProfile::default();
    if let Some(best) = best {
        for (k, t) in &products {
            if t.abs() == best {
                profile.argmax.insert(*k);
                if t.is_positive() {
                    profile.domin_plus.insert(*k);
                }
            }
        }
    }
    Ok(profile)
}

impl Halfspace {
    /// Validates that some coefficient `a_1, …, a_d` is nonzero.
    pub fn new(coeffs: SignedVector, kind: HalfspaceKind) -> Result<Self> {
        if coeffs.dim() < 2 {
            return Err(Error::InvalidHalfspace("need at least two coefficients".to_string()));
        }
        if coeffs.iter().skip(1).all(SignedTrop::is_zero) {
            return Err(Error::InvalidHalfspace(format!("all non-constant coefficients of {coeffs} are zero")));
        }
        Ok(Halfspace { coeffs, kind })
    }

    pub fn coeffs(&self) -> &SignedVector {
        &self.coeffs
    }

    pub fn kind(&self) -> HalfspaceKind {
        self.kind
    }

    /// Dimension d of the ambient space.
    pub fn dim(&self) -> usize {
        self.coeffs.dim() - 1
    }

    /// Linear halfspaces have `a_0 = 𝟘`.
    pub fn is_linear(&self) -> bool {
        self.coeffs.get(0).is_zero()
    }

    pub fn with_kind(&self, kind: HalfspaceKind) -> Halfspace {
        Halfspace { coeffs: self.coeffs.clone(), kind }
    }

    /// The halfspace with coefficients `⊖a` (so H⁻ and H̄⁻ of `a`).
    pub fn negated(&self) -> Halfspace {
        Halfspace { coeffs: self.coeffs.negate(), kind: self.kind }
    }

    pub fn eval(&self, x: &SignedVector) -> Result<SymNum> {
        eval_affine(&self.coeffs, x)
    }

    pub fn member(&self, x: &SignedVector) -> Result<bool> {
        Ok(self.kind.accepts(&self.eval(x)?))
    }

    pub fn hs_type(&self) -> BTreeSet<usize> {
        hs_type(&self.coeffs)
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind.name(), self.coeffs)
    }
}

impl FromStr for Halfspace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (kind, rest) = t
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::Parse(format!("expected `kind [a0, ...]`, found {s:?}")))?;
        Halfspace::new(rest.parse()?, kind.parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> SignedVector {
        s.parse().unwrap()
    }

    fn s(t: &str) -> SymNum {
        t.parse().unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_affine(&v("[o, +0, -0]"), &v("[+0, +-1]")).unwrap(), s("+0"));
        assert_eq!(eval_affine(&v("[o, +0, -3]"), &v("[-0, -(-2)]")).unwrap(), s("+1"));
        assert_eq!(eval_affine(&v("[o, +0, -0]"), &v("[-0, +-1]")).unwrap(), s("-0"));
        assert!(eval_affine(&v("[o, +0]"), &v("[-0, +-1]")).is_err());
    }

    #[test]
    fn member_examples() {
        let a = v("[-0, +0, o]");
        let x = v("[+0, +7]");
        assert_eq!(eval_affine(&a, &x).unwrap(), s("b0"));
        assert!(Halfspace::new(a.clone(), HalfspaceKind::Closed).unwrap().member(&x).unwrap());
        assert!(!Halfspace::new(a, HalfspaceKind::Open).unwrap().member(&x).unwrap());
        let b = v("[o, +0, -0]");
        assert!(Halfspace::new(b.clone(), HalfspaceKind::Open).unwrap().member(&v("[+0, +-1]")).unwrap());
        assert!(!Halfspace::new(b, HalfspaceKind::Closed).unwrap().member(&v("[-0, +-1]")).unwrap());
    }

    #[test]
    fn types() {
        assert_eq!(hs_type(&v("[o, +0, -0]")), [1].into_iter().collect());
        assert!(hs_type(&v("[-2, -1, -1]")).is_empty());
        assert_eq!(hs_type(&v("[+0, +1, +2]")), [1, 2].into_iter().collect());
    }

    #[test]
    fn boundary_profiles() {
        let p = boundary_profile(&v("[-0, +0, o]"), &v("[+0, -4]")).unwrap();
        assert_eq!(p.argmax, [0, 1].into_iter().collect());
        assert_eq!(p.domin_plus, [1].into_iter().collect());
        let q = boundary_profile(&v("[o, +0, o]"), &v("[o, +5]")).unwrap();
        assert!(q.argmax.is_empty());
        assert!(eval_affine(&v("[o, +0, o]"), &v("[o, +5]")).unwrap().is_zero());
    }

    #[test]
    fn rejects_degenerate_coefficients() {
        assert!(Halfspace::new(v("[+1, o, o]"), HalfspaceKind::Open).is_err());
        assert!("bogus [o, +1]".parse::<Halfspace>().is_err());
        let h: Halfspace = "semi [o, +1, -2]".parse().unwrap();
        assert_eq!(h.to_string(), "semi [o, +1, -2]");
        assert!(h.is_linear());
    }

    #[test]
    fn two_max_form_agrees_on_examples() {
        let kinds = [HalfspaceKind::Open, HalfspaceKind::Closed, HalfspaceKind::Semi, HalfspaceKind::Hyperplane];
        let pts = ["[+0, +7]", "[-0, +-1]", "[o, o]", "[+0, -0]", "[-3, +2]"];
        for a in ["[-0, +0, o]", "[o, +0, -0]", "[+1, -1, +2]"] {
            for x in pts {
                for k in kinds {
                    let h = Halfspace::new(v(a), k).unwrap();
                    assert_eq!(h.member(&v(x)).unwrap(), two_max_member(&v(a), &v(x), k).unwrap());
                }
            }
        }
    }
}
