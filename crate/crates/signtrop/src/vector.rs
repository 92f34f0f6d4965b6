//! Vectors over 𝕋± and 𝕊, the left sum, and the Vert/Faces hypercube
//! complexes of a finite point set.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::{check_dim, Error, Result};
use crate::sym::{Interval, Sign, SignedTrop, SymNum};

/// A point of 𝕋±^d.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedVector(Vec<SignedTrop>);

/// A point of 𝕊^d.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymVector(Vec<SymNum>);

/// Supports of a signed vector (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Supports {
    pub supp: BTreeSet<usize>,
    pub psupp: BTreeSet<usize>,
    pub nsupp: BTreeSet<usize>,
}

impl SignedVector {
    pub fn new(entries: Vec<SignedTrop>) -> Self {
        SignedVector(entries)
    }

    /// The all-𝟘 vector of length `d`.
    pub fn zeros(d: usize) -> Self {
        SignedVector(vec![SignedTrop::zero(); d])
    }

    /// Builds a vector from signed integer magnitudes: `Some((sign, m))` or
    /// `None` for 𝟘.  Convenient in tests and examples.
    pub fn from_ints(entries: &[Option<(Sign, i64)>]) -> Result<Self> {
        entries
            .iter()
            .map(|e| match e {
                None => Ok(SignedTrop::zero()),
                Some((s, m)) => SignedTrop::new(*s, crate::rat::int(*m)),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignedVector)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[SignedTrop] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<SignedTrop> {
        self.0
    }

    pub fn get(&self, k: usize) -> &SignedTrop {
        &self.0[k]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SignedTrop> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    /// supp, psupp and nsupp.
    pub fn supports(&self) -> Supports {
        let mut s = Supports::default();
        for (k, x) in self.0.iter().enumerate() {
            match x.sign() {
                Sign::Pos => {
                    s.supp.insert(k);
                    s.psupp.insert(k);
                }
                Sign::Neg => {
                    s.supp.insert(k);
                    s.nsupp.insert(k);
                }
                _ => {}
            }
        }
        s
    }

    /// Left sum `self ◁ other`: coordinates of equal magnitude keep `self`'s
    /// entry, all others take the entry of larger magnitude.
    pub fn left_sum(&self, other: &SignedVector) -> Result<SignedVector> {
        check_dim(self.dim(), other.dim())?;
        Ok(SignedVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| left_sum_scalar(a, b))
                .collect(),
        ))
    }

    /// Tropical scalar multiple `λ ⊙ self`.
    pub fn scale(&self, lambda: &SignedTrop) -> SignedVector {
        SignedVector(self.0.iter().map(|x| lambda.mul(x)).collect())
    }

    /// `⊖ self`.
    pub fn negate(&self) -> SignedVector {
        SignedVector(self.0.iter().map(|x| x.negate()).collect())
    }

    /// Componentwise sum in 𝕊.
    pub fn oplus(&self, other: &SignedVector) -> Result<SymVector> {
        check_dim(self.dim(), other.dim())?;
        Ok(SymVector(self.0.iter().zip(&other.0).map(|(a, b)| a.add(b)).collect()))
    }

    /// Embeds the vector in 𝕊^d.
    pub fn to_sym(&self) -> SymVector {
        SymVector(self.0.iter().map(|x| x.as_sym().clone()).collect())
    }

    /// Appends one coordinate.
    pub fn extended(&self, last: SignedTrop) -> SignedVector {
        let mut v = self.0.clone();
        v.push(last);
        SignedVector(v)
    }

    /// Prepends one coordinate.
    pub fn prepended(&self, first: SignedTrop) -> SignedVector {
        let mut v = Vec::with_capacity(self.dim() + 1);
        v.push(first);
        v.extend(self.0.iter().cloned());
        SignedVector(v)
    }

    /// Componentwise order `self ≤ other`.
    pub fn le(&self, other: &SignedVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

/// Scalar left sum.
pub fn left_sum_scalar(a: &SignedTrop, b: &SignedTrop) -> SignedTrop {
    match a.cmp_mag(b) {
        std::cmp::Ordering::Less => b.clone(),
        _ => a.clone(),
    }
}

impl FromIterator<SignedTrop> for SignedVector {
    fn from_iter<I: IntoIterator<Item = SignedTrop>>(iter: I) -> Self {
        SignedVector(iter.into_iter().collect())
    }
}

fn fmt_list<T: fmt::Display>(items: &[T], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "[")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "]")
}

/// Splits `[a, b, c]` into its trimmed items.
pub(crate) fn split_bracketed(s: &str) -> Result<Vec<&str>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected a bracketed list, found {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(inner.split(',').map(str::trim).collect())
}

impl fmt::Display for SignedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_list(&self.0, f)
    }
}

impl FromStr for SignedVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let items = split_bracketed(s)?;
        if items.is_empty() {
            return Err(Error::Parse("a vector needs at least one coordinate".to_string()));
        }
        items.into_iter().map(str::parse).collect::<Result<Vec<_>>>().map(SignedVector)
    }
}

impl SymVector {
    pub fn new(entries: Vec<SymNum>) -> Self {
        SymVector(entries)
    }

    pub fn zeros(d: usize) -> Self {
        SymVector(vec![SymNum::zero(); d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[SymNum] {
        &self.0
    }

    pub fn get(&self, k: usize) -> &SymNum {
        &self.0[k]
    }

    /// Componentwise sum with a signed vector.
    pub fn add_signed(&self, x: &SignedVector) -> Result<SymVector> {
        check_dim(self.dim(), x.dim())?;
        Ok(SymVector(self.0.iter().zip(x.entries()).map(|(a, b)| a.add(b.as_sym())).collect()))
    }

    /// Uncomp(s) as a box.
    pub fn uncomp(&self) -> HyperBox {
        HyperBox(self.0.iter().map(SymNum::uncomp).collect())
    }

    /// `y ∈ Uncomp(s)`.
    pub fn uncomp_contains(&self, y: &SignedVector) -> bool {
        self.dim() == y.dim()
            && self.0.iter().zip(y.entries()).all(|(s, x)| match s.sign() {
                Sign::Bal => {
                    let m = s.mag().expect("balanced values have a magnitude");
                    x.is_zero() || x.mag().expect("nonzero") <= m
                }
                _ => s == x.as_sym(),
            })
    }
}

impl fmt::Display for SymVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_list(&self.0, f)
    }
}

impl FromStr for SymVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let items = split_bracketed(s)?;
        items.into_iter().map(str::parse).collect::<Result<Vec<_>>>().map(SymVector)
    }
}

/// Tropical sum ⊕X of a nonempty list of points.
pub fn sym_sum(points: &[SignedVector]) -> Result<SymVector> {
    let first = points.first().ok_or(Error::EmptyPointSet)?;
    let mut acc = SymVector::zeros(first.dim());
    for p in points {
        acc = acc.add_signed(p)?;
    }
    Ok(acc)
}

/// An axis-parallel box of 𝕋±^d given by one closed interval per coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HyperBox(pub Vec<Interval>);

impl HyperBox {
    pub fn contains(&self, y: &SignedVector) -> bool {
        self.0.len() == y.dim() && self.0.iter().zip(y.entries()).all(|(i, x)| i.contains(x))
    }

    /// Number of non-singleton coordinates.
    pub fn dimension(&self) -> usize {
        self.0.iter().filter(|i| !i.is_singleton()).count()
    }

    pub fn intersect(&self, other: &HyperBox) -> Option<HyperBox> {
        if self.0.len() != other.0.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.intersect(b))
            .collect::<Option<Vec<_>>>()
            .map(HyperBox)
    }

    /// The corner points of the box.
    pub fn vertices(&self) -> Vec<SignedVector> {
        let mut out = vec![Vec::new()];
        for iv in &self.0 {
            let choices: Vec<SignedTrop> = if iv.is_singleton() {
                vec![iv.lo.clone()]
            } else {
                vec![iv.lo.clone(), iv.hi.clone()]
            };
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<SignedTrop>| {
                    choices.iter().map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c.clone());
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(SignedVector).collect()
    }

    /// A point of the box: the lower corner.
    pub fn some_point(&self) -> SignedVector {
        self.0.iter().map(|i| i.lo.clone()).collect()
    }
}

impl fmt::Display for HyperBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, iv) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}

/// The complex Faces(X): faces of the hypercube Uncomp(⊕X) all of whose
/// vertices lie in Vert(X).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceComplex {
    pub carrier: SymVector,
    pub vertex_set: BTreeSet<SignedVector>,
}

fn check_points(points: &[SignedVector]) -> Result<usize> {
    let d = points.first().ok_or(Error::EmptyPointSet)?.dim();
    for p in points {
        check_dim(d, p.dim())?;
    }
    Ok(d)
}

/// Vert(X): all iterated left sums `x_σ(1) ◁ … ◁ x_σ(n)`.
///
/// Enumerates permutations depth first, memoising (remaining set, prefix)
/// states and stopping a branch as soon as the prefix has maximal magnitude in
/// every coordinate (the suffix can no longer change it).
pub fn vert(points: &[SignedVector]) -> Result<BTreeSet<SignedVector>> {
    Ok(vert_with_orders(points)?.into_keys().collect())
}

/// Vert(X) together with one permutation producing each vertex.
pub fn vert_with_orders(points: &[SignedVector]) -> Result<BTreeMap<SignedVector, Vec<usize>>> {
    let d = check_points(points)?;
    let carrier = sym_sum(points)?;
    let n = points.len();
    let mut out = BTreeMap::new();
    let mut seen: HashSet<(Vec<bool>, SignedVector)> = HashSet::new();
    let mut used = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let start = SignedVector::zeros(d);
    vert_dfs(points, &carrier, &start, &mut used, &mut order, &mut seen, &mut out);
    Ok(out)
}

fn saturated(prefix: &SignedVector, carrier: &SymVector) -> bool {
    prefix
        .entries()
        .iter()
        .zip(carrier.entries())
        .all(|(x, s)| x.as_sym().cmp_mag(s) == std::cmp::Ordering::Equal)
}

fn vert_dfs(
    points: &[SignedVector],
    carrier: &SymVector,
    prefix: &SignedVector,
    used: &mut Vec<bool>,
    order: &mut Vec<usize>,
    seen: &mut HashSet<(Vec<bool>, SignedVector)>,
    out: &mut BTreeMap<SignedVector, Vec<usize>>,
) {
    if order.len() == points.len() || (!order.is_empty() && saturated(prefix, carrier)) {
        if !out.contains_key(prefix) {
            let mut full = order.clone();
            full.extend((0..points.len()).filter(|j| !used[*j]));
            out.insert(prefix.clone(), full);
        }
        return;
    }
    if !seen.insert((used.clone(), prefix.clone())) {
        return;
    }
    for j in 0..points.len() {
        if used[j] {
            continue;
        }
        let next = prefix.left_sum(&points[j]).expect("dimensions checked");
        used[j] = true;
        order.push(j);
        vert_dfs(points, carrier, &next, used, order, seen, out);
        order.pop();
        used[j] = false;
    }
}

/// Vert(X) computed without permutations: a sign pattern τ on the maximal
/// magnitudes is a vertex iff some ordering makes, in every coordinate, the
/// first point attaining the maximum carry the sign τ_k.  Such an ordering is
/// found greedily by repeatedly placing a point that cannot spoil any
/// still-undetermined coordinate.
pub fn vert_by_patterns(points: &[SignedVector]) -> Result<BTreeSet<SignedVector>> {
    let d = check_points(points)?;
    let carrier = sym_sum(points)?;
    let signs: Vec<Vec<Sign>> = points.iter().map(|p| p.iter().map(|x| x.sign()).collect()).collect();
    let tops: Vec<Vec<usize>> = (0..d)
        .map(|k| {
            (0..points.len())
                .filter(|&j| {
                    let x = points[j].get(k);
                    !x.is_zero() && x.as_sym().cmp_mag(carrier.get(k)) == std::cmp::Ordering::Equal
                })
                .collect()
        })
        .collect();
    let mut out = BTreeSet::new();
    for corner in carrier.uncomp().vertices() {
        let tau: Vec<Sign> = corner.iter().map(|x| x.sign()).collect();
        if realizable(points.len(), &tops, &signs, &tau) {
            out.insert(corner);
        }
    }
    Ok(out)
}

/// Whether an ordering of the points `0..n` exists in which, for every
/// coordinate `k` with nonempty `tops[k]`, the first element of `tops[k]`
/// has sign `tau[k]` in coordinate `k`.
pub(crate) fn realizable(n: usize, tops: &[Vec<usize>], signs: &[Vec<Sign>], tau: &[Sign]) -> bool {
    let d = tops.len();
    let mut decided: Vec<bool> = tops.iter().map(|t| t.is_empty()).collect();
    let mut placed = vec![false; n];
    let mut member = vec![Vec::new(); n];
    for (k, t) in tops.iter().enumerate() {
        for &j in t {
            member[j].push(k);
        }
    }
    loop {
        if decided.iter().all(|&b| b) {
            return true;
        }
        let safe = (0..n).find(|&j| {
            !placed[j] && member[j].iter().all(|&k| decided[k] || signs[j][k] == tau[k])
        });
        match safe {
            None => return false,
            Some(j) => {
                placed[j] = true;
                for &k in &member[j] {
                    decided[k] = true;
                }
            }
        }
        debug_assert!(decided.len() == d);
    }
}

/// Membership `y ∈ Faces(X)` by the domination criterion: for every pattern
/// in `{≤, ≥}^d` some vertex of Vert(X) dominates `y` accordingly.
pub fn faces_member(points: &[SignedVector], y: &SignedVector) -> Result<bool> {
    let d = check_points(points)?;
    check_dim(d, y.dim())?;
    let verts = vert(points)?;
    Ok(dominated_in_all_patterns(&verts, y))
}

/// The domination test shared by [`faces_member`] and [`FaceComplex::contains`].
pub fn dominated_in_all_patterns(verts: &BTreeSet<SignedVector>, y: &SignedVector) -> bool {
    let d = y.dim();
    // For each vertex, the set of patterns it covers is a subcube: coordinate k
    // admits "≤" when y_k ≤ w_k and "≥" when y_k ≥ w_k.
    let covers: Vec<Vec<(bool, bool)>> = verts
        .iter()
        .map(|w| y.iter().zip(w.iter()).map(|(a, b)| (a <= b, a >= b)).collect())
        .collect();
    if d >= usize::BITS as usize - 1 {
        return false;
    }
    (0..(1usize << d)).all(|pattern| {
        covers.iter().any(|c| {
            (0..d).all(|k| {
                let want_le = pattern & (1 << k) == 0;
                if want_le {
                    c[k].0
                } else {
                    c[k].1
                }
            })
        })
    })
}

/// Builds the face complex of X.
pub fn faces_complex(points: &[SignedVector]) -> Result<FaceComplex> {
    check_points(points)?;
    Ok(FaceComplex { carrier: sym_sum(points)?, vertex_set: vert(points)? })
}

impl FaceComplex {
    /// Membership by domination.
    pub fn contains(&self, y: &SignedVector) -> bool {
        y.dim() == self.carrier.dim() && dominated_in_all_patterns(&self.vertex_set, y)
    }

    /// All faces of the carrier hypercube whose vertices lie in the vertex set.
    pub fn faces(&self) -> Vec<HyperBox> {
        let cube = self.carrier.uncomp();
        let mut faces = vec![Vec::<Interval>::new()];
        for iv in &cube.0 {
            let options: Vec<Interval> = if iv.is_singleton() {
                vec![iv.clone()]
            } else {
                vec![
                    Interval::singleton(iv.lo.clone()),
                    Interval::singleton(iv.hi.clone()),
                    iv.clone(),
                ]
            };
            faces = faces
                .into_iter()
                .flat_map(|prefix| {
                    options.iter().map(move |o| {
                        let mut p = prefix.clone();
                        p.push(o.clone());
                        p
                    })
                })
                .collect();
        }
        faces
            .into_iter()
            .map(HyperBox)
            .filter(|f| f.vertices().iter().all(|v| self.vertex_set.contains(v)))
            .collect()
    }

    /// Membership by explicit enumeration of the faces of the complex.
    pub fn contains_by_enumeration(&self, y: &SignedVector) -> bool {
        self.faces().iter().any(|f| f.contains(y))
    }
}

/// A subset of at most `d·2^d` points with the same Vert, collected by taking,
/// for every vertex and every coordinate, the first point of a producing
/// ordering that attains the vertex's value in that coordinate.  Returns
/// sorted indices into `points`.
pub fn vertex_caratheodory(points: &[SignedVector]) -> Result<Vec<usize>> {
    let d = check_points(points)?;
    let mut keep = BTreeSet::new();
    for (y, order) in vert_with_orders(points)? {
        for k in 0..d {
            let first = order
                .iter()
                .copied()
                .find(|&j| points[j].get(k) == y.get(k))
                .unwrap_or(order[0]);
            keep.insert(first);
        }
    }
    Ok(keep.into_iter().collect())
}

/// Magnitudes of the nonzero coordinates of a vector.
pub fn magnitudes(v: &SignedVector) -> impl Iterator<Item = &BigRational> {
    v.iter().filter_map(|x| x.mag())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn v(s: &str) -> SignedVector {
        s.parse().unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<SignedVector> {
        items.iter().map(|s| v(s)).collect()
    }

    fn sign_corners(d: usize) -> Vec<SignedVector> {
        (0..(1 << d))
            .map(|m| (0..d).map(|k| if m & (1 << k) != 0 { SignedTrop::pos_int(0) } else { SignedTrop::neg_int(0) }).collect())
            .collect()
    }

    #[test]
    fn supports_examples() {
        let s = v("[+2, o, -1]").supports();
        assert_eq!(s.supp, [0, 2].into_iter().collect());
        assert_eq!(s.psupp, [0].into_iter().collect());
        assert_eq!(s.nsupp, [2].into_iter().collect());
        assert_eq!(v("[o, o]").supports(), Supports::default());
        let t = v("[-0, -0]").supports();
        assert_eq!(t.supp, t.nsupp);
        assert!(t.psupp.is_empty());
    }

    #[test]
    fn left_sum_examples() {
        assert_eq!(v("[+0]").left_sum(&v("[-0]")).unwrap(), v("[+0]"));
        assert_eq!(v("[-0]").left_sum(&v("[+0]")).unwrap(), v("[-0]"));
        assert_eq!(v("[+1]").left_sum(&v("[-2]")).unwrap(), v("[-2]"));
        assert_eq!(v("[+1, -(-1)]").left_sum(&v("[+0, -0]")).unwrap(), v("[+1, -0]"));
        assert!(v("[+1]").left_sum(&v("[+1, +1]")).is_err());
    }

    #[test]
    fn vert_examples() {
        assert_eq!(vert(&[v("[+0, -0]"), v("[+1, +-1]")]).unwrap(), set(&["[+1, -0]"]));
        assert_eq!(vert(&[v("[+0, -0]"), v("[+1, +0]")]).unwrap(), set(&["[+1, -0]", "[+1, +0]"]));
        assert_eq!(vert(&[v("[+0, -0]"), v("[-0, +0]")]).unwrap(), set(&["[+0, -0]", "[-0, +0]"]));
    }

    #[test]
    fn faces_member_examples() {
        let x = [v("[+0, -0]"), v("[+1, +0]")];
        assert!(faces_member(&x, &v("[+1, o]")).unwrap());
        assert!(faces_member(&x, &v("[+1, -(-3)]")).unwrap());
        assert!(!faces_member(&x, &v("[+0, o]")).unwrap());
        let y = [v("[+0, -0]"), v("[-0, +0]")];
        assert!(!faces_member(&y, &v("[o, o]")).unwrap());
        assert!(faces_member(&sign_corners(2), &v("[o, o]")).unwrap());
    }

    #[test]
    fn face_complex_examples() {
        let c = faces_complex(&[v("[+0, -0]"), v("[+1, +-1]")]).unwrap();
        assert_eq!(c.carrier, "[+1, -0]".parse().unwrap());
        assert_eq!(c.vertex_set.len(), 1);
        let p = faces_complex(&[v("[+2, -3]")]).unwrap();
        assert_eq!(p.faces().len(), 1);
        let cube = faces_complex(&sign_corners(3)).unwrap();
        assert_eq!(cube.carrier, "[b0, b0, b0]".parse().unwrap());
        assert_eq!(cube.vertex_set.len(), 8);
        // every one of the 27 faces of the 3-cube is present
        assert_eq!(cube.faces().len(), 27);
    }

    #[test]
    fn pattern_vert_matches_permutations_on_examples() {
        let cases = [
            vec![v("[+0, -0]"), v("[+1, +0]")],
            vec![v("[+0, -0]"), v("[-0, +0]")],
            sign_corners(3),
            vec![v("[+0, -0, +1]"), v("[-0, +0, -1]"), v("[+0, +0, o]")],
        ];
        for x in cases {
            assert_eq!(vert(&x).unwrap(), vert_by_patterns(&x).unwrap());
        }
    }

    #[test]
    fn vertex_caratheodory_keeps_vert() {
        let x = sign_corners(3);
        let idx = vertex_caratheodory(&x).unwrap();
        let y: Vec<SignedVector> = idx.iter().map(|&j| x[j].clone()).collect();
        assert!(idx.len() <= 3 * 8);
        assert_eq!(vert(&y).unwrap(), vert(&x).unwrap());
    }

    #[test]
    fn parse_and_print_vectors() {
        let x = v("[+2, o, -1, b3]".replace(", b3", "").as_str());
        assert_eq!(x.to_string(), "[+2, o, -1]");
        assert!("[+2, b3]".parse::<SignedVector>().is_err());
        assert_eq!("[+2, b3]".parse::<SymVector>().unwrap().to_string(), "[+2, b3]");
        assert!("[]".parse::<SignedVector>().is_err());
        assert!("+2, o".parse::<SignedVector>().is_err());
    }
}
