//! Oriented matroids given by their vectors: axiom checks, circuits and
//! cocircuits, orthogonality, realization from rational matrices, and the
//! representation of the vectors through TC-hulls and tropical hyperplanes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rand::Rng;
use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::hull::{tc_hull_member, wspan_member, PointSet};
use crate::par::{self, Exec};
use crate::puiseux::{lp_feasible, nullspace, rref, FeasibilityProblem, PuiseuxNum, PuiseuxVector};
use crate::rat;
use crate::sym::{self, Sign, SignedTrop};
use crate::vector::SignedVector;

/// Largest ground set for which all `3^k` sign patterns are enumerated.
pub const MAX_ENUMERATION: usize = 12;

/// An element of `{⊖0, 𝟘, ⊕0}^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    /// Rejects balanced entries.
    pub fn new(signs: Vec<Sign>) -> Result<Self> {
        if signs.contains(&Sign::Bal) {
            return Err(Error::BalancedNotAllowed("sign vectors have entries in {+, -, o}".to_string()));
        }
        Ok(SignVector(signs))
    }

    pub fn zeros(k: usize) -> Self {
        SignVector(vec![Sign::Zero; k])
    }

    /// All `3^k` sign vectors in lexicographic order of `(-, o, +)`.
    pub fn all(k: usize) -> Vec<SignVector> {
        let mut out = vec![SignVector(Vec::with_capacity(k))];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|v| {
                    [Sign::Neg, Sign::Zero, Sign::Pos].into_iter().map(move |s| {
                        let mut w = v.0.clone();
                        w.push(s);
                        SignVector(w)
                    })
                })
                .collect();
        }
        out
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Sign {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&s| s == Sign::Zero)
    }

    /// Support as 0-based indices.
    pub fn support(&self) -> BTreeSet<usize> {
        (0..self.len()).filter(|&i| self.0[i] != Sign::Zero).collect()
    }

    pub fn negate(&self) -> SignVector {
        SignVector(self.0.iter().map(|s| s.negate()).collect())
    }

    /// `s ⊙ v` for `s ∈ {⊖0, 𝟘, ⊕0}`.
    pub fn scale(&self, s: Sign) -> SignVector {
        SignVector(self.0.iter().map(|&x| x.mul(s)).collect())
    }

    /// The left sum `self ◁ other`: `self_i` where nonzero, else `other_i`.
    pub fn left_sum(&self, other: &SignVector) -> Result<SignVector> {
        check_dim(self.len(), other.len())?;
        Ok(SignVector(self.0.iter().zip(&other.0).map(|(&a, &b)| if a == Sign::Zero { b } else { a }).collect()))
    }

    /// Embedding into 𝕋±^k with all magnitudes 0.
    pub fn to_signed(&self) -> SignedVector {
        self.0
            .iter()
            .map(|&s| match s {
                Sign::Pos => SignedTrop::one(),
                Sign::Neg => SignedTrop::one().negate(),
                _ => SignedTrop::zero(),
            })
            .collect()
    }

    /// The sign vector of a point whose nonzero magnitudes are all 0.
    pub fn from_signed(v: &SignedVector) -> Result<Self> {
        let zero = BigRational::default();
        v.iter()
            .map(|x| match x.mag() {
                None => Ok(Sign::Zero),
                Some(m) if *m == zero => Ok(x.sign()),
                Some(_) => Err(Error::InvalidInput(format!("{v} has a coordinate of nonzero magnitude"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }

    /// Signs of an arbitrary point of 𝕋±^k.
    pub fn tsgn(v: &SignedVector) -> Self {
        SignVector(v.iter().map(SignedTrop::sign).collect())
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;

    /// Tokens `+ - o`, separated by whitespace or written contiguously.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '+' => Ok(Sign::Pos),
                '-' => Ok(Sign::Neg),
                'o' | '0' => Ok(Sign::Zero),
                other => Err(Error::Parse(format!("bad sign token {other:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }
}

/// `u ⊥ v`: the inner product `⊕_i u_i ⊙ v_i` is balanced or 𝟘.
pub fn orthogonal(u: &SignedVector, v: &SignedVector) -> Result<bool> {
    check_dim(u.dim(), v.dim())?;
    let prods: Vec<_> = u.iter().zip(v.iter()).map(|(a, b)| a.mul(b).into_sym()).collect();
    Ok(sym::sum(&prods).is_balanced_or_zero())
}

/// [`orthogonal`] for sign vectors.
pub fn sign_orthogonal(u: &SignVector, v: &SignVector) -> Result<bool> {
    orthogonal(&u.to_signed(), &v.to_signed())
}

/// A finite set of sign vectors on a ground set of size `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OMatroid {
    k: usize,
    vectors: BTreeSet<SignVector>,
}

impl OMatroid {
    /// Stores the set as given; run [`axioms_check`] before relying on it.
    pub fn new(k: usize, vectors: impl IntoIterator<Item = SignVector>) -> Result<Self> {
        let vectors: BTreeSet<SignVector> = vectors.into_iter().collect();
        for v in &vectors {
            check_dim(k, v.len())?;
        }
        Ok(OMatroid { k, vectors })
    }

    pub fn ground_size(&self) -> usize {
        self.k
    }

    pub fn vectors(&self) -> &BTreeSet<SignVector> {
        &self.vectors
    }

    /// The same set with one vector removed.
    pub fn without(&self, v: &SignVector) -> OMatroid {
        let mut vectors = self.vectors.clone();
        vectors.remove(v);
        OMatroid { k: self.k, vectors }
    }

    fn validated(&self) -> Result<()> {
        let report = axioms_check(self.k, &self.vectors);
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidInput(format!("vector axiom {} fails: {}", v.axiom, v.detail))),
        }
    }
}

impl fmt::Display for OMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k={}", self.k)?;
        for v in &self.vectors {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for OMatroid {
    type Err = Error;

    /// A `k=<n>` header followed by one sign vector per line (blank lines
    /// and `#` comments ignored).  An all-𝟘 vector may be written as `o…o`.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("missing k=<n> header".to_string()))?;
        let k: usize = header
            .strip_prefix("k=")
            .and_then(|n| n.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
        let vectors = lines.map(str::parse).collect::<Result<Vec<SignVector>>>()?;
        OMatroid::new(k, vectors)
    }
}

/// The vector axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Axiom {
    V0,
    V1,
    V2,
    V3,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// One violated axiom with the vectors that witness the violation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witnesses: Vec<String>,
    pub detail: String,
}

/// Result of [`axioms_check`]: at most one entry per axiom.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

/// Whether `z` lies in `Uncomp(x ⊕ y)`: it agrees with `x ◁ y` wherever `x`
/// and `y` do not conflict.
fn in_uncomp_sum(z: &SignVector, x: &SignVector, y: &SignVector) -> bool {
    (0..z.len()).all(|j| {
        let (a, b) = (x.get(j), y.get(j));
        if a != Sign::Zero && b == a.negate() {
            true
        } else if a != Sign::Zero {
            z.get(j) == a
        } else {
            z.get(j) == b
        }
    })
}

/// Checks V0–V3 for the set `vectors` of sign vectors of length `k`.
pub fn axioms_check(k: usize, vectors: &BTreeSet<SignVector>) -> AxiomReport {
    let mut report = AxiomReport::default();
    if let Some(bad) = vectors.iter().find(|v| v.len() != k) {
        report.violations.push(AxiomViolation {
            axiom: Axiom::V0,
            witnesses: vec![bad.to_string()],
            detail: format!("vector of length {} on a ground set of size {k}", bad.len()),
        });
        return report;
    }
    if !vectors.contains(&SignVector::zeros(k)) {
        report.violations.push(AxiomViolation { axiom: Axiom::V0, witnesses: vec![], detail: "𝟘 is missing".to_string() });
    }
    'v1: for v in vectors {
        for s in [Sign::Neg, Sign::Zero, Sign::Pos] {
            let w = v.scale(s);
            if !vectors.contains(&w) {
                report.violations.push(AxiomViolation {
                    axiom: Axiom::V1,
                    witnesses: vec![v.to_string(), w.to_string()],
                    detail: format!("{} ⊙ ({v}) = ({w}) is missing", s.symbol()),
                });
                break 'v1;
            }
        }
    }
    'v2: for x in vectors {
        for y in vectors {
            let z = x.left_sum(y).expect("equal lengths");
            if !vectors.contains(&z) {
                report.violations.push(AxiomViolation {
                    axiom: Axiom::V2,
                    witnesses: vec![x.to_string(), y.to_string(), z.to_string()],
                    detail: format!("({x}) ◁ ({y}) = ({z}) is missing"),
                });
                break 'v2;
            }
        }
    }
    'v3: for x in vectors {
        for y in vectors {
            for i in 0..k {
                if x.get(i) == Sign::Zero || y.get(i) != x.get(i).negate() {
                    continue;
                }
                let ok = vectors.iter().any(|z| z.get(i) == Sign::Zero && in_uncomp_sum(z, x, y));
                if !ok {
                    report.violations.push(AxiomViolation {
                        axiom: Axiom::V3,
                        witnesses: vec![x.to_string(), y.to_string()],
                        detail: format!("no elimination of ({x}) and ({y}) at coordinate {}", i + 1),
                    });
                    break 'v3;
                }
            }
        }
    }
    report
}

/// Support-minimal nonzero elements.
pub fn support_minimal(set: &BTreeSet<SignVector>) -> BTreeSet<SignVector> {
    let nonzero: Vec<(&SignVector, BTreeSet<usize>)> =
        set.iter().filter(|v| !v.is_zero()).map(|v| (v, v.support())).collect();
    nonzero
        .iter()
        .filter(|(_, s)| !nonzero.iter().any(|(_, t)| t.len() < s.len() && t.is_subset(s)))
        .map(|(v, _)| (*v).clone())
        .collect()
}

/// All sign vectors of length `k` orthogonal to every element of `set`.
pub fn orthogonal_complement(k: usize, set: &BTreeSet<SignVector>) -> Result<BTreeSet<SignVector>> {
    check_enumerable(k)?;
    let mut out = BTreeSet::new();
    for w in SignVector::all(k) {
        let mut ok = true;
        for c in set {
            if !sign_orthogonal(&w, c)? {
                ok = false;
                break;
            }
        }
        if ok {
            out.insert(w);
        }
    }
    Ok(out)
}

fn check_enumerable(k: usize) -> Result<()> {
    if k > MAX_ENUMERATION {
        return Err(Error::InvalidInput(format!("ground set of size {k} exceeds {MAX_ENUMERATION}")));
    }
    Ok(())
}

/// Circuits: the support-minimal nonzero vectors.
pub fn circuits(m: &OMatroid) -> Result<BTreeSet<SignVector>> {
    m.validated()?;
    Ok(support_minimal(&m.vectors))
}

/// Covectors: sign vectors orthogonal to every circuit.
pub fn covectors(m: &OMatroid) -> Result<BTreeSet<SignVector>> {
    let c = circuits(m)?;
    orthogonal_complement(m.k, &c)
}

/// Cocircuits: the support-minimal nonzero covectors.
pub fn cocircuits(m: &OMatroid) -> Result<BTreeSet<SignVector>> {
    Ok(support_minimal(&covectors(m)?))
}

/// The dual matroid, whose vectors are the covectors.
pub fn dual(m: &OMatroid) -> Result<OMatroid> {
    OMatroid::new(m.k, covectors(m)?)
}

/// A matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: Vec<Vec<BigRational>>,
    cols: usize,
}

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>, cols: usize) -> Result<Self> {
        for r in &rows {
            check_dim(cols, r.len())?;
        }
        Ok(RationalMatrix { rows, cols })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        RationalMatrix::new(rows.iter().map(|r| r.iter().map(|&v| rat::int(v)).collect()).collect(), cols)
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
}

impl FromStr for RationalMatrix {
    type Err = Error;

    /// Comma-separated rationals, one row per line.  A single line `k=<n>`
    /// with no rows describes the `0 × n` matrix.
    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()).collect();
        let mut cols = None;
        let mut rows = Vec::new();
        for l in lines {
            if let Some(n) = l.strip_prefix("k=") {
                cols = Some(n.trim().parse().map_err(|_| Error::Parse(format!("bad header {l:?}")))?);
                continue;
            }
            rows.push(l.split(',').map(|x| rat::parse(x.trim())).collect::<Result<Vec<_>>>()?);
        }
        let cols = cols.or_else(|| rows.first().map(Vec::len)).ok_or_else(|| Error::Parse("empty matrix".to_string()))?;
        RationalMatrix::new(rows, cols)
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k={}", self.cols)?;
        for r in &self.rows {
            let items: Vec<String> = r.iter().map(rat::format).collect();
            writeln!(f, "{}", items.join(","))?;
        }
        Ok(())
    }
}

/// Whether some `x = yᵀA` has sign pattern σ.  Because the row space is a
/// cone, strict signs can be demanded with margin 1: `x_i ≥ 1` on `+`,
/// `x_i ≤ −1` on `-` and `x_i = 0` on `o`.
fn pattern_realizable(a: &RationalMatrix, sigma: &SignVector) -> Result<bool> {
    let r = a.rows.len();
    let strict: Vec<usize> = sigma.support().into_iter().collect();
    let mut nonneg = vec![false; r];
    nonneg.extend(std::iter::repeat_n(true, strict.len()));
    let mut lp = FeasibilityProblem::new(nonneg);
    for i in 0..a.cols {
        let mut row: Vec<BigRational> = a.rows.iter().map(|ar| ar[i].clone()).collect();
        row.extend(std::iter::repeat_n(BigRational::default(), strict.len()));
        let rhs = match sigma.get(i) {
            Sign::Pos => {
                row[r + strict.iter().position(|&s| s == i).expect("in support")] = rat::int(-1);
                rat::int(1)
            }
            Sign::Neg => {
                row[r + strict.iter().position(|&s| s == i).expect("in support")] = rat::int(1);
                rat::int(-1)
            }
            _ => rat::int(0),
        };
        lp.add_row(row, rhs)?;
    }
    Ok(lp_feasible(&lp)?.is_some())
}

/// Sign patterns of the row space of `a`, decided pattern by pattern with an
/// exact LP.
pub fn realize_sign_vectors(a: &RationalMatrix) -> Result<BTreeSet<SignVector>> {
    realize_sign_vectors_with(a, Exec::default())
}

/// [`realize_sign_vectors`] with an explicit execution policy.
pub fn realize_sign_vectors_with(a: &RationalMatrix, exec: Exec) -> Result<BTreeSet<SignVector>> {
    check_enumerable(a.cols)?;
    let all = SignVector::all(a.cols);
    let flags = par::map(&all, exec, |s| pattern_realizable(a, s));
    let mut out = BTreeSet::new();
    for (s, f) in all.into_iter().zip(flags) {
        if f? {
            out.insert(s);
        }
    }
    Ok(out)
}

/// The oriented matroid of the row space of `a`.
pub fn realize(a: &RationalMatrix) -> Result<OMatroid> {
    OMatroid::new(a.cols, realize_sign_vectors(a)?)
}

/// One identity of [`representation_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    /// Number of points at which both sides were evaluated.
    pub cases: usize,
    /// A point where the two sides differ, if any.
    pub counterexample: Option<String>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Result of [`representation_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepresentationReport {
    pub circuits: usize,
    pub cocircuits: usize,
    pub checks: Vec<IdentityCheck>,
}

impl RepresentationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }
}

/// Points of `({𝟘} ∪ {⊕m, ⊖m : m ∈ grid})^k`.
pub fn grid_points(k: usize, grid: &[BigRational]) -> Vec<SignedVector> {
    let mut values = vec![SignedTrop::zero()];
    for m in grid {
        values.push(SignedTrop::pos(m.clone()));
        values.push(SignedTrop::neg(m.clone()));
    }
    let mut out = vec![Vec::with_capacity(k)];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p: Vec<SignedTrop>| {
                values.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(v.clone());
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(SignedVector::new).collect()
}

/// The default grid of magnitudes `{−1, 0, 1}`.
pub fn default_grid() -> Vec<BigRational> {
    vec![rat::int(-1), rat::int(0), rat::int(1)]
}

/// Compares two predicates on `points`, reporting the first disagreement.
fn compare<F, G>(name: &str, points: &[SignedVector], exec: Exec, lhs: F, rhs: G) -> Result<IdentityCheck>
where
    F: Fn(&SignedVector) -> Result<bool> + Sync + Send,
    G: Fn(&SignedVector) -> Result<bool> + Sync + Send,
{
    let results = par::map(points, exec, |p| -> Result<bool> { Ok(lhs(p)? == rhs(p)?) });
    let mut counterexample = None;
    for (p, r) in points.iter().zip(results) {
        if !r? {
            counterexample = Some(p.to_string());
            break;
        }
    }
    Ok(IdentityCheck { name: name.to_string(), cases: points.len(), counterexample })
}

fn point_set(k: usize, vs: &BTreeSet<SignVector>) -> Result<PointSet> {
    let mut pts: Vec<SignedVector> = vs.iter().map(SignVector::to_signed).collect();
    let zero = SignedVector::zeros(k);
    if !pts.contains(&zero) {
        pts.push(zero);
    }
    PointSet::new(pts)
}

fn orthogonal_to_all(p: &SignedVector, set: &[SignedVector]) -> Result<bool> {
    for d in set {
        if !orthogonal(p, d)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verifies the hull and hyperplane descriptions of the vectors after
/// checking the axioms.
pub fn representation_check(m: &OMatroid, grid: &[BigRational]) -> Result<RepresentationReport> {
    m.validated()?;
    representation_identities(m, grid, Exec::default())
}

/// The identities of [`representation_check`] evaluated on any set of sign
/// vectors, with circuits and cocircuits derived by their definitions.  On a
/// set that is not a matroid some identity is expected to fail.
///
/// The identities, each compared pointwise:
/// - V = sign vectors in whull(C ∪ {𝟘}) = sign vectors orthogonal to D;
/// - wspan(V) = wspan(C) = ⋂_{d ∈ D} H((𝟘, d)) on grid points;
/// - whull(V) = whull(C ∪ {𝟘}) = wspan(V) ∩ [⊖0, ⊕0]^k on grid points;
/// - ((C^⊥ ∩ G)^⊥) = wspan(C) on the grid G.
pub fn representation_identities(m: &OMatroid, grid: &[BigRational], exec: Exec) -> Result<RepresentationReport> {
    let k = m.k;
    check_enumerable(k)?;
    let c = support_minimal(&m.vectors);
    let w = orthogonal_complement(k, &c)?;
    let d = support_minimal(&w);
    let vs = point_set(k, &m.vectors)?;
    let cs = point_set(k, &c)?;
    let ds: Vec<SignedVector> = d.iter().map(SignVector::to_signed).collect();
    let signs: Vec<SignedVector> = SignVector::all(k).iter().map(SignVector::to_signed).collect();
    let g = grid_points(k, grid);
    let in_v = |p: &SignedVector| -> Result<bool> { Ok(m.vectors.contains(&SignVector::from_signed(p)?)) };
    let in_cube = |p: &SignedVector| p.iter().all(|x| x.mag().is_none_or(|mag| *mag <= BigRational::default()));

    let mut checks = vec![
        compare("vectors = sign vectors of whull(C ∪ {𝟘})", &signs, exec, in_v, |p| tc_hull_member(&cs, p))?,
        compare("vectors = sign vectors orthogonal to every cocircuit", &signs, exec, in_v, |p| orthogonal_to_all(p, &ds))?,
        compare("wspan(V) = wspan(C) on the grid", &g, exec, |p| wspan_member(&vs, p), |p| wspan_member(&cs, p))?,
        compare("wspan(C) = ⋂ H((𝟘, d)) on the grid", &g, exec, |p| wspan_member(&cs, p), |p| orthogonal_to_all(p, &ds))?,
        compare("whull(V) = whull(C ∪ {𝟘}) on the grid", &g, exec, |p| tc_hull_member(&vs, p), |p| tc_hull_member(&cs, p))?,
        compare("whull(V) = wspan(V) ∩ [⊖0, ⊕0]^k on the grid", &g, exec, |p| tc_hull_member(&vs, p), |p| {
            Ok(in_cube(p) && wspan_member(&vs, p)?)
        })?,
    ];
    let c_signed: Vec<SignedVector> = c.iter().map(SignVector::to_signed).collect();
    let flags = par::map(&g, exec, |p| orthogonal_to_all(p, &c_signed));
    let mut perp = Vec::new();
    for (p, f) in g.iter().zip(flags) {
        if f? {
            perp.push(p.clone());
        }
    }
    checks.push(compare("(C^⊥)^⊥ = wspan(C) on the grid", &g, exec, |p| orthogonal_to_all(p, &perp), |p| {
        wspan_member(&cs, p)
    })?);
    Ok(RepresentationReport { circuits: c.len(), cocircuits: d.len(), checks })
}

/// Pairs `(λ ⊙ c, μ ⊙ d)` of scaled circuits and cocircuits that fail to be
/// orthogonal, for `λ, μ` ranging over `±grid`.
pub fn scaled_orthogonality_violations(
    c: &BTreeSet<SignVector>,
    d: &BTreeSet<SignVector>,
    grid: &[BigRational],
) -> Result<Vec<(SignedVector, SignedVector)>> {
    let scalars: Vec<SignedTrop> = grid.iter().flat_map(|m| [SignedTrop::pos(m.clone()), SignedTrop::neg(m.clone())]).collect();
    let mut bad = Vec::new();
    for ci in c {
        for di in d {
            for l in &scalars {
                for mu in &scalars {
                    let u = ci.to_signed().scale(l);
                    let v = di.to_signed().scale(mu);
                    if !orthogonal(&u, &v)? {
                        bad.push((u, v));
                    }
                }
            }
        }
    }
    Ok(bad)
}

/// Vectors of minimal support in the span of `basis` (rows over the
/// Puiseux field), one per support up to scaling.
pub fn field_circuits(basis: &[Vec<PuiseuxNum>], k: usize) -> Result<Vec<PuiseuxVector>> {
    check_enumerable(k)?;
    let (red, _) = rref(basis);
    let rho = red.len();
    let mut out = Vec::new();
    if rho == 0 {
        return Ok(out);
    }
    for mask in 1u32..(1u32 << k) {
        let outside: Vec<usize> = (0..k).filter(|j| mask & (1 << j) == 0).collect();
        let system: Vec<Vec<PuiseuxNum>> = outside.iter().map(|&j| red.iter().map(|row| row[j].clone()).collect()).collect();
        let ker = if system.is_empty() {
            // No constraints: the whole space is supported inside the mask.
            (0..rho).map(|i| (0..rho).map(|j| if i == j { PuiseuxNum::one() } else { PuiseuxNum::zero() }).collect()).collect()
        } else {
            nullspace(&system, rho)
        };
        if ker.len() != 1 {
            continue;
        }
        let v: Vec<PuiseuxNum> = (0..k)
            .map(|j| red.iter().zip(&ker[0]).fold(PuiseuxNum::zero(), |acc, (row, z)| acc.add(&row[j].mul(z))))
            .collect();
        let support = v.iter().enumerate().filter(|(_, x)| !x.is_zero()).fold(0u32, |acc, (j, _)| acc | (1 << j));
        if support == mask {
            out.push(PuiseuxVector::new(v));
        }
    }
    Ok(out)
}

/// Result of [`valuated_instance_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValuatedReport {
    pub circuits: Vec<String>,
    pub cocircuits: Vec<String>,
    pub samples: usize,
    /// Failures as human-readable descriptions.
    pub failures: Vec<String>,
}

impl ValuatedReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Instance check for a linear space `L` over the Puiseux field spanned by
/// the rows `t`: with `C`, `D` the signed valuations of the circuits of `L`
/// and of `L^⊥`, every `c ∈ C` is orthogonal to every `d ∈ D`, and for
/// random elements `v ∈ L`, `sval(v)` is orthogonal to `D` and lies in
/// `wspan(C)`.
pub fn valuated_instance_check<R: Rng>(t: &[PuiseuxVector], samples: usize, rng: &mut R) -> Result<ValuatedReport> {
    let k = t.first().map_or(0, PuiseuxVector::dim);
    for row in t {
        check_dim(k, row.dim())?;
    }
    let rows: Vec<Vec<PuiseuxNum>> = t.iter().map(|r| r.entries().to_vec()).collect();
    let circ = field_circuits(&rows, k)?;
    let kernel = nullspace(&rows, k);
    let cocirc = field_circuits(&kernel, k)?;
    let c: Vec<SignedVector> = circ.iter().map(PuiseuxVector::sval).collect();
    let d: Vec<SignedVector> = cocirc.iter().map(PuiseuxVector::sval).collect();
    let mut failures = Vec::new();
    for ci in &c {
        for di in &d {
            if !orthogonal(ci, di)? {
                failures.push(format!("circuit {ci} is not orthogonal to cocircuit {di}"));
            }
        }
    }
    let mut gens = c.clone();
    gens.push(SignedVector::zeros(k));
    let cs = PointSet::new(gens)?;
    for _ in 0..samples {
        let mut v = PuiseuxVector::zeros(k);
        for row in t {
            let coeff = loop {
                let c = rng.gen_range(-3i64..=3);
                if c != 0 {
                    break c;
                }
            };
            let e = rat::frac(rng.gen_range(-6i64..=6), 2);
            v = v.add(&row.scale(&PuiseuxNum::monomial(rat::int(coeff), e)))?;
        }
        let s = v.sval();
        if !orthogonal_to_all(&s, &d)? {
            failures.push(format!("sval {s} of {v} is not orthogonal to every cocircuit"));
        }
        if !wspan_member(&cs, &s)? {
            failures.push(format!("sval {s} of {v} is outside wspan of the circuits"));
        }
    }
    Ok(ValuatedReport {
        circuits: c.iter().map(ToString::to_string).collect(),
        cocircuits: d.iter().map(ToString::to_string).collect(),
        samples,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::case_rng;

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<SignVector> {
        items.iter().map(|s| sv(s)).collect()
    }

    #[test]
    fn axioms_on_small_sets() {
        assert!(axioms_check(2, &set(&["oo"])).passed());
        assert!(axioms_check(2, &set(&["oo", "++", "--"])).passed());
        let r = axioms_check(2, &set(&["oo", "+o"]));
        assert!(r.violated(Axiom::V1));
        assert!(axioms_check(2, &set(&["++"])).violated(Axiom::V0));
        // Missing compositions and eliminations.
        let r = axioms_check(2, &set(&["oo", "+o", "-o", "o+", "o-"]));
        assert!(r.violated(Axiom::V2));
        let r = axioms_check(2, &set(&["oo", "++", "--", "+-", "-+"]));
        assert!(r.violated(Axiom::V3));
    }

    #[test]
    fn orthogonality() {
        assert!(sign_orthogonal(&sv("++"), &sv("+-")).unwrap());
        assert!(!sign_orthogonal(&sv("+o"), &sv("+-")).unwrap());
        assert!(sign_orthogonal(&sv("+-"), &sv("oo")).unwrap());
        assert!(sign_orthogonal(&sv("o+"), &sv("+o")).unwrap());
        let u: SignedVector = "[+1, -2]".parse().unwrap();
        let v: SignedVector = "[+2, +1]".parse().unwrap();
        assert!(orthogonal(&u, &v).unwrap());
        assert!(sign_orthogonal(&sv("+"), &sv("++")).is_err());
    }

    #[test]
    fn realization_of_small_matrices() {
        let a = RationalMatrix::from_ints(&[&[1, 1]]).unwrap();
        assert_eq!(realize_sign_vectors(&a).unwrap(), set(&["oo", "++", "--"]));
        let z = RationalMatrix::from_ints(&[&[0, 0, 0]]).unwrap();
        assert_eq!(realize_sign_vectors(&z).unwrap(), set(&["ooo"]));
        let b = RationalMatrix::from_ints(&[&[1, 0, -1], &[0, 1, -1]]).unwrap();
        let m = realize(&b).unwrap();
        assert!(axioms_check(3, m.vectors()).passed());
        // Sign patterns of the plane x + y + z = 0: all except the two
        // constant nonzero patterns and those with exactly one nonzero entry.
        assert_eq!(m.vectors().len(), 13);
        let csv: RationalMatrix = "1,0,-1\n0,1,-1\n".parse().unwrap();
        assert_eq!(csv, b);
    }

    #[test]
    fn circuits_and_cocircuits() {
        let m = realize(&RationalMatrix::from_ints(&[&[1, 1]]).unwrap()).unwrap();
        assert_eq!(circuits(&m).unwrap(), set(&["++", "--"]));
        assert_eq!(cocircuits(&m).unwrap(), set(&["+-", "-+"]));
        let free = realize(&RationalMatrix::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap()).unwrap();
        assert_eq!(free.vectors().len(), 27);
        assert_eq!(circuits(&free).unwrap(), set(&["+oo", "-oo", "o+o", "o-o", "oo+", "oo-"]));
        assert!(cocircuits(&free).unwrap().is_empty());
        let trivial = OMatroid::new(2, set(&["oo"])).unwrap();
        assert!(circuits(&trivial).unwrap().is_empty());
        assert!(circuits(&OMatroid::new(2, set(&["oo", "+o"])).unwrap()).is_err());
    }

    #[test]
    fn duality_and_orthogonality_of_circuits() {
        let m = realize(&RationalMatrix::from_ints(&[&[1, 0, -1], &[0, 1, -1]]).unwrap()).unwrap();
        let dual = dual(&m).unwrap();
        assert!(axioms_check(3, dual.vectors()).passed());
        let c = circuits(&m).unwrap();
        let d = cocircuits(&m).unwrap();
        for ci in &c {
            for di in &d {
                assert!(sign_orthogonal(ci, di).unwrap());
            }
        }
        assert!(scaled_orthogonality_violations(&c, &d, &default_grid()).unwrap().is_empty());
    }

    #[test]
    fn representation_of_a_rank_one_matroid() {
        let m = realize(&RationalMatrix::from_ints(&[&[1, 1]]).unwrap()).unwrap();
        let report = representation_check(&m, &default_grid()).unwrap();
        for c in &report.checks {
            assert!(c.passed(), "{} fails at {:?}", c.name, c.counterexample);
        }
    }

    #[test]
    fn deleting_a_vector_breaks_an_identity() {
        let m = realize(&RationalMatrix::from_ints(&[&[1, 1]]).unwrap()).unwrap();
        let broken = m.without(&sv("--"));
        assert!(representation_check(&broken, &default_grid()).is_err());
        let report = representation_identities(&broken, &default_grid(), Exec::Sequential).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn file_format_round_trip() {
        let m = realize(&RationalMatrix::from_ints(&[&[1, 1]]).unwrap()).unwrap();
        let text = m.to_string();
        assert!(text.starts_with("k=2\n"));
        assert_eq!(text.parse::<OMatroid>().unwrap(), m);
    }

    #[test]
    fn valuated_example_matrix() {
        let t: Vec<PuiseuxVector> =
            ["[1, 1, 1, 1]", "[t^2, t^-1, -t^3, 1]", "[-t^-1, -t, 0, t^-2]"].iter().map(|s| s.parse().unwrap()).collect();
        let report = valuated_instance_check(&t, 6, &mut case_rng(3, 0)).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert!(!report.circuits.is_empty());
        assert!(!report.cocircuits.is_empty());
    }
}
