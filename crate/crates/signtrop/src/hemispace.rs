//! Candidate TC-hemispaces and grid checks of the properties every
//! TC-hemispace must have.
//!
//! A candidate is sandwiched by a halfspace: it contains the open halfspace
//! `H⁺(a)`, plus the points of the boundary `H̄⁺(a) ∖ H⁺(a)` accepted by a
//! finite list of selector records, plus finitely many explicit extra points
//! (which need not lie in `H̄⁺(a)`, so that broken candidates can be
//! expressed too).  Hemispaces are infinite, so every check runs on a finite
//! grid.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::halfspace::{boundary_profile, eval_affine, BoundaryProfile, Halfspace, HalfspaceKind};
use crate::hull::{closure_check, Grid};
use crate::par::{self, Exec};
use crate::sym::{Sign, SignedTrop};
use crate::vector::{split_bracketed, SignedVector};

/// Comparison used in a selector constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Ge,
    Gt,
    Le,
    Lt,
    Eq,
}

impl Cmp {
    fn symbol(self) -> &'static str {
        match self {
            Cmp::Ge => ">=",
            Cmp::Gt => ">",
            Cmp::Le => "<=",
            Cmp::Lt => "<",
            Cmp::Eq => "=",
        }
    }

    fn holds(self, x: &SignedTrop, v: &SignedTrop) -> bool {
        match self {
            Cmp::Ge => x >= v,
            Cmp::Gt => x > v,
            Cmp::Le => x <= v,
            Cmp::Lt => x < v,
            Cmp::Eq => x == v,
        }
    }
}

/// `x_coord ⋈ value` with `coord ∈ [d]` (1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coord: usize,
    pub cmp: Cmp,
    pub value: SignedTrop,
}

/// Accepts boundary points whose Argmax equals `argmax` (any if `None`),
/// whose coordinates have the listed signs and which satisfy every
/// constraint.  Indices are coefficient indices: 0 is the constant term,
/// `k ≥ 1` is coordinate `x_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SelectorRecord {
    pub argmax: Option<BTreeSet<usize>>,
    pub signs: Vec<(usize, Sign)>,
    pub constraints: Vec<Constraint>,
}

impl SelectorRecord {
    fn validate(&self, d: usize) -> Result<()> {
        let bad = |k: usize| Err(Error::InvalidInput(format!("selector index {k} out of range for d = {d}")));
        if let Some(k) = self.argmax.iter().flatten().find(|&&k| k > d) {
            return bad(*k);
        }
        if let Some((k, _)) = self.signs.iter().find(|(k, _)| *k == 0 || *k > d) {
            return bad(*k);
        }
        if let Some(c) = self.constraints.iter().find(|c| c.coord == 0 || c.coord > d) {
            return bad(c.coord);
        }
        Ok(())
    }

    pub fn matches(&self, profile: &BoundaryProfile, x: &SignedVector) -> bool {
        self.argmax.as_ref().is_none_or(|a| *a == profile.argmax)
            && self.signs.iter().all(|(k, s)| x.get(k - 1).sign() == *s)
            && self.constraints.iter().all(|c| c.cmp.holds(x.get(c.coord - 1), &c.value))
    }
}

fn sign_char(s: Sign) -> char {
    match s {
        Sign::Pos => '+',
        Sign::Neg => '-',
        _ => '0',
    }
}

impl fmt::Display for SelectorRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.argmax {
            None => write!(f, "argmax=*")?,
            Some(a) => {
                let items: Vec<String> = a.iter().map(usize::to_string).collect();
                write!(f, "argmax={{{}}}", items.join(","))?;
            }
        }
        let signs: Vec<String> = self.signs.iter().map(|(k, s)| format!("{k}:{}", sign_char(*s))).collect();
        let cons: Vec<String> =
            self.constraints.iter().map(|c| format!("x{}{}{}", c.coord, c.cmp.symbol(), c.value)).collect();
        write!(f, " signs=[{}] constraints=[{}]", signs.join(","), cons.join(","))
    }
}

/// The text after `key=` up to the matching closing delimiter.
fn field<'a>(s: &'a str, key: &str) -> Option<&'a str> {
    let start = s.find(&format!("{key}="))? + key.len() + 1;
    let rest = &s[start..];
    let close = match rest.chars().next()? {
        '{' => '}',
        '[' => ']',
        _ => return Some(rest.split_whitespace().next().unwrap_or("")),
    };
    let mut depth = 0;
    for (i, c) in rest.char_indices() {
        if c == '[' || c == '{' {
            depth += 1;
        } else if c == ']' || c == '}' {
            depth -= 1;
            if depth == 0 && c == close {
                return Some(&rest[..=i]);
            }
        }
    }
    None
}

fn parse_index(s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad index {s:?}")))
}

fn parse_constraint(s: &str) -> Result<Constraint> {
    let s = s.trim().replace('≥', ">=").replace('≤', "<=");
    let body = s.strip_prefix('x').ok_or_else(|| Error::Parse(format!("constraint must start with x: {s:?}")))?;
    let pos = body.find(['<', '>', '=']).ok_or_else(|| Error::Parse(format!("no comparison in {s:?}")))?;
    let coord = parse_index(&body[..pos])?;
    let rest = &body[pos..];
    let (cmp, value) = [("<=", Cmp::Le), (">=", Cmp::Ge), ("<", Cmp::Lt), (">", Cmp::Gt), ("=", Cmp::Eq)]
        .iter()
        .find_map(|(sym, c)| rest.strip_prefix(sym).map(|v| (*c, v)))
        .expect("a comparison character was found");
    Ok(Constraint { coord, cmp, value: value.trim().parse()? })
}

impl FromStr for SelectorRecord {
    type Err = Error;

    /// `argmax={0,1} signs=[1:+] constraints=[x2>=+3]`; `argmax=*` matches any
    /// Argmax and missing fields are empty.
    fn from_str(s: &str) -> Result<Self> {
        let argmax = match field(s, "argmax") {
            None | Some("*") => None,
            Some(a) => {
                let inner = a
                    .strip_prefix('{')
                    .and_then(|r| r.strip_suffix('}'))
                    .ok_or_else(|| Error::Parse(format!("bad argmax {a:?}")))?;
                Some(inner.split(',').filter(|t| !t.trim().is_empty()).map(parse_index).collect::<Result<_>>()?)
            }
        };
        let signs = match field(s, "signs") {
            None => Vec::new(),
            Some(t) => split_bracketed(t)?
                .into_iter()
                .map(|item| {
                    let (k, sg) = item.split_once(':').ok_or_else(|| Error::Parse(format!("bad sign {item:?}")))?;
                    let sign = match sg.trim() {
                        "+" => Sign::Pos,
                        "-" => Sign::Neg,
                        "0" | "o" => Sign::Zero,
                        other => return Err(Error::Parse(format!("bad sign {other:?}"))),
                    };
                    Ok((parse_index(k)?, sign))
                })
                .collect::<Result<_>>()?,
        };
        let constraints = match field(s, "constraints") {
            None => Vec::new(),
            Some(t) => split_bracketed(t)?.into_iter().map(parse_constraint).collect::<Result<_>>()?,
        };
        Ok(SelectorRecord { argmax, signs, constraints })
    }
}

/// A candidate TC-hemispace described by its sandwiching halfspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HemispaceCandidate {
    a: SignedVector,
    pub records: Vec<SelectorRecord>,
    pub extra_points: Vec<SignedVector>,
}

impl HemispaceCandidate {
    pub fn new(a: SignedVector, records: Vec<SelectorRecord>, extra_points: Vec<SignedVector>) -> Result<Self> {
        let h = Halfspace::new(a, HalfspaceKind::Open)?;
        let d = h.dim();
        for r in &records {
            r.validate(d)?;
        }
        for p in &extra_points {
            check_dim(d, p.dim())?;
        }
        Ok(HemispaceCandidate { a: h.coeffs().clone(), records, extra_points })
    }

    /// `H⁺(a)`.
    pub fn open(a: SignedVector) -> Result<Self> {
        HemispaceCandidate::new(a, Vec::new(), Vec::new())
    }

    /// `H̄⁺(a)`.
    pub fn closed(a: SignedVector) -> Result<Self> {
        HemispaceCandidate::new(a, vec![SelectorRecord::default()], Vec::new())
    }

    pub fn coeffs(&self) -> &SignedVector {
        &self.a
    }

    pub fn dim(&self) -> usize {
        self.a.dim() - 1
    }

    pub fn contains(&self, x: &SignedVector) -> Result<bool> {
        let e = eval_affine(&self.a, x)?;
        if e.is_positive() {
            return Ok(true);
        }
        if e.is_balanced_or_zero() {
            let profile = boundary_profile(&self.a, x)?;
            if self.records.iter().any(|r| r.matches(&profile, x)) {
                return Ok(true);
            }
        }
        Ok(self.extra_points.contains(x))
    }

    /// Grid points in the candidate.
    pub fn members(&self, grid: &Grid) -> Result<Vec<SignedVector>> {
        check_dim(self.dim(), grid.dim())?;
        Ok(grid.points().into_iter().filter(|p| self.contains(p).unwrap_or(false)).collect())
    }

    /// A grid adapted to the candidate: integer-spaced (or finer, if the
    /// data has fractional parts) magnitudes covering every difference
    /// `|a_0| − |a_k|` and every threshold, with one level of margin on
    /// either side.
    pub fn default_grid(&self) -> Result<Grid> {
        let mut anchors: Vec<BigRational> = vec![BigRational::zero()];
        if let Some(a0) = self.a.get(0).mag() {
            for k in 1..self.a.dim() {
                if let Some(ak) = self.a.get(k).mag() {
                    anchors.push(a0 - ak);
                }
            }
        }
        for r in &self.records {
            anchors.extend(r.constraints.iter().filter_map(|c| c.value.mag().cloned()));
        }
        for p in &self.extra_points {
            anchors.extend(crate::vector::magnitudes(p).cloned());
        }
        let step = rational_gcd(&anchors).unwrap_or_else(BigRational::one);
        let lo = anchors.iter().min().cloned().unwrap_or_default() - &step;
        let hi = anchors.iter().max().cloned().unwrap_or_default() + &step;
        let levels = ((&hi - &lo) / &step).to_integer();
        if levels > BigInt::from(12) {
            return Err(Error::InvalidGrid(format!("{levels} magnitude levels are too many for a grid check")));
        }
        let mut mags = Vec::new();
        let mut cur = lo;
        while cur <= hi {
            mags.push(cur.clone());
            cur += &step;
        }
        Grid::new(mags, self.dim())
    }
}

/// The largest rational dividing every pairwise difference, if any differ.
fn rational_gcd(values: &[BigRational]) -> Option<BigRational> {
    let first = values.first()?;
    let diffs: Vec<BigRational> = values.iter().map(|v| (v - first).abs()).filter(|d| !d.is_zero()).collect();
    let lcm = diffs.iter().fold(BigInt::one(), |acc, d| acc.lcm(d.denom()));
    let g = diffs
        .iter()
        .map(|d| (d * BigRational::from_integer(lcm.clone())).to_integer())
        .fold(BigInt::zero(), |acc, n| acc.gcd(&n));
    (!g.is_zero()).then(|| BigRational::new(g, lcm))
}

impl fmt::Display for HemispaceCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "a {}", self.a)?;
        for r in &self.records {
            writeln!(f, "record {r}")?;
        }
        for p in &self.extra_points {
            writeln!(f, "extra {p}")?;
        }
        Ok(())
    }
}

impl FromStr for HemispaceCandidate {
    type Err = Error;

    /// Lines `a [a0, ..., ad]`, `record <selector>` and `extra <point>`;
    /// blank lines and `#` comments are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let mut a = None;
        let mut records = Vec::new();
        let mut extra = Vec::new();
        for line in s.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()) {
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match key {
                "a" => a = Some(rest.trim().trim_start_matches('=').trim().parse()?),
                "record" => records.push(rest.parse()?),
                "extra" => extra.push(rest.trim().parse()?),
                other => return Err(Error::Parse(format!("unknown candidate line {other:?}"))),
            }
        }
        let a = a.ok_or_else(|| Error::Parse("missing `a` line".to_string()))?;
        HemispaceCandidate::new(a, records, extra)
    }
}

/// `H⁺(a) ⊆ G ⊆ H̄⁺(a)` on every grid point.
pub fn sandwich_check(g: &HemispaceCandidate, grid: &Grid) -> Result<bool> {
    check_dim(g.dim(), grid.dim())?;
    let open = Halfspace::new(g.a.clone(), HalfspaceKind::Open)?;
    let closed = open.with_kind(HalfspaceKind::Closed);
    let pts = grid.points();
    Ok(par::all(&pts, Exec::default(), |p| {
        let inside = g.contains(p).unwrap_or(false);
        (!open.member(p).unwrap_or(false) || inside) && (!inside || closed.member(p).unwrap_or(false))
    }))
}

/// A pair `x ∈ G`, `y ∉ G` with equal Argmax and `domin⁺(a,x) ⊆ domin⁺(a,y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternViolation {
    pub x: SignedVector,
    pub y: SignedVector,
}

/// Every grid pair violating the boundary-pattern rule (for members with a
/// nonempty Argmax).  An empty report is necessary for a TC-hemispace.
pub fn boundary_pattern_check(g: &HemispaceCandidate, grid: &Grid) -> Result<Vec<PatternViolation>> {
    check_dim(g.dim(), grid.dim())?;
    let pts = grid.points();
    let info: Vec<(bool, BoundaryProfile)> = pts
        .iter()
        .map(|p| Ok((g.contains(p)?, boundary_profile(&g.a, p)?)))
        .collect::<Result<_>>()?;
    let found = par::map(&(0..pts.len()).collect::<Vec<_>>(), Exec::default(), |&i| {
        let (inside, px) = &info[i];
        if !inside || px.argmax.is_empty() {
            return Vec::new();
        }
        (0..pts.len())
            .filter(|&j| {
                let (in_y, py) = &info[j];
                !in_y && py.argmax == px.argmax && px.domin_plus.is_subset(&py.domin_plus)
            })
            .map(|j| PatternViolation { x: pts[i].clone(), y: pts[j].clone() })
            .collect()
    });
    Ok(found.into_iter().flatten().collect())
}

/// Both the member set and its complement on the grid pass
/// [`closure_check`].
pub fn hemispace_pair_check(g: &HemispaceCandidate, grid: &Grid) -> Result<bool> {
    let (inside, outside): (Vec<SignedVector>, Vec<SignedVector>) = {
        let pts = grid.points();
        let flags = pts.iter().map(|p| g.contains(p)).collect::<Result<Vec<bool>>>()?;
        let mut ins = Vec::new();
        let mut outs = Vec::new();
        for (p, f) in pts.into_iter().zip(flags) {
            if f {
                ins.push(p);
            } else {
                outs.push(p);
            }
        }
        (ins, outs)
    };
    Ok(closure_check(&inside, grid)?.is_closed() && closure_check(&outside, grid)?.is_closed())
}

/// A member `x` with nonempty Argmax and a non-member `y` that one of the
/// structural rules says must be a member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleViolation {
    pub rule: &'static str,
    pub x: SignedVector,
    pub y: SignedVector,
}

/// Checks three consequences of being a TC-hemispace on the grid:
/// scaling a member without changing its Argmax keeps it inside
/// (`translation`); equal Argmax and equal signs on the Argmax transfer
/// membership (`slice`); and the box obtained by balancing the coordinates
/// outside `domin⁺(a, x)` lies inside (`box`).
pub fn structural_rules_check(g: &HemispaceCandidate, grid: &Grid) -> Result<Vec<RuleViolation>> {
    check_dim(g.dim(), grid.dim())?;
    let pts = grid.points();
    let mut info = Vec::with_capacity(pts.len());
    for p in &pts {
        info.push((g.contains(p)?, boundary_profile(&g.a, p)?));
    }
    let step = grid.step();
    let shifts: Vec<BigRational> = if step.is_zero() {
        Vec::new()
    } else {
        let n = grid.magnitudes().len() as i64;
        (1 - n..n).map(|s| &step * BigRational::from_integer(s.into())).collect()
    };
    let idx: Vec<usize> = (0..pts.len()).collect();
    let found = par::map(&idx, Exec::default(), |&i| {
        let mut out = Vec::new();
        let (inside, px) = &info[i];
        if !inside || px.argmax.is_empty() {
            return out;
        }
        let x = &pts[i];
        for rho in &shifts {
            let y = x.scale(&SignedTrop::pos(rho.clone()));
            if !grid.contains(&y) {
                continue;
            }
            if boundary_profile(&g.a, &y).is_ok_and(|py| py.argmax == px.argmax) && !g.contains(&y).unwrap_or(false) {
                out.push(RuleViolation { rule: "translation", x: x.clone(), y });
            }
        }
        for (j, y) in pts.iter().enumerate() {
            let (in_y, py) = &info[j];
            if *in_y {
                continue;
            }
            let same_signs = px.argmax.iter().filter(|&&k| k > 0).all(|&k| x.get(k - 1).sign() == y.get(k - 1).sign());
            if py.argmax == px.argmax && same_signs {
                out.push(RuleViolation { rule: "slice", x: x.clone(), y: y.clone() });
            }
            let in_box = (1..=x.dim()).all(|l| {
                if px.domin_plus.contains(&l) {
                    y.get(l - 1) == x.get(l - 1)
                } else {
                    match (y.get(l - 1).mag(), x.get(l - 1).mag()) {
                        (None, _) => true,
                        (Some(m), Some(bound)) => m <= bound,
                        (Some(_), None) => false,
                    }
                }
            });
            if in_box {
                out.push(RuleViolation { rule: "box", x: x.clone(), y: y.clone() });
            }
        }
        out
    });
    Ok(found.into_iter().flatten().collect())
}

/// Distinct candidates (by their member sets on `grid`), keeping the first.
pub fn dedup_by_members(cands: Vec<HemispaceCandidate>, grid: &Grid) -> Result<Vec<HemispaceCandidate>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for c in cands {
        if seen.insert(c.members(grid)?) {
            out.push(c);
        }
    }
    Ok(out)
}

/// Candidates `H⁺(a) ∪ {boundary points with x_k ≥ c}` and
/// `… with x_k ≤ c` for every grid value c, plus `H⁺(a)` and `H̄⁺(a)`.
pub fn threshold_family(a: &SignedVector, coord: usize, grid: &Grid) -> Result<Vec<HemispaceCandidate>> {
    let mut out = vec![HemispaceCandidate::open(a.clone())?, HemispaceCandidate::closed(a.clone())?];
    for c in grid.values() {
        for cmp in [Cmp::Ge, Cmp::Le] {
            let rec = SelectorRecord {
                argmax: None,
                signs: Vec::new(),
                constraints: vec![Constraint { coord, cmp, value: c.clone() }],
            };
            out.push(HemispaceCandidate::new(a.clone(), vec![rec], Vec::new())?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> SignedVector {
        s.parse().unwrap()
    }

    #[test]
    fn record_round_trip() {
        let r: SelectorRecord = "argmax={0,1} signs=[1:+, 2:0] constraints=[x2>=+3, x1 < -1/2]".parse().unwrap();
        assert_eq!(r.argmax, Some([0, 1].into_iter().collect()));
        assert_eq!(r.signs, vec![(1, Sign::Pos), (2, Sign::Zero)]);
        assert_eq!(r.constraints[1].cmp, Cmp::Lt);
        let again: SelectorRecord = r.to_string().parse().unwrap();
        assert_eq!(again, r);
        let any: SelectorRecord = "argmax=*".parse().unwrap();
        assert_eq!(any, SelectorRecord::default());
        assert!("argmax={0} constraints=[y1>=+0]".parse::<SelectorRecord>().is_err());
    }

    #[test]
    fn candidate_round_trip() {
        let text = "a [o, +0, o]\nrecord argmax=* signs=[1:0] constraints=[x2>=+1]\nextra [-5, -5]\n";
        let c: HemispaceCandidate = text.parse().unwrap();
        assert_eq!(c.to_string().parse::<HemispaceCandidate>().unwrap(), c);
        assert!(c.contains(&v("[+-3, -9]")).unwrap());
        assert!(c.contains(&v("[o, +2]")).unwrap());
        assert!(!c.contains(&v("[o, +0]")).unwrap());
        assert!(c.contains(&v("[-5, -5]")).unwrap());
        assert!("a [o, +0]\nrecord argmax={3}".parse::<HemispaceCandidate>().is_err());
    }

    #[test]
    fn sandwich_examples() {
        let a = v("[-0, +0, o]");
        let grid = Grid::integer(-1, 1, 2).unwrap();
        assert!(sandwich_check(&HemispaceCandidate::closed(a.clone()).unwrap(), &grid).unwrap());
        assert!(sandwich_check(&HemispaceCandidate::open(a.clone()).unwrap(), &grid).unwrap());
        let bad = HemispaceCandidate::new(a, Vec::new(), vec![v("[+-1, o]")]).unwrap();
        assert!(!sandwich_check(&bad, &grid).unwrap());
    }

    #[test]
    fn grid_is_uniform_around_the_data() {
        let c: HemispaceCandidate = "a [-0, +0, o]\nrecord constraints=[x2>=+1/2]".parse().unwrap();
        let g = c.default_grid().unwrap();
        assert_eq!(g.step(), BigRational::new(1.into(), 2.into()));
        assert!(g.contains(&v("[+0, +1/2]")));
    }
}
