//! The symmetrized semiring 𝕊 and its signed part 𝕋±.
//!
//! An element is a sign tag together with an exact rational magnitude.  The
//! tropical zero 𝟘 is a dedicated variant without a magnitude.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat;

/// Sign tag of an element of 𝕊.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
    Bal,
}

impl Sign {
    /// Sign of a tropical product.
    pub fn mul(self, other: Sign) -> Sign {
        use Sign::*;
        match (self, other) {
            (Zero, _) | (_, Zero) => Zero,
            (Bal, _) | (_, Bal) => Bal,
            (a, b) if a == b => Pos,
            _ => Neg,
        }
    }

    /// ⊖ applied to a sign.
    pub fn negate(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
            s => s,
        }
    }

    /// Single-character token used in sign-vector notation.
    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
            Sign::Bal => 'b',
            Sign::Zero => 'o',
        }
    }
}

/// An element of the symmetrized semiring 𝕊.
///
/// The magnitude of [`Sign::Zero`] is normalised to 0 and never observed, so
/// derived equality and hashing are structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymNum {
    sign: Sign,
    mag: BigRational,
}

/// Result of [`SymNum::compare`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    /// `a > b`, i.e. `a ⊖ b` is positive.
    pub gt: bool,
    /// `a ⊵ b`, i.e. `a ⊖ b` is positive, balanced or 𝟘.
    pub teq: bool,
    /// Structural equality.
    pub eq: bool,
}

/// The unary operators of 𝕊.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unary {
    Negate,
    Balance,
    Abs,
}

impl SymNum {
    /// The tropical zero 𝟘.
    pub fn zero() -> Self {
        SymNum { sign: Sign::Zero, mag: BigRational::zero() }
    }

    /// The tropical one ⊕0.
    pub fn one() -> Self {
        SymNum { sign: Sign::Pos, mag: BigRational::zero() }
    }

    /// Builds `sign mag`; the magnitude is discarded for [`Sign::Zero`].
    pub fn new(sign: Sign, mag: BigRational) -> Self {
        if sign == Sign::Zero {
            Self::zero()
        } else {
            SymNum { sign, mag }
        }
    }

    pub fn pos(mag: BigRational) -> Self {
        Self::new(Sign::Pos, mag)
    }

    pub fn neg(mag: BigRational) -> Self {
        Self::new(Sign::Neg, mag)
    }

    pub fn bal(mag: BigRational) -> Self {
        Self::new(Sign::Bal, mag)
    }

    /// ⊕n for an integer magnitude.
    pub fn pos_int(n: i64) -> Self {
        Self::pos(rat::int(n))
    }

    /// ⊖n for an integer magnitude.
    pub fn neg_int(n: i64) -> Self {
        Self::neg(rat::int(n))
    }

    /// •n for an integer magnitude.
    pub fn bal_int(n: i64) -> Self {
        Self::bal(rat::int(n))
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// The magnitude |a|; `None` for 𝟘.
    pub fn mag(&self) -> Option<&BigRational> {
        if self.is_zero() {
            None
        } else {
            Some(&self.mag)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == Sign::Zero
    }

    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Pos
    }

    pub fn is_negative(&self) -> bool {
        self.sign == Sign::Neg
    }

    pub fn is_balanced(&self) -> bool {
        self.sign == Sign::Bal
    }

    /// Membership in 𝕋• (balanced elements together with 𝟘).
    pub fn is_balanced_or_zero(&self) -> bool {
        matches!(self.sign, Sign::Bal | Sign::Zero)
    }

    /// Membership in 𝕋≥𝟘 (positive elements together with 𝟘).
    pub fn is_nonnegative(&self) -> bool {
        matches!(self.sign, Sign::Pos | Sign::Zero)
    }

    /// Membership in 𝕋±.
    pub fn is_signed(&self) -> bool {
        self.sign != Sign::Bal
    }

    /// Compares magnitudes, treating 𝟘 as smaller than everything else.
    pub fn cmp_mag(&self, other: &SymNum) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => self.mag.cmp(&other.mag),
        }
    }

    /// Tropical addition: the larger magnitude wins; a tie between different
    /// or balanced signs produces the balanced element of that magnitude.
    pub fn add(&self, other: &SymNum) -> SymNum {
        match self.cmp_mag(other) {
            Ordering::Greater => self.clone(),
            Ordering::Less => other.clone(),
            Ordering::Equal => {
                if self.sign == other.sign {
                    self.clone()
                } else {
                    SymNum::bal(self.mag.clone())
                }
            }
        }
    }

    /// Tropical multiplication: magnitudes add and signs multiply.
    pub fn mul(&self, other: &SymNum) -> SymNum {
        let sign = self.sign.mul(other.sign);
        if sign == Sign::Zero {
            return SymNum::zero();
        }
        SymNum { sign, mag: &self.mag + &other.mag }
    }

    /// `a ⊖ b`.
    pub fn sub(&self, other: &SymNum) -> SymNum {
        self.add(&other.negate())
    }

    /// Multiplies by the tropical scalar ⊕`shift` (adds `shift` to the magnitude).
    pub fn shift(&self, shift: &BigRational) -> SymNum {
        if self.is_zero() {
            SymNum::zero()
        } else {
            SymNum { sign: self.sign, mag: &self.mag + shift }
        }
    }

    /// ⊖a.
    pub fn negate(&self) -> SymNum {
        SymNum { sign: self.sign.negate(), mag: self.mag.clone() }
    }

    /// •a.
    pub fn balance(&self) -> SymNum {
        if self.is_zero() {
            SymNum::zero()
        } else {
            SymNum::bal(self.mag.clone())
        }
    }

    /// |a| as an element of 𝕊 (⊕|a|, or 𝟘).
    pub fn abs(&self) -> SymNum {
        if self.is_zero() {
            SymNum::zero()
        } else {
            SymNum::pos(self.mag.clone())
        }
    }

    /// The sign tag tsgn(a).
    pub fn tsgn(&self) -> Sign {
        self.sign
    }

    /// Applies one of the unary operators.
    pub fn unary(&self, op: Unary) -> SymNum {
        match op {
            Unary::Negate => self.negate(),
            Unary::Balance => self.balance(),
            Unary::Abs => self.abs(),
        }
    }

    /// The relations `>`, `⊵` and `=` between `self` and `other`.
    pub fn compare(&self, other: &SymNum) -> Relation {
        let d = self.sub(other);
        Relation {
            gt: d.is_positive(),
            teq: d.is_positive() || d.is_balanced_or_zero(),
            eq: self == other,
        }
    }

    /// Uncomp(a): `[⊖|a|, |a|]` for balanced `a`, the singleton `{a}` otherwise.
    pub fn uncomp(&self) -> Interval {
        if self.is_balanced() {
            Interval {
                lo: SignedTrop::neg(self.mag.clone()),
                hi: SignedTrop::pos(self.mag.clone()),
            }
        } else {
            let v = SignedTrop(self.clone());
            Interval { lo: v.clone(), hi: v }
        }
    }

    /// The signed element with the same value, if `self` is not balanced.
    pub fn to_signed(&self) -> Option<SignedTrop> {
        if self.is_balanced() {
            None
        } else {
            Some(SignedTrop(self.clone()))
        }
    }
}

impl fmt::Display for SymNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Zero => write!(f, "o"),
            s => write!(f, "{}{}", s.symbol(), rat::format(&self.mag)),
        }
    }
}

impl FromStr for SymNum {
    type Err = Error;

    /// Parses `+q`, `-q`, `b q`, `o` (and the Unicode forms `⊕q`, `⊖q`, `•q`, `𝟘`).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "o" || t == "𝟘" {
            return Ok(SymNum::zero());
        }
        let mut chars = t.chars();
        let head = chars
            .next()
            .ok_or_else(|| Error::Parse("empty semiring token".to_string()))?;
        let sign = match head {
            '+' | '⊕' => Sign::Pos,
            '-' | '⊖' => Sign::Neg,
            'b' | '•' => Sign::Bal,
            _ => return Err(Error::Parse(format!("invalid semiring token {s:?}"))),
        };
        let rest = chars.as_str();
        let mag = rat::parse(rest).map_err(|_| Error::Parse(format!("invalid semiring token {s:?}")))?;
        Ok(SymNum::new(sign, mag))
    }
}

/// An element of 𝕋± (a [`SymNum`] that is not balanced), totally ordered by
/// `⊖a < ⊖b < 𝟘 < ⊕b < ⊕a` for magnitudes `a > b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedTrop(SymNum);

impl SignedTrop {
    pub fn zero() -> Self {
        SignedTrop(SymNum::zero())
    }

    pub fn one() -> Self {
        SignedTrop(SymNum::one())
    }

    pub fn pos(mag: BigRational) -> Self {
        SignedTrop(SymNum::pos(mag))
    }

    pub fn neg(mag: BigRational) -> Self {
        SignedTrop(SymNum::neg(mag))
    }

    pub fn pos_int(n: i64) -> Self {
        Self::pos(rat::int(n))
    }

    pub fn neg_int(n: i64) -> Self {
        Self::neg(rat::int(n))
    }

    /// Builds a signed element; fails for [`Sign::Bal`].
    pub fn new(sign: Sign, mag: BigRational) -> Result<Self> {
        SymNum::new(sign, mag)
            .to_signed()
            .ok_or_else(|| Error::BalancedNotAllowed("signed tropical number".to_string()))
    }

    pub fn from_sym(x: SymNum) -> Result<Self> {
        if x.is_balanced() {
            Err(Error::BalancedNotAllowed(x.to_string()))
        } else {
            Ok(SignedTrop(x))
        }
    }

    pub fn as_sym(&self) -> &SymNum {
        &self.0
    }

    pub fn into_sym(self) -> SymNum {
        self.0
    }

    pub fn sign(&self) -> Sign {
        self.0.sign
    }

    pub fn mag(&self) -> Option<&BigRational> {
        self.0.mag()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Product in 𝕋± (closed under multiplication).
    pub fn mul(&self, other: &SignedTrop) -> SignedTrop {
        SignedTrop(self.0.mul(&other.0))
    }

    pub fn negate(&self) -> SignedTrop {
        SignedTrop(self.0.negate())
    }

    pub fn abs(&self) -> SignedTrop {
        SignedTrop(self.0.abs())
    }

    pub fn shift(&self, shift: &BigRational) -> SignedTrop {
        SignedTrop(self.0.shift(shift))
    }

    /// Sum in 𝕊 (may be balanced).
    pub fn add(&self, other: &SignedTrop) -> SymNum {
        self.0.add(&other.0)
    }

    pub fn cmp_mag(&self, other: &SignedTrop) -> Ordering {
        self.0.cmp_mag(&other.0)
    }

    /// A value strictly between `self` and `other` (which must differ).
    pub fn midpoint(&self, other: &SignedTrop) -> SignedTrop {
        let (lo, hi) = if self < other { (self, other) } else { (other, self) };
        match (lo.sign(), hi.sign()) {
            (Sign::Pos, Sign::Pos) => SignedTrop::pos(rat::midpoint(&lo.0.mag, &hi.0.mag)),
            (Sign::Neg, Sign::Neg) => SignedTrop::neg(rat::midpoint(&lo.0.mag, &hi.0.mag)),
            (Sign::Zero, Sign::Pos) => SignedTrop::pos(&hi.0.mag - rat::int(1)),
            (Sign::Neg, Sign::Zero) => SignedTrop::neg(&lo.0.mag - rat::int(1)),
            _ => SignedTrop::zero(),
        }
    }

    fn sign_rank(&self) -> i8 {
        match self.sign() {
            Sign::Neg => -1,
            Sign::Pos => 1,
            _ => 0,
        }
    }
}

impl Ord for SignedTrop {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.sign_rank().cmp(&other.sign_rank()) {
            Ordering::Equal => match self.sign() {
                Sign::Pos => self.0.mag.cmp(&other.0.mag),
                Sign::Neg => other.0.mag.cmp(&self.0.mag),
                _ => Ordering::Equal,
            },
            o => o,
        }
    }
}

impl PartialOrd for SignedTrop {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignedTrop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for SignedTrop {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SignedTrop::from_sym(s.parse()?)
    }
}

impl From<SignedTrop> for SymNum {
    fn from(x: SignedTrop) -> SymNum {
        x.0
    }
}

/// A closed interval `[lo, hi]` of 𝕋±.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: SignedTrop,
    pub hi: SignedTrop,
}

impl Interval {
    pub fn new(lo: SignedTrop, hi: SignedTrop) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInput(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn singleton(x: SignedTrop) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn is_singleton(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &SignedTrop) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = std::cmp::max(&self.lo, &other.lo).clone();
        let hi = std::cmp::min(&self.hi, &other.hi).clone();
        if lo <= hi {
            Some(Interval { lo, hi })
        } else {
            None
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_singleton() {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// Tropical sum of a sequence (𝟘 for an empty one).
pub fn sum<'a>(items: impl IntoIterator<Item = &'a SymNum>) -> SymNum {
    items.into_iter().fold(SymNum::zero(), |acc, x| acc.add(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn s(t: &str) -> SymNum {
        t.parse().unwrap()
    }

    fn st(t: &str) -> SignedTrop {
        t.parse().unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(s("+0").add(&s("-0")), s("b0"));
        assert_eq!(s("b4").add(&s("+3")), s("b4"));
        assert_eq!(s("o").add(&s("-3")), s("-3"));
        assert_eq!(s("b2").add(&s("b2")), s("b2"));
        assert_eq!(s("+2").add(&s("b2")), s("b2"));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(s("+2").mul(&s("-1")), s("-3"));
        assert_eq!(s("b0").mul(&s("-(-1)")), s("b-1"));
        assert_eq!(s("-1").mul(&s("-1")), s("+2"));
        assert_eq!(s("o").mul(&s("b5")), s("o"));
    }

    #[test]
    fn unary_examples() {
        assert_eq!(s("-2").unary(Unary::Negate), s("+2"));
        assert_eq!(s("-5").unary(Unary::Balance), s("b5"));
        assert_eq!(s("b4").unary(Unary::Abs), s("+4"));
        assert_eq!(s("b4").negate(), s("b4"));
        assert_eq!(s("o").negate(), s("o"));
        assert_eq!(s("-3").tsgn(), Sign::Neg);
    }

    #[test]
    fn compare_examples() {
        assert!(s("+2").compare(&s("-3")).gt);
        let r = s("b4").compare(&s("-3"));
        assert!(!r.gt && r.teq && !r.eq);
        assert!(s("-3").compare(&s("b4")).teq);
        assert!(s("+3").compare(&s("b4")).teq);
        assert!(s("+3").compare(&s("+3")).eq);
        assert!(!s("+3").compare(&s("+3")).gt);
    }

    #[test]
    fn uncomp_examples() {
        let i = s("b4").uncomp();
        assert_eq!((i.lo.clone(), i.hi.clone()), (st("-4"), st("+4")));
        assert!(s("+2").uncomp().is_singleton());
        let j = s("b-2").uncomp();
        assert_eq!((j.lo, j.hi), (st("-(-2)"), st("+-2")));
        assert_eq!(s("o").uncomp(), Interval::singleton(SignedTrop::zero()));
    }

    #[test]
    fn total_order_on_signed_values() {
        let mut v = [st("+1"), st("-2"), st("o"), st("-1"), st("+-3"), st("+3/2")];
        v.sort();
        let printed: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(printed, ["-2", "-1", "o", "+-3", "+1", "+3/2"]);
    }

    #[test]
    fn midpoint_is_strictly_between() {
        let pairs = [("-2", "+1"), ("+1", "+2"), ("-3", "-1"), ("o", "+1"), ("-1", "o")];
        for (a, b) in pairs {
            let (a, b) = (st(a), st(b));
            let m = a.midpoint(&b);
            assert!(a < m && m < b, "{a} < {m} < {b}");
        }
    }

    #[test]
    fn tokens_round_trip() {
        for t in ["+2", "-3/2", "b4", "o", "+-2", "b-1", "-0"] {
            assert_eq!(s(t).to_string(), t);
        }
        assert_eq!(s("b 4"), s("b4"));
        assert_eq!(s("+1.5"), SymNum::pos(frac(3, 2)));
        assert_eq!(s("⊖3"), SymNum::neg(int(3)));
        assert!("b".parse::<SymNum>().is_err());
        assert!("x2".parse::<SymNum>().is_err());
        assert!("b1".parse::<SignedTrop>().is_err());
    }

    #[test]
    fn zero_has_no_observable_magnitude() {
        assert_eq!(SymNum::new(Sign::Zero, int(5)), SymNum::zero());
        assert_eq!(SymNum::zero().mag(), None);
    }
}
