//! Elements of the ordered field of rational functions in fractional powers
//! of `t`, ordered by their behaviour as `t → ∞`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{exact_div, leading_sign, reduce_pair, LPoly};
use crate::error::{Error, Result};
use crate::rat;
use crate::sym::{Sign, SignedTrop};

/// `num / den` in canonical form: coprime, with the leading term of `den`
/// equal to `1·t^0` (so the zero element is `0 / 1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PuiseuxNum {
    num: LPoly,
    den: LPoly,
}

impl PuiseuxNum {
    pub fn zero() -> Self {
        PuiseuxNum { num: LPoly::zero(), den: LPoly::one() }
    }

    pub fn one() -> Self {
        PuiseuxNum::from_poly(LPoly::one())
    }

    /// `c·t^e`.
    pub fn monomial(c: BigRational, e: BigRational) -> Self {
        PuiseuxNum::from_poly(LPoly::monomial(c, e))
    }

    pub fn constant(c: BigRational) -> Self {
        PuiseuxNum::from_poly(LPoly::constant(c))
    }

    /// `t^e`.
    pub fn t_pow(e: BigRational) -> Self {
        PuiseuxNum::monomial(BigRational::one(), e)
    }

    pub fn from_int(c: i64) -> Self {
        PuiseuxNum::constant(rat::int(c))
    }

    pub fn from_poly(p: LPoly) -> Self {
        PuiseuxNum { num: p, den: LPoly::one() }
    }

    /// Builds `num / den`; fails if `den` is zero.
    pub fn ratio(num: LPoly, den: LPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(PuiseuxNum::canonical(num, den))
    }

    fn canonical(num: LPoly, den: LPoly) -> Self {
        if num.is_zero() {
            return PuiseuxNum::zero();
        }
        let (num, den) = if den == LPoly::one() { (num, den) } else { reduce_pair(&num, &den) };
        let (e, c) = den.leading().cloned().expect("nonzero denominator");
        let inv = c.recip();
        let shift = -e;
        PuiseuxNum { num: num.scale(&inv, &shift), den: den.scale(&inv, &shift) }
    }

    pub fn numerator(&self) -> &LPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &PuiseuxNum) -> PuiseuxNum {
        if self.den == other.den {
            return PuiseuxNum::canonical(self.num.add(&other.num), self.den.clone());
        }
        PuiseuxNum::canonical(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den))
    }

    pub fn neg(&self) -> PuiseuxNum {
        PuiseuxNum { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &PuiseuxNum) -> PuiseuxNum {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PuiseuxNum) -> PuiseuxNum {
        if self.is_zero() || other.is_zero() {
            return PuiseuxNum::zero();
        }
        // Cancel across before multiplying to keep terms small.
        let (a, d) = cancel(&self.num, &other.den);
        let (c, b) = cancel(&other.num, &self.den);
        PuiseuxNum::canonical(a.mul(&c), b.mul(&d))
    }

    pub fn recip(&self) -> Result<PuiseuxNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(PuiseuxNum::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &PuiseuxNum) -> Result<PuiseuxNum> {
        Ok(self.mul(&other.recip()?))
    }

    /// Leading exponent and coefficient of the value (`None` for 0).
    pub fn leading(&self) -> Option<(BigRational, BigRational)> {
        let (e, c) = self.num.leading()?;
        // The denominator's leading term is 1·t^0.
        Some((e.clone(), c.clone()))
    }

    /// Signed valuation.
    pub fn sval(&self) -> SignedTrop {
        match self.leading() {
            None => SignedTrop::zero(),
            Some((e, c)) => SignedTrop::new(if c.is_positive() { Sign::Pos } else { Sign::Neg }, e).expect("signed"),
        }
    }

    /// Leading coefficient (0 for the zero element).
    pub fn lc(&self) -> BigRational {
        self.leading().map(|(_, c)| c).unwrap_or_default()
    }

    /// −1, 0 or 1.
    pub fn signum(&self) -> i8 {
        leading_sign(&self.num)
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }
}

/// Divides `a` and `b` by their common factor.
fn cancel(a: &LPoly, b: &LPoly) -> (LPoly, LPoly) {
    if *b == LPoly::one() {
        return (a.clone(), b.clone());
    }
    if let Some(q) = exact_div(a, b) {
        return (q, LPoly::one());
    }
    reduce_pair(a, b)
}

impl Ord for PuiseuxNum {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive in the order (leading term 1·t^0).
        let diff = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        leading_sign(&diff).cmp(&0)
    }
}

impl PartialOrd for PuiseuxNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn fmt_exponent(e: &BigRational) -> String {
    if e.is_integer() && !e.is_negative() {
        e.to_string()
    } else {
        format!("{{{e}}}")
    }
}

fn fmt_poly(p: &LPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (i, (e, c)) in p.terms().iter().enumerate() {
        let mag = c.abs();
        if i == 0 {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
        }
        if e.is_zero() {
            write!(f, "{mag}")?;
            continue;
        }
        if !mag.is_one() {
            write!(f, "{mag}*")?;
        }
        if e.is_one() {
            write!(f, "t")?;
        } else {
            write!(f, "t^{}", fmt_exponent(e))?;
        }
    }
    Ok(())
}

impl fmt::Display for PuiseuxNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LPoly::one() {
            return fmt_poly(&self.num, f);
        }
        write!(f, "(")?;
        fmt_poly(&self.num, f)?;
        write!(f, ") / (")?;
        fmt_poly(&self.den, f)?;
        write!(f, ")")
    }
}

/// Parses `c*t^e` sums: coefficients and exponents are rationals, `t^{…}`
/// braces are optional, `*` may be omitted and `t` alone means `t^1`.
fn parse_poly(s: &str) -> Result<LPoly> {
    let src: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if src.is_empty() {
        return Err(Error::Parse("empty Puiseux expression".to_string()));
    }
    let bad = || Error::Parse(format!("bad Puiseux expression {s:?}"));
    let mut terms = Vec::new();
    let mut i = 0;
    while i < src.len() {
        let mut negative = false;
        while i < src.len() && (src[i] == '+' || src[i] == '-') {
            negative ^= src[i] == '-';
            i += 1;
        }
        let start = i;
        while i < src.len() && (src[i].is_ascii_digit() || src[i] == '/' || src[i] == '.') {
            i += 1;
        }
        let coeff = if i > start { rat::parse(&src[start..i].iter().collect::<String>())? } else { BigRational::one() };
        if i < src.len() && src[i] == '*' {
            i += 1;
        }
        let mut exp = BigRational::zero();
        if i < src.len() && src[i] == 't' {
            i += 1;
            exp = BigRational::one();
            if i < src.len() && src[i] == '^' {
                i += 1;
                let text: String = if i < src.len() && src[i] == '{' {
                    let close = src[i..].iter().position(|&c| c == '}').ok_or_else(bad)? + i;
                    let t = src[i + 1..close].iter().collect();
                    i = close + 1;
                    t
                } else {
                    let st = i;
                    if i < src.len() && (src[i] == '-' || src[i] == '+') {
                        i += 1;
                    }
                    while i < src.len() && (src[i].is_ascii_digit() || src[i] == '/' || src[i] == '.') {
                        i += 1;
                    }
                    src[st..i].iter().collect()
                };
                exp = rat::parse(&text)?;
            }
        } else if i == start {
            return Err(bad());
        }
        terms.push((exp, if negative { -coeff } else { coeff }));
        if i < src.len() && src[i] != '+' && src[i] != '-' {
            return Err(bad());
        }
    }
    Ok(LPoly::from_terms(terms))
}

impl FromStr for PuiseuxNum {
    type Err = Error;

    /// A sum of terms, or `(…) / (…)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some((a, b)) = t.split_once(")/(").or_else(|| t.split_once(") / (")) {
            let a = a.trim().strip_prefix('(').ok_or_else(|| Error::Parse(format!("bad ratio {s:?}")))?;
            let b = b.trim().strip_suffix(')').ok_or_else(|| Error::Parse(format!("bad ratio {s:?}")))?;
            return PuiseuxNum::ratio(parse_poly(a)?, parse_poly(b)?);
        }
        Ok(PuiseuxNum::from_poly(parse_poly(t)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PuiseuxNum {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("3*t^2 - 1*t^{-1/2}").to_string(), "3*t^2 - t^{-1/2}");
        assert_eq!(p("t").to_string(), "t");
        assert_eq!(p("-t^-1 + 2").to_string(), "2 - t^{-1}");
        assert_eq!(p("0"), PuiseuxNum::zero());
        assert_eq!(p("1/2t^3"), PuiseuxNum::monomial(rat::frac(1, 2), rat::int(3)));
        assert!("t^".parse::<PuiseuxNum>().is_err());
        assert!("3x".parse::<PuiseuxNum>().is_err());
        let r = p("(1) / (1 + t^{-1})");
        assert_eq!(r.to_string().parse::<PuiseuxNum>().unwrap(), r);
    }

    #[test]
    fn field_examples() {
        assert_eq!(p("t^2").mul(&p("t^-1")), p("t"));
        let s = p("-t^-1").add(&p("t^-5").mul(&p("t^2")));
        assert_eq!(s, p("-t^-1 + t^-3"));
        assert_eq!(s.sval(), SignedTrop::neg_int(-1));
        let q = p("1 + t^-1");
        let r = PuiseuxNum::one().div(&q).unwrap();
        assert_eq!(q.mul(&r), PuiseuxNum::one());
        assert_eq!(r.sval(), SignedTrop::one());
        assert!(PuiseuxNum::one().div(&PuiseuxNum::zero()).is_err());
    }

    #[test]
    fn order_by_leading_behaviour() {
        assert!(p("t") > p("1000"));
        assert!(p("t^-1") > PuiseuxNum::zero());
        assert!(p("t - t^2") < PuiseuxNum::zero());
        assert!(p("2*t") > p("t + 5"));
        assert_eq!(p("-t^3").sval(), SignedTrop::neg_int(3));
        assert_eq!(PuiseuxNum::zero().sval(), SignedTrop::zero());
        assert_eq!(p("-2*t^3 + t").lc(), rat::int(-2));
    }

    #[test]
    fn canonical_forms_are_structural() {
        let a = p("(t^2 - 1) / (t - 1)");
        assert_eq!(a, p("t + 1"));
        let b = p("(2*t) / (4*t^3)");
        assert_eq!(b, p("1/2*t^-2"));
    }
}
