//! Small helpers around `BigRational`: construction, parsing and printing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The rational `n`.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The rational `p / q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p`, `p/q` or a decimal literal such as `-1.25`, optionally wrapped
/// in one pair of parentheses.
pub fn parse(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let t = match t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        Some(inner) => inner.trim(),
        None => t,
    };
    if t.is_empty() {
        return Err(Error::Parse(format!("empty rational literal in {s:?}")));
    }
    let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((ip, fp)) = t.split_once('.') {
        let (neg, ip) = match ip.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, ip.strip_prefix('+').unwrap_or(ip)),
        };
        if fp.is_empty() && ip.is_empty() {
            return Err(bad());
        }
        if !ip.chars().all(|c| c.is_ascii_digit()) || !fp.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{}{}", if ip.is_empty() { "0" } else { ip }, fp);
        let num: BigInt = digits.parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), fp.len());
        let r = BigRational::new(num, den);
        return Ok(if neg { -r } else { r });
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// Prints `p` for integers and `p/q` otherwise.
pub fn format(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Midpoint of two rationals.
pub fn midpoint(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / int(2)
}

/// Least common multiple of the denominators of `values` (1 for an empty list).
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    let mut l = BigInt::one();
    for v in values {
        l = num_integer::lcm(l, v.denom().clone());
    }
    l
}

/// `r * scale` as an integer; panics if the product is not integral.
pub fn scaled_integer(r: &BigRational, scale: &BigInt) -> BigInt {
    let v = r * BigRational::from_integer(scale.clone());
    assert!(v.is_integer(), "scale is not a common denominator");
    v.to_integer()
}

/// Absolute value helper that keeps call sites short.
pub fn abs(r: &BigRational) -> BigRational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_fractions_and_decimals() {
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse("-3/2").unwrap(), frac(-3, 2));
        assert_eq!(parse("(-1)").unwrap(), int(-1));
        assert_eq!(parse("1.25").unwrap(), frac(5, 4));
        assert_eq!(parse("-0.5").unwrap(), frac(-1, 2));
        assert_eq!(parse(".5").unwrap(), frac(1, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn formats_round_trip() {
        for r in [int(0), int(-7), frac(7, 3), frac(-1, 6)] {
            assert_eq!(parse(&format(&r)).unwrap(), r);
        }
    }

    #[test]
    fn common_denominator_is_lcm() {
        let v = [frac(1, 4), frac(1, 6), int(3)];
        assert_eq!(common_denominator(v.iter()), BigInt::from(12));
    }
}
