//! Finite sums `Σ c_i t^{e_i}` with rational exponents and coefficients.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A generalized Laurent polynomial: terms sorted by strictly decreasing
/// exponent, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LPoly {
    terms: Vec<(BigRational, BigRational)>,
}

impl LPoly {
    pub fn zero() -> Self {
        LPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        LPoly::monomial(BigRational::one(), BigRational::zero())
    }

    /// `c·t^e`.
    pub fn monomial(c: BigRational, e: BigRational) -> Self {
        if c.is_zero() {
            LPoly::zero()
        } else {
            LPoly { terms: vec![(e, c)] }
        }
    }

    pub fn constant(c: BigRational) -> Self {
        LPoly::monomial(c, BigRational::zero())
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs.
    pub fn from_terms(mut terms: Vec<(BigRational, BigRational)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(BigRational, BigRational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LPoly { terms: out }
    }

    pub fn terms(&self) -> &[(BigRational, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent, coefficient)` of the leading (largest-exponent) term.
    pub fn leading(&self) -> Option<&(BigRational, BigRational)> {
        self.terms.first()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn neg(&self) -> LPoly {
        LPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn add(&self, other: &LPoly) -> LPoly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        LPoly { terms: out }
    }

    pub fn sub(&self, other: &LPoly) -> LPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LPoly) -> LPoly {
        if self.is_zero() || other.is_zero() {
            return LPoly::zero();
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                terms.push((e1 + e2, c1 * c2));
            }
        }
        LPoly::from_terms(terms)
    }

    pub fn scale(&self, c: &BigRational, e: &BigRational) -> LPoly {
        if c.is_zero() {
            return LPoly::zero();
        }
        LPoly { terms: self.terms.iter().map(|(e0, c0)| (e0 + e, c0 * c)).collect() }
    }

    /// Least common denominator of the exponents.
    pub fn exponent_denominator(&self) -> BigInt {
        self.terms.iter().fold(BigInt::one(), |acc, (e, _)| acc.lcm(e.denom()))
    }
}

/// Dense polynomial in `s = t^{1/N}` (coefficient of `s^i` at index i),
/// together with the exponent shift that was factored out.
struct Dense {
    coeffs: Vec<BigRational>,
    shift: BigRational,
}

/// Beyond this many dense coefficients the gcd is skipped (the value stays
/// correct but is not reduced).
const MAX_DENSE: usize = 4096;

fn to_dense(p: &LPoly, n: &BigInt) -> Option<Dense> {
    let lowest = p.terms.last()?.0.clone();
    let nr = BigRational::from_integer(n.clone());
    let degree = ((&p.terms[0].0 - &lowest) * &nr).to_integer().to_usize()?;
    if degree >= MAX_DENSE {
        return None;
    }
    let mut coeffs = vec![BigRational::zero(); degree + 1];
    for (e, c) in &p.terms {
        let i = ((e - &lowest) * &nr).to_integer().to_usize()?;
        coeffs[i] = c.clone();
    }
    Some(Dense { coeffs, shift: lowest })
}

fn from_dense(d: &[BigRational], shift: &BigRational, n: &BigInt) -> LPoly {
    let nr = BigRational::from_integer(n.clone());
    let terms = d
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (shift + BigRational::from_integer(i.into()) / &nr, c.clone()))
        .collect();
    LPoly { terms }
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Quotient and remainder of dense polynomials (`b` nonzero).
fn divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r: Vec<BigRational> = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().expect("nonzero divisor");
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let k = r.len() - b.len();
        let f = r.last().expect("nonempty") / lead;
        for (i, bi) in b.iter().enumerate() {
            r[k + i] -= &f * bi;
        }
        q[k] = f;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn gcd_dense(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divmod(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in &mut x {
            *c /= &l;
        }
    }
    x
}

/// Divides `a` and `b` by their greatest common divisor (up to monomial
/// units).  Returns the inputs unchanged if the gcd is trivial or too costly.
pub(crate) fn reduce_pair(a: &LPoly, b: &LPoly) -> (LPoly, LPoly) {
    if a.is_zero() || b.is_monomial() || a.is_monomial() {
        return (a.clone(), b.clone());
    }
    let n = a.exponent_denominator().lcm(&b.exponent_denominator());
    let (Some(da), Some(db)) = (to_dense(a, &n), to_dense(b, &n)) else {
        return (a.clone(), b.clone());
    };
    // The dense forms have nonzero constant terms, so the gcd has no factor s.
    let g = gcd_dense(&da.coeffs, &db.coeffs);
    if g.len() <= 1 {
        return (a.clone(), b.clone());
    }
    let (qa, ra) = divmod(&da.coeffs, &g);
    let (qb, rb) = divmod(&db.coeffs, &g);
    debug_assert!(ra.is_empty() && rb.is_empty());
    (from_dense(&qa, &da.shift, &n), from_dense(&qb, &db.shift, &n))
}

/// Exact quotient `a / b` if `b` divides `a` (up to monomial units).
pub(crate) fn exact_div(a: &LPoly, b: &LPoly) -> Option<LPoly> {
    if b.is_zero() {
        return None;
    }
    if b.is_monomial() {
        let (e, c) = &b.terms[0];
        return Some(a.scale(&c.recip(), &-e.clone()));
    }
    if a.is_zero() {
        return Some(LPoly::zero());
    }
    let n = a.exponent_denominator().lcm(&b.exponent_denominator());
    let da = to_dense(a, &n)?;
    let db = to_dense(b, &n)?;
    let (q, r) = divmod(&da.coeffs, &db.coeffs);
    r.is_empty().then(|| from_dense(&q, &(&da.shift - &db.shift), &n))
}

/// Sign of the leading coefficient (0 for the zero polynomial).
pub(crate) fn leading_sign(p: &LPoly) -> i8 {
    match p.leading() {
        None => 0,
        Some((_, c)) if c.is_positive() => 1,
        Some(_) => -1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn m(c: i64, e: i64) -> LPoly {
        LPoly::monomial(rat::int(c), rat::int(e))
    }

    #[test]
    fn arithmetic() {
        let p = m(1, 2).add(&m(-1, 0));
        let q = m(1, 1).add(&m(1, 0));
        let prod = p.mul(&q);
        assert_eq!(prod.terms().len(), 4);
        assert_eq!(exact_div(&prod, &q), Some(p.clone()));
        assert!(p.sub(&p).is_zero());
        assert_eq!(leading_sign(&m(-3, -1).add(&m(5, -2))), -1);
    }

    #[test]
    fn gcd_reduction() {
        // (t² − 1) / (t + 1) = (t − 1) / 1.
        let (a, b) = reduce_pair(&m(1, 2).add(&m(-1, 0)), &m(1, 1).add(&m(1, 0)));
        assert_eq!(a, m(1, 1).add(&m(-1, 0)));
        assert_eq!(b, LPoly::one());
        // Fractional exponents: (t − 1) / (t^{1/2} − 1) = t^{1/2} + 1.
        let half = LPoly::monomial(rat::int(1), rat::frac(1, 2));
        let (a, b) = reduce_pair(&m(1, 1).add(&m(-1, 0)), &half.add(&m(-1, 0)));
        assert_eq!(a, half.add(&m(1, 0)));
        assert_eq!(b, LPoly::one());
    }
}
