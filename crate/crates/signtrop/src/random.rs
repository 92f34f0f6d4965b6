//! Seeded random instances for property checks and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hull::PointSet;
use crate::puiseux::{LPoly, PuiseuxNum, PuiseuxVector};
use crate::rat;
use crate::sym::{Sign, SignedTrop, SymNum};
use crate::vector::SignedVector;

/// Deterministic generator for case `index` of a run seeded with `seed`.
pub fn case_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// A random entry: 𝟘 with probability `zero_prob`, otherwise a random sign
/// and an integer magnitude in `lo..=hi`.
pub fn entry<R: Rng>(rng: &mut R, lo: i64, hi: i64, zero_prob: f64) -> SignedTrop {
    if rng.gen_bool(zero_prob) {
        SignedTrop::zero()
    } else {
        let m = rng.gen_range(lo..=hi);
        if rng.gen_bool(0.5) {
            SignedTrop::pos_int(m)
        } else {
            SignedTrop::neg_int(m)
        }
    }
}

pub fn vector<R: Rng>(rng: &mut R, d: usize, lo: i64, hi: i64, zero_prob: f64) -> SignedVector {
    (0..d).map(|_| entry(rng, lo, hi, zero_prob)).collect()
}

pub fn point_set<R: Rng>(rng: &mut R, n: usize, d: usize, lo: i64, hi: i64, zero_prob: f64) -> PointSet {
    PointSet::new((0..n).map(|_| vector(rng, d, lo, hi, zero_prob)).collect()).expect("n ≥ 1 points of dimension d")
}

/// A random element of 𝕊: 𝟘, or a positive, negative or balanced value
/// with an integer magnitude in `lo..=hi`, each with probability 1/4.
pub fn sym_entry<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> SymNum {
    let m = rat::int(rng.gen_range(lo..=hi));
    match rng.gen_range(0..4) {
        0 => SymNum::zero(),
        1 => SymNum::new(Sign::Pos, m),
        2 => SymNum::new(Sign::Neg, m),
        _ => SymNum::new(Sign::Bal, m),
    }
}

/// A random nonzero Laurent polynomial with 1–3 `(exponent, coefficient)` terms, coefficients in
/// `±1..=±3` and half-integer exponents in `[-3, 3]`.
pub fn lpoly<R: Rng>(rng: &mut R) -> LPoly {
    loop {
        let terms: Vec<_> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
                (rat::frac(rng.gen_range(-6..=6), 2), rat::int(c))
            })
            .collect();
        let p = LPoly::from_terms(terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random Puiseux number: 0 with probability `zero_prob`, otherwise a
/// random polynomial, divided by another one with probability `ratio_prob`.
pub fn puiseux<R: Rng>(rng: &mut R, zero_prob: f64, ratio_prob: f64) -> PuiseuxNum {
    if rng.gen_bool(zero_prob) {
        return PuiseuxNum::zero();
    }
    let num = lpoly(rng);
    if rng.gen_bool(ratio_prob) {
        PuiseuxNum::ratio(num, lpoly(rng)).expect("nonzero denominator")
    } else {
        PuiseuxNum::from_poly(num)
    }
}

pub fn puiseux_vector<R: Rng>(rng: &mut R, d: usize, zero_prob: f64, ratio_prob: f64) -> PuiseuxVector {
    PuiseuxVector::new((0..d).map(|_| puiseux(rng, zero_prob, ratio_prob)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a = vector(&mut case_rng(5, 3), 4, -2, 2, 0.2);
        let b = vector(&mut case_rng(5, 3), 4, -2, 2, 0.2);
        assert_eq!(a, b);
        assert_ne!(vector(&mut case_rng(5, 4), 8, -2, 2, 0.2), vector(&mut case_rng(5, 3), 8, -2, 2, 0.2));
    }
}
