//! Property tests of the algebra, the hulls and the lifts.

use num_rational::BigRational;
use proptest::prelude::*;
use signtrop::hull::{tc_hull_decide_with, tc_hull_member, to_hull_member, PointSet};
use signtrop::par::Exec;
use signtrop::puiseux::{lift_canonical, PuiseuxNum};
use signtrop::{Sign, SignedTrop, SignedVector, SymNum};

fn mag() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn sym() -> impl Strategy<Value = SymNum> {
    prop_oneof![
        1 => Just(SymNum::zero()),
        3 => mag().prop_map(SymNum::pos),
        3 => mag().prop_map(SymNum::neg),
        1 => mag().prop_map(SymNum::bal),
    ]
}

fn signed() -> impl Strategy<Value = SignedTrop> {
    prop_oneof![
        1 => Just(SignedTrop::zero()),
        3 => mag().prop_map(|m| SignedTrop::new(Sign::Pos, m).unwrap()),
        3 => mag().prop_map(|m| SignedTrop::new(Sign::Neg, m).unwrap()),
    ]
}

fn vector(d: usize) -> impl Strategy<Value = SignedVector> {
    prop::collection::vec(signed(), d).prop_map(SignedVector::new)
}

fn points(d: usize) -> impl Strategy<Value = Vec<SignedVector>> {
    prop::collection::vec(vector(d), 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn symnum_display_round_trips(a in sym()) {
        prop_assert_eq!(a.to_string().parse::<SymNum>().unwrap(), a);
    }

    #[test]
    fn vector_display_round_trips(x in vector(3)) {
        prop_assert_eq!(x.to_string().parse::<SignedVector>().unwrap(), x);
    }

    #[test]
    fn semiring_laws(a in sym(), b in sym(), c in sym()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&SymNum::zero()), a.clone());
        prop_assert_eq!(a.mul(&SymNum::one()), a.clone());
        prop_assert_eq!(a.add(&a), a.clone());
    }

    #[test]
    fn minus_is_an_involution_and_a_minus_a_is_balanced(a in sym()) {
        prop_assert_eq!(a.negate().negate(), a.clone());
        prop_assert!(a.sub(&a).is_balanced_or_zero());
        prop_assert!(a.compare(&a).teq);
    }

    #[test]
    fn strict_order_is_asymmetric(a in sym(), b in sym()) {
        prop_assert!(!(a.compare(&b).gt && b.compare(&a).gt));
    }

    #[test]
    fn left_sum_of_zero_is_the_other_vector(x in vector(3)) {
        prop_assert_eq!(SignedVector::zeros(3).left_sum(&x).unwrap(), x.clone());
        prop_assert_eq!(x.left_sum(&x).unwrap(), x);
    }

    #[test]
    fn canonical_lift_valuates_back(x in vector(3)) {
        prop_assert_eq!(lift_canonical(&x).sval(), x);
    }

    #[test]
    fn puiseux_display_round_trips(c in -5i64..=5, e in mag()) {
        let p = PuiseuxNum::monomial(BigRational::from_integer(c.into()), e);
        prop_assert_eq!(p.to_string().parse::<PuiseuxNum>().unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generators_lie_in_both_hulls(pts in points(2)) {
        let x = PointSet::new(pts.clone()).unwrap();
        for p in &pts {
            prop_assert!(tc_hull_member(&x, p).unwrap());
            prop_assert!(to_hull_member(&x, p).unwrap());
        }
    }

    #[test]
    fn tc_hull_lies_in_to_hull(pts in points(2), y in vector(2)) {
        let x = PointSet::new(pts).unwrap();
        if tc_hull_member(&x, &y).unwrap() {
            prop_assert!(to_hull_member(&x, &y).unwrap());
        }
    }

    #[test]
    fn parallel_and_sequential_decisions_agree(pts in points(2), y in vector(2)) {
        let x = PointSet::new(pts).unwrap();
        let a = tc_hull_decide_with(&x, &y, Exec::Sequential).unwrap();
        let b = tc_hull_decide_with(&x, &y, Exec::Parallel).unwrap();
        prop_assert_eq!(a.is_member(), b.is_member());
    }
}
