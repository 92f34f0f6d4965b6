use super::*;
use crate::rat;

fn v(s: &str) -> SignedVector {
    s.parse().unwrap()
}

fn set(s: &str) -> PointSet {
    s.parse().unwrap()
}

#[test]
fn point_set_parsing() {
    let x = set("# corners\n[+0, +0]\n\n[-0, +0]  # second\n[+0, +0]\n");
    assert_eq!(x.len(), 3);
    assert_eq!(x.distinct().0.len(), 2);
    assert_eq!(x.distinct().1, vec![0, 1]);
    assert!("".parse::<PointSet>().is_err());
    assert!("[+0]\n[+0, +1]".parse::<PointSet>().is_err());
}

#[test]
fn to_but_not_tc() {
    let x = set("[+0, +0]\n[--2, --2]");
    let y = v("[+-2, --2]");
    assert!(to_hull_member(&x, &y).unwrap());
    let d = tc_hull_decide(&x, &y).unwrap();
    let Decision::NonMember(Some(h)) = d else { panic!("expected a certificate, got {d:?}") };
    assert!(x.points().iter().all(|p| h.member(p).unwrap()));
    assert!(!h.member(&y).unwrap());
}

#[test]
fn generators_are_members() {
    let x = set("[+0, -1]\n[-2, o]\n[+1, +1]");
    for p in x.points() {
        assert!(tc_hull_member(&x, p).unwrap());
        assert!(to_hull_member(&x, p).unwrap());
        assert!(tc_cone_member(&x, p).unwrap());
        assert!(wspan_member(&x, &p.negate()).unwrap());
    }
    assert!(!to_hull_member(&x, &v("[+3, o]")).unwrap());
}

#[test]
fn sign_square_needs_all_four_corners() {
    let corners = ["[+0, +0]", "[+0, -0]", "[-0, +0]", "[-0, -0]"];
    let x = set(&corners.join("\n"));
    let zero = v("[o, o]");
    let Decision::Member(p) = tc_hull_decide(&x, &zero).unwrap() else { panic!() };
    assert_eq!(p.support_size(), 4);
    for skip in 0..4 {
        let sub: Vec<&str> = corners.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, c)| *c).collect();
        assert!(!tc_hull_member(&set(&sub.join("\n")), &zero).unwrap());
        assert!(separate(&set(&sub.join("\n")), &zero, &CandidateSpace::Grid(vec![rat::int(0)])).unwrap().is_some());
    }
}

#[test]
fn vertical_line_instance() {
    let x = set("[-1, +5]\n[+2, +5]");
    assert!(tc_hull_member(&x, &v("[+0, +5]")).unwrap());
    assert!(!tc_hull_member(&x, &v("[+0, +4]")).unwrap());
}

#[test]
fn cone_contains_zero_and_scalings() {
    let x = set("[+0, -1]\n[-2, +1]");
    assert!(tc_cone_member(&x, &v("[o, o]")).unwrap());
    assert!(tc_cone_member(&x, &v("[+7, -8]")).unwrap());
    assert!(!tc_hull_member(&x, &v("[+7, -8]")).unwrap());
    assert!(!tc_cone_member(&x, &v("[+7, -6]")).unwrap());
    let Decision::NonMember(Some(h)) = tc_cone_decide(&x, &v("[+0, +0]")).unwrap() else { panic!() };
    assert!(tc_cone_member(&x, &v("[-0, -0]")).unwrap());
    assert!(h.is_linear());
}

#[test]
fn span_contains_negations() {
    let x = set("[+0, +0]");
    assert!(wspan_member(&x, &v("[-0, -0]")).unwrap());
    assert!(wspan_member(&x, &v("[o, o]")).unwrap());
    assert!(wspan_member(&x, &v("[-3, -3]")).unwrap());
    assert!(!wspan_member(&x, &v("[o, +3]")).unwrap());
    assert!(!wspan_member(&x, &v("[+0, -0]")).unwrap());
}

#[test]
fn affine_half_line() {
    let v1 = set("[+0]");
    let w1 = set("[+0]");
    assert!(affine_mw_member(&v1, &w1, &v("[+0]")).unwrap());
    assert!(affine_mw_member(&v1, &w1, &v("[+3]")).unwrap());
    assert!(!affine_mw_member(&v1, &w1, &v("[+-1]")).unwrap());
    assert!(!affine_mw_member(&v1, &w1, &v("[-1]")).unwrap());
}

#[test]
fn affine_with_zero_direction_is_the_hull() {
    let vs = set("[+0, -1]\n[-2, +1]");
    let w0 = set("[o, o]");
    for y in ["[+0, -1]", "[o, o]", "[+-1, +1]", "[-2, -1]", "[+3, o]"] {
        assert_eq!(affine_mw_member(&vs, &w0, &v(y)).unwrap(), tc_hull_member(&vs, &v(y)).unwrap(), "{y}");
    }
}

#[test]
fn separation_examples() {
    let x = set("[+0, +0]\n[--3, --2]");
    let h = separate(&x, &v("[+5, +5]"), &CandidateSpace::Exact).unwrap().unwrap();
    assert!(!h.member(&v("[+5, +5]")).unwrap());
    assert!(separate(&x, &v("[+0, +0]"), &CandidateSpace::Exact).unwrap().is_none());
    let grid = CandidateSpace::Grid((-3..=5).map(rat::int).collect());
    assert!(separate(&x, &v("[+5, +5]"), &grid).unwrap().is_some());
}

#[test]
fn to_separation_examples() {
    let x = set("[+0, +0]");
    let y = set("[-0, -0]");
    let (plus, minus) = separate_to(&x, &y, &CandidateSpace::Exact).unwrap().unwrap();
    assert!(plus.member(&v("[+0, +0]")).unwrap());
    assert!(minus.member(&v("[-0, -0]")).unwrap());
    assert!(separate_to(&x, &x, &CandidateSpace::Exact).unwrap().is_none());
}

#[test]
fn bounded_witness_respects_support_limit() {
    let x = set("[+0, +0]\n[+0, -0]\n[-0, +0]\n[-0, -0]");
    assert!(tc_hull_witness(&x, &v("[o, o]"), Some(3)).unwrap().is_none());
    assert!(tc_hull_witness(&x, &v("[o, o]"), Some(caratheodory_bound(2))).unwrap().is_some());
    assert_eq!(caratheodory_bound(2), 9);
}

#[test]
fn box_hull_of_corners() {
    let x = set("[+1, -2]\n[+1, +2]\n[+3, -2]\n[+3, +2]");
    let g = Grid::integer(0, 3, 2).unwrap();
    for p in g.points() {
        let inside = p.get(0) >= &SignedTrop::pos_int(1)
            && p.get(0) <= &SignedTrop::pos_int(3)
            && p.get(1) >= &SignedTrop::neg_int(2)
            && p.get(1) <= &SignedTrop::pos_int(2);
        assert_eq!(tc_hull_member(&x, &p).unwrap(), inside, "{p}");
        assert_eq!(to_hull_member(&x, &p).unwrap(), inside, "{p}");
    }
}
