//! Worked hemispace examples checked on grids.

use signtrop::hemispace::{
    boundary_pattern_check, dedup_by_members, hemispace_pair_check, sandwich_check, structural_rules_check,
    threshold_family, HemispaceCandidate,
};
use signtrop::hull::Grid;
use signtrop::SignedVector;

fn v(s: &str) -> SignedVector {
    s.parse().unwrap()
}

#[test]
fn only_two_hemispaces_between_unit_threshold_halfspaces() {
    let a = v("[-0, +0, o]");
    let grid = Grid::integer(-1, 1, 2).unwrap();
    let family = dedup_by_members(threshold_family(&a, 2, &grid).unwrap(), &grid).unwrap();
    assert!(family.len() > 2);
    let passing: Vec<&HemispaceCandidate> =
        family.iter().filter(|c| hemispace_pair_check(c, &grid).unwrap()).collect();
    assert_eq!(passing.len(), 2, "{passing:?}");
    let open = HemispaceCandidate::open(a.clone()).unwrap().members(&grid).unwrap();
    let closed = HemispaceCandidate::closed(a.clone()).unwrap().members(&grid).unwrap();
    let sets: Vec<Vec<SignedVector>> = passing.iter().map(|c| c.members(&grid).unwrap()).collect();
    assert!(sets.contains(&open) && sets.contains(&closed));
    for c in &family {
        assert!(sandwich_check(c, &grid).unwrap());
        let pattern_ok = boundary_pattern_check(c, &grid).unwrap().is_empty();
        assert_eq!(pattern_ok, passing.contains(&c), "{c}");
    }
}

#[test]
fn every_threshold_gives_a_hemispace_at_the_zero_boundary() {
    let a = v("[o, +0, o]");
    let grid = Grid::integer(-1, 1, 2).unwrap();
    let family = dedup_by_members(threshold_family(&a, 2, &grid).unwrap(), &grid).unwrap();
    assert!(family.len() > 4);
    for c in &family {
        assert!(hemispace_pair_check(c, &grid).unwrap(), "{c}");
        assert!(boundary_pattern_check(c, &grid).unwrap().is_empty(), "{c}");
        assert!(structural_rules_check(c, &grid).unwrap().is_empty(), "{c}");
    }
}

#[test]
fn one_boundary_point_is_not_enough() {
    let c = HemispaceCandidate::new(v("[-0, +0, o]"), Vec::new(), vec![v("[+0, +1]")]).unwrap();
    let grid = Grid::integer(-1, 1, 2).unwrap();
    assert!(!boundary_pattern_check(&c, &grid).unwrap().is_empty());
    assert!(!structural_rules_check(&c, &grid).unwrap().is_empty());
}

#[test]
fn incoherent_boundary_points_break_convexity() {
    let c = HemispaceCandidate::new(v("[o, +0, o]"), Vec::new(), vec![v("[o, +1]"), v("[o, -1]")]).unwrap();
    let grid = Grid::integer(-1, 1, 2).unwrap();
    assert!(!hemispace_pair_check(&c, &grid).unwrap());
}
