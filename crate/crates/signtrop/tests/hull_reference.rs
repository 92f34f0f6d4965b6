//! Exact hull decisions against the finite-profile references.

use signtrop::hull::{
    critical_lambdas, dense_lambdas, profile_search_member, sampled_profile_member, tc_hull_decide, to_hull_member,
    Decision, HullKind,
};
use signtrop::random;

#[test]
fn exact_decisions_match_references() {
    let mut tc_members = 0;
    let mut crit_misses = Vec::new();
    for i in 0..300u64 {
        let mut rng = random::case_rng(17, i);
        let d = 1 + (i % 3) as usize;
        let n = 1 + (i / 3 % 4) as usize;
        let x = random::point_set(&mut rng, n, d, -2, 2, 0.25);
        let y = random::vector(&mut rng, d, -2, 2, 0.25);
        let tc = tc_hull_decide(&x, &y).unwrap();
        let to = to_hull_member(&x, &y).unwrap();
        if tc.is_member() {
            tc_members += 1;
            assert!(to, "TC member outside TO hull: {x} {y}");
        }
        let crit = critical_lambdas(&x, &y).unwrap();
        let tc_c = profile_search_member(&x, &y, HullKind::Tc, &crit, None).unwrap().is_some();
        let to_c = profile_search_member(&x, &y, HullKind::To, &crit, None).unwrap().is_some();
        assert!(!tc_c || tc.is_member(), "critical witness for a separated point {x} {y}");
        assert!(!to_c || to);
        if tc_c != tc.is_member() || to_c != to {
            crit_misses.push(format!("{x}| {y} tc {} to {to}", tc.is_member()));
        }
        let dense = dense_lambdas(&x, &y, 10).unwrap();
        let s = sampled_profile_member(&x, &y, HullKind::Tc, &dense, 200, i).unwrap();
        assert!(s.is_none() || tc.is_member(), "dense witness for a separated point {x} {y}");
        if let Decision::NonMember(Some(h)) = &tc {
            assert!(!h.member(&y).unwrap());
        }
    }
    eprintln!("tc members {tc_members}, critical misses {}", crit_misses.len());
    for m in crit_misses.iter().take(10) {
        eprintln!("{m}");
    }
}
