use signtrop::matroid::{
    axioms_check, circuits, cocircuits, default_grid, realize, representation_check, representation_identities,
    RationalMatrix, SignVector,
};
use signtrop::par::Exec;

fn plane() -> RationalMatrix {
    RationalMatrix::from_ints(&[&[1, 0, -1], &[0, 1, -1]]).unwrap()
}

#[test]
fn rank_two_matroid_on_three_elements_satisfies_every_identity() {
    let m = realize(&plane()).unwrap();
    assert!(axioms_check(3, m.vectors()).passed());
    let report = representation_check(&m, &default_grid()).unwrap();
    assert_eq!(report.circuits, 6);
    assert_eq!(report.cocircuits, 2);
    for c in &report.checks {
        assert!(c.passed(), "{} fails at {:?}", c.name, c.counterexample);
        assert!(c.cases >= 27);
    }
}

#[test]
fn mutations_of_the_rank_two_matroid_break_an_identity() {
    let m = realize(&plane()).unwrap();
    for v in m.vectors().iter().filter(|v| !v.is_zero()).take(4) {
        let broken = m.without(v);
        let report = representation_identities(&broken, &default_grid(), Exec::default()).unwrap();
        assert!(!report.passed(), "deleting {v} keeps every identity");
    }
}

#[test]
fn cocircuits_of_the_plane_span_the_normal_line() {
    let m = realize(&plane()).unwrap();
    assert_eq!(circuits(&m).unwrap().len(), 6);
    let d = cocircuits(&m).unwrap();
    let expected: Vec<SignVector> = vec!["---".parse().unwrap(), "+++".parse().unwrap()];
    assert_eq!(d.into_iter().collect::<Vec<_>>(), expected);
}
