//! Checks of hemispace candidates and of oriented matroids.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{ensure, lit, Case, Suite};
use crate::error::Result;
use crate::halfspace::{boundary_profile, eval_affine, Halfspace, HalfspaceKind};
use crate::hemispace::{
    boundary_pattern_check, dedup_by_members, hemispace_pair_check, sandwich_check, structural_rules_check,
    threshold_family, Cmp, HemispaceCandidate,
};
use crate::hull::Grid;
use crate::matroid::{
    axioms_check, circuits, cocircuits, default_grid, dual, realize, realize_sign_vectors_with,
    representation_identities, scaled_orthogonality_violations, sign_orthogonal, valuated_instance_check, OMatroid,
    RationalMatrix, SignVector,
};
use crate::puiseux::PuiseuxVector;
use crate::random;
use crate::rat;
use crate::vector::SignedVector;

fn v(s: &str) -> SignedVector {
    lit(s)
}

fn unit_grid() -> Grid {
    Grid::integer(-1, 1, 2).expect("grid")
}

fn show_set(items: &BTreeSet<usize>) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

pub(crate) fn hemispace_examples(s: &mut Suite) {
    let name = "boundary profile examples";
    let profile = |a: &str, x: &str| {
        boundary_profile(&v(a), &v(x)).map(|p| format!("argmax {} domin+ {}", show_set(&p.argmax), show_set(&p.domin_plus)))
    };
    s.expect_eq(name, "a=(⊖0,⊕0,𝟘) x=(⊕0,⊕7)", "argmax {0,1} domin+ {1}", profile("[-0, +0, o]", "[+0, +7]"));
    s.expect_eq(name, "a=(⊖0,⊕0,𝟘) x=(⊕0,⊖2)", "argmax {0,1} domin+ {1}", profile("[-0, +0, o]", "[+0, -2]"));
    s.expect_eq(name, "a=(𝟘,⊕0,𝟘) x=(𝟘,⊕5)", "argmax {} domin+ {}", profile("[o, +0, o]", "[o, +5]"));

    // Two sandwiching vectors a, b and points x, y whose left sums leave or
    // enter the candidate.
    let name = "opposite orthants evaluations";
    let eval = |a: &str, x: &SignedVector| eval_affine(&v(a), x);
    let (a, b) = ("[o, +0, -0]", "[o, +0, -3]");
    let (x, y) = (v("[-0, --2]"), v("[+0, +-1]"));
    s.expect_eq(name, "a ⊙ y", "+0", eval(a, &y));
    s.expect_eq(name, "b ⊙ x", "+1", eval(b, &x));
    let xy = x.left_sum(&y);
    s.expect_eq(name, "x ◁ y", "[-0, +-1]", xy.clone());
    s.expect_eq(name, "a ⊙ (x ◁ y)", "-0", xy.clone().and_then(|z| eval(a, &z)));
    s.expect_eq(name, "b ⊙ (x ◁ y)", "-2", xy.and_then(|z| eval(b, &z)));
    let (a, b) = ("[o, +0, -3]", "[o, +0, -0]");
    let (x, y) = (v("[-0, --1]"), v("[+0, +-2]"));
    s.expect_eq(name, "a ⊙ y (second part)", "-1", eval(a, &y));
    s.expect_eq(name, "b ⊙ x (second part)", "-0", eval(b, &x));
    let yx = y.left_sum(&x);
    s.expect_eq(name, "y ◁ x (second part)", "[+0, --1]", yx.clone());
    s.expect_eq(name, "a ⊙ (y ◁ x) (second part)", "+2", yx.clone().and_then(|z| eval(a, &z)));
    s.expect_eq(name, "b ⊙ (y ◁ x) (second part)", "+0", yx.and_then(|z| eval(b, &z)));
    let open = Halfspace::new(v("[o, +0, -0]"), HalfspaceKind::Open).expect("halfspace");
    s.expect_true(name, "(⊕0, ⊕−1) ∈ H⁺(𝟘, ⊕0, ⊖0)", open.member(&v("[+0, +-1]")));
    s.expect_false(name, "(⊖0, ⊕−1) ∉ H̄⁺(𝟘, ⊕0, ⊖0)", open.with_kind(HalfspaceKind::Closed).member(&v("[-0, +-1]")));

    let name = "hemispace candidate examples";
    let grid = unit_grid();
    let a = v("[-0, +0, o]");
    let outcome = threshold_family(&a, 2, &grid).and_then(|f| dedup_by_members(f, &grid)).and_then(|family| {
        let mut passing = Vec::new();
        for c in &family {
            if hemispace_pair_check(c, &grid)? {
                passing.push(c.members(&grid)?);
            }
        }
        let open = HemispaceCandidate::open(a.clone())?.members(&grid)?;
        let closed = HemispaceCandidate::closed(a.clone())?.members(&grid)?;
        Ok(format!(
            "{} of {} pass; open {}, closed {}",
            passing.len(),
            family.len(),
            passing.contains(&open),
            passing.contains(&closed)
        ))
    });
    let family_size = threshold_family(&a, 2, &grid).and_then(|f| dedup_by_members(f, &grid)).map_or(0, |f| f.len());
    s.expect_eq(
        name,
        "candidates between x₁ > 0 and x₁ ≥ 0",
        format!("2 of {family_size} pass; open true, closed true"),
        outcome,
    );

    let zero_boundary = v("[o, +0, o]");
    let thresholds = threshold_family(&zero_boundary, 2, &grid).and_then(|family| {
        let mut values = BTreeSet::new();
        for c in &family {
            let ge = c.records.first().and_then(|r| r.constraints.first()).filter(|k| k.cmp == Cmp::Ge);
            if let Some(k) = ge {
                if hemispace_pair_check(c, &grid)?
                    && boundary_pattern_check(c, &grid)?.is_empty()
                    && structural_rules_check(c, &grid)?.is_empty()
                {
                    values.insert(k.value.clone());
                }
            }
        }
        Ok(values.len())
    });
    s.expect(
        name,
        "{x₁ > 𝟘} ∪ {x₁ = 𝟘, x₂ ≥ c} for every grid threshold c",
        thresholds.as_ref().is_ok_and(|&n| n >= 5),
        "at least 5 thresholds pass every check",
        format!("{thresholds:?}"),
    );

    let one_point = HemispaceCandidate::new(a.clone(), Vec::new(), vec![v("[+0, +1]")]).expect("candidate");
    s.expect_true(name, "one boundary point: sandwiched", sandwich_check(&one_point, &grid));
    s.expect_false(
        name,
        "one boundary point: pattern report empty",
        boundary_pattern_check(&one_point, &grid).map(|r| r.is_empty()),
    );
    let incoherent =
        HemispaceCandidate::new(zero_boundary.clone(), Vec::new(), vec![v("[o, +1]"), v("[o, -1]")]).expect("candidate");
    s.expect_false(name, "two incoherent boundary points", hemispace_pair_check(&incoherent, &grid));
    let below = HemispaceCandidate::new(a.clone(), Vec::new(), vec![v("[--1, o]")]).expect("candidate");
    s.expect_false(name, "H⁺(a) plus a point of H⁻(a): sandwiched", sandwich_check(&below, &grid));
    s.expect_true(
        name,
        "closed halfspace: pattern report empty",
        HemispaceCandidate::closed(a).and_then(|c| boundary_pattern_check(&c, &grid)).map(|r| r.is_empty()),
    );
}

fn random_coefficients(rng: &mut ChaCha8Rng) -> SignedVector {
    loop {
        let a = random::vector(rng, 3, -1, 1, 0.3);
        if a.iter().skip(1).any(|c| !c.is_zero()) {
            return a;
        }
    }
}

fn halfspace_hemispace_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    let a = random_coefficients(rng);
    let grid = unit_grid();
    let c = if rng.gen_bool(0.5) { HemispaceCandidate::open(a.clone())? } else { HemispaceCandidate::closed(a.clone())? };
    let inputs = format!("{c}");
    ensure!(sandwich_check(&c, &grid)?, inputs, "sandwiched", "not sandwiched");
    ensure!(hemispace_pair_check(&c, &grid)?, inputs, "both sides convex on the grid", "closure violated");
    let pattern = boundary_pattern_check(&c, &grid)?;
    ensure!(pattern.is_empty(), inputs, "empty pattern report", format!("{} ↦ {}", pattern[0].x, pattern[0].y));
    let rules = structural_rules_check(&c, &grid)?;
    Ok(Case::check(
        rules.is_empty(),
        inputs,
        "no structural rule violated",
        rules.first().map(|r| format!("{}: {} ↦ {}", r.rule, r.x, r.y)).unwrap_or_default(),
    ))
}

fn selector_candidate_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    let a = random_coefficients(rng);
    let grid = unit_grid();
    let coord = rng.gen_range(1..=2);
    let mut family = threshold_family(&a, coord, &grid)?;
    let mut c = family.swap_remove(rng.gen_range(0..family.len()));
    if rng.gen_bool(0.3) {
        // Occasionally add a stray boundary point.
        let pts = grid.points();
        let extra = pts[rng.gen_range(0..pts.len())].clone();
        c = HemispaceCandidate::new(a, c.records.clone(), vec![extra])?;
    }
    let inputs = format!("{c}");
    if !hemispace_pair_check(&c, &grid)? {
        return Ok(Case::Pass);
    }
    let pattern = boundary_pattern_check(&c, &grid)?;
    ensure!(pattern.is_empty(), inputs, "empty pattern report", format!("{} ↦ {}", pattern[0].x, pattern[0].y));
    let rules = structural_rules_check(&c, &grid)?;
    Ok(Case::check(
        rules.is_empty(),
        inputs,
        "no structural rule violated",
        rules.first().map(|r| format!("{}: {} ↦ {}", r.rule, r.x, r.y)).unwrap_or_default(),
    ))
}

pub(crate) fn hemispace(s: &mut Suite) {
    hemispace_examples(s);
    s.random("halfspaces are hemispaces", s.scaled(20), halfspace_hemispace_case);
    s.random("hemispace candidates obey the boundary rules", s.scaled(30), selector_candidate_case);
}

fn sv(s: &str) -> SignVector {
    lit(s)
}

fn plane() -> RationalMatrix {
    RationalMatrix::from_ints(&[&[1, 0, -1], &[0, 1, -1]]).expect("matrix")
}

fn show_vectors(set: &BTreeSet<SignVector>) -> String {
    let parts: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn identities_pass(m: &OMatroid, exec: crate::par::Exec) -> Result<String> {
    let report = representation_identities(m, &default_grid(), exec)?;
    Ok(match report.checks.iter().find(|c| !c.passed()) {
        None => "every identity holds".to_string(),
        Some(c) => format!("{} fails at {}", c.name, c.counterexample.clone().unwrap_or_default()),
    })
}

pub(crate) fn matroid_examples(s: &mut Suite) {
    let name = "matroid examples";
    let exec = s.exec();
    let realized = |rows: &[&[i64]]| RationalMatrix::from_ints(rows).and_then(|a| realize_sign_vectors_with(&a, exec));
    s.expect_eq(name, "sign vectors of [[1,1]]", "{- -, o o, + +}", realized(&[&[1, 1]]).map(|v| show_vectors(&v)));
    s.expect_eq(name, "sign vectors of the zero matrix", "{o o o}", realized(&[&[0, 0, 0]]).map(|v| show_vectors(&v)));
    let line = realize(&RationalMatrix::from_ints(&[&[1, 1]]).expect("matrix")).expect("realizable");
    s.expect_eq(name, "circuits of [[1,1]]", "{- -, + +}", circuits(&line).map(|c| show_vectors(&c)));
    s.expect_eq(name, "cocircuits of [[1,1]]", "{- +, + -}", cocircuits(&line).map(|c| show_vectors(&c)));
    s.expect_eq(name, "representation of [[1,1]]", "every identity holds", identities_pass(&line, exec));
    s.expect_true(name, "V = {𝟘} satisfies the axioms", Ok(axioms_check(2, &[sv("oo")].into_iter().collect()).passed()));
    s.expect_true(
        name,
        "{𝟘, (⊕,𝟘)} violates V1",
        Ok(axioms_check(2, &[sv("oo"), sv("+o")].into_iter().collect()).violated(crate::matroid::Axiom::V1)),
    );
    s.expect_true(name, "(⊕,⊕) ⊥ (⊕,⊖)", sign_orthogonal(&sv("++"), &sv("+-")));
    s.expect_false(name, "(⊕,𝟘) ⊥ (⊕,⊖)", sign_orthogonal(&sv("+o"), &sv("+-")));
    s.expect_true(name, "(⊕,⊖) ⊥ 𝟘", sign_orthogonal(&sv("+-"), &sv("oo")));

    let m = realize(&plane()).expect("realizable");
    s.expect_eq(
        name,
        "[[1,0,−1],[0,1,−1]]: vectors, axioms",
        "13 vectors, axioms hold",
        Ok(format!("{} vectors, axioms {}", m.vectors().len(), if axioms_check(3, m.vectors()).passed() { "hold" } else { "fail" })),
    );
    s.expect_eq(name, "cocircuits of [[1,0,−1],[0,1,−1]]", "{- - -, + + +}", cocircuits(&m).map(|c| show_vectors(&c)));
    s.expect_eq(name, "representation of [[1,0,−1],[0,1,−1]]", "every identity holds", identities_pass(&m, exec));
    let four = realize(&RationalMatrix::from_ints(&[&[1, 0, 1, 1], &[0, 1, 1, -1]]).expect("matrix")).expect("realizable");
    s.expect_eq(name, "representation of [[1,0,1,1],[0,1,1,−1]]", "every identity holds", identities_pass(&four, exec));

    let t: Vec<PuiseuxVector> =
        ["[1, 1, 1, 1]", "[t^2, t^-1, -t^3, 1]", "[-t^-1, -t, 0, t^-2]"].iter().map(|r| lit(r)).collect();
    let mut rng = random::case_rng(s.seed(), 0);
    s.expect_eq(
        name,
        "valuated circuits of the Puiseux row space",
        "every sampled vector represented",
        valuated_instance_check(&t, 8, &mut rng)
            .map(|r| if r.passed() { "every sampled vector represented".to_string() } else { r.failures.join("; ") }),
    );
}

/// Deleting any nonzero vector or adding any missing sign vector breaks
/// some identity.
fn mutation_examples(s: &mut Suite) {
    let name = "matroid mutations";
    let exec = s.exec();
    let m = realize(&plane()).expect("realizable");
    for vec in m.vectors().iter().filter(|x| !x.is_zero()) {
        let broken = m.without(vec);
        s.expect(
            name,
            format!("delete {vec}"),
            identities_pass(&broken, exec).is_ok_and(|r| r != "every identity holds"),
            "some identity fails",
            "every identity holds",
        );
    }
    for extra in SignVector::all(3).into_iter().filter(|x| !m.vectors().contains(x)) {
        let grown = OMatroid::new(3, m.vectors().iter().cloned().chain([extra.clone()])).expect("same length");
        s.expect(
            name,
            format!("add {extra}"),
            identities_pass(&grown, exec).is_ok_and(|r| r != "every identity holds"),
            "some identity fails",
            "every identity holds",
        );
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, max_cols: usize) -> Result<RationalMatrix> {
    let rows = rng.gen_range(1..=2);
    let cols = rng.gen_range(2..=max_cols);
    let data: Vec<Vec<_>> = (0..rows).map(|_| (0..cols).map(|_| rat::int(rng.gen_range(-2..=2))).collect()).collect();
    RationalMatrix::new(data, cols)
}

fn realized_matroid_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    let a = random_matrix(rng, 4)?;
    let m = realize(&a)?;
    let k = a.cols();
    let inputs = format!("{a}").replace('\n', "; ");
    let report = axioms_check(k, m.vectors());
    ensure!(report.passed(), inputs, "realized vectors satisfy the axioms", format!("{:?}", report.violations));
    let c = circuits(&m)?;
    let d = cocircuits(&m)?;
    for ci in &c {
        for di in &d {
            ensure!(sign_orthogonal(ci, di)?, inputs, format!("circuit {ci} ⊥ cocircuit {di}"), "not orthogonal");
        }
    }
    let dm = dual(&m)?;
    ensure!(axioms_check(k, dm.vectors()).passed(), inputs, "covectors satisfy the axioms", "violated");
    let bad = scaled_orthogonality_violations(&c, &d, &default_grid())?;
    ensure!(bad.is_empty(), inputs, "scaled circuits ⊥ scaled cocircuits", format!("{} ⊥̸ {}", bad[0].0, bad[0].1));
    Ok(Case::Pass)
}

fn representation_case(rng: &mut ChaCha8Rng, exec: crate::par::Exec) -> Result<Case> {
    let a = random_matrix(rng, 3)?;
    let m = realize(&a)?;
    let got = identities_pass(&m, exec)?;
    Ok(Case::check(got == "every identity holds", format!("{a}").replace('\n', "; "), "every identity holds", got))
}

fn valuated_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    let k = rng.gen_range(2..=4);
    let rows = rng.gen_range(1..=2);
    let t: Vec<PuiseuxVector> = (0..rows).map(|_| random::puiseux_vector(rng, k, 0.2, 0.0)).collect();
    let report = valuated_instance_check(&t, 4, rng)?;
    let inputs: Vec<String> = t.iter().map(ToString::to_string).collect();
    Ok(Case::check(report.passed(), inputs.join("; "), "valuated instance check passes", report.failures.join("; ")))
}

pub(crate) fn matroid(s: &mut Suite) {
    matroid_examples(s);
    mutation_examples(s);
    s.random("realized matroids", s.scaled(40), realized_matroid_case);
    let exec = s.exec();
    s.random("representation identities", s.scaled(10), move |rng| representation_case(rng, exec));
    s.random("valuated instances", s.scaled(20), valuated_case);
}
