//! Checks of the Puiseux field, the signed valuation, lifts and the exact
//! linear feasibility solver.

use std::collections::BTreeSet;

use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{ensure, lit, Case, Suite};
use crate::error::Result;
use crate::halfspace::{eval_affine, hs_type, two_max_member, HalfspaceKind};
use crate::hull::{tc_hull_member, PointSet};
use crate::par::Exec;
use crate::puiseux::{
    all_types, certificate_chain, closed_halfspace_contains, cone_member, conv_member, lift_canonical,
    lift_coefficients, lift_typed, lift_witness, lift_witness_all_types, lp_solve, FeasibilityProblem, LPoly,
    LpOutcome, OrderedField, PuiseuxNum, PuiseuxVector,
};
use crate::random;
use crate::rat;
use crate::sym::{Sign, SignedTrop};
use crate::vector::SignedVector;

fn pn(s: &str) -> PuiseuxNum {
    lit(s)
}

fn pv(s: &str) -> PuiseuxVector {
    lit(s)
}

fn v(s: &str) -> SignedVector {
    lit(s)
}

fn types(items: &[usize]) -> BTreeSet<usize> {
    items.iter().copied().collect()
}

fn num(rng: &mut ChaCha8Rng) -> PuiseuxNum {
    random::puiseux(rng, 0.1, 0.3)
}

/// Monotonicity, multiplicativity and the sum rule of the signed valuation,
/// with deliberate cancellations in a third of the cases.
pub(crate) fn sval_rules_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    let p = num(rng);
    let q = if rng.gen_bool(1.0 / 3.0) {
        // Cancel the leading term of p, keeping a random tail.
        p.neg().add(&random::puiseux(rng, 0.3, 0.2).mul(&PuiseuxNum::t_pow(rat::int(-4))))
    } else {
        num(rng)
    };
    let (sp, sq) = (p.sval(), q.sval());
    let inputs = format!("p={p} q={q}");
    if p <= q {
        ensure!(sp <= sq, inputs, format!("sval p ≤ sval q ({sp}, {sq})"), "violated");
    }
    let prod = p.mul(&q).sval();
    ensure!(prod == sp.mul(&sq), inputs, format!("sval(pq) = {}", sp.mul(&sq)), prod);
    let sum = p.add(&q).sval();
    let box_ = sp.add(&sq).uncomp();
    Ok(Case::check(box_.contains(&sum), inputs, format!("sval(p+q) ∈ {box_}"), sum))
}

fn field_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    let (p, q, r) = (num(rng), num(rng), num(rng));
    let inputs = format!("p={p} q={q} r={r}");
    ensure!(p.add(&q) == q.add(&p) && p.mul(&q) == q.mul(&p), inputs, "commutativity", "violated");
    ensure!(p.add(&q).add(&r) == p.add(&q.add(&r)), inputs, "additive associativity", "violated");
    ensure!(p.mul(&q).mul(&r) == p.mul(&q.mul(&r)), inputs, "multiplicative associativity", "violated");
    ensure!(p.mul(&q.add(&r)) == p.mul(&q).add(&p.mul(&r)), inputs, "distributivity", "violated");
    ensure!(p.sub(&p).is_zero() && p.add(&PuiseuxNum::zero()) == p, inputs, "additive identity", "violated");
    if !p.is_zero() {
        let inv = p.recip()?;
        ensure!(p.mul(&inv) == PuiseuxNum::one(), inputs, "p · p⁻¹ = 1", p.mul(&inv));
        ensure!(q.div(&p)?.mul(&p) == q, inputs, "(q / p) · p = q", "violated");
    }
    let signs = [p.is_negative(), p.is_zero(), p.is_positive()];
    ensure!(signs.iter().filter(|&&b| b).count() == 1, inputs, "trichotomy", format!("{signs:?}"));
    if p <= q {
        ensure!(p.add(&r) <= q.add(&r), inputs, "p ≤ q ⇒ p + r ≤ q + r", "violated");
        if !r.is_negative() {
            ensure!(p.mul(&r) <= q.mul(&r), inputs, "p ≤ q, r ≥ 0 ⇒ pr ≤ qr", "violated");
        }
    }
    let sq = p.mul(&p);
    Ok(Case::check(!sq.is_negative(), inputs, "p² ≥ 0", sq))
}

/// Random coefficients `(a_0, …, a_d)` over the field with a nonzero
/// non-constant part.
fn coefficients(rng: &mut ChaCha8Rng, d: usize) -> PuiseuxVector {
    loop {
        let a = random::puiseux_vector(rng, d + 1, 0.2, 0.2);
        if a.entries()[1..].iter().any(|c| !c.is_zero()) {
            return a;
        }
    }
}

fn affine_value(a: &PuiseuxVector, x: &PuiseuxVector) -> PuiseuxNum {
    x.entries().iter().zip(&a.entries()[1..]).fold(a.get(0).clone(), |acc, (xi, ai)| acc.add(&ai.mul(xi)))
}

fn sval_halfspace_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    let d = rng.gen_range(1..=3);
    let mut a = coefficients(rng, d);
    let x = random::puiseux_vector(rng, d, 0.2, 0.2);
    if affine_value(&a, &x).is_negative() {
        a = a.scale(&PuiseuxNum::from_int(-1));
    }
    let (sa, sx) = (a.sval(), x.sval());
    let inputs = format!("a={a} x={x}");
    ensure!(closed_halfspace_contains(&a, &x)?, inputs, "x in the closed halfspace of a", "outside");
    ensure!(
        two_max_member(&sa, &sx, HalfspaceKind::Closed)?,
        inputs,
        format!("sval x = {sx} ∈ H̄⁺({sa})"),
        eval_affine(&sa, &sx)?
    );
    // Converse direction on tropical points in the open halfspace.
    for _ in 0..20 {
        let y = random::vector(rng, d, -3, 3, 0.2);
        if !two_max_member(&sa, &y, HalfspaceKind::Open)? {
            continue;
        }
        let lifted = lift_canonical(&y);
        return Ok(Case::check(
            closed_halfspace_contains(&a, &lifted)?,
            format!("{inputs} y={y}"),
            "canonical lift of y ∈ H⁺(sval a) in the closed halfspace of a",
            affine_value(&a, &lifted),
        ));
    }
    Ok(Case::Pass)
}

fn lift_type_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    for _ in 0..200 {
        let d = rng.gen_range(1..=3);
        let a = random::vector(rng, d + 1, -2, 2, 0.25);
        if a.iter().skip(1).all(SignedTrop::is_zero) {
            continue;
        }
        let x = random::vector(rng, d, -2, 2, 0.25);
        if !eval_affine(&a, &x)?.is_balanced() {
            continue;
        }
        let j = hs_type(&a);
        let la = lift_coefficients(&a, &j);
        let lx = lift_typed(&x, &j);
        return Ok(Case::check(
            closed_halfspace_contains(&la, &lx)?,
            format!("a={a} x={x} J={j:?}"),
            "li_J(x) in the lifted closed halfspace",
            affine_value(&la, &lx),
        ));
    }
    Ok(Case::Skip)
}

fn multiplied_conv_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    let d = rng.gen_range(1..=2);
    let n = rng.gen_range(1..=3);
    let pts: Vec<PuiseuxVector> = (0..n).map(|_| random::puiseux_vector(rng, d, 0.2, 0.0)).collect();
    let raw: Vec<BigRational> = (0..n).map(|_| rat::int(rng.gen_range(1..=5))).collect();
    let total: BigRational = raw.iter().sum();
    let w: Vec<PuiseuxNum> = raw.iter().map(|r| PuiseuxNum::constant(r / &total)).collect();
    let combo = |ps: &[PuiseuxVector]| -> PuiseuxVector {
        (0..d).map(|k| ps.iter().zip(&w).fold(PuiseuxNum::zero(), |acc, (p, wi)| acc.add(&p.get(k).mul(wi)))).collect()
    };
    let z = combo(&pts);
    let lambda = PuiseuxNum::from_poly(LPoly::from_terms(vec![
        (rat::int(rng.gen_range(-3..=3)), rat::int(rng.gen_range(1..=3))),
        (rat::int(-5), rat::int(rng.gen_range(-2..=2))),
    ]));
    let scaled: Vec<PuiseuxVector> = pts.iter().map(|p| p.scale(&lambda)).collect();
    let lz = combo(&scaled);
    let inputs = format!("λ={lambda} z={z}");
    ensure!(conv_member(&scaled, &lz)?, inputs, "λz ∈ conv(λX)", "outside");
    let expected = z.sval().scale(&lambda.sval());
    Ok(Case::check(lz.sval() == expected, inputs, expected, lz.sval()))
}

/// Direct evaluation of a witness of `A x = b, x_j ≥ 0`.
fn witness_holds<F: OrderedField>(rows: &[Vec<F>], rhs: &[F], nonneg: &[bool], x: &[F]) -> bool {
    let dot = |r: &[F]| r.iter().zip(x).fold(F::f_zero(), |acc, (a, b)| acc.f_add(&a.f_mul(b)));
    x.len() == nonneg.len()
        && x.iter().zip(nonneg).all(|(xi, &nn)| !nn || xi.f_signum() >= 0)
        && rows.iter().zip(rhs).all(|(r, b)| dot(r) == *b)
}

/// Direct evaluation of a Farkas certificate.
fn certificate_holds<F: OrderedField>(rows: &[Vec<F>], rhs: &[F], nonneg: &[bool], y: &[F]) -> bool {
    if y.len() != rows.len() {
        return false;
    }
    let cols = (0..nonneg.len()).all(|j| {
        let s = rows.iter().zip(y).fold(F::f_zero(), |acc, (r, yi)| acc.f_add(&r[j].f_mul(yi)));
        if nonneg[j] {
            s.f_signum() >= 0
        } else {
            s.f_is_zero()
        }
    });
    let by = rhs.iter().zip(y).fold(F::f_zero(), |acc, (b, yi)| acc.f_add(&b.f_mul(yi)));
    cols && by.f_signum() < 0
}

fn lp_case<F: OrderedField>(rng: &mut ChaCha8Rng, entry: impl Fn(&mut ChaCha8Rng) -> F) -> Result<Case> {
    let m = rng.gen_range(1..=3);
    let n = rng.gen_range(1..=4);
    let nonneg: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.8)).collect();
    let mut p = FeasibilityProblem::new(nonneg.clone());
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for _ in 0..m {
        let row: Vec<F> = (0..n).map(|_| if rng.gen_bool(0.2) { F::f_zero() } else { entry(rng) }).collect();
        let b = entry(rng);
        p.add_row(row.clone(), b.clone())?;
        rows.push(row);
        rhs.push(b);
    }
    let inputs = format!("rows={rows:?} rhs={rhs:?} nonneg={nonneg:?}");
    Ok(match lp_solve(&p)? {
        LpOutcome::Feasible(x) => Case::check(witness_holds(&rows, &rhs, &nonneg, &x), inputs, "valid witness", format!("{x:?}")),
        LpOutcome::Infeasible(y) => {
            Case::check(certificate_holds(&rows, &rhs, &nonneg, &y), inputs, "valid certificate", format!("{y:?}"))
        }
    })
}

pub(crate) fn puiseux_examples(s: &mut Suite) {
    let name = "puiseux examples";
    s.expect_eq(name, "t² · t⁻¹", pn("t"), Ok(pn("t^2").mul(&pn("t^-1"))));
    let sum = pn("-t^-1").add(&pn("t^-5").mul(&pn("t^2")));
    s.expect_eq(name, "−t⁻¹ + t⁻⁵·t²", pn("-t^-1 + t^-3"), Ok(sum.clone()));
    s.expect(
        name,
        "leading term of −t⁻¹ + t⁻³",
        sum.leading() == Some((rat::int(-1), rat::int(-1))),
        "−1·t^-1",
        format!("{:?}", sum.leading()),
    );
    let base = pn("1 + t^-1");
    s.expect_eq(
        name,
        "1 / (1 + t⁻¹)",
        "(1 + t⁻¹)·r = 1, sval r = +0",
        base.recip().map(|r| {
            if base.mul(&r) == PuiseuxNum::one() {
                format!("(1 + t⁻¹)·r = 1, sval r = {}", r.sval())
            } else {
                format!("product {}", base.mul(&r))
            }
        }),
    );
    s.expect_eq(name, "sval(t², t⁻¹, −t³, 1)", "[+2, +-1, -3, +0]", Ok(pv("[t^2, t^-1, -t^3, 1]").sval()));
    s.expect_eq(name, "sval(−t⁻¹, −t, 0, t⁻²)", "[--1, -1, o, +-2]", Ok(pv("[-t^-1, -t, 0, t^-2]").sval()));
    s.expect_eq(name, "sval(0)", "o", Ok(PuiseuxNum::zero().sval()));
    let first = pv("[-t^-1, -t, 0, t^-2]");
    let second = pv("[t^2, t^-1, -t^3, 1]");
    let combo = first.add(&second.scale(&pn("t^-5")));
    s.expect_true(
        name,
        "(−t⁻¹,−t,0,t⁻²) + t⁻⁵(t²,t⁻¹,−t³,1) ∈ cone",
        combo.as_ref().map_err(Clone::clone).and_then(|c| cone_member(&[first.clone(), second.clone()], c)),
    );
    s.expect_eq(
        name,
        "tsgn of the combination",
        "[Neg, Neg, Neg, Pos]",
        combo.map(|c| format!("{:?}", c.tsgn())),
    );

    s.expect_eq(name, "cli(⊖3)", pv("[-t^3]"), Ok(lift_canonical(&v("[-3]"))));
    s.expect_eq(name, "cli(𝟘)", pv("[0]"), Ok(lift_canonical(&v("[o]"))));
    s.expect_eq(name, "cli(2, ⊖0)", pv("[t^2, -1]"), Ok(lift_canonical(&v("[+2, -0]"))));
    s.expect_eq(name, "li_{1}(2, ⊖0)", pv("[3*t^2, -3]"), Ok(lift_typed(&v("[+2, -0]"), &types(&[1]))));
    s.expect_eq(name, "li_{1,2}(2, ⊖0)", pv("[3*t^2, -1]"), Ok(lift_typed(&v("[+2, -0]"), &types(&[1, 2]))));
    let nonneg = v("[+2, o, +-1]");
    s.expect_eq(name, "li_∅ = cli on the nonnegative orthant", lift_canonical(&nonneg), Ok(lift_typed(&nonneg, &types(&[]))));
    let nonpos = v("[-2, o, --1]");
    s.expect_eq(
        name,
        "li_[d] = cli on the nonpositive orthant",
        lift_canonical(&nonpos),
        Ok(lift_typed(&nonpos, &types(&[1, 2, 3]))),
    );

    let name = "linear feasibility examples";
    let one = PuiseuxNum::one();
    let zero = PuiseuxNum::zero();
    let mut p = FeasibilityProblem::new(vec![true, true]);
    let rows = [(vec![one.clone(), one.clone()], one.clone()), (vec![zero.clone(), one.clone()], pn("t^-1"))];
    for (r, b) in rows.iter().cloned() {
        p.add_row(r, b).expect("two columns");
    }
    s.expect_eq(
        name,
        "λ₁ + λ₂ = 1, λ₂ = t⁻¹",
        "λ = (1 − t⁻¹, t⁻¹)",
        lp_solve(&p).map(|o| match o {
            LpOutcome::Feasible(x) if p.check_witness(&x) && x[1] == pn("t^-1") => "λ = (1 − t⁻¹, t⁻¹)".to_string(),
            other => format!("{other:?}"),
        }),
    );
    let mut q = FeasibilityProblem::new(vec![true, true]);
    q.add_row(vec![one.clone(), one.clone()], one.clone()).expect("two columns");
    q.add_row(vec![pn("t"), pn("t^2")], one.clone()).expect("two columns");
    s.expect_eq(
        name,
        "λ₁ + λ₂ = 1, λ₁t + λ₂t² = 1",
        "infeasible, certificate verified",
        lp_solve(&q).map(|o| match o {
            LpOutcome::Infeasible(y) if q.check_certificate(&y) => "infeasible, certificate verified".to_string(),
            other => format!("{other:?}"),
        }),
    );
    s.expect_true(name, "t⁻¹(1,1) ∈ conv{(0,0),(1,1)}", conv_member(&[pv("[0, 0]"), pv("[1, 1]")], &pv("[t^-1, t^-1]")));
    s.expect_true(name, "generator ∈ conv", conv_member(&[pv("[t, -1]"), pv("[1, t^2]")], &pv("[1, t^2]")));
    s.expect_false(name, "t² ∉ conv{1, t}", conv_member(&[pv("[1]"), pv("[t]")], &pv("[t^2]")));
}

fn lift_valuation_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    let d = rng.gen_range(1..=4);
    let x = random::vector(rng, d, -3, 3, 0.25);
    let inputs = format!("x={x}");
    ensure!(lift_canonical(&x).sval() == x, inputs, "sval cli(x) = x", lift_canonical(&x).sval());
    for j in all_types(d) {
        let l = lift_typed(&x, &j);
        ensure!(l.sval() == x, inputs, format!("sval li_{j:?}(x) = x"), l.sval());
        let a = x.prepended(random::entry(rng, -3, 3, 0.3));
        let la = lift_coefficients(&a, &j);
        ensure!(la.sval() == a, format!("a={a}"), format!("sval of lifted coefficients for {j:?}"), la.sval());
    }
    Ok(Case::Pass)
}

/// Some Puiseux vectors with signed valuation `y`: the canonical lift, every
/// typed lift and random perturbations of lower order.
fn lifts_of(y: &SignedVector, rng: &mut ChaCha8Rng) -> Vec<PuiseuxVector> {
    let mut out = vec![lift_canonical(y)];
    out.extend(all_types(y.dim()).iter().map(|j| lift_typed(y, j)));
    for _ in 0..4 {
        out.push(
            y.iter()
                .map(|c| match c.mag() {
                    None => PuiseuxNum::zero(),
                    Some(m) => {
                        let lc = rat::frac(rng.gen_range(1..=40), rng.gen_range(1..=8));
                        let lc = if c.sign() == Sign::Pos { lc } else { -lc };
                        let tail = rat::int(rng.gen_range(-3..=3));
                        PuiseuxNum::from_poly(LPoly::from_terms(vec![(m.clone(), lc), (m - rat::int(1), tail)]))
                    }
                })
                .collect(),
        );
    }
    out
}

fn lift_intersection_case(rng: &mut ChaCha8Rng, exec: Exec) -> Result<Case> {
    let (d, n) = (2, 3);
    let x = random::point_set(rng, n, d, -2, 2, 0.2);
    let y = if rng.gen_bool(0.5) {
        // A left sum of scaled generators: usually a member.
        let mut acc: Option<SignedVector> = None;
        for p in x.points() {
            let l = SignedTrop::pos(rat::int(rng.gen_range(-2..=0)));
            let q = p.scale(&l);
            acc = Some(match acc {
                None => q,
                Some(a) => a.left_sum(&q)?,
            });
        }
        acc.expect("three points")
    } else {
        random::vector(rng, d, -2, 2, 0.2)
    };
    let inputs = format!("X={} y={y}", x.points().iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    if tc_hull_member(&x, &y)? {
        for (j, w) in lift_witness_all_types(&x, &y, exec)? {
            let Some(z) = w else {
                return Ok(Case::Inconclusive);
            };
            let lifted: Vec<PuiseuxVector> = x.points().iter().map(|p| lift_typed(p, &j)).collect();
            ensure!(z.sval() == y, inputs, format!("witness of type {j:?} with valuation y"), z.sval());
            ensure!(conv_member(&lifted, &z)?, inputs, format!("witness of type {j:?} in conv(li_J(X))"), z);
        }
        return Ok(Case::Pass);
    }
    let Some(chain) = certificate_chain(&x, &y)? else {
        return Ok(Case::fail(inputs, "a certificate chain for a non-member", "none"));
    };
    for p in x.points() {
        let lp = lift_typed(p, &chain.j);
        ensure!(closed_halfspace_contains(&chain.lifted, &lp)?, inputs, format!("li_J({p}) in the lifted halfspace"), lp);
    }
    for ly in lifts_of(&y, rng) {
        ensure!(
            !closed_halfspace_contains(&chain.lifted, &ly)?,
            inputs,
            format!("lift {ly} of y outside {} (type {:?})", chain.lifted, chain.j),
            "inside"
        );
    }
    ensure!(!chain.farkas.is_empty(), inputs, "a Farkas certificate", "empty");
    let again = lift_witness(&x, &chain.j, &y)?;
    Ok(Case::check(again.is_none(), inputs, format!("no lifted witness of type {:?}", chain.j), "witness found"))
}

pub(crate) fn lift_examples(s: &mut Suite) {
    let name = "lift examples";
    let x = PointSet::new(vec![v("[-1, +5]"), v("[+2, +5]")]).expect("points");
    for (y, label) in [("[+0, +5]", "(0,5)"), ("[-1, +5]", "generator (⊖1,5)")] {
        let got = lift_witness_all_types(&x, &v(y), Exec::default()).map(|ws| {
            let found: Vec<String> =
                ws.iter().filter(|(_, w)| w.as_ref().is_some_and(|z| z.sval() == v(y))).map(|(j, _)| format!("{j:?}")).collect();
            found.join(" ")
        });
        s.expect_eq(name, format!("lifted witnesses for {label}"), "{} {1} {2} {1, 2}", got);
    }
    let seg = PointSet::new(vec![v("[+0, +0]"), v("[--2, --2]")]).expect("points");
    let y = v("[+-2, --2]");
    let chain = certificate_chain(&seg, &y);
    s.expect_eq(
        name,
        "certificate chain for (−2,⊖−2) ∉ whull((0,0),(⊖−2,⊖−2))",
        "chain closes",
        chain.and_then(|c| {
            Ok(match c {
                None => "no chain".to_string(),
                Some(c) if lift_witness(&seg, &c.j, &y)?.is_none() => "chain closes".to_string(),
                Some(c) => format!("witness of type {:?} despite the certificate", c.j),
            })
        }),
    );
}

pub(crate) fn puiseux(s: &mut Suite) {
    puiseux_examples(s);
    s.random("ordered field axioms", s.scaled(300), field_case);
    s.random("sval-rules", s.scaled(1000), sval_rules_case);
    s.random("sval-halfspace", s.scaled(100), sval_halfspace_case);
    s.random("lift-type-boundary", s.scaled(40), lift_type_case);
    s.random("multiplied-conv", s.scaled(20), multiplied_conv_case);
    s.random("lp certificates over the rationals", s.scaled(300), |rng| {
        lp_case(rng, |r| rat::frac(r.gen_range(-5..=5), r.gen_range(1..=3)))
    });
    s.random("lp certificates over the puiseux field", s.scaled(60), |rng| {
        lp_case(rng, |r| {
            let (c1, e1) = (rat::int(r.gen_range(-3..=3)), rat::int(r.gen_range(-2..=2)));
            let (c2, e2) = (rat::int(r.gen_range(-3..=3)), rat::frac(r.gen_range(-4..=4), 2));
            PuiseuxNum::monomial(c1, e1).add(&PuiseuxNum::monomial(c2, e2))
        })
    });
}

pub(crate) fn lifts(s: &mut Suite) {
    lift_examples(s);
    s.random("lift-valuation", s.scaled(300), lift_valuation_case);
    let exec = s.exec();
    s.random("lift-intersection", s.scaled(10), move |rng| lift_intersection_case(rng, exec));
    s.cap_inconclusive("lift-intersection", 0.05);
}
