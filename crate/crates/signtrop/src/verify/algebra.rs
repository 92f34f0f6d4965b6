//! Checks of the symmetrized semiring and of the left sum.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{ensure, lit, lifting, sample_in, Case, Suite, SuiteReport};
use crate::error::Result;
use crate::par::Exec;
use crate::random;
use crate::rat;
use crate::sym::{Interval, Sign, SignedTrop, SymNum, Unary};
use crate::vector::{left_sum_scalar, SignedVector};

/// The lemma-level properties with their own seeded suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma {
    /// Rules for `⊵`: moving terms across, adding, signed transitivity and
    /// affine monotonicity.
    TeqRules,
    /// `a ⊖ c ⊵ 𝟘 ∧ b ⊕ c ⊵ 𝟘 ⇒ a ⊕ b ⊕ c ⊵ 𝟘 ∧ a ⊕ b ⊖ c ⊵ 𝟘`.
    StrongerCancellation,
    /// Uncomp of iterated sums with an intermediate point.
    IteratedUncomp,
    /// Monotonicity of the left sum in both arguments.
    LeftSumOrder,
    /// Summing two left-sum lower bounds of equal sign.
    LeftSumCancellation,
    /// Monotonicity, multiplicativity and sum rule of the signed valuation.
    SvalRules,
}

impl Lemma {
    pub const ALL: [Lemma; 6] = [
        Lemma::TeqRules,
        Lemma::StrongerCancellation,
        Lemma::IteratedUncomp,
        Lemma::LeftSumOrder,
        Lemma::LeftSumCancellation,
        Lemma::SvalRules,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::TeqRules => "teq-rules",
            Lemma::StrongerCancellation => "stronger-cancellation",
            Lemma::IteratedUncomp => "iterated-uncomp",
            Lemma::LeftSumOrder => "left-sum-order",
            Lemma::LeftSumCancellation => "left-sum-cancellation",
            Lemma::SvalRules => "sval-rules",
        }
    }

    fn case(self, rng: &mut ChaCha8Rng) -> Result<Case> {
        match self {
            Lemma::TeqRules => teq_rules_case(rng),
            Lemma::StrongerCancellation => stronger_cancellation_case(rng),
            Lemma::IteratedUncomp => iterated_uncomp_case(rng),
            Lemma::LeftSumOrder => left_sum_order_case(rng),
            Lemma::LeftSumCancellation => left_sum_cancellation_case(rng),
            Lemma::SvalRules => lifting::sval_rules_case(rng),
        }
    }
}

/// Runs `cases` seeded random cases of one lemma (plus, for the left-sum
/// cancellation, the counterexample without the sign hypothesis).
pub fn lemma_suite(lemma: Lemma, seed: u64, cases: u64, exec: Exec) -> SuiteReport {
    let mut s = Suite::new(lemma.name(), seed, super::Size::Small, exec);
    s.random(lemma.name(), cases, move |rng| lemma.case(rng));
    if lemma == Lemma::LeftSumCancellation {
        cancellation_counterexample(&mut s);
    }
    s.finish()
}

fn teq(a: &SymNum, b: &SymNum) -> bool {
    a.compare(b).teq
}

fn sym(rng: &mut ChaCha8Rng) -> SymNum {
    random::sym_entry(rng, -2, 2)
}

fn signed(rng: &mut ChaCha8Rng) -> SignedTrop {
    random::entry(rng, -2, 2, 0.15)
}

fn teq_rules_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    let (a, b, c, d) = (sym(rng), sym(rng), sym(rng), sym(rng));
    let s: SymNum = signed(rng).into();
    let inputs = format!("a={a} b={b} c={c} d={d} s={s}");
    let left = teq(&a.add(&c), &b);
    let right = teq(&a, &b.sub(&c));
    ensure!(left == right, inputs, "a⊕c ⊵ b ⇔ a ⊵ b⊖c", format!("{left} vs {right}"));
    if teq(&a, &b) && teq(&c, &d) {
        ensure!(teq(&a.add(&c), &b.add(&d)), inputs, "a⊕c ⊵ b⊕d", "not ⊵");
    }
    if teq(&b, &s) && teq(&s, &a) {
        ensure!(teq(&b, &a), inputs, "b ⊵ a through the signed s", "not ⊵");
    }
    if teq(&a, &b) {
        let lhs = s.mul(&a).add(&d);
        let rhs = s.mul(&b).add(&d);
        if !s.is_negative() {
            ensure!(teq(&lhs, &rhs), inputs, "s⊙a⊕d ⊵ s⊙b⊕d for s ≥ 𝟘", format!("{lhs} vs {rhs}"));
        }
        if !s.is_positive() {
            ensure!(teq(&rhs, &lhs), inputs, "s⊙b⊕d ⊵ s⊙a⊕d for s ≤ 𝟘", format!("{rhs} vs {lhs}"));
        }
    }
    Ok(Case::Pass)
}

fn stronger_cancellation_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    let (a, b, c) = (sym(rng), sym(rng), sym(rng));
    let zero = SymNum::zero();
    if teq(&a.sub(&c), &zero) && teq(&b.add(&c), &zero) {
        let plus = a.add(&b).add(&c);
        let minus = a.add(&b).sub(&c);
        return Ok(Case::check(
            teq(&plus, &zero) && teq(&minus, &zero),
            format!("a={a} b={b} c={c}"),
            "a⊕b⊕c ⊵ 𝟘 and a⊕b⊖c ⊵ 𝟘",
            format!("{plus}, {minus}"),
        ));
    }
    Ok(Case::Pass)
}

fn uncomp_of(x: &SignedTrop, y: &SignedTrop) -> Interval {
    x.add(y).uncomp()
}

fn iterated_uncomp_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    let (u, v, w) = (signed(rng), signed(rng), signed(rng));
    let q = sample_in(&uncomp_of(&v, &w), rng);
    let p = sample_in(&uncomp_of(&u, &v), rng);
    let all = u.add(&v).add(&w.clone().into()).uncomp();
    let left = uncomp_of(&u, &q);
    let right = uncomp_of(&p, &w);
    let inputs = format!("u={u} v={v} w={w} q={q} p={p}");
    ensure!(left.is_subset_of(&all), inputs, format!("Uncomp(u⊕q) ⊆ {all:?}"), format!("{left:?}"));
    ensure!(right.is_subset_of(&all), inputs, format!("Uncomp(p⊕w) ⊆ {all:?}"), format!("{right:?}"));
    Ok(Case::check(left.intersect(&right).is_some(), inputs, "Uncomp(u⊕q) ∩ Uncomp(p⊕w) ≠ ∅", "empty"))
}

/// `a ∈ Uncomp(x)`, `b ∈ Uncomp(y)`, `c` signed ⇒
/// `Uncomp(c⊙a ⊕ b) ⊆ Uncomp(c⊙x ⊕ y)`.
fn uncomp_scaled_sum_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    let (x, y) = (sym(rng), sym(rng));
    let c = signed(rng);
    let a = sample_in(&x.uncomp(), rng);
    let b = sample_in(&y.uncomp(), rng);
    let inner = a.mul(&c).add(&b).uncomp();
    let outer = x.mul(c.as_sym()).add(&y).uncomp();
    Ok(Case::check(
        inner.is_subset_of(&outer),
        format!("x={x} y={y} a={a} b={b} c={c}"),
        format!("subset of {outer:?}"),
        format!("{inner:?}"),
    ))
}

fn semiring_axioms_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    let (a, b, c) = (sym(rng), sym(rng), sym(rng));
    let inputs = format!("a={a} b={b} c={c}");
    ensure!(a.add(&b) == b.add(&a), inputs, "⊕ commutative", "differs");
    ensure!(a.add(&b).add(&c) == a.add(&b.add(&c)), inputs, "⊕ associative", "differs");
    ensure!(a.mul(&b) == b.mul(&a), inputs, "⊙ commutative", "differs");
    ensure!(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)), inputs, "⊙ associative", "differs");
    ensure!(a.mul(&b.add(&c)) == a.mul(&b).add(&a.mul(&c)), inputs, "⊙ distributes over ⊕", "differs");
    ensure!(a.add(&SymNum::zero()) == a && a.mul(&SymNum::one()) == a, inputs, "identities", "differs");
    ensure!(a.mul(&SymNum::zero()).is_zero(), inputs, "𝟘 absorbing", "differs");
    ensure!(a.negate().negate() == a, inputs, "⊖⊖a = a", "differs");
    ensure!(a.sub(&a) == a.balance(), inputs, "a ⊖ a = •a", a.sub(&a));
    ensure!(a.sub(&a).is_balanced_or_zero(), inputs, "a ⊖ a balanced", a.sub(&a));
    ensure!(a.abs().is_nonnegative() && a.abs().cmp_mag(&a).is_eq(), inputs, "|a| ≥ 𝟘 with the magnitude of a", a.abs());
    Ok(Case::Pass)
}

fn s(x: &str) -> SymNum {
    lit(x)
}

pub(crate) fn semiring_examples(su: &mut Suite) {
    let name = "arithmetic examples";
    su.expect_eq(name, "⊕0 ⊕ ⊖0", s("b0"), Ok(s("+0").add(&s("-0"))));
    su.expect_eq(name, "•4 ⊕ ⊕3", s("b4"), Ok(s("b4").add(&s("+3"))));
    su.expect_eq(name, "2 ⊙ ⊖1", s("-3"), Ok(s("+2").mul(&s("-1"))));
    su.expect_eq(name, "•0 ⊙ ⊖(−1)", s("b-1"), Ok(s("b0").mul(&s("--1"))));
    su.expect_eq(name, "(0 ⊕ ⊖0) ⊙ ⊖(−1)", s("b-1"), Ok(s("+0").add(&s("-0")).mul(&s("--1"))));
    su.expect_eq(name, "(−1) ⊙ (−1)", s("+-2"), Ok(s("+-1").mul(&s("+-1"))));
    su.expect_eq(name, "⊖1 ⊙ ⊖1", s("+2"), Ok(s("-1").mul(&s("-1"))));
    su.expect_eq(name, "|•4|", s("+4"), Ok(s("b4").unary(Unary::Abs)));
    let rel = |a: &str, b: &str| s(a).compare(&s(b));
    su.expect(name, "2 > ⊖3", rel("+2", "-3").gt, "gt", format!("{:?}", rel("+2", "-3")));
    su.expect(
        name,
        "•4 ⊵ ⊖3 but not >",
        rel("b4", "-3").teq && !rel("b4", "-3").gt,
        "teq, not gt",
        format!("{:?}", rel("b4", "-3")),
    );
    su.expect(name, "⊖3 ⊵ •4", rel("-3", "b4").teq, "teq", format!("{:?}", rel("-3", "b4")));
    su.expect(name, "3 ⊵ •4", rel("+3", "b4").teq, "teq", format!("{:?}", rel("+3", "b4")));
    let u = s("b-2").uncomp();
    su.expect(
        name,
        "Uncomp(•(−2))",
        u.lo == lit("--2") && u.hi == lit("+-2"),
        "[⊖(−2), ⊕(−2)]",
        format!("[{}, {}]", u.lo, u.hi),
    );
}

pub(crate) fn semiring(su: &mut Suite) {
    semiring_examples(su);
    let n = su.scaled(2000);
    su.random("semiring axioms", n, semiring_axioms_case);
    for lemma in [Lemma::TeqRules, Lemma::StrongerCancellation, Lemma::IteratedUncomp] {
        su.random(lemma.name(), n, move |rng| lemma.case(rng));
    }
    su.random("uncomp-scaled-sum", n, uncomp_scaled_sum_case);
}

fn left_fold(xs: &[SignedTrop]) -> SignedTrop {
    xs.iter().skip(1).fold(xs[0].clone(), |acc, x| left_sum_scalar(&acc, x))
}

fn left_sum_order_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    let pair = |rng: &mut ChaCha8Rng| {
        let (x, y) = (signed(rng), signed(rng));
        if x <= y {
            (x, y)
        } else {
            (y, x)
        }
    };
    let (a1, b1) = pair(rng);
    let (a2, b2) = pair(rng);
    let x = left_sum_scalar(&a1, &a2);
    let y = left_sum_scalar(&b1, &b2);
    let inputs = format!("a1={a1} b1={b1} a2={a2} b2={b2}");
    // (a) and, read from the other side, (c).
    ensure!(x <= y, inputs, "a1◁a2 ≤ b1◁b2", format!("{x} vs {y}"));
    if a1 < b1 && a2 < b2 {
        ensure!(x < y, inputs, "a1◁a2 < b1◁b2", format!("{x} vs {y}"));
    }
    // (c) and (d) with the roles exchanged.
    let x2 = left_sum_scalar(&b1, &b2);
    let y2 = left_sum_scalar(&a1, &a2);
    ensure!(x2 >= y2, inputs, "b1◁b2 ≥ a1◁a2", format!("{x2} vs {y2}"));
    if b1 > a1 && b2 > a2 {
        ensure!(x2 > y2, inputs, "b1◁b2 > a1◁a2", format!("{x2} vs {y2}"));
    }
    Ok(Case::Pass)
}

fn with_sign(sign: Sign, rng: &mut ChaCha8Rng) -> SignedTrop {
    match sign {
        Sign::Zero => SignedTrop::zero(),
        s => SignedTrop::new(s, rat::int(rng.gen_range(-3..=2))).expect("signed"),
    }
}

fn left_sum_cancellation_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    for _ in 0..200 {
        let n = rng.gen_range(1..=4usize);
        let x1: Vec<SignedTrop> = (0..n).map(|_| random::entry(rng, -2, 2, 0.25)).collect();
        let x2: Vec<SignedTrop> = (0..n).map(|_| random::entry(rng, -2, 2, 0.25)).collect();
        let l1 = left_fold(&x1);
        let l2 = left_fold(&x2);
        let sign = match rng.gen_range(0..10) {
            0 => Sign::Zero,
            1..=5 => Sign::Pos,
            _ => Sign::Neg,
        };
        let a = with_sign(sign, rng);
        let b = with_sign(sign, rng);
        let upper = rng.gen_bool(0.5);
        let holds = if upper { a <= l1 && b <= l2 } else { a >= l1 && b >= l2 };
        if !holds {
            continue;
        }
        let sum = a.add(&b).to_signed().expect("equal signs do not cancel");
        let inputs = format!(
            "a={a} b={b} x1={} x2={} ({})",
            SignedVector::new(x1.clone()),
            SignedVector::new(x2.clone()),
            if upper { "≤" } else { "≥" }
        );
        let ok = |w: &SignedTrop| if upper { sum <= *w } else { sum >= *w };
        for mask in 0u32..(1 << n) {
            let w: Vec<SignedTrop> = (0..n)
                .map(|i| {
                    if mask & (1 << i) == 0 {
                        left_sum_scalar(&x1[i], &x2[i])
                    } else {
                        left_sum_scalar(&x2[i], &x1[i])
                    }
                })
                .collect();
            let lw = left_fold(&w);
            ensure!(ok(&lw), inputs, format!("a⊕b = {sum} bounded by w = {}", SignedVector::new(w.clone())), lw);
        }
        let w: Vec<SignedTrop> = (0..n).map(|i| sample_in(&uncomp_of(&x1[i], &x2[i]), rng)).collect();
        let lw = left_fold(&w);
        return Ok(Case::check(
            ok(&lw),
            inputs,
            format!("a⊕b = {sum} bounded by w = {}", SignedVector::new(w.clone())),
            lw,
        ));
    }
    Ok(Case::Skip)
}

/// Without equal signs the bound fails: a = 0, b = ⊖0, x⁽¹⁾ = (𝟘, 0),
/// x⁽²⁾ = (⊖0, 𝟘), w = (⊖0, 0).
pub(crate) fn cancellation_counterexample(su: &mut Suite) {
    let name = "left-sum-cancellation counterexample";
    let (a, b): (SignedTrop, SignedTrop) = (lit("+0"), lit("-0"));
    let x1: Vec<SignedTrop> = vec![lit("o"), lit("+0")];
    let x2: Vec<SignedTrop> = vec![lit("-0"), lit("o")];
    let w: Vec<SignedTrop> = vec![lit("-0"), lit("+0")];
    let inputs = "a = 0, b = ⊖0, x1 = (𝟘, 0), x2 = (⊖0, 𝟘), w = (⊖0, 0)";
    let hyp = a <= left_fold(&x1) && b <= left_fold(&x2);
    su.expect(name, inputs, hyp, "a ≤ ◁x1 and b ≤ ◁x2", format!("◁x1 = {}, ◁x2 = {}", left_fold(&x1), left_fold(&x2)));
    let in_uncomp = (0..2).all(|i| uncomp_of(&x1[i], &x2[i]).contains(&w[i]));
    su.expect(name, inputs, in_uncomp, "w_i ∈ Uncomp(x1_i ⊕ x2_i)", "outside");
    let lw = left_fold(&w);
    su.expect_eq(name, inputs, "-0", Ok(lw.clone()));
    let ab = left_sum_scalar(&a, &b);
    su.expect(name, inputs, ab > lw, "a◁b = 0 > w1◁w2 = ⊖0", format!("{ab} vs {lw}"));
    let sum = a.add(&b);
    su.expect(
        name,
        inputs,
        !sum.compare(lw.as_sym()).gt && sum != *lw.as_sym(),
        "a⊕b = •0 is not ≤ ⊖0",
        sum,
    );
}

fn left_sum_vector_case(rng: &mut ChaCha8Rng) -> Result<Case> {
    let d = rng.gen_range(1..=4);
    let x = random::vector(rng, d, -2, 2, 0.25);
    let y = random::vector(rng, d, -2, 2, 0.25);
    let z = random::vector(rng, d, -2, 2, 0.25);
    let inputs = format!("x={x} y={y} z={z}");
    let xy = x.left_sum(&y)?;
    ensure!(xy.left_sum(&z)? == x.left_sum(&y.left_sum(&z)?)?, inputs, "◁ associative", "differs");
    for k in 0..d {
        let abs = xy.get(k).abs().into_sym();
        let expected = x.get(k).abs().add(&y.get(k).abs());
        ensure!(abs == expected, inputs, format!("|x◁y|_{k} = {expected}"), abs);
        ensure!(uncomp_of(x.get(k), y.get(k)).contains(xy.get(k)), inputs, "x◁y ∈ Uncomp(x⊕y)", xy.get(k));
    }
    Ok(Case::Pass)
}

pub(crate) fn leftsum_examples(su: &mut Suite) {
    let name = "left sum examples";
    let t = |x: &str| -> SignedTrop { lit(x) };
    su.expect_eq(name, "0 ◁ ⊖0", "+0", Ok(left_sum_scalar(&t("+0"), &t("-0"))));
    su.expect_eq(name, "⊖0 ◁ 0", "-0", Ok(left_sum_scalar(&t("-0"), &t("+0"))));
    su.expect_eq(name, "⊕1 ◁ ⊖2", "-2", Ok(left_sum_scalar(&t("+1"), &t("-2"))));
    let x: SignedVector = lit("[+1, --1]");
    su.expect_eq(name, "(⊕1, ⊖(−1)) ◁ (⊕0, ⊖0)", "[+1, -0]", x.left_sum(&lit("[+0, -0]")));
    cancellation_counterexample(su);
}

pub(crate) fn leftsum(su: &mut Suite) {
    leftsum_examples(su);
    let n = su.scaled(2000);
    su.random("left sum associativity and magnitude", n, left_sum_vector_case);
    for lemma in [Lemma::LeftSumOrder, Lemma::LeftSumCancellation] {
        su.random(lemma.name(), n, move |rng| lemma.case(rng));
    }
}
