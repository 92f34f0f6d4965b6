//! Seeded example and property suites.
//!
//! Every suite is deterministic for a given seed and size.  Random cases of
//! one check are evaluated through [`par::map`] and merged in case order, so
//! a report never depends on the thread count.

mod algebra;
mod geometry;
mod lifting;
mod structures;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::random;
use crate::rat;
use crate::sym::{Interval, Sign, SignedTrop};

pub use algebra::{lemma_suite, Lemma};

/// Default seed of the command line harness.
pub const DEFAULT_SEED: u64 = 7;

/// At most this many failures are stored per report; all are counted.
pub const MAX_RECORDED_FAILURES: usize = 50;

/// Names accepted by [`run_suite`], in the order `all` runs them.
pub const SUITES: [&str; 14] = [
    "semiring",
    "leftsum",
    "faces",
    "hulls",
    "sandglass",
    "pasch",
    "hemispace",
    "puiseux",
    "lifts",
    "separation",
    "matroid",
    "minkowski-weyl",
    "pasch-tc-counterexample",
    "paper-examples",
];

/// Scales the number of random cases of every check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Size {
    Small,
    Medium,
    Large,
}

impl Size {
    fn factor(self) -> u64 {
        match self {
            Size::Small => 1,
            Size::Medium => 5,
            Size::Large => 20,
        }
    }
}

impl FromStr for Size {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(Size::Small),
            "medium" => Ok(Size::Medium),
            "large" => Ok(Size::Large),
            _ => Err(Error::Parse(format!("unknown size {s:?} (expected small, medium or large)"))),
        }
    }
}

impl fmt::Display for Size {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Size::Small => "small",
            Size::Medium => "medium",
            Size::Large => "large",
        })
    }
}

/// One failed case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    /// Index of the random case, `None` for fixed examples.
    pub case: Option<u64>,
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.case {
            Some(i) => write!(f, "[{} #{i}] ", self.check)?,
            None => write!(f, "[{}] ", self.check)?,
        }
        write!(f, "inputs: {}; expected: {}; got: {}", self.inputs, self.expected, self.got)
    }
}

/// Per-check counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    /// Cases where a bounded search gave no answer either way.
    pub inconclusive: u64,
}

/// Result of one suite.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub seed: u64,
    pub size: Size,
    pub cases: u64,
    pub failure_count: u64,
    /// The first [`MAX_RECORDED_FAILURES`] failures.
    pub failures: Vec<Failure>,
    pub checks: Vec<CheckSummary>,
    pub wall_time_secs: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn check(&self, name: &str) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        writeln!(
            f,
            "{:<24} {status:<6} cases {:>7}  failures {:>3}  {:.2}s",
            self.name, self.cases, self.failure_count, self.wall_time_secs
        )?;
        for c in &self.checks {
            write!(f, "    {:<40} cases {:>7}  failures {:>3}", c.name, c.cases, c.failures)?;
            if c.inconclusive > 0 {
                write!(f, "  inconclusive {}", c.inconclusive)?;
            }
            writeln!(f)?;
        }
        for x in &self.failures {
            writeln!(f, "    {x}")?;
        }
        Ok(())
    }
}

/// Outcome of one random case.
pub(crate) enum Case {
    Pass,
    Fail { inputs: String, expected: String, got: String },
    Inconclusive,
    /// The generator could not produce an instance meeting the hypotheses;
    /// the case is not counted.
    Skip,
}

impl Case {
    pub(crate) fn fail(inputs: impl fmt::Display, expected: impl fmt::Display, got: impl fmt::Display) -> Case {
        Case::Fail { inputs: inputs.to_string(), expected: expected.to_string(), got: got.to_string() }
    }

    /// `Pass` if `ok`, otherwise a failure.
    pub(crate) fn check(
        ok: bool,
        inputs: impl fmt::Display,
        expected: impl fmt::Display,
        got: impl fmt::Display,
    ) -> Case {
        if ok {
            Case::Pass
        } else {
            Case::fail(inputs, expected, got)
        }
    }
}

/// Early return from a case closure on the first failing property.
macro_rules! ensure {
    ($ok:expr, $inputs:expr, $expected:expr, $got:expr) => {
        if !$ok {
            return Ok($crate::verify::Case::fail($inputs, $expected, $got));
        }
    };
}
pub(crate) use ensure;

/// Accumulates the checks of one suite.
pub(crate) struct Suite {
    name: String,
    seed: u64,
    size: Size,
    exec: Exec,
    checks: Vec<CheckSummary>,
    failures: Vec<Failure>,
    failure_count: u64,
    started: Instant,
}

impl Suite {
    pub(crate) fn new(name: &str, seed: u64, size: Size, exec: Exec) -> Suite {
        Suite {
            name: name.to_string(),
            seed,
            size,
            exec,
            checks: Vec::new(),
            failures: Vec::new(),
            failure_count: 0,
            started: Instant::now(),
        }
    }

    pub(crate) fn seed(&self) -> u64 {
        self.seed
    }

    pub(crate) fn exec(&self) -> Exec {
        self.exec
    }

    /// `base` cases at size small, scaled for larger sizes.
    pub(crate) fn scaled(&self, base: u64) -> u64 {
        base * self.size.factor()
    }

    fn summary(&mut self, name: &str) -> &mut CheckSummary {
        if let Some(i) = self.checks.iter().position(|c| c.name == name) {
            return &mut self.checks[i];
        }
        self.checks.push(CheckSummary { name: name.to_string(), cases: 0, failures: 0, inconclusive: 0 });
        self.checks.last_mut().expect("just pushed")
    }

    fn record(&mut self, failure: Failure) {
        self.summary(&failure.check.clone()).failures += 1;
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(failure);
        }
    }

    /// Seed of the random stream of check number `index`.
    fn check_seed(&self, index: usize) -> u64 {
        self.seed ^ ((index as u64 + 1).wrapping_mul(0xD1B5_4A32_D192_ED03))
    }

    /// Runs `count` seeded random cases of check `name`.
    pub(crate) fn random<F>(&mut self, name: &str, count: u64, f: F)
    where
        F: Fn(&mut ChaCha8Rng) -> Result<Case> + Sync + Send,
    {
        let index = self.checks.len();
        let seed = self.check_seed(index);

        let indices: Vec<u64> = (0..count).collect();
        let outcomes = par::map(&indices, self.exec, |&i| {
            let mut rng = random::case_rng(seed, i);
            f(&mut rng).unwrap_or_else(|e| Case::fail("(generated instance)", "no error", format!("error: {e}")))
        });
        self.summary(name);
        for (i, outcome) in indices.into_iter().zip(outcomes) {
            match outcome {
                Case::Skip => {}
                Case::Pass => self.summary(name).cases += 1,
                Case::Inconclusive => {
                    let s = self.summary(name);
                    s.cases += 1;
                    s.inconclusive += 1;
                }
                Case::Fail { inputs, expected, got } => {
                    self.summary(name).cases += 1;
                    self.record(Failure { check: name.to_string(), case: Some(i), inputs, expected, got });
                }
            }
        }
    }

    /// Records one fixed example.
    pub(crate) fn expect(
        &mut self,
        name: &str,
        inputs: impl fmt::Display,
        ok: bool,
        expected: impl fmt::Display,
        got: impl fmt::Display,
    ) {
        self.summary(name).cases += 1;
        if !ok {
            self.record(Failure {
                check: name.to_string(),
                case: None,
                inputs: inputs.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    /// Records a fixed example whose outcome is compared by its printed form.
    pub(crate) fn expect_eq<T: fmt::Display>(
        &mut self,
        name: &str,
        inputs: impl fmt::Display,
        expected: impl fmt::Display,
        got: Result<T>,
    ) {
        let expected = expected.to_string();
        match got {
            Ok(v) => {
                let v = v.to_string();
                self.expect(name, inputs, v == expected, expected, v);
            }
            Err(e) => self.expect(name, inputs, false, expected, format!("error: {e}")),
        }
    }

    /// Records a fixed boolean example.
    pub(crate) fn expect_true(&mut self, name: &str, inputs: impl fmt::Display, got: Result<bool>) {
        self.expect_eq(name, inputs, true, got);
    }

    /// Records a fixed example that must evaluate to `false`.
    pub(crate) fn expect_false(&mut self, name: &str, inputs: impl fmt::Display, got: Result<bool>) {
        self.expect_eq(name, inputs, false, got);
    }

    /// Turns an excessive inconclusive rate of check `name` into a failure.
    pub(crate) fn cap_inconclusive(&mut self, name: &str, max_fraction: f64) {
        let s = self.summary(name).clone();
        if s.cases > 0 && s.inconclusive as f64 > max_fraction * s.cases as f64 {
            self.record(Failure {
                check: name.to_string(),
                case: None,
                inputs: format!("{} cases", s.cases),
                expected: format!("at most {:.1}% inconclusive", 100.0 * max_fraction),
                got: format!("{} inconclusive", s.inconclusive),
            });
        }
    }

    pub(crate) fn finish(self) -> SuiteReport {
        SuiteReport {
            name: self.name,
            seed: self.seed,
            size: self.size,
            cases: self.checks.iter().map(|c| c.cases).sum(),
            failure_count: self.failure_count,
            failures: self.failures,
            checks: self.checks,
            wall_time_secs: self.started.elapsed().as_secs_f64(),
        }
    }
}

/// Runs the suite `name` (one of [`SUITES`]).
pub fn run_suite(name: &str, seed: u64, size: Size) -> Result<SuiteReport> {
    run_suite_with(name, seed, size, Exec::default())
}

pub fn run_suite_with(name: &str, seed: u64, size: Size, exec: Exec) -> Result<SuiteReport> {
    let mut s = Suite::new(name, seed, size, exec);
    match name {
        "semiring" => algebra::semiring(&mut s),
        "leftsum" => algebra::leftsum(&mut s),
        "faces" => geometry::faces(&mut s),
        "hulls" => geometry::hulls(&mut s),
        "sandglass" => geometry::sandglass(&mut s),
        "pasch" => geometry::pasch(&mut s),
        "hemispace" => structures::hemispace(&mut s),
        "puiseux" => lifting::puiseux(&mut s),
        "lifts" => lifting::lifts(&mut s),
        "separation" => geometry::separation(&mut s),
        "matroid" => structures::matroid(&mut s),
        "minkowski-weyl" => geometry::minkowski_weyl(&mut s),
        "pasch-tc-counterexample" => geometry::pasch_tc_counterexample(&mut s),
        "paper-examples" => paper_examples(&mut s),
        _ => {
            return Err(Error::InvalidInput(format!(
                "unknown suite {name:?}; expected one of {} or all",
                SUITES.join(", ")
            )))
        }
    }
    Ok(s.finish())
}

/// Runs every suite of [`SUITES`].
pub fn run_all(seed: u64, size: Size, exec: Exec) -> Vec<SuiteReport> {
    SUITES.iter().map(|n| run_suite_with(n, seed, size, exec).expect("known suite")).collect()
}

/// The worked examples of every area, without random cases.
fn paper_examples(s: &mut Suite) {
    algebra::semiring_examples(s);
    algebra::leftsum_examples(s);
    geometry::faces_examples(s);
    geometry::hull_examples(s);
    geometry::pasch_examples(s);
    geometry::pasch_tc_counterexample(s);
    geometry::separation_examples(s);
    structures::hemispace_examples(s);
    lifting::puiseux_examples(s);
    lifting::lift_examples(s);
    structures::matroid_examples(s);
}

/// A random element of the interval: an endpoint, or a random interior
/// value with an integer magnitude when there is one.
pub(crate) fn sample_in<R: Rng>(iv: &Interval, rng: &mut R) -> SignedTrop {
    let mut options = vec![iv.lo.clone(), iv.hi.clone()];
    if let (Some(lo), Some(hi)) = (iv.lo.mag(), iv.hi.mag()) {
        let top = lo.max(hi).floor();
        for _ in 0..8 {
            let m = &top - rat::int(rng.gen_range(0..=3));
            let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
            let v = SignedTrop::new(sign, m).expect("signed");
            if iv.contains(&v) {
                options.push(v);
                break;
            }
        }
    }
    if iv.contains(&SignedTrop::zero()) {
        options.push(SignedTrop::zero());
    }
    options.swap_remove(rng.gen_range(0..options.len()))
}

/// Parses a literal in the value syntax; only used on constants.
pub(crate) fn lit<T: FromStr>(s: &str) -> T
where
    T::Err: fmt::Debug,
{
    s.parse().unwrap_or_else(|e| panic!("bad literal {s:?}: {e:?}"))
}
