//! `signtrop`: exact signed tropical convexity from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on malformed
//! input (parse errors, unreadable files, dimension mismatches).

mod expr;

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use signtrop::hull::{
    separate, separate_to, tc_cone_decide, tc_hull_decide, tc_interval, to_hull_decide, wspan_member, CandidateSpace,
    Decision, Grid, PointSet,
};
use signtrop::matroid::{
    axioms_check, circuits, cocircuits, default_grid, realize, representation_identities, OMatroid, RationalMatrix,
};
use signtrop::par::{self, Exec};
use signtrop::puiseux::{
    certificate_chain, lift_canonical, lift_typed, lift_witness_all_types, lp_solve, FeasibilityProblem, LpOutcome,
    PuiseuxNum,
};
use signtrop::verify::{run_suite_with, Size, SuiteReport, DEFAULT_SEED, SUITES};
use signtrop::{rat, SignedVector};

/// Environment variable holding the worker thread count.
const THREADS_VAR: &str = "SIGNTROP_THREADS";

#[derive(Parser)]
#[command(name = "signtrop", version, about = "Exact signed tropical convexity")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Run every data-parallel helper sequentially.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    /// TC-hull (whull).
    Tc,
    /// TO-hull (shull).
    To,
    /// TC-cone (wcone).
    Cone,
    /// TC-span (wspan).
    Span,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a semiring expression, e.g. "(+0 (+) -0) (*) -(-1)".
    Eval { expression: String },
    /// List the points of an integer grid lying in a hull.
    Hull {
        #[arg(long, value_enum, default_value = "tc")]
        mode: Mode,
        /// File with one vector per line.
        #[arg(long)]
        points: PathBuf,
        /// Smallest grid magnitude.
        #[arg(long, default_value_t = -2, allow_hyphen_values = true)]
        lo: i64,
        /// Largest grid magnitude.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        hi: i64,
    },
    /// Decide membership of one point, with a certificate.
    Member {
        #[arg(long, value_enum, default_value = "tc")]
        mode: Mode,
        #[arg(long)]
        points: PathBuf,
        /// The query vector, e.g. "[+-2, --2]".
        #[arg(long, allow_hyphen_values = true)]
        query: String,
    },
    /// Describe the TC-interval between two points.
    Interval {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Separate a point from the TC-hull of a set, or two sets (TO).
    Separate {
        #[arg(long)]
        points: PathBuf,
        /// Point to separate from whull(points).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "other")]
        query: Option<String>,
        /// Second point set, separated from the first by open halfspaces.
        #[arg(long)]
        other: Option<PathBuf>,
        /// Restrict magnitudes to this comma-separated list (the search is
        /// then inconclusive when it finds nothing).
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
    },
    /// Lift points to the Puiseux field, or cross-check a hull query via lifts.
    Lift {
        /// A single point to lift.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "points")]
        point: Option<String>,
        /// Type J of the lift as comma-separated 1-based coordinates.
        #[arg(long, requires = "point")]
        r#type: Option<String>,
        /// Point-set file; with --query, cross-check whull membership via lifts.
        #[arg(long, requires = "query")]
        points: Option<PathBuf>,
        /// Point whose membership in whull(points) is cross-checked.
        #[arg(long, allow_hyphen_values = true)]
        query: Option<String>,
    },
    /// Solve an exact feasibility problem over the Puiseux field.
    Lp {
        /// Rows `c1, c2, … = b`; optional `free: j …` line (1-based).
        file: PathBuf,
    },
    /// Check an oriented matroid given by a matrix or by its vectors.
    Matroid {
        /// Rational matrix, comma-separated rows.
        #[arg(long, conflicts_with = "vectors", required_unless_present = "vectors")]
        matrix: Option<PathBuf>,
        /// Sign vectors: `k=<n>` header, one vector per line.
        #[arg(long)]
        vectors: Option<PathBuf>,
    },
    /// Run the seeded example and property suites.
    Verify {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value = "small")]
        size: String,
    },
}

/// A check that ran and failed (exit code 1).
#[derive(Debug)]
struct Failed(String);

impl fmt::Display for Failed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failed {}

fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if cause.downcast_ref::<Failed>().is_some() {
            return 1;
        }
        if let Some(signtrop::Error::Inconsistent(_)) = cause.downcast_ref::<signtrop::Error>() {
            return 1;
        }
    }
    2
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn points_file(path: &Path) -> anyhow::Result<PointSet> {
    read(path)?.parse().with_context(|| format!("in {}", path.display()))
}

fn vector(s: &str) -> anyhow::Result<SignedVector> {
    s.parse().with_context(|| format!("bad vector {s:?}"))
}

fn index_set(s: &str) -> anyhow::Result<BTreeSet<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().with_context(|| format!("bad index {t:?}")))
        .collect()
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

/// Output of one command: the text form and the JSON form.
struct Output {
    text: String,
    json: Value,
}

fn decide(mode: Mode, x: &PointSet, y: &SignedVector) -> anyhow::Result<(bool, Option<String>)> {
    let describe = |d: Decision| match d {
        Decision::Member(p) => (true, Some(format!("profile {p}"))),
        Decision::NonMember(Some(h)) => (false, Some(format!("halfspace {h}"))),
        Decision::NonMember(None) => (false, None),
    };
    Ok(match mode {
        Mode::Tc => describe(tc_hull_decide(x, y)?),
        Mode::To => describe(to_hull_decide(x, y)?),
        Mode::Cone => describe(tc_cone_decide(x, y)?),
        Mode::Span => (wspan_member(x, y)?, None),
    })
}

fn member(mode: Mode, x: &PointSet, y: &SignedVector) -> anyhow::Result<bool> {
    Ok(decide(mode, x, y)?.0)
}

fn run(cli: &Cli, exec: Exec) -> anyhow::Result<Output> {
    match &cli.command {
        Command::Eval { expression } => {
            let v = expr::eval(expression).with_context(|| format!("in expression {expression:?}"))?;
            Ok(Output { text: v.to_string(), json: json!({ "value": v.to_string() }) })
        }
        Command::Hull { mode, points, lo, hi } => {
            let x = points_file(points)?;
            let grid = Grid::integer(*lo, *hi, x.dim())?;
            let mut inside = Vec::new();
            for p in grid.points() {
                if member(*mode, &x, &p)? {
                    inside.push(p);
                }
            }
            Ok(Output {
                text: strings(&inside).join("\n"),
                json: json!({ "grid": [lo, hi], "members": strings(&inside) }),
            })
        }
        Command::Member { mode, points, query } => {
            let x = points_file(points)?;
            let y = vector(query)?;
            let (is_member, certificate) = decide(*mode, &x, &y)?;
            Ok(Output { text: is_member.to_string(), json: json!({ "member": is_member, "certificate": certificate }) })
        }
        Command::Interval { x, y } => {
            let (x, y) = (vector(x)?, vector(y)?);
            let region = tc_interval(&x, &y)?;
            let mut lines = Vec::new();
            let mut pieces = Vec::new();
            for p in &region.pieces {
                let verts = strings(&p.complex.vertex_set);
                lines.push(format!("piece λ={} μ={} vertices {{{}}}", p.lambda, p.mu, verts.join(", ")));
                pieces.push(json!({ "lambda": p.lambda.to_string(), "mu": p.mu.to_string(), "vertices": verts }));
            }
            let mut arcs = Vec::new();
            for a in &region.arcs {
                let (lo, hi) = (a.lo.as_ref().map(rat::format), a.hi.as_ref().map(rat::format));
                let show = |b: &Option<String>, inf: &str| b.clone().unwrap_or_else(|| inf.to_string());
                lines.push(format!(
                    "arc τ ∈ ({}, {}) through {}",
                    show(&lo, "-inf"),
                    show(&hi, "+inf"),
                    region.arc_point(&a.interior())
                ));
                arcs.push(json!({ "lo": lo, "hi": hi }));
            }
            Ok(Output { text: lines.join("\n"), json: json!({ "pieces": pieces, "arcs": arcs }) })
        }
        Command::Separate { points, query, other, grid } => {
            let x = points_file(points)?;
            let space = match grid {
                None => CandidateSpace::Exact,
                Some(g) => CandidateSpace::Grid(
                    g.split(',').map(|m| rat::parse(m.trim())).collect::<signtrop::Result<Vec<_>>>()?,
                ),
            };
            let exhaustive = matches!(space, CandidateSpace::Exact);
            let none = if exhaustive { "none" } else { "none found on the grid (inconclusive)" };
            match (query, other) {
                (Some(q), _) => {
                    let h = separate(&x, &vector(q)?, &space)?;
                    let text = h.as_ref().map_or(none.to_string(), ToString::to_string);
                    Ok(Output { text, json: json!({ "halfspace": h.map(|h| h.to_string()), "exhaustive": exhaustive }) })
                }
                (None, Some(path)) => {
                    let y = points_file(path)?;
                    let pair = separate_to(&x, &y, &space)?;
                    let text = pair.as_ref().map_or(none.to_string(), |(p, m)| format!("{p}\n{m}"));
                    let js = pair.map(|(p, m)| json!({ "plus": p.to_string(), "minus": m.to_string() }));
                    Ok(Output { text, json: json!({ "pair": js, "exhaustive": exhaustive }) })
                }
                (None, None) => bail!(signtrop::Error::InvalidInput("give --query or --other".to_string())),
            }
        }
        Command::Lift { point, r#type, points, query } => {
            if let Some(p) = point {
                let x = vector(p)?;
                let lifted = match r#type {
                    None => lift_canonical(&x),
                    Some(j) => lift_typed(&x, &index_set(j)?),
                };
                return Ok(Output { text: lifted.to_string(), json: json!({ "lift": lifted.to_string() }) });
            }
            let (Some(path), Some(q)) = (points, query) else {
                bail!(signtrop::Error::InvalidInput("give --point, or --points with --query".to_string()));
            };
            let x = points_file(path)?;
            let y = vector(q)?;
            if member(Mode::Tc, &x, &y)? {
                let mut lines = vec!["member".to_string()];
                let mut ws = Vec::new();
                for (j, w) in lift_witness_all_types(&x, &y, exec)? {
                    let w = w.map(|v| v.to_string());
                    lines.push(format!("J={j:?}: {}", w.clone().unwrap_or_else(|| "no witness found".to_string())));
                    ws.push(json!({ "type": j, "witness": w }));
                }
                Ok(Output { text: lines.join("\n"), json: json!({ "member": true, "witnesses": ws }) })
            } else {
                let chain = certificate_chain(&x, &y)?.ok_or_else(|| Failed("no certificate chain".to_string()))?;
                let text = format!(
                    "non-member\nhalfspace {}\nJ={:?}\nlifted coefficients {}\nfarkas [{}]",
                    chain.halfspace,
                    chain.j,
                    chain.lifted,
                    strings(&chain.farkas).join(", ")
                );
                let js = json!({
                    "member": false,
                    "halfspace": chain.halfspace.to_string(),
                    "type": chain.j,
                    "lifted": chain.lifted.to_string(),
                    "farkas": strings(&chain.farkas),
                });
                Ok(Output { text, json: js })
            }
        }
        Command::Lp { file } => {
            let problem = parse_lp(&read(file)?)?;
            match lp_solve(&problem)? {
                LpOutcome::Feasible(x) => {
                    if !problem.check_witness(&x) {
                        bail!(Failed("the witness does not satisfy the system".to_string()));
                    }
                    let v = strings(&x);
                    Ok(Output {
                        text: format!("feasible [{}]", v.join(", ")),
                        json: json!({ "feasible": true, "witness": v }),
                    })
                }
                LpOutcome::Infeasible(y) => {
                    if !problem.check_certificate(&y) {
                        bail!(Failed("the Farkas certificate does not verify".to_string()));
                    }
                    let v = strings(&y);
                    Ok(Output {
                        text: format!("infeasible, certificate [{}]", v.join(", ")),
                        json: json!({ "feasible": false, "certificate": v }),
                    })
                }
            }
        }
        Command::Matroid { matrix, vectors } => {
            let m = match (matrix, vectors) {
                (Some(path), _) => realize(&read(path)?.parse::<RationalMatrix>()?)?,
                (None, Some(path)) => read(path)?.parse::<OMatroid>()?,
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let axioms = axioms_check(m.ground_size(), m.vectors());
            let mut lines = vec![format!("{} vectors on {} elements", m.vectors().len(), m.ground_size())];
            for v in &axioms.violations {
                lines.push(format!("axiom {} violated: {}", v.axiom, v.detail));
            }
            if !axioms.passed() {
                println!("{}", if cli.json { json!({ "axioms": axioms }).to_string() } else { lines.join("\n") });
                bail!(Failed("vector axioms fail".to_string()));
            }
            let c = circuits(&m)?;
            let d = cocircuits(&m)?;
            let report = representation_identities(&m, &default_grid(), exec)?;
            lines.push(format!("circuits: {}", strings(&c).join(" | ")));
            lines.push(format!("cocircuits: {}", strings(&d).join(" | ")));
            for chk in &report.checks {
                let status = match &chk.counterexample {
                    None => "ok".to_string(),
                    Some(p) => format!("FAILS at {p}"),
                };
                lines.push(format!("{:<55} {status} ({} points)", chk.name, chk.cases));
            }
            let js = json!({
                "vectors": strings(m.vectors()),
                "axioms": axioms,
                "circuits": strings(&c),
                "cocircuits": strings(&d),
                "representation": report,
            });
            if !report.passed() {
                println!("{}", if cli.json { js.to_string() } else { lines.join("\n") });
                bail!(Failed("a representation identity fails".to_string()));
            }
            Ok(Output { text: lines.join("\n"), json: js })
        }
        Command::Verify { suite, seed, size } => {
            let size: Size = size.parse()?;
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut reports: Vec<SuiteReport> = Vec::new();
            for n in names {
                let r = run_suite_with(n, *seed, size, exec)?;
                if !cli.json {
                    print!("{r}");
                }
                reports.push(r);
            }
            let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.name.as_str()).collect();
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            }
            if !failed.is_empty() {
                bail!(Failed(format!("failing suites: {}", failed.join(", "))));
            }
            let total: u64 = reports.iter().map(|r| r.cases).sum();
            Ok(Output {
                text: format!("all {} suites passed ({total} cases, seed {seed}, size {size})", reports.len()),
                json: Value::Null,
            })
        }
    }
}

/// Rows `c1, …, cn = b` over the Puiseux field; every variable is
/// nonnegative unless listed on a `free:` line.
fn parse_lp(text: &str) -> anyhow::Result<FeasibilityProblem<PuiseuxNum>> {
    let mut free = BTreeSet::new();
    let mut rows = Vec::new();
    for line in text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()) {
        if let Some(rest) = line.strip_prefix("free:") {
            free.extend(rest.split([',', ' ']).filter(|t| !t.is_empty()).map(|t| t.parse::<usize>()).collect::<Result<Vec<_>, _>>()?);
            continue;
        }
        let (lhs, rhs) = line.split_once('=').ok_or_else(|| signtrop::Error::Parse(format!("missing `=` in {line:?}")))?;
        let coeffs = lhs.split(',').map(|c| c.trim().parse::<PuiseuxNum>()).collect::<signtrop::Result<Vec<_>>>()?;
        rows.push((coeffs, rhs.trim().parse::<PuiseuxNum>()?));
    }
    let n = rows.first().map_or(0, |(c, _)| c.len());
    if let Some(&j) = free.iter().find(|&&j| j == 0 || j > n) {
        bail!(signtrop::Error::InvalidInput(format!("free variable {j} out of range 1..={n}")));
    }
    let mut p = FeasibilityProblem::new((1..=n).map(|j| !free.contains(&j)).collect());
    for (c, b) in rows {
        p.add_row(c, b)?;
    }
    Ok(p)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var(THREADS_VAR) {
        match v.parse::<usize>() {
            Ok(n) if n > 0 => {
                if let Err(e) = par::configure_threads(n) {
                    eprintln!("warning: cannot set {THREADS_VAR}: {e}");
                }
            }
            _ => {
                eprintln!("error: {THREADS_VAR} must be a positive integer, got {v:?}");
                return ExitCode::from(2);
            }
        }
    }
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    match run(&cli, exec) {
        Ok(out) => {
            if cli.json {
                if !out.json.is_null() {
                    println!("{}", out.json);
                }
            } else {
                println!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
