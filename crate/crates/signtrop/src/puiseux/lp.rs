//! Exact linear feasibility over an ordered field: phase-1 simplex with
//! Bland's rule, returning either a witness or a Farkas certificate.  Both
//! outcomes are re-checked by direct evaluation before being returned.

use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::num::PuiseuxNum;
use crate::error::{Error, Result};

/// The operations the simplex method needs.
pub trait OrderedField: Clone + Debug + Ord + Send + Sync {
    fn f_zero() -> Self;
    fn f_one() -> Self;
    fn f_add(&self, other: &Self) -> Self;
    fn f_sub(&self, other: &Self) -> Self;
    fn f_mul(&self, other: &Self) -> Self;
    /// `self / other` for nonzero `other`.
    fn f_div(&self, other: &Self) -> Self;
    fn f_neg(&self) -> Self;
    /// −1, 0 or 1.
    fn f_signum(&self) -> i8;

    fn f_is_zero(&self) -> bool {
        self.f_signum() == 0
    }
}

impl OrderedField for BigRational {
    fn f_zero() -> Self {
        BigRational::zero()
    }
    fn f_one() -> Self {
        BigRational::one()
    }
    fn f_add(&self, other: &Self) -> Self {
        self + other
    }
    fn f_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn f_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn f_div(&self, other: &Self) -> Self {
        self / other
    }
    fn f_neg(&self) -> Self {
        -self
    }
    fn f_signum(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
}

impl OrderedField for PuiseuxNum {
    fn f_zero() -> Self {
        PuiseuxNum::zero()
    }
    fn f_one() -> Self {
        PuiseuxNum::one()
    }
    fn f_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn f_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn f_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn f_div(&self, other: &Self) -> Self {
        self.div(other).expect("simplex divides by pivots only")
    }
    fn f_neg(&self) -> Self {
        self.neg()
    }
    fn f_signum(&self) -> i8 {
        self.signum()
    }
}

/// `A x = b` with `x_j ≥ 0` for the flagged columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityProblem<F> {
    rows: Vec<Vec<F>>,
    rhs: Vec<F>,
    nonneg: Vec<bool>,
}

/// Result of [`lp_solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome<F> {
    /// `x` with `A x = b` and the sign constraints.
    Feasible(Vec<F>),
    /// `y` with `yᵀA ≥ 0` on nonnegative columns, `yᵀA = 0` on free
    /// columns and `yᵀb < 0`.
    Infeasible(Vec<F>),
}

impl<F: OrderedField> FeasibilityProblem<F> {
    /// An empty system in `vars` variables; `nonneg[j]` marks `x_j ≥ 0`.
    pub fn new(nonneg: Vec<bool>) -> Self {
        FeasibilityProblem { rows: Vec::new(), rhs: Vec::new(), nonneg }
    }

    pub fn vars(&self) -> usize {
        self.nonneg.len()
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn rhs(&self) -> &[F] {
        &self.rhs
    }

    pub fn nonneg(&self) -> &[bool] {
        &self.nonneg
    }

    /// Appends the row `coeffs · x = rhs`.
    pub fn add_row(&mut self, coeffs: Vec<F>, rhs: F) -> Result<()> {
        crate::error::check_dim(self.vars(), coeffs.len())?;
        self.rows.push(coeffs);
        self.rhs.push(rhs);
        Ok(())
    }

    /// Adds a fresh nonnegative variable with the given column (one entry
    /// per existing row); returns its index.
    pub fn add_column(&mut self, column: Vec<F>, nonneg: bool) -> Result<usize> {
        crate::error::check_dim(self.rows.len(), column.len())?;
        for (row, c) in self.rows.iter_mut().zip(column) {
            row.push(c);
        }
        self.nonneg.push(nonneg);
        Ok(self.nonneg.len() - 1)
    }

    /// Whether `x` satisfies every row and sign constraint exactly.
    pub fn check_witness(&self, x: &[F]) -> bool {
        x.len() == self.vars()
            && x.iter().zip(&self.nonneg).all(|(v, &nn)| !nn || v.f_signum() >= 0)
            && self.rows.iter().zip(&self.rhs).all(|(row, b)| dot(row, x) == *b)
    }

    /// Whether `y` is a Farkas certificate of infeasibility.
    pub fn check_certificate(&self, y: &[F]) -> bool {
        if y.len() != self.rows.len() {
            return false;
        }
        let cols_ok = (0..self.vars()).all(|j| {
            let s = self.rows.iter().zip(y).fold(F::f_zero(), |acc, (row, yi)| acc.f_add(&row[j].f_mul(yi)));
            if self.nonneg[j] {
                s.f_signum() >= 0
            } else {
                s.f_is_zero()
            }
        });
        cols_ok && dot(y, &self.rhs).f_signum() < 0
    }
}

fn dot<F: OrderedField>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::f_zero(), |acc, (x, y)| acc.f_add(&x.f_mul(y)))
}

/// Phase-1 tableau: `m` rows over the standard columns followed by `m`
/// artificial columns.
struct Tableau<F> {
    t: Vec<Vec<F>>,
    b: Vec<F>,
    basis: Vec<usize>,
    /// Reduced costs of the phase-1 objective `Σ artificials`.
    cost: Vec<F>,
}

impl<F: OrderedField> Tableau<F> {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.t[r][c].clone();
        for v in self.t[r].iter_mut() {
            *v = v.f_div(&p);
        }
        self.b[r] = self.b[r].f_div(&p);
        let pivot_row = self.t[r].clone();
        let pivot_b = self.b[r].clone();
        for i in 0..self.t.len() {
            if i == r || self.t[i][c].f_is_zero() {
                continue;
            }
            let f = self.t[i][c].clone();
            for (v, pv) in self.t[i].iter_mut().zip(&pivot_row) {
                if !pv.f_is_zero() {
                    *v = v.f_sub(&f.f_mul(pv));
                }
            }
            self.b[i] = self.b[i].f_sub(&f.f_mul(&pivot_b));
        }
        let f = self.cost[c].clone();
        if !f.f_is_zero() {
            for (v, pv) in self.cost.iter_mut().zip(&pivot_row) {
                if !pv.f_is_zero() {
                    *v = v.f_sub(&f.f_mul(pv));
                }
            }
        }
        self.basis[r] = c;
    }

    /// Runs Bland's rule to optimality.
    fn optimize(&mut self) {
        loop {
            let Some(c) = self.cost.iter().position(|v| v.f_signum() < 0) else {
                return;
            };
            let mut best: Option<(usize, F)> = None;
            for i in 0..self.t.len() {
                if self.t[i][c].f_signum() <= 0 {
                    continue;
                }
                let ratio = self.b[i].f_div(&self.t[i][c]);
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            // The phase-1 objective is bounded below by 0, so a leaving row
            // always exists.
            let (r, _) = best.expect("phase 1 is bounded");
            self.pivot(r, c);
        }
    }
}

/// Decides feasibility of `p` exactly.  The returned witness or certificate
/// has been verified against `p`; a failed verification is reported as
/// [`Error::Inconsistent`].
pub fn lp_solve<F: OrderedField>(p: &FeasibilityProblem<F>) -> Result<LpOutcome<F>> {
    let m = p.rows.len();
    // Standard columns: each free variable is split as x⁺ − x⁻.
    let mut cols: Vec<(usize, bool)> = Vec::new();
    for (j, &nn) in p.nonneg.iter().enumerate() {
        cols.push((j, false));
        if !nn {
            cols.push((j, true));
        }
    }
    let ns = cols.len();
    let flip: Vec<bool> = p.rhs.iter().map(|b| b.f_signum() < 0).collect();
    let mut t = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = Vec::with_capacity(ns + m);
        for &(j, neg) in &cols {
            let v = &p.rows[i][j];
            row.push(if neg ^ flip[i] { v.f_neg() } else { v.clone() });
        }
        for k in 0..m {
            row.push(if k == i { F::f_one() } else { F::f_zero() });
        }
        t.push(row);
        b.push(if flip[i] { p.rhs[i].f_neg() } else { p.rhs[i].clone() });
    }
    let mut cost = vec![F::f_zero(); ns + m];
    for (c, slot) in cost.iter_mut().enumerate().take(ns) {
        *slot = t.iter().fold(F::f_zero(), |acc, row| acc.f_sub(&row[c]));
    }
    let mut tab = Tableau { t, b, basis: (ns..ns + m).collect(), cost };
    tab.optimize();

    let value = tab.basis.iter().zip(&tab.b).filter(|(&c, _)| c >= ns).fold(F::f_zero(), |acc, (_, v)| acc.f_add(v));
    let outcome = if value.f_is_zero() {
        let mut x = vec![F::f_zero(); p.vars()];
        for (r, &c) in tab.basis.iter().enumerate() {
            if c < ns {
                let (j, neg) = cols[c];
                x[j] = if neg { x[j].f_sub(&tab.b[r]) } else { x[j].f_add(&tab.b[r]) };
            }
        }
        if !p.check_witness(&x) {
            return Err(Error::Inconsistent("simplex witness failed verification".to_string()));
        }
        LpOutcome::Feasible(x)
    } else {
        // Reduced cost of artificial i is 1 − y_i for the phase-1 duals y;
        // −y certifies infeasibility of the row-flipped system.
        let y: Vec<F> = (0..m)
            .map(|i| {
                let z = tab.cost[ns + i].f_sub(&F::f_one());
                if flip[i] {
                    z.f_neg()
                } else {
                    z
                }
            })
            .collect();
        if !p.check_certificate(&y) {
            return Err(Error::Inconsistent("simplex certificate failed verification".to_string()));
        }
        LpOutcome::Infeasible(y)
    };
    Ok(outcome)
}

/// A verified feasible point, or `None` when a verified Farkas certificate
/// proves infeasibility.
pub fn lp_feasible<F: OrderedField>(p: &FeasibilityProblem<F>) -> Result<Option<Vec<F>>> {
    Ok(match lp_solve(p)? {
        LpOutcome::Feasible(x) => Some(x),
        LpOutcome::Infeasible(_) => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn p(s: &str) -> PuiseuxNum {
        s.parse().unwrap()
    }

    fn simplex_problem(coords: &[&str], target: &str) -> FeasibilityProblem<PuiseuxNum> {
        let mut lp = FeasibilityProblem::new(vec![true; coords.len()]);
        lp.add_row(vec![PuiseuxNum::one(); coords.len()], PuiseuxNum::one()).unwrap();
        lp.add_row(coords.iter().map(|c| p(c)).collect(), p(target)).unwrap();
        lp
    }

    #[test]
    fn interval_membership() {
        let lp = simplex_problem(&["0", "1"], "t^-1");
        let x = lp_feasible(&lp).unwrap().unwrap();
        assert_eq!(x[1], p("t^-1"));
        assert_eq!(x[0], p("1 - t^-1"));
    }

    #[test]
    fn every_combination_exceeds_one() {
        let lp = simplex_problem(&["t", "t^2"], "1");
        match lp_solve(&lp).unwrap() {
            LpOutcome::Infeasible(y) => assert!(lp.check_certificate(&y)),
            LpOutcome::Feasible(x) => panic!("unexpected witness {x:?}"),
        }
    }

    #[test]
    fn rational_systems_with_free_variables() {
        // x free, y ≥ 0: x + y = 1, x − y = 3 → x = 2, y = −1 is the only
        // solution, so infeasible.
        let mut lp = FeasibilityProblem::new(vec![false, true]);
        lp.add_row(vec![rat::int(1), rat::int(1)], rat::int(1)).unwrap();
        lp.add_row(vec![rat::int(1), rat::int(-1)], rat::int(3)).unwrap();
        assert_eq!(lp_feasible(&lp).unwrap(), None);
        let mut lp2 = FeasibilityProblem::new(vec![false, true]);
        lp2.add_row(vec![rat::int(1), rat::int(1)], rat::int(1)).unwrap();
        lp2.add_row(vec![rat::int(1), rat::int(-1)], rat::int(-3)).unwrap();
        assert_eq!(lp_feasible(&lp2).unwrap(), Some(vec![rat::int(-1), rat::int(2)]));
    }

    #[test]
    fn degenerate_and_empty_systems() {
        let lp: FeasibilityProblem<BigRational> = FeasibilityProblem::new(vec![true, true]);
        assert_eq!(lp_feasible(&lp).unwrap(), Some(vec![rat::int(0), rat::int(0)]));
        let mut lp = FeasibilityProblem::new(vec![true]);
        lp.add_row(vec![rat::int(0)], rat::int(1)).unwrap();
        assert_eq!(lp_feasible(&lp).unwrap(), None);
        let mut lp = FeasibilityProblem::new(vec![true, true]);
        lp.add_row(vec![rat::int(1), rat::int(1)], rat::int(0)).unwrap();
        lp.add_row(vec![rat::int(2), rat::int(2)], rat::int(0)).unwrap();
        assert_eq!(lp_feasible(&lp).unwrap(), Some(vec![rat::int(0), rat::int(0)]));
    }
}
