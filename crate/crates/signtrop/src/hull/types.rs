//! Exact search for scalar profiles witnessing `y ∈ Faces(λ ⊙ X)` (or
//! `y ∈ Uncomp(⊕ λ_j ⊙ x_j)`).
//!
//! Whether a profile λ works depends only on its *type*: for every coordinate
//! `k`, the set `A_k` of generators attaining the maximal magnitude
//! `M_k = max_j (λ_j + |x_jk|)` and how `M_k` compares with `|y_k|`.  Every
//! type is a system of difference constraints on λ, so the search enumerates
//! types coordinate by coordinate, pruning with the closed constraint system,
//! and reads a concrete λ off the first feasible type.  Supports are tried
//! from the smallest upwards, so a returned witness has minimal support.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::dc::{Dc, Weight};
use crate::par::{self, Exec};
use crate::rat;
use crate::sym::Sign;
use crate::vector::{realizable, SignedVector};

/// What the target must belong to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum TypeMode {
    /// `y ∈ Faces(λ ⊙ X)`.
    Faces,
    /// `y ∈ Uncomp(⊕_j λ_j ⊙ x_j)`.
    Uncomp,
}

/// A scaled integer entry: sign and magnitude times the common denominator.
type Entry<W> = Option<(Sign, W)>;

/// A search problem with magnitudes scaled to integers.
pub(crate) struct Instance<W> {
    gens: Vec<Vec<Entry<W>>>,
    target: Vec<Entry<W>>,
    order: Vec<usize>,
    mode: TypeMode,
    scale: BigInt,
}

/// Witness found by [`search`]: generator indices and their λ magnitudes.
pub(crate) type Found = (Vec<usize>, Vec<BigRational>);

impl<W: Weight> Instance<W> {
    /// Builds the instance; with `homogenize`, every generator and the target
    /// get a leading coordinate ⊕0, which forces `max λ = 0`.  Returns `None`
    /// if the scaled magnitudes do not fit the weight type.
    pub fn build(gens: &[SignedVector], target: &SignedVector, homogenize: bool, mode: TypeMode) -> Option<Self> {
        let mags = gens.iter().chain(std::iter::once(target)).flat_map(crate::vector::magnitudes);
        let scale = rat::common_denominator(mags);
        let conv = |v: &SignedVector| -> Option<Vec<Entry<W>>> {
            let mut out = Vec::with_capacity(v.dim() + 1);
            if homogenize {
                out.push(Some((Sign::Pos, W::zero())));
            }
            for x in v.iter() {
                out.push(match x.mag() {
                    None => None,
                    Some(m) => Some((x.sign(), W::from_bigint(&rat::scaled_integer(m, &scale))?)),
                });
            }
            Some(out)
        };
        let gens: Vec<Vec<Entry<W>>> = gens.iter().map(conv).collect::<Option<_>>()?;
        let target = conv(target)?;
        // Coordinates with a nonzero target pin magnitudes and prune hardest.
        let mut order: Vec<usize> = (0..target.len()).collect();
        order.sort_by_key(|&k| target[k].is_none());
        Some(Instance { gens, target, order, mode, scale })
    }

    fn c(&self, j: usize, k: usize) -> &W {
        &self.gens[j][k].as_ref().expect("finite entry").1
    }
}

/// Lexicographic `k`-subsets of `0..n`.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for t in i + 1..k {
                    cur[t] = cur[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Searches supports of size `1..=max_support` in increasing size and
/// lexicographic order.
pub(crate) fn search<W: Weight>(inst: &Instance<W>, max_support: usize, exec: Exec) -> Option<Found> {
    let n = inst.gens.len();
    for size in 1..=max_support.min(n) {
        let subsets = combinations(n, size);
        let found = par::find_map_first(&subsets, exec, |s| solve_subset(inst, s).map(|l| (s.clone(), l)));
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Searches for a type in which every generator of `subset` attains some
/// coordinate maximum.
pub(crate) fn solve_subset<W: Weight>(inst: &Instance<W>, subset: &[usize]) -> Option<Vec<BigRational>> {
    let m = subset.len();
    let dim = inst.target.len();
    let mut walker = Walker { inst, subset, tops: vec![Vec::new(); dim], free: vec![false; dim] };
    let dc = walker.dfs(0, Dc::new(m + 1))?;
    let mut sol = dc.solution(m, &inst.scale);
    sol.truncate(m);
    Some(sol)
}

struct Walker<'a, W> {
    inst: &'a Instance<W>,
    subset: &'a [usize],
    tops: Vec<Vec<usize>>,
    free: Vec<bool>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rel {
    /// M_k = |y_k|.
    Eq,
    /// M_k > |y_k| (or y_k = 𝟘).
    Gt,
}

impl<W: Weight> Walker<'_, W> {
    fn gen(&self, l: usize) -> usize {
        self.subset[l]
    }

    fn dfs(&mut self, ci: usize, dc: Dc<W>) -> Option<Dc<W>> {
        let inst = self.inst;
        if ci == inst.order.len() {
            return self.leaf_ok().then_some(dc);
        }
        let k = inst.order[ci];
        let z = self.subset.len();
        let sk: Vec<usize> = (0..self.subset.len()).filter(|&l| inst.gens[self.gen(l)][k].is_some()).collect();
        if sk.is_empty() {
            if inst.target[k].is_some() {
                return None;
            }
            self.tops[k].clear();
            self.free[k] = false;
            return self.dfs(ci + 1, dc);
        }
        let subset = self.subset;
        let c = |l: usize| inst.c(subset[l], k).clone();
        let sign = |l: usize| inst.gens[subset[l]][k].as_ref().expect("finite").0;
        // Generators already forced strictly below another one cannot attain the maximum.
        let cands: Vec<usize> = sk
            .iter()
            .copied()
            .filter(|&l| !sk.iter().any(|&i| i != l && dc.implies(i, l, &(c(i) - c(l)), true)))
            .collect();
        // Group candidates whose values are forced equal: they enter A_k together.
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &l in &cands {
            match classes.iter_mut().find(|cl| dc.implies_eq(cl[0], l, &(c(cl[0]) - c(l)))) {
                Some(cl) => cl.push(l),
                None => classes.push(vec![l]),
            }
        }
        if classes.len() >= 24 {
            // Far beyond desk scale; refuse rather than run for hours.
            return None;
        }
        for mask in 1u32..(1u32 << classes.len()) {
            let a: Vec<usize> = classes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .flat_map(|(_, cl)| cl.iter().copied())
                .collect();
            let has_pos = a.iter().any(|&l| sign(l) == Sign::Pos);
            let has_neg = a.iter().any(|&l| sign(l) == Sign::Neg);
            let options: &[Rel] = match &inst.target[k] {
                None if has_pos && has_neg => &[Rel::Gt],
                None => &[],
                Some(_) if has_pos && has_neg => &[Rel::Eq, Rel::Gt],
                Some((s, _)) if (*s == Sign::Pos && has_pos) || (*s == Sign::Neg && has_neg) => &[Rel::Eq],
                Some(_) => &[],
            };
            for &rel in options {
                let mut d2 = dc.clone();
                let a0 = a[0];
                let mut ok = a[1..].iter().all(|&l| d2.add_eq(a0, l, c(a0) - c(l)));
                ok = ok && sk.iter().filter(|l| !a.contains(l)).all(|&l| d2.add(a0, l, c(a0) - c(l), true));
                if ok {
                    ok = match (&inst.target[k], rel) {
                        (Some((_, t)), Rel::Eq) => d2.add_eq(z, a0, t.clone() - c(a0)),
                        (Some((_, t)), Rel::Gt) => d2.add(a0, z, c(a0) - t.clone(), true),
                        (None, _) => true,
                    };
                }
                if !ok {
                    continue;
                }
                self.tops[k] = a.clone();
                self.free[k] = rel == Rel::Gt;
                if let Some(found) = self.dfs(ci + 1, d2) {
                    return Some(found);
                }
            }
        }
        None
    }

    /// Every generator of the support attains some maximum, and in `Faces`
    /// mode every vertex of the smallest face containing `y` is in Vert.
    fn leaf_ok(&self) -> bool {
        let m = self.subset.len();
        let covered = (0..m).all(|l| self.tops.iter().any(|t| t.contains(&l)));
        if !covered {
            return false;
        }
        if self.inst.mode == TypeMode::Uncomp {
            return true;
        }
        let dim = self.inst.target.len();
        let signs: Vec<Vec<Sign>> = (0..m)
            .map(|l| {
                self.inst.gens[self.gen(l)]
                    .iter()
                    .map(|e| e.as_ref().map_or(Sign::Zero, |(s, _)| *s))
                    .collect()
            })
            .collect();
        let free: Vec<usize> = (0..dim).filter(|&k| self.free[k] && !self.tops[k].is_empty()).collect();
        let mut tau: Vec<Sign> = (0..dim)
            .map(|k| self.inst.target[k].as_ref().map_or(Sign::Zero, |(s, _)| *s))
            .collect();
        (0..(1u64 << free.len())).all(|mask| {
            for (i, &k) in free.iter().enumerate() {
                tau[k] = if mask & (1 << i) != 0 { Sign::Pos } else { Sign::Neg };
            }
            realizable(m, &self.tops, &signs, &tau)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
        assert_eq!(combinations(5, 0), vec![Vec::<usize>::new()]);
    }
}
