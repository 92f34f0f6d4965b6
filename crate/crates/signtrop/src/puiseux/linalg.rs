//! Gaussian elimination over an ordered field.

use super::lp::OrderedField;

/// Reduced row echelon form: the nonzero rows and their pivot columns.
pub fn rref<F: OrderedField>(rows: &[Vec<F>]) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].f_is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = F::f_one().f_div(&m[r][c]);
        for v in m[r].iter_mut() {
            *v = v.f_mul(&inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].f_is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v = v.f_sub(&f.f_mul(pv));
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

/// A basis of `{x : A x = 0}` for `A` with `ncols` columns.
pub fn nullspace<F: OrderedField>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let (red, pivots) = rref(rows);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![F::f_zero(); ncols];
            x[free] = F::f_one();
            for (row, &p) in red.iter().zip(&pivots) {
                x[p] = row[free].f_neg();
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use num_rational::BigRational;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&v| rat::int(v)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 0, -1], &[0, 1, -1], &[1, 1, -2]]);
        let (red, piv) = rref(&a);
        assert_eq!(red.len(), 2);
        assert_eq!(piv, vec![0, 1]);
        let ker = nullspace(&a, 3);
        assert_eq!(ker, m(&[&[1, 1, 1]]));
        assert_eq!(nullspace(&m(&[&[0, 0]]), 2).len(), 2);
    }
}
