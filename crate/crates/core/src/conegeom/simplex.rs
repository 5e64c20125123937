//! Exact two-phase simplex over the rationals with Bland's pivot rule.

use num_traits::{One, Signed, Zero};

use crate::exactnum::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, x: Vec<Rational> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    // m rows of width ncols + 1; the last entry is the right-hand side
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    fn objective(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .zip(&self.rows)
            .map(|(&b, row)| &cost[b] * &row[self.ncols])
            .sum()
    }

    /// Minimizes `cost . x` over columns `< allowed`. Returns false on an
    /// unbounded direction.
    fn run(&mut self, cost: &[Rational], allowed: usize) -> bool {
        loop {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut d = cost[j].clone();
                for (row, &b) in self.rows.iter().zip(&self.basis) {
                    if !row[j].is_zero() {
                        d -= &cost[b] * &row[j];
                    }
                }
                d.is_negative()
            });
            let Some(j) = entering else { return true };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[j].is_positive() {
                    continue;
                }
                let ratio = &row[self.ncols] / &row[j];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, j),
            }
        }
    }
}

/// Minimizes `c . x` subject to `A x = b`, `x >= 0`.
pub fn minimize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n) && b.len() == m);
    let width = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, (ai, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut row = Vec::with_capacity(width + 1);
        for x in ai {
            row.push(if flip { -x.clone() } else { x.clone() });
        }
        for k in 0..m {
            row.push(if k == i { Rational::one() } else { Rational::zero() });
        }
        row.push(if flip { -bi.clone() } else { bi.clone() });
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        basis: (n..width).collect(),
        ncols: width,
    };

    let mut phase1 = vec![Rational::zero(); width];
    for x in phase1.iter_mut().skip(n) {
        *x = Rational::one();
    }
    t.run(&phase1, width);
    if t.objective(&phase1).is_positive() {
        return LpOutcome::Infeasible;
    }

    // drive artificial variables out of the basis, dropping redundant rows
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut phase2 = c.to_vec();
    phase2.resize(width, Rational::zero());
    if !t.run(&phase2, n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &bcol) in t.rows.iter().zip(&t.basis) {
        x[bcol] = row[width].clone();
    }
    let value = c.iter().zip(&x).map(|(ci, xi)| ci * xi).sum();
    LpOutcome::Optimal { value, x }
}

/// A point `y` (free variables) with `G y >= h`, if one exists.
pub fn feasible_point(g: &[Vec<Rational>], h: &[Rational]) -> Option<Vec<Rational>> {
    let k = g.first().map_or(0, Vec::len);
    let m = g.len();
    // y = p - q, G p - G q - s = h, with p, q, s >= 0
    let a: Vec<Vec<Rational>> = g
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> = row.clone();
            r.extend(row.iter().map(|x| -x.clone()));
            r.extend((0..m).map(|j| if i == j { -Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let c = vec![Rational::zero(); 2 * k + m];
    match minimize(&c, &a, h) {
        LpOutcome::Optimal { x, .. } => Some((0..k).map(|j| &x[j] - &x[k + j]).collect()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{q, qi};

    fn rows(a: &[&[i64]]) -> Vec<Vec<Rational>> {
        a.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect()
    }

    #[test]
    fn small_lp() {
        // min -x - y, x + 2y + s1 = 4, 3x + y + s2 = 6
        let a = rows(&[&[1, 2, 1, 0], &[3, 1, 0, 1]]);
        let out = minimize(&[qi(-1), qi(-1), qi(0), qi(0)], &a, &[qi(4), qi(6)]);
        match out {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, q(-14, 5));
                assert_eq!(x[0], q(8, 5));
                assert_eq!(x[1], q(6, 5));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let a = rows(&[&[1, 1]]);
        assert_eq!(minimize(&[qi(0), qi(0)], &a, &[qi(-1)]), LpOutcome::Infeasible);
        let a = rows(&[&[1, -1]]);
        assert_eq!(minimize(&[qi(-1), qi(0)], &a, &[qi(1)]), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows_and_degeneracy() {
        let a = rows(&[&[1, 1, 0], &[2, 2, 0], &[0, 0, 1]]);
        match minimize(&[qi(1), qi(2), qi(0)], &a, &[qi(1), qi(2), qi(0)]) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, qi(1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn free_feasibility() {
        // y >= 1 and -y >= -3
        let g = rows(&[&[1], &[-1]]);
        let y = feasible_point(&g, &[qi(1), qi(-3)]).unwrap();
        assert!(y[0] >= qi(1) && y[0] <= qi(3));
        assert!(feasible_point(&g, &[qi(2), qi(-1)]).is_none());
    }
}
