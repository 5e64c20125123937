use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::Subspace;
use crate::exactnum::{QMatrix, QVector, Rational};

/// Positive cone `F ∩ R^n_+` described by its extreme rays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyhedralCone {
    pub ambient: Subspace,
    pub rays: Vec<QVector>,
}

fn rank_of(rows: &[&QVector]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let owned: Vec<QVector> = rows.iter().map(|r| (*r).clone()).collect();
    QMatrix::from_row_vectors(&owned).map_or(0, |m| m.rank())
}

struct Ray {
    coeffs: QVector,
    zeros: BTreeSet<usize>,
}

/// Extreme rays of `{x in F : x >= 0}` via the double description method
/// on the coefficient cone `{c : B c >= 0}`.
pub fn positive_cone(f: &Subspace) -> PolyhedralCone {
    let d = f.dim();
    let mut out = PolyhedralCone {
        ambient: f.clone(),
        rays: vec![],
    };
    if d == 0 {
        return out;
    }
    let a = f.coordinate_rows();

    // start from d independent constraints; the cone they cut out is simplicial
    let mut chosen: Vec<usize> = vec![];
    for i in 0..a.len() {
        let mut trial: Vec<&QVector> = chosen.iter().map(|&j| &a[j]).collect();
        trial.push(&a[i]);
        if rank_of(&trial) == trial.len() {
            chosen.push(i);
            if chosen.len() == d {
                break;
            }
        }
    }
    debug_assert_eq!(chosen.len(), d);
    let a_s = QMatrix::from_row_vectors(&chosen.iter().map(|&i| a[i].clone()).collect::<Vec<_>>())
        .expect("nonempty");
    let inv = a_s.inverse().expect("independent rows");
    let mut rays: Vec<Ray> = (0..d)
        .map(|j| Ray {
            coeffs: inv.column(j),
            zeros: chosen.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &i)| i).collect(),
        })
        .collect();

    for (i, ai) in a.iter().enumerate() {
        if chosen.contains(&i) {
            continue;
        }
        let vals: Vec<Rational> = rays.iter().map(|r| ai.dot(&r.coeffs)).collect();
        let mut next: Vec<Ray> = vec![];
        for (r, v) in rays.iter().zip(&vals) {
            if v.is_zero() {
                let mut zeros = r.zeros.clone();
                zeros.insert(i);
                next.push(Ray {
                    coeffs: r.coeffs.clone(),
                    zeros,
                });
            } else if v.is_positive() {
                next.push(Ray {
                    coeffs: r.coeffs.clone(),
                    zeros: r.zeros.clone(),
                });
            }
        }
        for (p, vp) in rays.iter().zip(&vals) {
            if !vp.is_positive() {
                continue;
            }
            for (n, vn) in rays.iter().zip(&vals) {
                if !vn.is_negative() {
                    continue;
                }
                let common: BTreeSet<usize> = p.zeros.intersection(&n.zeros).copied().collect();
                if d >= 2 {
                    let rows: Vec<&QVector> = common.iter().map(|&k| &a[k]).collect();
                    if rank_of(&rows) != d - 2 {
                        continue;
                    }
                } else {
                    continue;
                }
                let coeffs = &n.coeffs.scale(vp) - &p.coeffs.scale(vn);
                let mut zeros = common;
                zeros.insert(i);
                next.push(Ray {
                    coeffs: coeffs.primitive(),
                    zeros,
                });
            }
        }
        rays = next;
    }

    let mut xs: Vec<QVector> = rays
        .iter()
        .map(|r| f.combine(r.coeffs.entries()).primitive())
        .collect();
    xs.sort_by(|x, y| x.entries().cmp(y.entries()));
    xs.dedup();
    out.rays = xs;
    out
}
