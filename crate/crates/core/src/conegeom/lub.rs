use num_traits::Zero;

use super::simplex::{minimize, LpOutcome};
use super::Subspace;
use crate::error::{Error, Result};
use crate::exactnum::{sup_all, QVector, Rational};

fn check_members(f: &Subspace, g: &[QVector]) -> Result<()> {
    if g.is_empty() {
        return Err(Error::InvalidInput("empty family".into()));
    }
    for (i, v) in g.iter().enumerate() {
        if v.dim() != f.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: f.ambient_dim(),
                found: v.dim(),
            });
        }
        if !f.contains(v) {
            return Err(Error::NotInSubspace(i));
        }
    }
    Ok(())
}

/// Least element of `{z in F : z >= lower}`, if any.
///
/// Each coordinate is minimized separately over the feasible set; the
/// coordinate-wise minimum is returned only when it is itself feasible,
/// which makes it the least element.
pub fn least_element_above(f: &Subspace, lower: &QVector) -> Result<Option<QVector>> {
    let n = f.ambient_dim();
    if lower.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: lower.dim(),
        });
    }
    let ann = f.annihilator();
    if ann.is_empty() {
        return Ok(Some(lower.clone()));
    }
    // z = lower + w, w >= 0, N w = -N lower
    let a: Vec<Vec<Rational>> = ann.iter().map(|y| y.entries().to_vec()).collect();
    let b: Vec<Rational> = ann.iter().map(|y| -y.dot(lower)).collect();
    let mut m = Vec::with_capacity(n);
    for i in 0..n {
        let mut c = vec![Rational::zero(); n];
        c[i] = Rational::from_integer(1.into());
        match minimize(&c, &a, &b) {
            LpOutcome::Infeasible => return Ok(None),
            LpOutcome::Unbounded => {
                return Err(Error::InternalInconsistency(format!(
                    "coordinate {i} unbounded below on an order-bounded set"
                )))
            }
            LpOutcome::Optimal { value, .. } => m.push(&lower[i] + &value),
        }
    }
    let m = QVector::from(m);
    Ok(f.contains(&m).then_some(m))
}

/// Supremum of `g` computed inside `F`, if it exists.
pub fn least_upper_bound_in(f: &Subspace, g: &[QVector]) -> Result<Option<QVector>> {
    check_members(f, g)?;
    let lower = sup_all(g).expect("nonempty family");
    least_element_above(f, &lower)
}

/// Modulus `|x|_F`, the supremum of `{x, -x}` in `F`.
pub fn modulus_in(f: &Subspace, x: &QVector) -> Result<Option<QVector>> {
    least_upper_bound_in(f, &[x.clone(), -x])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(n: usize, vs: &[&[i64]]) -> Subspace {
        Subspace::span(n, &vs.iter().map(|v| QVector::from_i64(v)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn modulus_in_markov_fix_space() {
        let f = sub(3, &[&[1, 1, 1], &[1, 0, -1]]);
        let m = modulus_in(&f, &QVector::from_i64(&[1, 0, -1])).unwrap();
        assert_eq!(m, Some(QVector::from_i64(&[1, 1, 1])));
        assert_eq!(
            modulus_in(&f, &QVector::zeros(3)).unwrap(),
            Some(QVector::zeros(3))
        );
    }

    #[test]
    fn ambient_cases() {
        let f = Subspace::full(3);
        assert_eq!(
            modulus_in(&f, &QVector::from_i64(&[1, -2, 0])).unwrap(),
            Some(QVector::from_i64(&[1, 2, 0]))
        );
        let s = least_upper_bound_in(
            &f,
            &[QVector::from_i64(&[1, -5, 3]), QVector::from_i64(&[0, 2, 3])],
        )
        .unwrap();
        assert_eq!(s, Some(QVector::from_i64(&[1, 2, 3])));
    }

    #[test]
    fn absent_supremum() {
        let f = sub(2, &[&[1, -1]]);
        assert_eq!(modulus_in(&f, &QVector::from_i64(&[1, -1])).unwrap(), None);
        let g = sub(3, &[&[1, 0, -1], &[0, 1, 0]]);
        assert_eq!(modulus_in(&g, &QVector::from_i64(&[1, 0, -1])).unwrap(), None);
    }

    #[test]
    fn rejects_outside_members() {
        let f = sub(2, &[&[1, 1]]);
        assert!(matches!(
            least_upper_bound_in(&f, &[QVector::from_i64(&[1, 0])]),
            Err(Error::NotInSubspace(0))
        ));
    }
}
