use super::{classify_subspace, least_upper_bound_in, Subspace, Verdict};
use crate::error::{Error, Result};
use crate::exactnum::{QVector, Rational};
use crate::par::{map_indexed, Execution};
use crate::random::{small_nonneg_rational, trial_rng};

/// Samples positive pairs in `F` and checks `‖x ∨_F y‖∞ = max(‖x‖∞, ‖y‖∞)`.
pub fn am_property_check(f: &Subspace, trials: usize, seed: u64) -> Result<bool> {
    let class = classify_subspace(f)?;
    if class.verdict == Verdict::NotLatticeSubspace {
        return Err(Error::Precondition("subspace is not a lattice subspace".into()));
    }
    let rays = &class.rays;
    let sample = |rng: &mut _| -> QVector {
        rays.iter().fold(QVector::zeros(f.ambient_dim()), |acc, r| {
            let c: Rational = small_nonneg_rational(rng, 5, 4);
            &acc + &r.scale(&c)
        })
    };
    let results = map_indexed(Execution::default(), trials, |t| -> Result<bool> {
        let mut rng = trial_rng(seed, t as u64);
        let x = sample(&mut rng);
        let y = sample(&mut rng);
        let s = least_upper_bound_in(f, &[x.clone(), y.clone()])?.ok_or_else(|| {
            Error::InternalInconsistency("lattice subspace without a supremum".into())
        })?;
        let expected = std::cmp::max(x.sup_norm(), y.sup_norm());
        Ok(s.sup_norm() == expected)
    });
    for r in results {
        if !r? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn am_examples() {
        let s = Subspace::span(
            3,
            &[QVector::from_i64(&[1, 1, 1]), QVector::from_i64(&[1, 0, -1])],
        )
        .unwrap();
        assert!(am_property_check(&s, 100, 1).unwrap());
        assert!(am_property_check(&Subspace::full(4), 50, 2).unwrap());
        let e = Subspace::span(3, &[QVector::from_i64(&[1, 1, 0])]).unwrap();
        assert!(am_property_check(&e, 10, 3).unwrap());
        let bad = Subspace::span(
            3,
            &[QVector::from_i64(&[1, 0, -1]), QVector::from_i64(&[0, 1, 0])],
        )
        .unwrap();
        assert!(am_property_check(&bad, 10, 4).is_err());
    }
}
