use num_traits::One;

use super::simplex::feasible_point;
use super::Subspace;
use crate::error::{Error, Result};
use crate::exactnum::{QVector, Rational};
use crate::par::{all_indexed, Execution};

/// Largest ambient dimension accepted by the exhaustive sign-pattern oracle.
pub const ORACLE_MAX_DIM: usize = 12;

/// Decides the sublattice property by brute force over sign patterns.
///
/// `F` is a sublattice iff on every full-dimensional sign cell of `F` the
/// modulus map `x -> diag(sigma) x` lands back in `F`. Since such a cell
/// spans `F`, this reduces to `diag(sigma) F ⊆ F`.
pub fn sign_pattern_sublattice_oracle(f: &Subspace) -> Result<bool> {
    sign_pattern_sublattice_oracle_with(f, Execution::default())
}

pub fn sign_pattern_sublattice_oracle_with(f: &Subspace, exec: Execution) -> Result<bool> {
    let n = f.ambient_dim();
    if n > ORACLE_MAX_DIM {
        return Err(Error::Precondition(format!(
            "sign-pattern enumeration limited to ambient dimension {ORACLE_MAX_DIM}, got {n}"
        )));
    }
    if f.is_zero() {
        return Ok(true);
    }
    let rows = f.coordinate_rows();
    let active: Vec<usize> = (0..n).filter(|&i| !rows[i].is_zero()).collect();
    // sigma and -sigma give the same test, so fix the first sign
    let patterns = 1usize << (active.len() - 1);
    Ok(all_indexed(exec, patterns, |mask| {
        let negative = |pos: usize| pos > 0 && (mask >> (pos - 1)) & 1 == 1;
        let reflected_inside = f.basis().iter().all(|b| {
            let mut r = b.clone();
            for (pos, &i) in active.iter().enumerate() {
                if negative(pos) {
                    r[i] = -r[i].clone();
                }
            }
            f.contains(&r)
        });
        if reflected_inside {
            return true;
        }
        let g: Vec<Vec<Rational>> = active
            .iter()
            .enumerate()
            .map(|(pos, &i)| {
                let row: &QVector = &rows[i];
                if negative(pos) {
                    (-row).into_entries()
                } else {
                    row.entries().to_vec()
                }
            })
            .collect();
        let h = vec![Rational::one(); g.len()];
        feasible_point(&g, &h).is_none()
    }))
}


#[cfg(test)]
mod tests {
    use super::*;

    fn sub(n: usize, vs: &[&[i64]]) -> Subspace {
        Subspace::span(n, &vs.iter().map(|v| QVector::from_i64(v)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert!(!sign_pattern_sublattice_oracle(&sub(3, &[&[1, 1, 1], &[1, 0, -1]])).unwrap());
        assert!(sign_pattern_sublattice_oracle(&sub(3, &[&[1, 0, 0]])).unwrap());
        assert!(sign_pattern_sublattice_oracle(&sub(3, &[&[1, 1, 0], &[0, 0, 1]])).unwrap());
        assert!(!sign_pattern_sublattice_oracle(&sub(2, &[&[1, -1]])).unwrap());
        assert!(sign_pattern_sublattice_oracle(&Subspace::full(4)).unwrap());
        assert!(sign_pattern_sublattice_oracle(&Subspace::full(13)).is_err());
    }

    #[test]
    fn execution_modes_agree() {
        let f = sub(5, &[&[1, 2, 0, 0, 1], &[0, 1, 1, -1, 0]]);
        assert_eq!(
            sign_pattern_sublattice_oracle_with(&f, Execution::Sequential).unwrap(),
            sign_pattern_sublattice_oracle_with(&f, Execution::Parallel).unwrap()
        );
    }
}
