use serde::{Deserialize, Serialize};

use super::{positive_cone, Subspace};
use crate::error::{Error, Result};
use crate::exactnum::{QMatrix, QVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    NotLatticeSubspace,
    LatticeSubspaceOnly,
    Sublattice,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NotLatticeSubspace => "NotLatticeSubspace",
            Verdict::LatticeSubspaceOnly => "LatticeSubspaceOnly",
            Verdict::Sublattice => "Sublattice",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeClassification {
    pub verdict: Verdict,
    pub cone_generating: bool,
    pub cone_simplicial: bool,
    pub rays_support_disjoint: bool,
    pub rays: Vec<QVector>,
}

/// Order type of `F` inside the coordinate lattice `Q^n`.
pub fn classify_subspace(f: &Subspace) -> Result<LatticeClassification> {
    if f.is_zero() {
        return Err(Error::Precondition("classification needs a nonzero subspace".into()));
    }
    let rays = positive_cone(f).rays;
    let rank = if rays.is_empty() {
        0
    } else {
        QMatrix::from_row_vectors(&rays)?.rank()
    };
    let cone_generating = rank == f.dim();
    let cone_simplicial = cone_generating && rays.len() == f.dim();
    let supports: Vec<Vec<usize>> = rays.iter().map(QVector::support).collect();
    let rays_support_disjoint = supports.iter().enumerate().all(|(i, s)| {
        supports[i + 1..]
            .iter()
            .all(|t| s.iter().all(|k| !t.contains(k)))
    });
    let verdict = match (cone_generating && cone_simplicial, rays_support_disjoint) {
        (false, _) => Verdict::NotLatticeSubspace,
        (true, false) => Verdict::LatticeSubspaceOnly,
        (true, true) => Verdict::Sublattice,
    };
    Ok(LatticeClassification {
        verdict,
        cone_generating,
        cone_simplicial,
        rays_support_disjoint,
        rays,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(n: usize, vs: &[&[i64]]) -> Subspace {
        Subspace::span(n, &vs.iter().map(|v| QVector::from_i64(v)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn verdicts() {
        let c = classify_subspace(&sub(3, &[&[1, 1, 1], &[1, 0, -1]])).unwrap();
        assert_eq!(c.verdict, Verdict::LatticeSubspaceOnly);
        let c = classify_subspace(&sub(3, &[&[1, 0, -1], &[0, 1, 0]])).unwrap();
        assert_eq!(c.verdict, Verdict::NotLatticeSubspace);
        assert!(!c.cone_generating);
        let c = classify_subspace(&sub(3, &[&[1, 0, 0], &[0, 1, 0]])).unwrap();
        assert_eq!(c.verdict, Verdict::Sublattice);
        let c = classify_subspace(&sub(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[1, 0, 0, 1]])).unwrap();
        assert!(c.cone_generating && !c.cone_simplicial);
        assert_eq!(c.verdict, Verdict::NotLatticeSubspace);
        assert!(classify_subspace(&Subspace::zero(2)).is_err());
    }
}
