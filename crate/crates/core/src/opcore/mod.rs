//! Positive matrix operators on `Q^n` with an exactly computable induced
//! norm: contractivity, power boundedness and super-fixed vectors.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{
    char_poly, factor_over_rationals, semisimple_check, unit_circle_root_count, unit_disk_verdict,
    DiskVerdict, QMatrix, QPolynomial, QVector, Rational,
};

/// Lattice norm on the ambient space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormTag {
    Sup,
    One,
    WeightedOne(QVector),
}

impl NormTag {
    /// `OneNorm` and `WeightedOneNorm` are strictly monotone; the sup norm
    /// is not.
    pub fn is_strictly_monotone(&self) -> bool {
        !matches!(self, NormTag::Sup)
    }

    pub fn vector_norm(&self, x: &QVector) -> Rational {
        match self {
            NormTag::Sup => x.sup_norm(),
            NormTag::One => x.one_norm(),
            NormTag::WeightedOne(w) => w.iter().zip(x.iter()).map(|(wi, xi)| wi * xi.abs()).sum(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            NormTag::Sup => "sup",
            NormTag::One => "one",
            NormTag::WeightedOne(_) => "weighted_one",
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        if let NormTag::WeightedOne(w) = self {
            if w.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: w.dim(),
                });
            }
            if w.iter().any(|x| !x.is_positive()) {
                return Err(Error::NotPositive("weights must be strictly positive".into()));
            }
        }
        Ok(())
    }
}

/// Square entrywise-nonnegative matrix together with the norm it acts under.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "OperatorRepr", into = "OperatorRepr")]
pub struct PositiveMatrixOperator {
    matrix: QMatrix,
    norm: NormTag,
}

#[derive(Serialize, Deserialize)]
struct OperatorRepr {
    matrix: QMatrix,
    norm: NormTag,
}

impl TryFrom<OperatorRepr> for PositiveMatrixOperator {
    type Error = Error;
    fn try_from(r: OperatorRepr) -> Result<Self> {
        PositiveMatrixOperator::new(r.matrix, r.norm)
    }
}

impl From<PositiveMatrixOperator> for OperatorRepr {
    fn from(t: PositiveMatrixOperator) -> Self {
        OperatorRepr {
            matrix: t.matrix,
            norm: t.norm,
        }
    }
}

impl PositiveMatrixOperator {
    pub fn new(matrix: QMatrix, norm: NormTag) -> Result<Self> {
        let n = matrix.require_square()?;
        if !matrix.is_nonnegative() {
            return Err(Error::NotPositive("matrix has a negative entry".into()));
        }
        norm.validate(n)?;
        Ok(PositiveMatrixOperator { matrix, norm })
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn norm_tag(&self) -> &NormTag {
        &self.norm
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn apply(&self, x: &QVector) -> Result<QVector> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        Ok(self.matrix.mul_vec(x))
    }

    /// Same norm, matrix `T^k`.
    pub fn power(&self, k: u32) -> PositiveMatrixOperator {
        PositiveMatrixOperator {
            matrix: self.matrix.pow(k),
            norm: self.norm.clone(),
        }
    }

    pub fn compose(&self, other: &PositiveMatrixOperator) -> Result<PositiveMatrixOperator> {
        if self.norm != other.norm || self.dim() != other.dim() {
            return Err(Error::InvalidInput("operators act on different spaces".into()));
        }
        Ok(PositiveMatrixOperator {
            matrix: &self.matrix * &other.matrix,
            norm: self.norm.clone(),
        })
    }
}

/// Nonempty set of pairwise commuting operators on the same normed space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FamilyRepr", into = "FamilyRepr")]
pub struct OperatorFamily {
    members: Vec<PositiveMatrixOperator>,
}

#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    members: Vec<PositiveMatrixOperator>,
}

impl TryFrom<FamilyRepr> for OperatorFamily {
    type Error = Error;
    fn try_from(r: FamilyRepr) -> Result<Self> {
        OperatorFamily::new(r.members)
    }
}

impl From<OperatorFamily> for FamilyRepr {
    fn from(f: OperatorFamily) -> Self {
        FamilyRepr { members: f.members }
    }
}

impl OperatorFamily {
    pub fn new(members: Vec<PositiveMatrixOperator>) -> Result<Self> {
        let first = members
            .first()
            .ok_or_else(|| Error::InvalidInput("operator family is empty".into()))?;
        for t in &members[1..] {
            if t.dim() != first.dim() {
                return Err(Error::DimensionMismatch {
                    expected: first.dim(),
                    found: t.dim(),
                });
            }
            if t.norm != first.norm {
                return Err(Error::InvalidInput("family members use different norms".into()));
            }
        }
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                if !members[i].matrix.commutes_with(&members[j].matrix) {
                    return Err(Error::NonCommuting(i, j));
                }
            }
        }
        Ok(OperatorFamily { members })
    }

    pub fn single(t: PositiveMatrixOperator) -> Self {
        OperatorFamily { members: vec![t] }
    }

    pub fn members(&self) -> &[PositiveMatrixOperator] {
        &self.members
    }

    pub fn dim(&self) -> usize {
        self.members[0].dim()
    }

    pub fn norm_tag(&self) -> &NormTag {
        &self.members[0].norm
    }
}

/// Exact induced operator norm.
pub fn operator_norm(t: &PositiveMatrixOperator) -> Rational {
    let m = &t.matrix;
    match &t.norm {
        NormTag::Sup => m.max_abs_row_sum(),
        NormTag::One => m.max_abs_col_sum(),
        NormTag::WeightedOne(w) => (0..m.ncols())
            .map(|j| {
                let s: Rational = (0..m.nrows()).map(|i| &w[i] * m.get(i, j).abs()).sum();
                s / &w[j]
            })
            .max()
            .unwrap_or_else(Rational::zero),
    }
}

pub fn contraction_check(t: &PositiveMatrixOperator) -> bool {
    operator_norm(t) <= Rational::one()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum PowerBoundedness {
    Yes,
    No { reason: String },
    Unknown { factor: QPolynomial },
}

/// Power boundedness from the spectrum: no eigenvalue outside the closed
/// unit disk and every unimodular eigenvalue semisimple.
pub fn power_bounded_verdict(t: &PositiveMatrixOperator) -> Result<PowerBoundedness> {
    let cp = char_poly(&t.matrix)?;
    let disk = match unit_disk_verdict(&cp) {
        Ok(v) => v,
        Err(Error::UnsupportedDegree { .. }) => {
            return Ok(PowerBoundedness::Unknown { factor: cp.radical() })
        }
        Err(e) => return Err(e),
    };
    match disk {
        DiskVerdict::SomeOutside => Ok(PowerBoundedness::No {
            reason: "an eigenvalue lies outside the closed unit disk".into(),
        }),
        DiskVerdict::AllStrictlyInside => Ok(PowerBoundedness::Yes),
        DiskVerdict::InsideWithBoundary => {
            let boundary = unit_circle_root_count(&cp)?;
            if let Some(f) = boundary.inseparable.first() {
                return Ok(PowerBoundedness::Unknown { factor: f.clone() });
            }
            for (part, mult) in &boundary.parts {
                if *mult == 1 {
                    continue;
                }
                let pieces = match factor_over_rationals(part) {
                    Ok(fp) => fp.factors.into_iter().map(|f| f.poly.monic()).collect(),
                    Err(Error::UnsupportedDegree { .. }) => vec![part.clone()],
                    Err(e) => return Err(e),
                };
                for piece in pieces {
                    if !semisimple_check(&t.matrix, &piece)? {
                        return Ok(PowerBoundedness::No {
                            reason: format!(
                                "unimodular eigenvalues of {piece} have a nontrivial Jordan block"
                            ),
                        });
                    }
                }
            }
            Ok(PowerBoundedness::Yes)
        }
    }
}

/// `T g >= g` componentwise.
pub fn super_fixed_check(t: &PositiveMatrixOperator, g: &QVector) -> Result<bool> {
    Ok(t.apply(g)?.dominates(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{q, qi};

    fn markov_s() -> PositiveMatrixOperator {
        let m = QMatrix::from_rows(vec![
            vec![qi(1), qi(0), qi(0)],
            vec![q(1, 3), q(1, 3), q(1, 3)],
            vec![qi(0), qi(0), qi(1)],
        ])
        .unwrap();
        PositiveMatrixOperator::new(m, NormTag::Sup).unwrap()
    }

    fn jordan_t() -> PositiveMatrixOperator {
        let m = QMatrix::from_i64(&[&[1, 0, 0], &[1, 1, 1], &[0, 0, 1]]);
        PositiveMatrixOperator::new(m, NormTag::Sup).unwrap()
    }

    #[test]
    fn norms() {
        assert_eq!(operator_norm(&markov_s()), qi(1));
        assert_eq!(operator_norm(&jordan_t()), qi(3));
        let id = QMatrix::identity(3);
        for tag in [NormTag::Sup, NormTag::One, NormTag::WeightedOne(QVector::from_i64(&[1, 2, 5]))] {
            assert_eq!(operator_norm(&PositiveMatrixOperator::new(id.clone(), tag).unwrap()), qi(1));
        }
        let w = PositiveMatrixOperator::new(
            QMatrix::from_i64(&[&[0, 1], &[1, 0]]),
            NormTag::WeightedOne(QVector::from_i64(&[1, 2])),
        )
        .unwrap();
        assert_eq!(operator_norm(&w), qi(2));
    }

    #[test]
    fn contraction() {
        assert!(contraction_check(&markov_s()));
        assert!(!contraction_check(&jordan_t()));
        let z = PositiveMatrixOperator::new(QMatrix::zeros(2, 2), NormTag::One).unwrap();
        assert!(contraction_check(&z));
    }

    #[test]
    fn power_boundedness() {
        assert!(matches!(power_bounded_verdict(&jordan_t()).unwrap(), PowerBoundedness::No { .. }));
        assert_eq!(power_bounded_verdict(&markov_s()).unwrap(), PowerBoundedness::Yes);
        let id = PositiveMatrixOperator::new(QMatrix::identity(4), NormTag::Sup).unwrap();
        assert_eq!(power_bounded_verdict(&id).unwrap(), PowerBoundedness::Yes);
        let d = PositiveMatrixOperator::new(QMatrix::diagonal(&[q(1, 2), q(1, 3)]), NormTag::Sup).unwrap();
        assert_eq!(power_bounded_verdict(&d).unwrap(), PowerBoundedness::Yes);
        let big = PositiveMatrixOperator::new(QMatrix::diagonal(&[q(3, 2), qi(0)]), NormTag::Sup).unwrap();
        assert!(matches!(power_bounded_verdict(&big).unwrap(), PowerBoundedness::No { .. }));
        // rotation by a 4-cycle: unimodular but semisimple
        let p = QMatrix::from_i64(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0]]);
        let p = PositiveMatrixOperator::new(p, NormTag::One).unwrap();
        assert_eq!(power_bounded_verdict(&p).unwrap(), PowerBoundedness::Yes);
    }

    #[test]
    fn super_fixed() {
        let s = markov_s();
        assert!(super_fixed_check(&s, &QVector::from_i64(&[1, 0, 1])).unwrap());
        assert!(!super_fixed_check(&s, &QVector::from_i64(&[0, 1, 0])).unwrap());
        assert!(super_fixed_check(&s, &QVector::from_i64(&[1, 1, 1])).unwrap());
        assert!(super_fixed_check(&s, &QVector::from_i64(&[1, 1])).is_err());
    }

    #[test]
    fn validation_and_json() {
        assert!(PositiveMatrixOperator::new(QMatrix::from_i64(&[&[1, -1], &[0, 1]]), NormTag::Sup).is_err());
        assert!(PositiveMatrixOperator::new(
            QMatrix::identity(2),
            NormTag::WeightedOne(QVector::from_i64(&[1, 0]))
        )
        .is_err());
        let a = PositiveMatrixOperator::new(QMatrix::from_i64(&[&[0, 1], &[1, 0]]), NormTag::One).unwrap();
        let b = PositiveMatrixOperator::new(QMatrix::from_i64(&[&[1, 0], &[0, 0]]), NormTag::One).unwrap();
        assert!(matches!(OperatorFamily::new(vec![a.clone(), b]), Err(Error::NonCommuting(0, 1))));
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"matrix":{"rows":[["0","1"],["1","0"]]},"norm":"one"}"#);
        let w: PositiveMatrixOperator = serde_json::from_str(
            r#"{"matrix":{"rows":[["1/2"]]},"norm":{"weighted_one":["3"]}}"#,
        )
        .unwrap();
        assert_eq!(w.norm_tag(), &NormTag::WeightedOne(QVector::from_i64(&[3])));
    }
}
