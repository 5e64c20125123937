use std::cmp::max;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::serde_repr::{rational, rational_vec};
use crate::exactnum::Rational;

/// Whether a chain lives in `c0` (tail forced to zero) or `l∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpaceTag {
    CZero,
    LInfty,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainSpec {
    pub name: String,
    pub space: SpaceTag,
}

/// Layout of a symbolic space: named finite coordinates, named chains
/// indexed by `N0`, and optionally one grid `N0 x N0` whose rows are chains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexSchema {
    pub finite_coords: Vec<String>,
    #[serde(default)]
    pub chains: Vec<ChainSpec>,
    #[serde(default)]
    pub grid: Option<ChainSpec>,
}

impl IndexSchema {
    pub fn validate(&self) -> Result<()> {
        let mut names: Vec<&str> = self.finite_coords.iter().map(String::as_str).collect();
        names.extend(self.chains.iter().map(|c| c.name.as_str()));
        names.extend(self.grid.iter().map(|g| g.name.as_str()));
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(Error::SchemaMismatch("coordinate and chain names must be unique".into()));
        }
        if self.finite_coords.is_empty() {
            return Err(Error::SchemaMismatch("at least one finite coordinate is required".into()));
        }
        Ok(())
    }
}

/// Eventually constant sequence: `prefix` followed by `tail` forever.
///
/// Stored canonically: the prefix never ends with an entry equal to the tail.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "ChainRepr")]
pub struct ChainValue {
    #[serde(with = "rational_vec")]
    prefix: Vec<Rational>,
    #[serde(with = "rational")]
    tail: Rational,
}

#[derive(Deserialize)]
struct ChainRepr {
    #[serde(with = "rational_vec")]
    prefix: Vec<Rational>,
    #[serde(with = "rational")]
    tail: Rational,
}

impl From<ChainRepr> for ChainValue {
    fn from(r: ChainRepr) -> Self {
        ChainValue::new(r.prefix, r.tail)
    }
}

impl ChainValue {
    pub fn new(mut prefix: Vec<Rational>, tail: Rational) -> Self {
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        ChainValue { prefix, tail }
    }

    pub fn constant(c: Rational) -> Self {
        ChainValue::new(vec![], c)
    }

    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    pub fn prefix(&self) -> &[Rational] {
        &self.prefix
    }

    pub fn tail(&self) -> &Rational {
        &self.tail
    }

    pub fn at(&self, k: usize) -> &Rational {
        self.prefix.get(k).unwrap_or(&self.tail)
    }

    pub fn is_zero(&self) -> bool {
        self.prefix.is_empty() && self.tail.is_zero()
    }

    /// Shift right by one, inserting `entry` at position 0.
    pub fn shifted(&self, entry: Rational) -> Self {
        let mut p = Vec::with_capacity(self.prefix.len() + 1);
        p.push(entry);
        p.extend(self.prefix.iter().cloned());
        ChainValue::new(p, self.tail.clone())
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let len = max(self.prefix.len(), other.prefix.len());
        let p = (0..len).map(|k| f(self.at(k), other.at(k))).collect();
        ChainValue::new(p, f(&self.tail, &other.tail))
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        ChainValue::new(self.prefix.iter().map(&f).collect(), f(&self.tail))
    }

    pub fn sup_norm(&self) -> Rational {
        self.prefix
            .iter()
            .chain(std::iter::once(&self.tail))
            .map(|x| x.abs())
            .max()
            .expect("tail always present")
    }

    /// Explicit positions needed to see every distinct value.
    pub fn span_len(&self) -> usize {
        self.prefix.len()
    }
}

/// Vector of the representable class: finite part, one eventually
/// constant sequence per chain and finitely many nonzero grid rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "VectorRepr")]
pub struct SymbolicVector {
    #[serde(with = "rational_vec")]
    pub(crate) finite_part: Vec<Rational>,
    pub(crate) chains: Vec<ChainValue>,
    #[serde(default)]
    pub(crate) grid_rows: Vec<ChainValue>,
}

#[derive(Deserialize)]
struct VectorRepr {
    #[serde(with = "rational_vec")]
    finite_part: Vec<Rational>,
    #[serde(default)]
    chains: Vec<ChainValue>,
    #[serde(default)]
    grid_rows: Vec<ChainValue>,
}

impl From<VectorRepr> for SymbolicVector {
    fn from(r: VectorRepr) -> Self {
        SymbolicVector::new(r.finite_part, r.chains, r.grid_rows)
    }
}

impl SymbolicVector {
    pub fn new(finite_part: Vec<Rational>, chains: Vec<ChainValue>, mut grid_rows: Vec<ChainValue>) -> Self {
        while grid_rows.last().is_some_and(ChainValue::is_zero) {
            grid_rows.pop();
        }
        SymbolicVector {
            finite_part,
            chains,
            grid_rows,
        }
    }

    pub fn zero(schema: &IndexSchema) -> Self {
        SymbolicVector {
            finite_part: vec![Rational::zero(); schema.finite_coords.len()],
            chains: vec![ChainValue::zero(); schema.chains.len()],
            grid_rows: vec![],
        }
    }

    pub fn finite_part(&self) -> &[Rational] {
        &self.finite_part
    }

    pub fn chains(&self) -> &[ChainValue] {
        &self.chains
    }

    pub fn grid_rows(&self) -> &[ChainValue] {
        &self.grid_rows
    }

    /// Grid row `r`, zero beyond the explicit rows.
    pub fn grid_row(&self, r: usize) -> ChainValue {
        self.grid_rows.get(r).cloned().unwrap_or_else(ChainValue::zero)
    }

    pub fn check_schema(&self, schema: &IndexSchema) -> Result<()> {
        if self.finite_part.len() != schema.finite_coords.len() {
            return Err(Error::SchemaMismatch(format!(
                "expected {} finite coordinates, found {}",
                schema.finite_coords.len(),
                self.finite_part.len()
            )));
        }
        if self.chains.len() != schema.chains.len() {
            return Err(Error::SchemaMismatch(format!(
                "expected {} chains, found {}",
                schema.chains.len(),
                self.chains.len()
            )));
        }
        for (c, spec) in self.chains.iter().zip(&schema.chains) {
            if spec.space == SpaceTag::CZero && !c.tail().is_zero() {
                return Err(Error::SchemaMismatch(format!(
                    "chain {} lives in c0 but has a nonzero tail",
                    spec.name
                )));
            }
        }
        match &schema.grid {
            None if !self.grid_rows.is_empty() => {
                Err(Error::SchemaMismatch("schema has no grid".into()))
            }
            Some(g) if g.space == SpaceTag::CZero && self.grid_rows.iter().any(|r| !r.tail().is_zero()) => {
                Err(Error::SchemaMismatch("grid rows live in c0 but have a nonzero tail".into()))
            }
            _ => Ok(()),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational + Copy) -> Result<Self> {
        if self.finite_part.len() != other.finite_part.len() || self.chains.len() != other.chains.len() {
            return Err(Error::SchemaMismatch("vectors use different schemas".into()));
        }
        let rows = max(self.grid_rows.len(), other.grid_rows.len());
        Ok(SymbolicVector::new(
            self.finite_part.iter().zip(&other.finite_part).map(|(a, b)| f(a, b)).collect(),
            self.chains.iter().zip(&other.chains).map(|(a, b)| a.zip_with(b, f)).collect(),
            (0..rows).map(|r| self.grid_row(r).zip_with(&other.grid_row(r), f)).collect(),
        ))
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational + Copy) -> Self {
        SymbolicVector::new(
            self.finite_part.iter().map(f).collect(),
            self.chains.iter().map(|c| c.map(f)).collect(),
            self.grid_rows.iter().map(|c| c.map(f)).collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|x| x * c)
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn abs(&self) -> Self {
        self.map(|x| x.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.finite_part.iter().all(Zero::is_zero)
            && self.chains.iter().all(ChainValue::is_zero)
            && self.grid_rows.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.all_values(|x| !x.is_negative())
    }

    /// `self >= other` at every coordinate.
    pub fn dominates(&self, other: &Self) -> Result<bool> {
        Ok(self.sub(other)?.is_nonnegative())
    }

    pub fn sup_norm(&self) -> Rational {
        self.finite_part
            .iter()
            .map(|x| x.abs())
            .chain(self.chains.iter().map(ChainValue::sup_norm))
            .chain(self.grid_rows.iter().map(ChainValue::sup_norm))
            .max()
            .unwrap_or_else(Rational::zero)
    }

    fn all_values(&self, p: impl Fn(&Rational) -> bool) -> bool {
        let chain_ok = |c: &ChainValue| c.prefix().iter().all(&p) && p(c.tail());
        self.finite_part.iter().all(&p) && self.chains.iter().all(chain_ok) && self.grid_rows.iter().all(chain_ok)
    }
}

/// Coordinate-wise maximum.
pub fn pointwise_sup(u: &SymbolicVector, v: &SymbolicVector) -> Result<SymbolicVector> {
    u.zip_with(v, |a, b| if a >= b { a.clone() } else { b.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{q, qi};

    #[test]
    fn chain_canonical_form() {
        let c = ChainValue::new(vec![qi(1), qi(0), qi(0)], qi(0));
        assert_eq!(c.prefix(), &[qi(1)]);
        assert_eq!(c.at(5), &qi(0));
        assert_eq!(c.shifted(qi(2)).prefix(), &[qi(2), qi(1)]);
        assert_eq!(ChainValue::new(vec![qi(3), qi(3)], qi(3)), ChainValue::constant(qi(3)));
    }

    #[test]
    fn sup_of_chains() {
        let u = SymbolicVector::new(vec![qi(0)], vec![ChainValue::new(vec![qi(1), qi(0)], qi(0))], vec![]);
        let v = SymbolicVector::new(vec![qi(0)], vec![ChainValue::new(vec![qi(0)], qi(1))], vec![]);
        let s = pointwise_sup(&u, &v).unwrap();
        assert_eq!(s.chains()[0], ChainValue::new(vec![qi(1), qi(1)], qi(1)));
        assert_eq!(s.chains()[0].tail(), &qi(1));
        let w = SymbolicVector::new(vec![q(1, 2), qi(2)], vec![], vec![ChainValue::constant(qi(1))]);
        assert_eq!(pointwise_sup(&w, &w.neg()).unwrap(), w);
        assert_eq!(w.sup_norm(), qi(2));
    }

    #[test]
    fn json_shape() {
        let c = ChainValue::new(vec![qi(1), qi(1)], qi(0));
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"prefix":["1","1"],"tail":"0"}"#);
        let v: SymbolicVector = serde_json::from_str(
            r#"{"finite_part":["1","0"],"chains":[{"prefix":["2","0"],"tail":"0"}],"grid_rows":[{"prefix":[],"tail":"0"}]}"#,
        )
        .unwrap();
        assert_eq!(v.chains()[0].prefix(), &[qi(2)]);
        assert!(v.grid_rows().is_empty());
    }
}
