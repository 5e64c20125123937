//! Wire representations: rationals travel as `"p/q"` strings.

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{fmt_rational, parse_rational, Rational};

/// A rational that (de)serializes as `"p/q"` or `"p"`. Plain JSON integers
/// are accepted on input for convenience.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalStr(pub Rational);

impl Serialize for RationalStr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(&self.0))
    }
}

struct RationalVisitor;

impl Visitor<'_> for RationalVisitor {
    type Value = RationalStr;

    fn expecting(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("a rational as \"p/q\" or an integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<RationalStr, E> {
        parse_rational(v).map(RationalStr).map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<RationalStr, E> {
        Ok(RationalStr(Rational::from_integer(v.into())))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<RationalStr, E> {
        Ok(RationalStr(Rational::from_integer(v.into())))
    }
}

impl<'de> Deserialize<'de> for RationalStr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(RationalVisitor)
    }
}

/// `serde(with = ...)` adapter for a single rational field.
pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        RationalStr::deserialize(d).map(|r| r.0)
    }
}

/// `serde(with = ...)` adapter for a list of rationals.
pub mod rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(fmt_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw: Vec<RationalStr> = Vec::deserialize(d)?;
        Ok(raw.into_iter().map(|r| r.0).collect())
    }
}
