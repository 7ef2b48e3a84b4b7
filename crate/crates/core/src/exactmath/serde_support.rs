//! Serialization of exact values as strings (`"n"` or `"n/d"`) so JSON never loses precision.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Poly;
use super::rational::{format_rational, parse_rational, Rational};

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        rationals::serialize(self.coeffs(), s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Poly, D::Error> {
        rationals::deserialize(d).map(Poly::new)
    }
}

fn parse<E: serde::de::Error>(s: &str) -> Result<Rational, E> {
    parse_rational(s).ok_or_else(|| E::custom(format!("invalid rational {s:?}")))
}

/// `#[serde(with = "rational")]` for a single [`Rational`].
pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        format_rational(q).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s)
    }
}

/// `#[serde(with = "rationals")]` for a list of [`Rational`].
pub mod rationals {
    use super::*;

    pub fn serialize<S: Serializer>(qs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = qs.iter().map(format_rational).collect();
        strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings.iter().map(|s| parse(s)).collect()
    }
}
