//! JSON representations for arbitrary-precision integers: plain numbers when
//! they fit in 64 bits, decimal strings otherwise. Both forms are accepted on
//! input.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{IntMatrix, QuadraticSurd};

/// Wrapper giving `BigInt` the number-or-string JSON form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonInt;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<JsonInt, E> {
                Err(E::custom(format!(
                    "{v} is not an integer (use a decimal string beyond 64 bits)"
                )))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                v.trim()
                    .parse::<BigInt>()
                    .map(JsonInt)
                    .map_err(|_| E::custom(format!("`{v}` is not a decimal integer")))
            }
        }
        d.deserialize_any(V)
    }
}

pub mod bigint_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let w: Vec<JsonInt> = v.iter().cloned().map(JsonInt).collect();
        w.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let w: Vec<JsonInt> = Vec::deserialize(d)?;
        Ok(w.into_iter().map(|j| j.0).collect())
    }
}

pub mod biguint {
    use num_bigint::{BigUint, Sign};

    use super::*;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        JsonInt(BigInt::from(v.clone())).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let JsonInt(v) = JsonInt::deserialize(d)?;
        match v.sign() {
            Sign::Minus => Err(de::Error::custom(format!("{v} is negative"))),
            _ => Ok(v.magnitude().clone()),
        }
    }
}

pub mod matrix {
    use super::*;

    pub fn serialize<S: Serializer>(m: &IntMatrix, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<JsonInt>> = m
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(JsonInt).collect())
            .collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<IntMatrix, D::Error> {
        let rows: Vec<Vec<JsonInt>> = Vec::deserialize(d)?;
        IntMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|j| j.0).collect())
                .collect(),
        )
        .map_err(de::Error::custom)
    }
}

/// `BTreeMap<u64, u64>` whose keys arrive as JSON object keys (strings).
pub mod count_map {
    use super::*;

    pub fn serialize<S: Serializer>(m: &BTreeMap<u64, u64>, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        // numeric key order, not lexicographic
        let mut map = s.serialize_map(Some(m.len()))?;
        for (k, v) in m {
            map.serialize_entry(&k.to_string(), v)?;
        }
        map.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u64, u64>, D::Error> {
        let w: BTreeMap<String, u64> = BTreeMap::deserialize(d)?;
        w.into_iter()
            .map(|(k, v)| {
                k.trim()
                    .parse::<u64>()
                    .map(|k| (k, v))
                    .map_err(|_| de::Error::custom(format!("key `{k}` is not a positive integer")))
            })
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct SurdRepr {
    a: JsonInt,
    #[serde(default = "zero")]
    b: JsonInt,
    #[serde(default = "one")]
    d: JsonInt,
    #[serde(default = "one")]
    c: JsonInt,
}

fn zero() -> JsonInt {
    JsonInt(0.into())
}

fn one() -> JsonInt {
    JsonInt(1.into())
}

impl Serialize for QuadraticSurd {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (a, b, d, c) = self.parts();
        SurdRepr {
            a: JsonInt(a.clone()),
            b: JsonInt(b.clone()),
            d: JsonInt(d.clone()),
            c: JsonInt(c.clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadraticSurd {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = SurdRepr::deserialize(d)?;
        if r.c.0 == BigInt::from(0) {
            return Err(de::Error::custom("surd denominator c must be nonzero"));
        }
        if r.d.0 < BigInt::from(0) {
            return Err(de::Error::custom("surd radicand d must be non-negative"));
        }
        Ok(QuadraticSurd::new(r.a.0, r.b.0, r.d.0, r.c.0))
    }
}
