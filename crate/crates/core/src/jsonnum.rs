//! Serde glue that writes [`BigInt`] values as plain JSON numbers.
//!
//! serde_json's `arbitrary_precision` feature keeps the digits exact in both
//! directions, so round-trips preserve values of any size.

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

pub fn to_number(v: &BigInt) -> Number {
    v.to_string()
        .parse()
        .expect("integer literal is a valid JSON number")
}

pub fn from_number<E: serde::de::Error>(n: &Number) -> Result<BigInt, E> {
    n.to_string()
        .parse()
        .map_err(|_| E::custom(format!("expected an integer, got {n}")))
}

pub fn serialize<S: Serializer>(v: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    to_number(v).serialize(serializer)
}

pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigInt, D::Error> {
    let n = Number::deserialize(deserializer)?;
    from_number(&n)
}

/// `#[serde(with = "jsonnum::vec")]` for `Vec<BigInt>` fields.
pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
        let nums: Vec<Number> = v.iter().map(super::to_number).collect();
        nums.serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Vec<BigInt>, D::Error> {
        let nums = Vec::<Number>::deserialize(deserializer)?;
        nums.iter().map(super::from_number::<D::Error>).collect()
    }
}

/// Same as [`vec`] but for `Option<Vec<BigInt>>`.
pub mod opt_vec {
    use super::*;

    pub fn serialize<S: Serializer>(
        v: &Option<Vec<BigInt>>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => super::vec::serialize(v, serializer),
            None => serializer.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Option<Vec<BigInt>>, D::Error> {
        let nums = Option::<Vec<Number>>::deserialize(deserializer)?;
        match nums {
            Some(nums) => Ok(Some(
                nums.iter()
                    .map(super::from_number::<D::Error>)
                    .collect::<Result<_, _>>()?,
            )),
            None => Ok(None),
        }
    }
}
