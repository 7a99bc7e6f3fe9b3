use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational numbers, used for gradings and Novikov exponents.
pub type Q = BigRational;

pub fn q(numer: i64, denom: i64) -> Q {
    Q::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// A rational as it may appear in documents: an integer or a `"p/q"` string.
#[derive(serde::Deserialize)]
#[serde(untagged)]
pub(crate) enum QRepr {
    Int(i64),
    Text(String),
}

impl QRepr {
    pub(crate) fn into_q(self) -> Result<Q, String> {
        match self {
            QRepr::Int(n) => Ok(qi(n)),
            QRepr::Text(t) => t
                .trim()
                .parse::<Q>()
                .map_err(|e| format!("bad rational `{t}`: {e}")),
        }
    }
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod serde_q {
    use super::Q;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        super::QRepr::deserialize(d)?
            .into_q()
            .map_err(serde::de::Error::custom)
    }
}

pub mod serde_opt_q {
    use super::Q;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => s.serialize_str(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Q>, D::Error> {
        Option::<super::QRepr>::deserialize(d)?
            .map(|r| r.into_q().map_err(serde::de::Error::custom))
            .transpose()
    }
}
