use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::geometry::Scalar;

/// An exact rational that serializes as `"p/q"`, or `"p"` when integral.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(pub Scalar);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("not a rational: {0:?}")]
    Malformed(String),
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl FromStr for Rational {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || RationalError::Malformed(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((p, q)) => {
                if q.starts_with('-') {
                    return Err(malformed());
                }
                (parse_int(p).ok_or_else(malformed)?, parse_int(q).ok_or_else(malformed)?)
            }
            None => (parse_int(s).ok_or_else(malformed)?, BigInt::from(1)),
        };
        if den.is_zero() {
            return Err(RationalError::ZeroDenominator(s.to_string()));
        }
        Ok(Rational(Scalar::new(num, den)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl From<Scalar> for Rational {
    fn from(x: Scalar) -> Self {
        Rational(x)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}
