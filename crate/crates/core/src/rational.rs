//! Non-negative exact rationals extended with `+∞`, the value domain of
//! toughness.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
}

/// `num/den` in lowest terms with `den > 0`, or infinity.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactRational {
    num: u64,
    den: u64,
    infinite: bool,
}

impl ExactRational {
    pub const ZERO: ExactRational = ExactRational { num: 0, den: 1, infinite: false };
    pub const ONE: ExactRational = ExactRational { num: 1, den: 1, infinite: false };
    pub const INFINITY: ExactRational = ExactRational { num: 1, den: 0, infinite: true };

    pub fn new(num: u64, den: u64) -> Result<Self, RationalError> {
        if den == 0 {
            return Err(RationalError::ZeroDenominator);
        }
        let g = num.gcd(&den);
        Ok(ExactRational { num: num / g, den: den / g, infinite: false })
    }

    pub fn from_integer(k: u64) -> Self {
        ExactRational { num: k, den: 1, infinite: false }
    }

    pub fn is_infinite(&self) -> bool {
        self.infinite
    }

    /// Numerator; 1 for infinity.
    pub fn numer(&self) -> u64 {
        self.num
    }

    /// Denominator; 0 for infinity.
    pub fn denom(&self) -> u64 {
        self.den
    }
}

impl Ord for ExactRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.infinite, other.infinite) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => {
                (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
            }
        }
    }
}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.infinite {
            write!(f, "inf")
        } else if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for ExactRational {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "inf" {
            return Ok(ExactRational::INFINITY);
        }
        let bad = || RationalError::Parse(s.to_string());
        match s.split_once('/') {
            Some((a, b)) => ExactRational::new(a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
            None => Ok(ExactRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

/// Wire form: `{"num": .., "den": .., "infinite": ..}`.
#[derive(Serialize, Deserialize)]
struct Wire {
    num: u64,
    den: u64,
    infinite: bool,
}

impl Serialize for ExactRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire { num: self.num, den: self.den, infinite: self.infinite }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        if w.infinite {
            Ok(ExactRational::INFINITY)
        } else {
            ExactRational::new(w.num, w.den).map_err(serde::de::Error::custom)
        }
    }
}
