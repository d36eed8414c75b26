//! Exact scalars in the ring `Z[φ]`, `φ² = φ + 1`.
//!
//! Crystallographic root systems only ever produce values with `phi == 0`,
//! so the same type covers integer and golden-ratio coordinates.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// The value `int + phi·φ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Scalar {
    pub int: i64,
    pub phi: i64,
}

impl Scalar {
    pub const ZERO: Scalar = Scalar { int: 0, phi: 0 };
    pub const ONE: Scalar = Scalar { int: 1, phi: 0 };
    pub const PHI: Scalar = Scalar { int: 0, phi: 1 };

    pub const fn new(int: i64, phi: i64) -> Self {
        Scalar { int, phi }
    }

    pub const fn from_int(int: i64) -> Self {
        Scalar { int, phi: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.int == 0 && self.phi == 0
    }

    pub fn is_integer(self) -> bool {
        self.phi == 0
    }

    /// Exact sign of the real number `int + phi·φ`.
    pub fn signum(self) -> Ordering {
        // 2(a + bφ) = (2a + b) + b√5
        let x = 2 * self.int as i128 + self.phi as i128;
        let y = self.phi as i128;
        match (x.cmp(&0), y.cmp(&0)) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            (Ordering::Greater, Ordering::Less) => (x * x).cmp(&(5 * y * y)),
            (Ordering::Less, Ordering::Greater) => (5 * y * y).cmp(&(x * x)),
        }
    }

    pub fn is_positive(self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(self) -> bool {
        self.signum() == Ordering::Less
    }

    /// Compares the real values (the derived `Ord` is lexicographic on the
    /// pair and only used for deterministic container ordering).
    pub fn cmp_value(self, other: Scalar) -> Ordering {
        (self - other).signum()
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.int + rhs.int, self.phi + rhs.phi)
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = *self + rhs;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.int - rhs.int, self.phi - rhs.phi)
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = *self - rhs;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.int, -self.phi)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        // (a + bφ)(c + dφ) = (ac + bd) + (ad + bc + bd)φ
        let (a, b, c, d) = (self.int, self.phi, rhs.int, rhs.phi);
        Scalar::new(a * c + b * d, a * d + b * c + b * d)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.phi == 0 {
            write!(f, "{}", self.int)
        } else if self.phi < 0 {
            write!(f, "{}-{}*phi", self.int, -self.phi)
        } else {
            write!(f, "{}+{}*phi", self.int, self.phi)
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("invalid scalar literal `{0}`")]
pub struct ParseScalarError(String);

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `a`, `a+b*phi` and `a-b*phi`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let t = s.trim();
        let Some(body) = t.strip_suffix("*phi") else {
            return t.parse::<i64>().map(Scalar::from_int).map_err(|_| err());
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, ch)| ch == '+' || ch == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(err)?;
        let int = body[..split].parse::<i64>().map_err(|_| err())?;
        let phi = body[split..]
            .trim_start_matches('+')
            .parse::<i64>()
            .map_err(|_| err())?;
        Ok(Scalar::new(int, phi))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.phi == 0 {
            serializer.serialize_i64(self.int)
        } else {
            serializer.collect_str(self)
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Int(v) => Ok(Scalar::from_int(v)),
            Repr::Text(s) => s.parse().map_err(de::Error::custom),
        }
    }
}
