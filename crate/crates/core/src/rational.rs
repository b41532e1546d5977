//! Exact rational values for index arithmetic.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, GraphError};

/// Arbitrary-precision rational kept in lowest terms with a positive
/// denominator. Displays and serializes as `"p/q"`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(v.into()))
    }

    /// `numer / denom`; panics when `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let d = denom.into();
        assert!(!d.is_zero(), "zero denominator");
        ExactRational(BigRational::new(numer.into(), d))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRational {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| invalid(format!("not a rational: {s:?}")))
        };
        match s.split_once('/') {
            Some((p, q)) => {
                let q = parse(q)?;
                if q.is_zero() {
                    return Err(invalid(format!("zero denominator in {s:?}")));
                }
                Ok(ExactRational(BigRational::new(parse(p)?, q)))
            }
            None => Ok(ExactRational::from_integer(parse(s)?)),
        }
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr for ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational((&self.0).$m(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl AddAssign<&ExactRational> for ExactRational {
    fn add_assign(&mut self, rhs: &ExactRational) {
        self.0 += &rhs.0;
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Sum for ExactRational {
    fn sum<I: Iterator<Item = ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |acc, x| acc + x)
    }
}

impl From<i64> for ExactRational {
    fn from(v: i64) -> Self {
        ExactRational::from_integer(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_display() {
        let r = ExactRational::new(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(ExactRational::from_integer(10).to_string(), "10/1");
        assert_eq!(
            "27/2".parse::<ExactRational>().unwrap(),
            ExactRational::new(54, 4)
        );
        assert_eq!(
            "13".parse::<ExactRational>().unwrap(),
            ExactRational::from_integer(13)
        );
        assert!("1/0".parse::<ExactRational>().is_err());
        assert!("x".parse::<ExactRational>().is_err());
    }

    #[test]
    fn ordering_is_by_value() {
        let a = ExactRational::new(37, 2);
        let b = ExactRational::new(55, 3);
        assert!(a > b);
        assert!(ExactRational::new(1, 3) < ExactRational::new(1, 2));
        assert_eq!(ExactRational::new(19, 1), ExactRational::new(38, 2));
    }

    #[test]
    fn serde_as_string() {
        let v = serde_json::to_string(&ExactRational::new(77, 12)).unwrap();
        assert_eq!(v, "\"77/12\"");
        let back: ExactRational = serde_json::from_str(&v).unwrap();
        assert_eq!(back, ExactRational::new(77, 12));
    }
}
