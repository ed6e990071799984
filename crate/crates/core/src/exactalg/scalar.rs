//! Exact scalar fields usable as polynomial coefficients.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{NumAssign, One, Signed, ToPrimitive, Zero};

/// An exact field of characteristic zero that contains the integers.
///
/// Every coefficient computation in this crate is generic over `Scalar`.
/// Floating point types are deliberately not implemented: integrality and
/// divisibility checks only make sense over an exact field.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Signed + NumAssign + Send + Sync + 'static
{
    fn from_i64(value: i64) -> Self;

    /// Lifts an arbitrary-precision integer, or `None` if it does not fit.
    fn from_bigint(value: &BigInt) -> Option<Self>;

    /// Lowers a big rational, or `None` if it does not fit.
    fn from_bigrational(value: &BigRational) -> Option<Self> {
        let num = Self::from_bigint(value.numer())?;
        let den = Self::from_bigint(value.denom())?;
        Some(num / den)
    }

    fn to_bigrational(&self) -> BigRational;

    fn is_integer(&self) -> bool {
        self.to_bigrational().is_integer()
    }

    fn from_u64(value: u64) -> Self {
        Self::from_bigint(&BigInt::from(value)).expect("u64 fits every scalar type")
    }
}

impl Scalar for BigRational {
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn from_bigint(value: &BigInt) -> Option<Self> {
        Some(BigRational::from_integer(value.clone()))
    }

    fn from_bigrational(value: &BigRational) -> Option<Self> {
        Some(value.clone())
    }

    fn to_bigrational(&self) -> BigRational {
        self.clone()
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }

    fn from_u64(value: u64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
}

macro_rules! machine_ratio {
    ($int:ty) => {
        impl Scalar for Ratio<$int> {
            fn from_i64(value: i64) -> Self {
                Ratio::from_integer(<$int>::from(value))
            }

            fn from_bigint(value: &BigInt) -> Option<Self> {
                value.to_i128().and_then(|v| <$int>::try_from(v).ok()).map(Ratio::from_integer)
            }

            fn to_bigrational(&self) -> BigRational {
                BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }

            fn is_integer(&self) -> bool {
                self.denom().is_one()
            }
        }
    };
}

machine_ratio!(i64);
machine_ratio!(i128);

/// Parses `"p"` or `"p/q"` into an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(BigRational::new(num, den))
        }
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Renders a rational as `"p"` or `"p/q"` in lowest terms.
pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// `true` iff `value` is an integer divisible by `k`.
pub(crate) fn divisible_integer(value: &BigRational, k: u64) -> bool {
    value.is_integer() && value.numer().is_multiple_of(&BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let q = parse_rational("6/-4").unwrap();
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(format_rational(&parse_rational("0/7").unwrap()), "0");
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }

    #[test]
    fn machine_ratio_bridges() {
        let q = Ratio::<i64>::from_bigrational(&parse_rational("-5/3").unwrap()).unwrap();
        assert_eq!(q, Ratio::new(-5, 3));
        assert_eq!(format_rational(&q.to_bigrational()), "-5/3");
        let huge = BigInt::from(i64::MAX) * BigInt::from(4);
        assert!(Ratio::<i64>::from_bigint(&huge).is_none());
        assert!(Ratio::<i128>::from_bigint(&huge).is_some());
    }

    #[test]
    fn divisibility_over_integers() {
        assert!(divisible_integer(&BigRational::from_i64(-6), 3));
        assert!(!divisible_integer(&BigRational::from_i64(3), 2));
        assert!(!divisible_integer(&parse_rational("4/3").unwrap(), 2));
    }
}
