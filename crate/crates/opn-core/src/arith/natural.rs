use std::fmt;
use std::str::FromStr;

use super::{gcd, ArithError, CAP};

/// Largest representable [`Natural`] value, `2^127 - 1`.
pub const NATURAL_MAX: u128 = CAP;

/// An exact non-negative integer capped at `2^127 - 1`.
///
/// Arithmetic never wraps: every operation whose true result would exceed
/// the cap reports [`ArithError::Overflow`] instead. The cap leaves a full
/// bit of headroom over the largest in-scope quantity (`sigma(w^2)` for
/// `w <= 2^31`), so overflow signals a caller error rather than a scan
/// limitation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Natural(u128);

impl Natural {
    pub const ZERO: Natural = Natural(0);
    pub const ONE: Natural = Natural(1);
    pub const MAX: Natural = Natural(NATURAL_MAX);

    /// Wraps a raw value, rejecting anything above `2^127 - 1`.
    pub fn new(value: u128) -> Result<Self, ArithError> {
        if value <= NATURAL_MAX {
            Ok(Natural(value))
        } else {
            Err(ArithError::OutOfRange(value.to_string()))
        }
    }

    #[inline]
    pub fn get(self) -> u128 {
        self.0
    }

    pub fn checked_add(self, rhs: Natural) -> Result<Natural, ArithError> {
        super::add_capped(self.0, rhs.0).map(Natural)
    }

    pub fn checked_sub(self, rhs: Natural) -> Result<Natural, ArithError> {
        self.0
            .checked_sub(rhs.0)
            .map(Natural)
            .ok_or(ArithError::Overflow {
                op: "difference",
                a: self.0,
                b: rhs.0,
            })
    }

    pub fn checked_mul(self, rhs: Natural) -> Result<Natural, ArithError> {
        super::mul_capped(self.0, rhs.0).map(Natural)
    }

    pub fn checked_pow(self, exp: u32) -> Result<Natural, ArithError> {
        super::pow_capped(self.0, exp).map(Natural)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_odd(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn gcd(self, rhs: Natural) -> Natural {
        Natural(gcd(self.0, rhs.0))
    }
}

impl From<u64> for Natural {
    fn from(value: u64) -> Self {
        Natural(value as u128)
    }
}

impl TryFrom<u128> for Natural {
    type Error = ArithError;

    fn try_from(value: u128) -> Result<Self, Self::Error> {
        Natural::new(value)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Natural {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let value: u128 = s
            .parse()
            .map_err(|_| ArithError::OutOfRange(s.to_string()))?;
        Natural::new(value)
    }
}

/// An exact non-negative rational stored in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    numerator: u128,
    denominator: u128,
}

impl Rational {
    /// Builds `numerator / denominator` reduced to lowest terms.
    pub fn new(numerator: u128, denominator: u128) -> Result<Self, ArithError> {
        if denominator == 0 {
            return Err(ArithError::ZeroDenominator);
        }
        let g = gcd(numerator, denominator);
        Ok(Rational {
            numerator: numerator / g,
            denominator: denominator / g,
        })
    }

    pub fn numerator(&self) -> u128 {
        self.numerator
    }

    pub fn denominator(&self) -> u128 {
        self.denominator
    }

    /// Compares against another rational without overflow at in-scope sizes.
    pub fn le(&self, other: &Rational) -> Option<bool> {
        let lhs = self.numerator.checked_mul(other.denominator)?;
        let rhs = other.numerator.checked_mul(self.denominator)?;
        Some(lhs <= rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_is_enforced() {
        assert!(Natural::new(NATURAL_MAX).is_ok());
        assert!(Natural::new(NATURAL_MAX + 1).is_err());
        let big = Natural::new(1 << 126).unwrap();
        assert!(big.checked_mul(Natural::new(2).unwrap()).is_err());
        assert_eq!(
            big.checked_add(big).unwrap_err(),
            ArithError::Overflow {
                op: "sum",
                a: 1 << 126,
                b: 1 << 126
            }
        );
    }

    #[test]
    fn parse_and_display_round_trip() {
        let n: Natural = "9018009".parse().unwrap();
        assert_eq!(n.get(), 9018009);
        assert_eq!(n.to_string(), "9018009");
        assert!("170141183460469231731687303715884105728" // 2^127
            .parse::<Natural>()
            .is_err());
        assert!("not a number".parse::<Natural>().is_err());
    }

    #[test]
    fn rationals_reduce() {
        let r = Rational::new(12, 8).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (3, 2));
        assert_eq!(r.to_string(), "3/2");
        assert_eq!(Rational::new(2, 1).unwrap().to_string(), "2/1");
        assert!(Rational::new(1, 0).is_err());
        assert!(Rational::new(1, 3).unwrap().le(&r).unwrap());
    }
}
