use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed, ToPrimitive};

/// An exact ordered field used as the coefficient type of every computation.
///
/// Implemented for `Ratio<BigInt>` (the default, see [`crate::Rat`]) and for the
/// fixed-width rationals `Ratio<i64>` / `Ratio<i128>`, which are faster but can
/// overflow on large inputs. Floating point types are deliberately absent: all
/// verdicts compare exact values against zero.
pub trait Scalar:
    Clone + fmt::Debug + fmt::Display + Ord + Num + Signed + Send + Sync + 'static
{
    fn from_i64(n: i64) -> Self;

    /// `numer / denom`; panics if `denom == 0`.
    fn from_frac(numer: i64, denom: i64) -> Self;

    /// Converts an arbitrary-precision integer, `None` if it does not fit.
    fn from_bigint(n: &BigInt) -> Option<Self>;

    fn floor_int(&self) -> BigInt;

    fn is_integer(&self) -> bool;

    /// Reduced numerator and (positive) denominator.
    fn to_parts(&self) -> (BigInt, BigInt);

    fn from_u32(n: u32) -> Self {
        Self::from_i64(i64::from(n))
    }

    /// The value as an `i64` when it is an integer that fits.
    fn to_i64_exact(&self) -> Option<i64> {
        if self.is_integer() {
            self.floor_int().to_i64()
        } else {
            None
        }
    }
}

impl Scalar for Ratio<BigInt> {
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(BigInt::from(n))
    }

    fn from_frac(numer: i64, denom: i64) -> Self {
        Ratio::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn from_bigint(n: &BigInt) -> Option<Self> {
        Some(Ratio::from_integer(n.clone()))
    }

    fn floor_int(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }

    fn to_parts(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }
}

macro_rules! impl_fixed_width {
    ($int:ty) => {
        impl Scalar for Ratio<$int> {
            fn from_i64(n: i64) -> Self {
                Ratio::from_integer(<$int>::from(n))
            }

            fn from_frac(numer: i64, denom: i64) -> Self {
                Ratio::new(<$int>::from(numer), <$int>::from(denom))
            }

            fn from_bigint(n: &BigInt) -> Option<Self> {
                <$int>::try_from(n.clone()).ok().map(Ratio::from_integer)
            }

            fn floor_int(&self) -> BigInt {
                BigInt::from(self.numer().div_floor(self.denom()))
            }

            fn is_integer(&self) -> bool {
                Ratio::is_integer(self)
            }

            fn to_parts(&self) -> (BigInt, BigInt) {
                (BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }
        }
    };
}

impl_fixed_width!(i64);
impl_fixed_width!(i128);

/// Formats a scalar as `numer/denom`, always including the denominator.
pub fn fraction_string<T: Scalar>(x: &T) -> String {
    let (n, d) = x.to_parts();
    format!("{n}/{d}")
}

/// Parses `"a"`, `"-a"` or `"a/b"` into a scalar.
pub fn parse_fraction<T: Scalar>(text: &str) -> Option<T> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer.parse().ok()?;
    let denom: BigInt = denom.parse().ok()?;
    if denom == BigInt::from(0) {
        return None;
    }
    Some(T::from_bigint(&numer)? / T::from_bigint(&denom)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn floor_rounds_toward_negative_infinity() {
        assert_eq!(Rat::from_frac(-1, 2).floor_int(), BigInt::from(-1));
        assert_eq!(Rat::from_frac(5, 2).floor_int(), BigInt::from(2));
        assert_eq!(Ratio::<i64>::from_frac(-7, 3).floor_int(), BigInt::from(-3));
    }

    #[test]
    fn parse_and_print_fractions() {
        let x: Rat = parse_fraction(" -6/4 ").unwrap();
        assert_eq!(fraction_string(&x), "-3/2");
        let y: Rat = parse_fraction("7").unwrap();
        assert_eq!(fraction_string(&y), "7/1");
        assert!(parse_fraction::<Rat>("1/0").is_none());
        assert!(parse_fraction::<Rat>("x").is_none());
        assert_eq!(
            parse_fraction::<Ratio<i64>>("99999999999999999999"),
            None
        );
    }
}
