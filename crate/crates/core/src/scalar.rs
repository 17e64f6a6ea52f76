//! Exact time scalars.
//!
//! Every operation in this crate compares window endpoints for equality, so
//! time is restricted to exact ordered fields. Binary floating point is not a
//! valid [`Scalar`].

use std::fmt;
use std::hash::Hash;

use num_bigint::{BigInt, ToBigInt};
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// An exact, totally ordered rational scalar usable as a time value.
pub trait Scalar: Clone + Ord + Hash + fmt::Debug + fmt::Display + Num + Signed + Send + Sync + 'static {
    /// Builds `numer / denom`, or `None` when the value does not fit.
    fn from_fraction(numer: &BigInt, denom: &BigInt) -> Option<Self>;

    /// Lowest-terms `(numerator, denominator)` with a positive denominator.
    fn to_fraction(&self) -> (BigInt, BigInt);

    fn from_int(n: i64) -> Self {
        Self::from_fraction(&BigInt::from(n), &BigInt::one()).expect("small integers always fit")
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_fraction(&BigInt::from(numer), &BigInt::from(denom)).expect("small ratios always fit")
    }

    fn midpoint(&self, other: &Self) -> Self {
        (self.clone() + other.clone()) / (Self::one() + Self::one())
    }
}

macro_rules! impl_machine_ratio {
    ($($int:ty),*) => {$(
        impl Scalar for Ratio<$int> {
            fn from_fraction(numer: &BigInt, denom: &BigInt) -> Option<Self> {
                if denom.is_zero() {
                    return None;
                }
                let r = Ratio::new(numer.clone(), denom.clone());
                let n = <$int>::from_i128(r.numer().to_i128()?)?;
                let d = <$int>::from_i128(r.denom().to_i128()?)?;
                Some(Ratio::new(n, d))
            }

            fn to_fraction(&self) -> (BigInt, BigInt) {
                (
                    self.numer().to_bigint().expect("integer converts"),
                    self.denom().to_bigint().expect("integer converts"),
                )
            }
        }
    )*};
}

impl_machine_ratio!(i32, i64, i128);

impl Scalar for Ratio<BigInt> {
    fn from_fraction(numer: &BigInt, denom: &BigInt) -> Option<Self> {
        if denom.is_zero() {
            None
        } else {
            Some(Ratio::new(numer.clone(), denom.clone()))
        }
    }

    fn to_fraction(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }
}

/// Formats a time as `p/q`, always with an explicit denominator.
pub fn fraction_string<T: Scalar>(t: &T) -> String {
    let (n, d) = t.to_fraction();
    format!("{n}/{d}")
}

/// Parses `p/q`, an integer, or an exact decimal such as `-0.75`.
///
/// Decimals are converted digit by digit, never through a float.
pub fn parse_time<T: Scalar>(text: &str) -> Option<T> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = parse_integer(n.trim())?;
        let d: BigInt = parse_integer(d.trim())?;
        if d.is_zero() {
            return None;
        }
        return T::from_fraction(&n, &d);
    }
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = digits.parse().ok()?;
    if negative {
        numer = -numer;
    }
    let denom = num_traits::pow(BigInt::from(10u8), frac_part.len());
    T::from_fraction(&numer, &denom)
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}
