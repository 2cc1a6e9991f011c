use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact nonnegative rational number.
///
/// The wrapped value is kept in lowest terms with a positive denominator
/// (`BigRational` normalizes on construction) and is never negative: the
/// only subtraction offered is [`Rational::checked_sub`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: u64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`, rejecting a zero denominator.
    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidRational(format!("{numer}/0")));
        }
        Ok(Rational(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    /// Wraps an arbitrary big rational, rejecting negative values.
    pub fn from_big(value: BigRational) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::Negative(value.to_string()));
        }
        Ok(Rational(value))
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
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

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// `self - other`, or `None` when the result would be negative.
    pub fn checked_sub(&self, other: &Rational) -> Option<Rational> {
        if other.0 > self.0 {
            None
        } else {
            Some(Rational(&self.0 - &other.0))
        }
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

fn parse_digits(s: &str) -> Option<BigUint> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigUint::parse_bytes(s.as_bytes(), 10)
}

/// Parses `INT`, `INT/INT` or `DECIMAL` (`digits.digits`). Signs, exponents
/// and whitespace are rejected; decimals convert exactly.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidRational(s.to_string());
        if let Some(rest) = s.strip_prefix('-') {
            if parse_digits(rest.split(['/', '.']).next().unwrap_or("")).is_some() {
                return Err(Error::Negative(s.to_string()));
            }
            return Err(invalid());
        }
        if let Some((n, d)) = s.split_once('/') {
            let n = parse_digits(n).ok_or_else(invalid)?;
            let d = parse_digits(d).ok_or_else(invalid)?;
            if d.is_zero() {
                return Err(invalid());
            }
            return Ok(Rational(BigRational::new(n.into(), d.into())));
        }
        if let Some((int, frac)) = s.split_once('.') {
            let int = parse_digits(int).ok_or_else(invalid)?;
            let frac_value = parse_digits(frac).ok_or_else(invalid)?;
            let scale = num_traits::pow(BigUint::from(10u8), frac.len());
            let numer = int * &scale + frac_value;
            return Ok(Rational(BigRational::new(numer.into(), scale.into())));
        }
        let n = parse_digits(s).ok_or_else(invalid)?;
        Ok(Rational(BigRational::from_integer(n.into())))
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::from_integer(n)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &'a Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &'a Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| &acc + x)
    }
}
