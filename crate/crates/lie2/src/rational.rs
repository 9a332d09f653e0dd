//! Exact rational scalars.
//!
//! [`Rat`] wraps an arbitrary-precision rational number.  All structure
//! constants, matrices, and cochains in this crate are valued in `Rat`, so
//! every check the crate performs is exact: a residual is zero or it is not.
//!
//! Human-facing output can optionally render rationals in decimal notation
//! (see [`RationalStyle`]); this affects formatting only, never arithmetic.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Rat(BigRational);

impl Rat {
    /// The rational `p/q`.  Panics if `q == 0`.
    pub fn new(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The integer `n` as a rational.
    pub fn int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// Wraps a big rational.
    pub fn from_big(r: BigRational) -> Self {
        Rat(r)
    }

    /// The underlying big rational.
    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// Numerator (of the reduced fraction).
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator (of the reduced fraction, always positive).
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Multiplicative inverse.  Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Rat(self.0.recip())
    }

    /// Absolute value.
    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::int(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn div(self, rhs: &'a Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl<'a> Neg for &'a Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Zero for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rat {
    fn one() -> Self {
        Rat(BigRational::one())
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Parses `"p"` or `"p/q"` with optional sign and arbitrary precision.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::InvalidInput(format!("cannot parse rational number from {s:?}"));
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
            }
            Ok(Rat(BigRational::new(p, q)))
        } else {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat(BigRational::from_integer(p)))
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct RatVisitor;
        impl de::Visitor<'_> for RatVisitor {
            type Value = Rat;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a rational number as a string \"p/q\" or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Rat, E> {
                v.parse().map_err(|e| E::custom(format!("{e}")))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rat, E> {
                Ok(Rat::int(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rat, E> {
                Ok(Rat(BigRational::from_integer(BigInt::from(v))))
            }
        }
        deserializer.deserialize_any(RatVisitor)
    }
}

/// How to render rationals in *human-facing* output.
///
/// Controlled by the `LIE2_RATIONAL_STYLE` environment variable
/// (`slash` (default) or `decimal`).  `decimal` renders a rational as an
/// exact finite decimal when its reduced denominator is of the form
/// `2^a * 5^b`, and falls back to `p/q` otherwise, so output is never
/// rounded.  Machine-facing JSON always uses the `p/q` form.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum RationalStyle {
    /// `p/q` (and plain `p` for integers).
    #[default]
    Slash,
    /// Exact finite decimal where possible, otherwise `p/q`.
    Decimal,
}

impl RationalStyle {
    /// Reads the style from `LIE2_RATIONAL_STYLE`; unknown values fall back
    /// to [`RationalStyle::Slash`].
    pub fn from_env() -> Self {
        match std::env::var("LIE2_RATIONAL_STYLE").as_deref() {
            Ok("decimal") => RationalStyle::Decimal,
            _ => RationalStyle::Slash,
        }
    }

    /// Formats `r` in this style.
    pub fn format(&self, r: &Rat) -> String {
        match self {
            RationalStyle::Slash => r.to_string(),
            RationalStyle::Decimal => match decimal_expansion(r) {
                Some(s) => s,
                None => r.to_string(),
            },
        }
    }
}

/// Exact finite decimal expansion of `r`, if one exists (reduced denominator
/// of the form `2^a * 5^b`), else `None`.
fn decimal_expansion(r: &Rat) -> Option<String> {
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut den = r.denom().clone();
    let mut a = 0u32;
    let mut b = 0u32;
    while (&den % &two).is_zero() {
        den /= &two;
        a += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        b += 1;
    }
    if !den.is_one() {
        return None;
    }
    let k = a.max(b);
    // r = p / (2^a 5^b); p * 10^k / denom is an integer with k decimal digits.
    let scaled: BigInt = r.numer() * BigInt::from(10).pow(k) / r.denom();
    if k == 0 {
        return Some(scaled.to_string());
    }
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let digits = if digits.len() <= k as usize {
        format!("{}{}", "0".repeat(k as usize + 1 - digits.len()), digits)
    } else {
        digits
    };
    let split = digits.len() - k as usize;
    let (int_part, frac_part) = digits.split_at(split);
    Some(format!(
        "{}{}.{}",
        if neg { "-" } else { "" },
        int_part,
        frac_part
    ))
}
