//! Exact rational numbers and the helpers that turn them into integers for
//! the hot loops.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

pub fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

pub fn ratio(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

/// Parses `"p/q"`, `"p"` or a plain decimal such as `"-0.25"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::invalid(format!("not a rational number: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: i128 = num.trim().parse().map_err(|_| bad())?;
        let den: i128 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(Error::invalid(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 30 {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let w: i128 = if whole_digits.is_empty() { 0 } else { whole_digits.parse().map_err(|_| bad())? };
        let f: i128 = frac.parse().map_err(|_| bad())?;
        let den = 10i128.checked_pow(frac.len() as u32).ok_or_else(bad)?;
        let mag = w.checked_mul(den).and_then(|x| x.checked_add(f)).ok_or_else(bad)?;
        return Ok(Rational::new(if negative { -mag } else { mag }, den));
    }
    s.parse::<i128>().map(Rational::from_integer).map_err(|_| bad())
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of all denominators, with overflow detection.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Result<i128> {
    let mut l: i128 = 1;
    for v in values {
        let d = *v.denom();
        let g = l.gcd(&d);
        l = (l / g).checked_mul(d).ok_or(Error::Overflow)?;
    }
    Ok(l)
}

/// `value * scale` as an integer; `scale` must be a multiple of the denominator.
pub fn scaled(value: &Rational, scale: i128) -> Result<i128> {
    let d = *value.denom();
    debug_assert!(scale % d == 0);
    value.numer().checked_mul(scale / d).ok_or(Error::Overflow)
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

pub fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

pub fn zero() -> Rational {
    Rational::zero()
}

/// Serde wrapper: reads a JSON string (`"p/q"`, decimal) or integer, writes
/// the canonical string form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Q(pub Rational);

impl From<Rational> for Q {
    fn from(r: Rational) -> Self {
        Q(r)
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl FromStr for Q {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(Q)
    }
}

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct QVisitor;
        impl<'de> Visitor<'de> for QVisitor {
            type Value = Q;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational as an integer or a string \"p/q\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Q, E> {
                Ok(Q(int(v as i128)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Q, E> {
                Ok(Q(int(v as i128)))
            }
            fn visit_f64<E: de::Error>(self, _v: f64) -> std::result::Result<Q, E> {
                Err(E::custom("floating-point numbers are not accepted; write \"p/q\""))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Q, E> {
                parse_rational(v).map(Q).map_err(E::custom)
            }
        }
        deserializer.deserialize_any(QVisitor)
    }
}
