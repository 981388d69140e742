//! Exact rationals, complex rationals and the small scalar abstraction used
//! by formulas that are evaluated both exactly and in binary64.

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Complex number with exact rational parts.
pub type ComplexQ = Complex<Rational>;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn cq(re: Rational, im: Rational) -> ComplexQ {
    Complex::new(re, im)
}

pub fn cq_real(re: Rational) -> ComplexQ {
    Complex::new(re, Rational::zero())
}

/// Parses `n`, `n/d`, or a finite decimal such as `-0.125` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::BadRational(s.to_string());
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((ip, fp)) = t.split_once('.') {
        if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = ip.starts_with('-');
        let ip_digits = ip.trim_start_matches(['-', '+']);
        let whole = if ip_digits.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(ip_digits).map_err(|_| bad())?
        };
        let scale = BigInt::from(10u32).pow(fp.len() as u32);
        let frac = BigInt::from_str(fp).map_err(|_| bad())?;
        let mut n = whole * &scale + frac;
        if neg {
            n = -n;
        }
        return Ok(Rational::new(n, scale));
    }
    BigInt::from_str(t)
        .map(Rational::from_integer)
        .map_err(|_| bad())
}

/// Canonical `num/den` form used in every serialized artifact (the
/// denominator is always written, even when it is 1).
pub fn to_frac_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn to_f64(q: &Rational) -> f64 {
    ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
}

/// Exact binary value of a finite float.
pub fn from_f64(x: f64) -> Rational {
    Rational::from_float(x).expect("finite float")
}

pub fn pow(q: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= q;
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Scalars that the coefficient formulas are generic over: exact rationals
/// for certificates and identities, `f64` for grid oracles.
pub trait Field: Clone + Signed + PartialOrd + Debug + Send + Sync + 'static {
    fn ratio(num: i64, den: i64) -> Self;
    fn to_f64(&self) -> f64;

    /// Absolute slack allowed in range checks: zero for exact scalars, a few
    /// ulps for floats.
    fn slack() -> Self;

    fn from_int(n: i64) -> Self {
        Self::ratio(n, 1)
    }
}

impl Field for f64 {
    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn slack() -> Self {
        1e-12
    }
}

impl Field for Rational {
    fn ratio(num: i64, den: i64) -> Self {
        rat(num, den)
    }

    fn to_f64(&self) -> f64 {
        to_f64(self)
    }

    fn slack() -> Self {
        Rational::zero()
    }
}

/// `serde(with = ...)` adaptor writing a rational as a `"num/den"` string.
pub mod serde_frac {
    use super::{parse_rational, to_frac_string, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_frac_string(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match q {
                Some(q) => s.serialize_some(&to_frac_string(q)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            let s: Option<String> = Option::deserialize(d)?;
            s.map(|s| parse_rational(&s).map_err(serde::de::Error::custom))
                .transpose()
        }
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for q in v {
                seq.serialize_element(&to_frac_string(q))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let v: Vec<String> = Vec::deserialize(d)?;
            v.iter()
                .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                .collect()
        }
    }
}
