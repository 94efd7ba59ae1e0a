//! Exact rational helpers shared by every module.
//!
//! All tile labels and orbit values are [`Rational`]s. The wire format in
//! JSON is `{"num": <int>, "den": <int>}` inside tile and patch documents and
//! the `NUM/DEN` string form everywhere else.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn floor(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// `num/den` in lowest terms, or a bare integer when the denominator is one.
pub fn format(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `NUM/DEN`, `NUM` or a signed variant of either.
pub fn parse(text: &str) -> Result<Rational> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(0, format!("bad numerator in {text:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::parse(num_offset(t), format!("bad denominator in {text:?}")))?;
    if den.is_zero() {
        return Err(Error::parse(num_offset(t), "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

fn num_offset(t: &str) -> usize {
    t.find('/').map(|i| i + 1).unwrap_or(0)
}

/// Parses an interval bound such as `0+1/3`, `1-0/1`, `-1/2` or `2`.
pub fn parse_sum(text: &str) -> Result<Rational> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::parse(0, "empty rational expression"));
    }
    let mut total = Rational::zero();
    let mut start = 0;
    let bytes = t.as_bytes();
    let mut i = 1;
    while i <= bytes.len() {
        if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
            let term = &t[start..i];
            let (sign, body) = match term.as_bytes()[0] {
                b'+' => (1, &term[1..]),
                b'-' => (-1, &term[1..]),
                _ => (1, term),
            };
            let v = parse(body).map_err(|_| Error::parse(start, format!("bad term {term:?}")))?;
            if sign < 0 {
                total -= v;
            } else {
                total += v;
            }
            start = i;
        }
        i += 1;
    }
    Ok(total)
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}

/// All reduced fractions `p/d` in `[lo, hi]` with `1 <= d <= max_den`,
/// sorted ascending.
pub fn fractions_in(lo: &Rational, hi: &Rational, max_den: u64) -> Vec<Rational> {
    let mut out = Vec::new();
    for d in 1..=max_den {
        let den = BigInt::from(d);
        let start = (lo * Rational::from_integer(den.clone())).ceil().to_integer();
        let end = (hi * Rational::from_integer(den.clone())).floor().to_integer();
        let mut p = start;
        while p <= end {
            if p.gcd(&den).is_one() {
                out.push(Rational::new(p.clone(), den.clone()));
            }
            p += 1;
        }
    }
    out.sort();
    out
}

/// JSON adapter for `{"num": int, "den": int}`.
#[derive(Serialize, Deserialize)]
struct NumDen {
    num: serde_json::Value,
    den: serde_json::Value,
}

fn int_to_json(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) => serde_json::Value::from(x),
        None => serde_json::Value::from(v.to_string()),
    }
}

fn int_from_json(v: &serde_json::Value) -> std::result::Result<BigInt, String> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| format!("non-integer {n}")),
        serde_json::Value::String(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
        other => Err(format!("expected integer, got {other}")),
    }
}

pub(crate) fn to_json(x: &Rational) -> serde_json::Value {
    serde_json::json!({ "num": int_to_json(x.numer()), "den": int_to_json(x.denom()) })
}

pub(crate) fn from_json(v: &serde_json::Value) -> std::result::Result<Rational, String> {
    let nd: NumDen = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
    let num = int_from_json(&nd.num)?;
    let den = int_from_json(&nd.den)?;
    if den.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(Rational::new(num, den))
}

/// Serde `with` module for `{"num","den"}` rationals.
pub mod num_den {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        to_json(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        from_json(&v).map_err(serde::de::Error::custom)
    }
}

/// Serde `with` module for `"NUM/DEN"` string rationals.
pub mod slash {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let t = String::deserialize(d)?;
        parse(&t).map_err(serde::de::Error::custom)
    }
}

/// A big integer as a JSON number when it fits in 64 bits, else a decimal
/// string.
pub fn serialize_bigint<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse("-4/6").unwrap(), ratio(-2, 3));
        assert_eq!(parse("7").unwrap(), int(7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn parse_interval_bounds() {
        assert_eq!(parse_sum("0+1/3").unwrap(), ratio(1, 3));
        assert_eq!(parse_sum("0+1-0/1").unwrap(), int(1));
        assert_eq!(parse_sum("1 - 1/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_sum("-1/2").unwrap(), ratio(-1, 2));
    }

    #[test]
    fn floor_is_toward_negative_infinity() {
        assert_eq!(floor(&ratio(-1, 2)), BigInt::from(-1));
        assert_eq!(floor(&ratio(7, 3)), BigInt::from(2));
    }

    #[test]
    fn fractions_cover_small_denominators() {
        let f = fractions_in(&int(0), &int(1), 3);
        let want = [int(0), ratio(1, 3), ratio(1, 2), ratio(2, 3), int(1)];
        assert_eq!(f, want);
    }

    #[test]
    fn json_round_trip() {
        let x = ratio(-5, 7);
        assert_eq!(from_json(&to_json(&x)).unwrap(), x);
    }
}
