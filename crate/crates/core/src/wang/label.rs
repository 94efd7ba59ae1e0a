use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{self, Rational};

/// A side label. Equality is exact and structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Rational(Rational),
    Color(i64),
    /// A rational tagged with the index of the linear piece it belongs to.
    Pair(Rational, usize),
}

impl Label {
    pub fn int(v: i64) -> Self {
        Label::Rational(rational::int(v))
    }

    /// The numeric content used by the multiplication identity.
    pub fn value(&self) -> Option<&Rational> {
        match self {
            Label::Rational(x) | Label::Pair(x, _) => Some(x),
            Label::Color(_) => None,
        }
    }

    pub fn color(&self) -> Option<usize> {
        match self {
            Label::Pair(_, i) => Some(*i),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Rational(x) => write!(f, "{}", rational::format(x)),
            Label::Color(c) => write!(f, "#{c}"),
            Label::Pair(x, i) => write!(f, "{}@{i}", rational::format(x)),
        }
    }
}

// Rational -> {"num","den"}; Color -> bare integer; Pair -> {"num","den","color"}.
impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v = match self {
            Label::Rational(x) => rational::to_json(x),
            Label::Color(c) => serde_json::Value::from(*c),
            Label::Pair(x, i) => {
                let mut v = rational::to_json(x);
                v["color"] = serde_json::Value::from(*i);
                v
            }
        };
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let v = serde_json::Value::deserialize(d)?;
        match &v {
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(Label::Color)
                .ok_or_else(|| D::Error::custom("color must be an integer")),
            serde_json::Value::Object(map) => {
                let mut inner = map.clone();
                let color = inner.remove("color");
                let x = rational::from_json(&serde_json::Value::Object(inner))
                    .map_err(D::Error::custom)?;
                match color {
                    None => Ok(Label::Rational(x)),
                    Some(c) => c
                        .as_u64()
                        .map(|c| Label::Pair(x, c as usize))
                        .ok_or_else(|| D::Error::custom("pair color must be a nonnegative integer")),
                }
            }
            other => Err(D::Error::custom(format!("bad label {other}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn json_shapes() {
        let r = Label::Rational(ratio(1, 3));
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"den":3,"num":1}"#);
        assert_eq!(serde_json::to_string(&Label::Color(4)).unwrap(), "4");
        let p = Label::Pair(ratio(-2, 3), 1);
        let back: Label = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn structural_equality() {
        assert_ne!(Label::Rational(ratio(1, 1)), Label::Color(1));
        assert_ne!(Label::Pair(ratio(1, 2), 0), Label::Pair(ratio(1, 2), 1));
    }
}
