use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A freely reduced word over `g_0, g_1, …` as `(generator, ±1)` letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FreeWord {
    letters: Vec<(usize, i8)>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(i: usize) -> Self {
        FreeWord {
            letters: vec![(i, 1)],
        }
    }

    /// Reduces `letters` with a stack. Exponents must be `±1`.
    pub fn from_letters(letters: impl IntoIterator<Item = (usize, i8)>) -> Result<Self> {
        let mut w = FreeWord::identity();
        for (i, e) in letters {
            if e != 1 && e != -1 {
                return Err(Error::param(format!("exponent {e} is not ±1")));
            }
            w.push(i, e);
        }
        Ok(w)
    }

    pub fn push(&mut self, i: usize, e: i8) {
        if self.letters.last() == Some(&(i, -e)) {
            self.letters.pop();
        } else {
            self.letters.push((i, e));
        }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &(i, e) in &other.letters {
            out.push(i, e);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect(),
        }
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(i, _)| i).max()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(i, e)| if e == 1 { format!("g{i}") } else { format!("g{i}^-1") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    /// Whitespace-separated `g<i>`, `g<i>^-1` or `g<i>^<k>`; `e` or the empty
    /// string is the identity.
    fn from_str(s: &str) -> Result<Self> {
        let mut w = FreeWord::identity();
        let mut offset = 0;
        for token in s.split_whitespace() {
            let at = s[offset..].find(token).map_or(offset, |p| p + offset);
            offset = at + token.len();
            if token == "e" {
                continue;
            }
            let body = token
                .strip_prefix('g')
                .ok_or_else(|| Error::parse(at, format!("expected g<i>, found '{token}'")))?;
            let (index, power) = match body.split_once('^') {
                Some((i, k)) => (i, k),
                None => (body, "1"),
            };
            let i: usize = index
                .parse()
                .map_err(|_| Error::parse(at, format!("bad generator index in '{token}'")))?;
            let k: i64 = power
                .parse()
                .map_err(|_| Error::parse(at, format!("bad exponent in '{token}'")))?;
            let e = if k < 0 { -1 } else { 1 };
            for _ in 0..k.unsigned_abs() {
                w.push(i, e);
            }
        }
        Ok(w)
    }
}

impl Serialize for FreeWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FreeWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        let w = FreeWord::from_letters([(0, 1), (1, 1), (1, -1), (0, 1)]).unwrap();
        assert_eq!(w.letters(), &[(0, 1), (0, 1)]);
        assert!(w.mul(&w.inverse()).is_empty());
        assert!(FreeWord::from_letters([(0, 2)]).is_err());
    }

    #[test]
    fn text() {
        let w: FreeWord = "g0 g1^-1 g1 g2^2".parse().unwrap();
        assert_eq!(w.to_string(), "g0 g2 g2");
        assert_eq!("e".parse::<FreeWord>().unwrap(), FreeWord::identity());
        assert_eq!("".parse::<FreeWord>().unwrap().to_string(), "e");
        assert!("h1".parse::<FreeWord>().is_err());
        assert!("g0 gx".parse::<FreeWord>().is_err());
    }
}
