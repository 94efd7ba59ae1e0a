use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Letter = u8;

/// A window of a biinfinite word: `left` holds positions `-L..-1`, `right`
/// positions `0..R-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PointedWord {
    pub left: Vec<Letter>,
    pub right: Vec<Letter>,
}

impl PointedWord {
    pub fn new(left: Vec<Letter>, right: Vec<Letter>) -> Result<Self> {
        if let Some(&c) = left.iter().chain(&right).find(|&&c| c > 1) {
            return Err(Error::param(format!("letter {c} is not in {{0, 1}}")));
        }
        Ok(PointedWord { left, right })
    }

    pub fn empty() -> Self {
        PointedWord::default()
    }

    /// Lowest covered position (`-L`).
    pub fn start(&self) -> i64 {
        -(self.left.len() as i64)
    }

    /// One past the highest covered position (`R`).
    pub fn end(&self) -> i64 {
        self.right.len() as i64
    }

    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, p: i64) -> Option<Letter> {
        if p >= 0 {
            self.right.get(p as usize).copied()
        } else {
            let back = (-p) as usize;
            (back <= self.left.len()).then(|| self.left[self.left.len() - back])
        }
    }

    /// All letters from position `-L` upwards.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = self.left.clone();
        out.extend(&self.right);
        out
    }

    /// `ρ^j`: the same letters with the origin moved to old position `j`.
    pub fn shift(&self, j: i64) -> Result<Self> {
        if j < self.start() || j > self.end() {
            return Err(Error::param(format!("shift {j} leaves the window")));
        }
        let all = self.letters();
        let cut = (j - self.start()) as usize;
        Ok(PointedWord {
            left: all[..cut].to_vec(),
            right: all[cut..].to_vec(),
        })
    }

    /// Positions `lo..hi` that lie in the window.
    pub fn restrict(&self, lo: i64, hi: i64) -> Self {
        let lo = lo.max(self.start()).min(0);
        let hi = hi.min(self.end()).max(0);
        PointedWord {
            left: self.left[(lo - self.start()) as usize..].to_vec(),
            right: self.right[..hi as usize].to_vec(),
        }
    }

    /// Whether both windows agree on every position they share.
    pub fn agrees_with(&self, other: &PointedWord) -> bool {
        let lo = self.start().max(other.start());
        let hi = self.end().min(other.end());
        (lo..hi).all(|p| self.get(p) == other.get(p))
    }
}

fn digits(w: &[Letter]) -> String {
    w.iter().map(|&c| char::from(b'0' + c)).collect()
}

impl fmt::Display for PointedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", digits(&self.left), digits(&self.right))
    }
}

impl FromStr for PointedWord {
    type Err = Error;

    /// `"0100|10"`; without a `|` the whole word starts at position 0.
    fn from_str(s: &str) -> Result<Self> {
        let parse = |part: &str, offset: usize| -> Result<Vec<Letter>> {
            part.chars()
                .enumerate()
                .map(|(i, ch)| match ch {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    _ => Err(Error::parse(offset + i, format!("unexpected '{ch}'"))),
                })
                .collect()
        };
        match s.split_once('|') {
            Some((l, r)) => Ok(PointedWord {
                left: parse(l, 0)?,
                right: parse(r, l.len() + 1)?,
            }),
            None => Ok(PointedWord {
                left: Vec::new(),
                right: parse(s, 0)?,
            }),
        }
    }
}

impl Serialize for PointedWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PointedWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions() {
        let w: PointedWord = "011|10".parse().unwrap();
        assert_eq!((w.start(), w.end()), (-3, 2));
        assert_eq!(w.get(-3), Some(0));
        assert_eq!(w.get(-1), Some(1));
        assert_eq!(w.get(0), Some(1));
        assert_eq!(w.get(2), None);
        assert_eq!(w.to_string(), "011|10");
    }

    #[test]
    fn shift_and_restrict() {
        let w: PointedWord = "011|10".parse().unwrap();
        assert_eq!(w.shift(-1).unwrap().to_string(), "01|110");
        assert_eq!(w.shift(2).unwrap().to_string(), "01110|");
        assert!(w.shift(3).is_err());
        assert_eq!(w.restrict(-1, 1).to_string(), "1|1");
        assert_eq!(w.restrict(-10, 10), w);
    }

    #[test]
    fn bad_letters() {
        assert!("01a".parse::<PointedWord>().is_err());
        assert!(PointedWord::new(vec![2], vec![]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let w: PointedWord = "1|0".parse().unwrap();
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, "\"1|0\"");
        assert_eq!(serde_json::from_str::<PointedWord>(&s).unwrap(), w);
    }
}
