use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A,
    B,
}

/// A maximal run of one generator. `a`-exponents are unbounded integers
/// because normal forms can push exponentially large powers of `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Syllable {
    A(BigInt),
    B(i64),
}

impl Syllable {
    pub fn a(k: i64) -> Self {
        Syllable::A(BigInt::from(k))
    }

    pub fn generator(&self) -> Generator {
        match self {
            Syllable::A(_) => Generator::A,
            Syllable::B(_) => Generator::B,
        }
    }

    fn is_trivial(&self) -> bool {
        match self {
            Syllable::A(k) => k.is_zero(),
            Syllable::B(k) => *k == 0,
        }
    }

    fn inverse(&self) -> Self {
        match self {
            Syllable::A(k) => Syllable::A(-k),
            Syllable::B(k) => Syllable::B(-k),
        }
    }
}

/// A word over `{a, b, a^-1, b^-1}` with adjacent runs merged and
/// zero exponents dropped. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GroupWord {
    syllables: Vec<Syllable>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord::default()
    }

    pub fn from_syllables(items: impl IntoIterator<Item = Syllable>) -> Self {
        let mut w = GroupWord::default();
        for s in items {
            w.push(s);
        }
        w
    }

    pub fn a(k: i64) -> Self {
        Self::from_syllables([Syllable::a(k)])
    }

    pub fn b(k: i64) -> Self {
        Self::from_syllables([Syllable::B(k)])
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Appends a syllable, merging with the last run and cancelling freely.
    pub fn push(&mut self, s: Syllable) {
        if s.is_trivial() {
            return;
        }
        let merged = match (self.syllables.last_mut(), &s) {
            (Some(Syllable::A(x)), Syllable::A(y)) => {
                *x += y;
                true
            }
            (Some(Syllable::B(x)), Syllable::B(y)) => {
                *x += y;
                true
            }
            _ => false,
        };
        if merged {
            if self.syllables.last().is_some_and(Syllable::is_trivial) {
                self.syllables.pop();
            }
        } else {
            self.syllables.push(s);
        }
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut w = self.clone();
        for s in &other.syllables {
            w.push(s.clone());
        }
        w
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord::from_syllables(self.syllables.iter().rev().map(Syllable::inverse))
    }

    pub fn pow(&self, k: i64) -> GroupWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = GroupWord::identity();
        for _ in 0..k.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// Inserts `other` after the first `at` letters (counted with multiplicity).
    pub fn insert_at(&self, at: usize, other: &GroupWord) -> GroupWord {
        let letters = self.letters();
        let at = at.min(letters.len());
        let mut w = GroupWord::identity();
        for s in &letters[..at] {
            w.push(s.clone());
        }
        for s in &other.syllables {
            w.push(s.clone());
        }
        for s in &letters[at..] {
            w.push(s.clone());
        }
        w
    }

    /// The word expanded into unit letters (`a^3` becomes three `a`s).
    /// Only meant for words with small exponents.
    pub fn letters(&self) -> Vec<Syllable> {
        let mut out = Vec::new();
        for s in &self.syllables {
            match s {
                Syllable::A(k) => {
                    let unit = if k.is_negative() { -BigInt::one() } else { BigInt::one() };
                    let count = k.abs().to_u64().expect("exponent too large to expand");
                    out.extend((0..count).map(|_| Syllable::A(unit.clone())));
                }
                Syllable::B(k) => {
                    out.extend((0..k.unsigned_abs()).map(|_| Syllable::B(k.signum())));
                }
            }
        }
        out
    }

    /// Number of unit letters.
    pub fn length(&self) -> BigInt {
        self.syllables
            .iter()
            .map(|s| match s {
                Syllable::A(k) => k.abs(),
                Syllable::B(k) => BigInt::from(k.unsigned_abs()),
            })
            .sum()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.syllables {
            let (up, down, k) = match s {
                Syllable::A(k) => ('a', 'A', k.clone()),
                Syllable::B(k) => ('b', 'B', BigInt::from(*k)),
            };
            if k.is_one() {
                write!(f, "{up}")?;
            } else if k == -BigInt::one() {
                write!(f, "{down}")?;
            } else {
                write!(f, "{up}^{k}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for GroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// Parses `a`, `b`, `A` (= a^-1), `B` (= b^-1), each optionally followed by
/// `^<int>`. Whitespace is ignored; `e` alone (or the empty string) is the
/// identity.
pub fn parse_word(text: &str) -> Result<GroupWord> {
    if text.trim() == "e" {
        return Ok(GroupWord::identity());
    }
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut w = GroupWord::identity();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        i += 1;
        let (gen, sign) = match c {
            'a' => (Generator::A, 1i64),
            'A' => (Generator::A, -1),
            'b' => (Generator::B, 1),
            'B' => (Generator::B, -1),
            c if c.is_whitespace() => continue,
            other => return Err(Error::parse(pos, format!("unexpected character {other:?}"))),
        };
        let mut exp = BigInt::one();
        if i < chars.len() && chars[i].1 == '^' {
            let caret = chars[i].0;
            i += 1;
            let start = i;
            if i < chars.len() && (chars[i].1 == '-' || chars[i].1 == '+') {
                i += 1;
            }
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            exp = digits
                .parse()
                .map_err(|_| Error::parse(caret, format!("bad exponent {digits:?}")))?;
        }
        let exp = exp * sign;
        match gen {
            Generator::A => w.push(Syllable::A(exp)),
            Generator::B => {
                let k = exp
                    .to_i64()
                    .ok_or_else(|| Error::parse(pos, "b-exponent out of range"))?;
                w.push(Syllable::B(k))
            }
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let w = parse_word("abA").unwrap();
        assert_eq!(
            w.syllables(),
            &[Syllable::a(1), Syllable::B(1), Syllable::a(-1)]
        );
        assert!(parse_word("").unwrap().is_empty());
        assert!(parse_word("aa^-1").unwrap().is_empty());
        assert!(parse_word("e").unwrap().is_empty());
    }

    #[test]
    fn parse_exponents_and_runs() {
        let w = parse_word("a^3 a^-1 B^2 b").unwrap();
        assert_eq!(w.syllables(), &[Syllable::a(2), Syllable::B(-1)]);
        assert_eq!(parse_word("A^-2").unwrap(), GroupWord::a(2));
    }

    #[test]
    fn parse_error_reports_position() {
        match parse_word("abx") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(parse_word("a^"), Err(Error::Parse { position: 1, .. })));
    }

    #[test]
    fn display_round_trips() {
        for text in ["baBabABA", "a^5B^3a^-2", "", "Ab^2"] {
            let w = parse_word(text).unwrap();
            assert_eq!(parse_word(&w.to_string()).unwrap(), w);
        }
    }

    #[test]
    fn free_cancellation_across_concat() {
        let w = parse_word("ab").unwrap();
        assert!(w.concat(&w.inverse()).is_empty());
        assert_eq!(w.pow(-2), parse_word("BABA").unwrap());
    }

    #[test]
    fn insert_counts_unit_letters() {
        let w = parse_word("a^2b").unwrap();
        let r = parse_word("B").unwrap();
        assert_eq!(w.insert_at(1, &r), parse_word("aBab").unwrap());
    }
}
