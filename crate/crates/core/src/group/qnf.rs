use num_bigint::BigInt;

use super::{canonical_form, GroupParams, GroupWord, Syllable};
use crate::error::{Error, Result};

/// `b^-down · a^power · b^up` in `BS(1,n)`. `up - down` is the height of the
/// element whatever form is chosen; the one returned here has `down + up`
/// minimal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuasiNormalForm {
    pub down: u64,
    pub power: BigInt,
    pub up: u64,
}

impl QuasiNormalForm {
    pub fn new(down: u64, power: impl Into<BigInt>, up: u64) -> Self {
        QuasiNormalForm {
            down,
            power: power.into(),
            up,
        }
    }

    pub fn to_word(&self) -> GroupWord {
        GroupWord::from_syllables([
            Syllable::B(-(self.down as i64)),
            Syllable::A(self.power.clone()),
            Syllable::B(self.up as i64),
        ])
    }

    pub fn height(&self) -> i64 {
        self.up as i64 - self.down as i64
    }

    /// The equivalent form `b^-(down+t) a^(power n^t) b^(up+t)`.
    pub fn inflate(&self, n: i64, t: u32) -> Self {
        QuasiNormalForm {
            down: self.down + t as u64,
            power: &self.power * num_traits::pow(BigInt::from(n), t as usize),
            up: self.up + t as u64,
        }
    }
}

/// Quasi-normal form of `w` in `BS(1,n)`.
pub fn quasi_normal_form_1n(w: &GroupWord, n: i64) -> Result<QuasiNormalForm> {
    let p = GroupParams::new(1, n)?;
    let form = canonical_form(w, p);
    // In BS(1,n) a normal form reads a^r0 (b^-1 a^ri)* b^up: every rep after
    // b is 0 and b a^0 b^-1 would be a pinch.
    let mut power = form.lead().clone();
    let mut down = 0u64;
    let mut up = 0u64;
    let nn = BigInt::from(n);
    for s in form.steps() {
        if s.up {
            up += 1;
        } else {
            if up > 0 {
                return Err(Error::param("normal form out of order for BS(1,n)"));
            }
            down += 1;
            power = power * &nn + BigInt::from(s.rep);
        }
    }
    Ok(QuasiNormalForm { down, power, up })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{equals, height, parse_word};

    #[test]
    fn examples() {
        let a = quasi_normal_form_1n(&parse_word("a").unwrap(), 2).unwrap();
        assert_eq!(a, QuasiNormalForm::new(0, 1, 0));
        let ab = quasi_normal_form_1n(&parse_word("aB").unwrap(), 2).unwrap();
        assert_eq!(ab, QuasiNormalForm::new(1, 2, 0));
        let ba = quasi_normal_form_1n(&parse_word("ba").unwrap(), 3).unwrap();
        assert_eq!(ba, QuasiNormalForm::new(0, 3, 1));
    }

    #[test]
    fn round_trip_and_height() {
        let p = GroupParams::new(1, 3).unwrap();
        for text in ["BaBa^2bbA", "a^5BBbab", "bbbA", "BaaBA^4"] {
            let w = parse_word(text).unwrap();
            let q = quasi_normal_form_1n(&w, 3).unwrap();
            assert!(equals(&q.to_word(), &w, p), "{text}");
            assert_eq!(q.height(), height(&w));
        }
    }

    #[test]
    fn inflated_forms_are_equal() {
        let p = GroupParams::new(1, 2).unwrap();
        let q = QuasiNormalForm::new(1, -3, 2);
        assert!(equals(&q.to_word(), &q.inflate(2, 3).to_word(), p));
    }
}
