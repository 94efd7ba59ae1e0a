use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::substitution::{sigma, UniformSubstitution};
use super::word::{Letter, PointedWord};
use crate::error::{Error, Result};

/// Letters seeding a pointed fixpoint `^ω s(left) . s^ω(right)`: `s(left)`
/// ends with `left` and `s(right)` starts with `right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixpointSeed {
    pub left: Letter,
    pub right: Letter,
}

/// Every seed pair of `s`; empty when `s` has no pointed fixpoint.
pub fn fixpoint_seeds(s: &UniformSubstitution) -> Vec<FixpointSeed> {
    let lefts: Vec<Letter> = (0..2).filter(|&c| s.image(c).last() == Some(&c)).collect();
    let rights: Vec<Letter> = (0..2).filter(|&c| s.image(c).first() == Some(&c)).collect();
    lefts
        .iter()
        .flat_map(|&left| rights.iter().map(move |&right| FixpointSeed { left, right }))
        .collect()
}

/// Positions `-half_length..half_length` of the fixpoint grown from `seed`.
pub fn seeded_window(s: &UniformSubstitution, seed: FixpointSeed, half_length: usize) -> Result<PointedWord> {
    if s.size() < 2 {
        return Err(Error::param("substitution size must be at least 2"));
    }
    if s.image(seed.left).last() != Some(&seed.left) || s.image(seed.right).first() != Some(&seed.right) {
        return Err(Error::param(format!(
            "({}, {}) does not seed a fixpoint of {s}",
            seed.left, seed.right
        )));
    }
    let mut left = vec![seed.left];
    let mut right = vec![seed.right];
    while right.len() < half_length {
        left = s.apply(&left);
        right = s.apply(&right);
    }
    // both sides grow at the same rate
    let left = left[left.len() - half_length..].to_vec();
    right.truncate(half_length);
    Ok(PointedWord { left, right })
}

/// The fixpoint of `σ_1` for `n >= 3`, on positions `-half_length..half_length`.
pub fn fixpoint_window(n: usize, half_length: usize) -> Result<PointedWord> {
    if n == 2 {
        return Err(Error::param(
            "σ_1 has no fixpoint for n = 2; use the pair of σ_1² fixpoints instead",
        ));
    }
    let s = sigma(n, 1)?;
    seeded_window(&s, FixpointSeed { left: 0, right: 0 }, half_length)
}

/// The two fixpoints `u` (origin letter 0) and `v` (origin letter 1) of `σ_1²`
/// for `n = 2`; `σ_1` maps each onto the other.
pub fn fixpoint2_windows(half_length: usize) -> (PointedWord, PointedWord) {
    let s = sigma(2, 1).expect("valid").power(2);
    let u = seeded_window(&s, FixpointSeed { left: 0, right: 0 }, half_length).expect("valid seed");
    let v = seeded_window(&s, FixpointSeed { left: 0, right: 1 }, half_length).expect("valid seed");
    (u, v)
}

/// Base-`n` digits of `p` (least significant first) down to a fixed point of
/// `p ↦ ⌊p/n⌋`, which is `0` or `-1`.
fn digits(p: &BigInt, n: usize) -> (Vec<usize>, bool) {
    let n = BigInt::from(n);
    let mut p = p.clone();
    let mut out = Vec::new();
    let minus_one = -BigInt::one();
    while !p.is_zero() && p != minus_one {
        let (q, r) = p.div_mod_floor(&n);
        out.push(r.to_usize().expect("remainder below n"));
        p = q;
    }
    (out, p.is_zero())
}

/// Letter at position `p` of the `σ_1` fixpoint (`n >= 3`), using
/// `w_{nj+i} = σ_1(w_j)_i` and `w_0 = w_{-1} = 0`.
pub fn fixpoint_letter(n: usize, p: &BigInt) -> Result<Letter> {
    if n < 3 {
        return Err(Error::param("a single σ_1 fixpoint needs n >= 3"));
    }
    let s = sigma(n, 1)?;
    let (ds, _) = digits(p, n);
    Ok(ds.iter().rev().fold(0, |c, &i| s.image(c)[i]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwoCycleWord {
    U,
    V,
}

impl TwoCycleWord {
    pub fn other(self) -> Self {
        match self {
            TwoCycleWord::U => TwoCycleWord::V,
            TwoCycleWord::V => TwoCycleWord::U,
        }
    }
}

/// Letter at position `p` of `u` or `v` (`n = 2`), using
/// `u_{2j+i} = σ_1(v_j)_i`, `v_{2j+i} = σ_1(u_j)_i`, `u_0 = 0`, `v_0 = 1`,
/// `u_{-1} = v_{-1} = 0`.
pub fn fixpoint2_letter(which: TwoCycleWord, p: &BigInt) -> Letter {
    let s = sigma(2, 1).expect("valid");
    let (ds, at_zero) = digits(p, 2);
    // after ds.len() halvings we sit on the other word when the count is odd
    let base_word = if ds.len() % 2 == 0 { which } else { which.other() };
    let base = match (at_zero, base_word) {
        (true, TwoCycleWord::V) => 1,
        _ => 0,
    };
    ds.iter().rev().fold(base, |c, &i| s.image(c)[i])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(s: &str) -> Vec<Letter> {
        s.bytes().map(|b| b - b'0').collect()
    }

    #[test]
    fn seeds_of_sigma_one() {
        assert_eq!(fixpoint_seeds(&sigma(3, 1).unwrap()), vec![FixpointSeed { left: 0, right: 0 }]);
        assert!(fixpoint_seeds(&sigma(2, 1).unwrap()).is_empty());
        assert_eq!(fixpoint_seeds(&sigma(2, 1).unwrap().power(2)).len(), 2);
        // σ_0(0) = 0..01 ends with 1, σ_0(1) = 0..0: no left seed
        assert!(fixpoint_seeds(&sigma(4, 0).unwrap()).is_empty());
    }

    #[test]
    fn sigma_one_window() {
        let w = fixpoint_window(3, 9).unwrap();
        assert_eq!(w.right[..3], letters("010")[..]);
        assert_eq!(w.get(0), Some(0));
        assert_eq!((w.start(), w.end()), (-9, 9));
        let image = sigma(3, 1).unwrap().apply_pointed(&w);
        assert!(image.agrees_with(&w));
        assert!(fixpoint_window(2, 4).is_err());
    }

    #[test]
    fn letter_oracle_matches_window() {
        for n in 3..6 {
            let w = fixpoint_window(n, 400).unwrap();
            for p in w.start()..w.end() {
                assert_eq!(Some(fixpoint_letter(n, &BigInt::from(p)).unwrap()), w.get(p), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn two_cycle() {
        let (u, v) = fixpoint2_windows(64);
        assert_eq!((u.get(0), v.get(0)), (Some(0), Some(1)));
        let s = sigma(2, 1).unwrap();
        assert!(s.apply_pointed(&u).agrees_with(&v));
        assert!(s.apply_pointed(&v).agrees_with(&u));
        let s2 = s.power(2);
        assert!(s2.apply_pointed(&u).agrees_with(&u));
        assert!(s2.apply_pointed(&v).agrees_with(&v));
        for p in u.start()..u.end() {
            assert_eq!(Some(fixpoint2_letter(TwoCycleWord::U, &BigInt::from(p))), u.get(p));
            assert_eq!(Some(fixpoint2_letter(TwoCycleWord::V, &BigInt::from(p))), v.get(p));
        }
    }
}
