use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::free::FreeWord;
use crate::error::{Error, Result};
use crate::group::{GroupParams, GroupWord, Syllable};

/// An element `(k, w)` of `ℤ × F_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ZxFn {
    #[serde(serialize_with = "crate::rational::serialize_bigint")]
    pub k: BigInt,
    pub w: FreeWord,
}

impl ZxFn {
    pub fn new(k: impl Into<BigInt>, w: FreeWord) -> Self {
        ZxFn { k: k.into(), w }
    }

    pub fn mul(&self, other: &ZxFn) -> ZxFn {
        ZxFn {
            k: &self.k + &other.k,
            w: self.w.mul(&other.w),
        }
    }

    pub fn inverse(&self) -> ZxFn {
        ZxFn {
            k: -&self.k,
            w: self.w.inverse(),
        }
    }
}

/// `a^{nk} · Π a^{i} b^{e} a^{-i}` over the syllables `(i, e)`, with no
/// adjacent `(i, e)(i, -e)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HForm {
    #[serde(serialize_with = "crate::rational::serialize_bigint")]
    pub k: BigInt,
    pub syllables: Vec<(usize, i8)>,
}

impl HForm {
    pub fn to_zxfn(&self) -> ZxFn {
        ZxFn {
            k: self.k.clone(),
            w: FreeWord::from_letters(self.syllables.iter().copied()).expect("exponents are ±1"),
        }
    }
}

/// `a^p · h` with `0 <= p < n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BSnnForm {
    pub p: usize,
    pub h: HForm,
}

fn check_size(n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::param("n must be positive"));
    }
    Ok(())
}

/// `(1, ε) ↦ a^n`, `(0, g_i) ↦ a^i b a^{-i}`.
pub fn phi_iso(z: &ZxFn, n: usize) -> Result<GroupWord> {
    check_size(n)?;
    if let Some(i) = z.w.max_generator().filter(|&i| i >= n) {
        return Err(Error::param(format!("generator g{i} does not exist in F_{n}")));
    }
    let mut out = GroupWord::from_syllables([Syllable::A(&z.k * BigInt::from(n))]);
    for &(i, e) in z.w.letters() {
        out = out.concat(&GroupWord::from_syllables([
            Syllable::a(i as i64),
            Syllable::B(e as i64),
            Syllable::a(-(i as i64)),
        ]));
    }
    Ok(out)
}

/// Total `a`-exponent modulo `n`.
pub fn coset(w: &GroupWord, n: usize) -> Result<usize> {
    check_size(n)?;
    let total: BigInt = w
        .syllables()
        .iter()
        .filter_map(|s| match s {
            Syllable::A(k) => Some(k.clone()),
            Syllable::B(_) => None,
        })
        .sum();
    Ok(total.mod_floor(&BigInt::from(n)).to_usize().expect("below n"))
}

/// Writes `w` as `a^p a^{nk} Π a^{i_j} b^{e_j} a^{-i_j}`: scanning from the
/// right, each `b^{±1}` takes the `a`-power after it into `{-(n-1), …, 0}`,
/// the surplus multiple of `n` commutes to the far left, and the matching
/// `a^{i}` is borrowed from the power before the `b`.
pub fn canonicalize_bsnn(w: &GroupWord, n: usize) -> Result<BSnnForm> {
    check_size(n)?;
    let nn = BigInt::from(n);
    // a-powers between single b letters: x_0 b^{e_1} x_1 … b^{e_N} x_N
    let mut powers: Vec<BigInt> = vec![BigInt::zero()];
    let mut signs: Vec<i8> = Vec::new();
    for s in w.syllables() {
        match s {
            Syllable::A(k) => *powers.last_mut().expect("nonempty") += k,
            Syllable::B(k) => {
                let e = if *k > 0 { 1 } else { -1 };
                for _ in 0..k.unsigned_abs() {
                    signs.push(e);
                    powers.push(BigInt::zero());
                }
            }
        }
    }
    let mut central = BigInt::zero();
    let mut reversed: Vec<(usize, i8)> = Vec::with_capacity(signs.len());
    let mut current = powers.pop().expect("nonempty");
    while let Some(e) = signs.pop() {
        let i = (-&current).mod_floor(&nn);
        // current = -i + n t
        central += (&current + &i) / &nn;
        reversed.push((i.to_usize().expect("below n"), e));
        current = powers.pop().expect("one power per b") - i;
    }
    let lead = current + &nn * central;
    let (k, p) = lead.div_mod_floor(&nn);
    let free = FreeWord::from_letters(reversed.into_iter().rev()).expect("exponents are ±1");
    Ok(BSnnForm {
        p: p.to_usize().expect("below n"),
        h: HForm {
            k,
            syllables: free.letters().to_vec(),
        },
    })
}

/// The word `a^p · φ(h)`.
pub fn rebuild(form: &BSnnForm, n: usize) -> Result<GroupWord> {
    Ok(GroupWord::a(form.p as i64).concat(&phi_iso(&form.h.to_zxfn(), n)?))
}

/// Preimage under `φ`; fails with the coset when `w` is outside `H`.
pub fn phi_inverse(w: &GroupWord, n: usize) -> Result<ZxFn> {
    let form = canonicalize_bsnn(w, n)?;
    if form.p != 0 {
        return Err(Error::NotInSubgroup { coset: form.p as u64 });
    }
    Ok(form.h.to_zxfn())
}

/// `a^n` and `a^i b a^{-i}` for `i = 0..n`.
pub fn subgroup_generators(n: usize) -> Vec<GroupWord> {
    let mut out = vec![GroupWord::a(n as i64)];
    out.extend((0..n as i64).map(|i| {
        GroupWord::from_syllables([Syllable::a(i), Syllable::B(1), Syllable::a(-i)])
    }));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalityWitness {
    pub conjugator: String,
    pub generator: String,
    pub form: BSnnForm,
    pub in_subgroup: bool,
}

/// `s h s^{-1}` for every generator `h` of `H` and `s ∈ {a, A, b, B}`.
pub fn normality_witnesses(n: usize) -> Result<Vec<NormalityWitness>> {
    check_size(n)?;
    let conjugators = [GroupWord::a(1), GroupWord::a(-1), GroupWord::b(1), GroupWord::b(-1)];
    let mut out = Vec::new();
    for s in &conjugators {
        for h in subgroup_generators(n) {
            let conj = s.concat(&h).concat(&s.inverse());
            let form = canonicalize_bsnn(&conj, n)?;
            out.push(NormalityWitness {
                conjugator: s.to_string(),
                generator: h.to_string(),
                in_subgroup: form.p == 0,
                form,
            });
        }
    }
    Ok(out)
}

/// Residual finiteness of BS(m,n): `|m| = 1`, `|n| = 1` or `|m| = |n|`.
pub fn residually_finite(m: i64, n: i64) -> Result<bool> {
    GroupParams::new(m, n)?;
    let (m, n) = (m.unsigned_abs(), n.unsigned_abs());
    Ok(m == 1 || n == 1 || m == n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{equals, parse_word};

    fn bsnn(n: usize) -> GroupParams {
        GroupParams::new(n as i64, n as i64).unwrap()
    }

    #[test]
    fn generator_images() {
        let one = ZxFn::new(1, FreeWord::identity());
        assert_eq!(phi_iso(&one, 3).unwrap(), GroupWord::a(3));
        assert_eq!(phi_iso(&ZxFn::new(0, FreeWord::generator(0)), 3).unwrap(), GroupWord::b(1));
        let z = ZxFn::new(0, "g1 g0^-1".parse().unwrap());
        assert_eq!(phi_iso(&z, 2).unwrap(), parse_word("abAB").unwrap());
        assert!(phi_iso(&ZxFn::new(0, FreeWord::generator(2)), 2).is_err());
    }

    #[test]
    fn inverses() {
        assert_eq!(phi_inverse(&GroupWord::a(2), 2).unwrap(), ZxFn::new(1, FreeWord::identity()));
        assert_eq!(phi_inverse(&parse_word("abA").unwrap(), 2).unwrap(), ZxFn::new(0, FreeWord::generator(1)));
        assert!(matches!(phi_inverse(&GroupWord::a(1), 2), Err(Error::NotInSubgroup { coset: 1 })));
    }

    #[test]
    fn canonical_examples() {
        let e = canonicalize_bsnn(&GroupWord::identity(), 3).unwrap();
        assert_eq!((e.p, e.h.k.clone(), e.h.syllables.len()), (0, BigInt::zero(), 0));
        let f = canonicalize_bsnn(&GroupWord::a(4), 3).unwrap();
        assert_eq!((f.p, f.h.k.clone()), (1, BigInt::from(1)));
        let g = canonicalize_bsnn(&parse_word("ba^3B").unwrap(), 3).unwrap();
        assert_eq!((g.p, g.h.k.clone(), g.h.syllables.len()), (0, BigInt::from(1), 0));
    }

    #[test]
    fn rebuild_is_equal() {
        for n in 2..5 {
            for text in ["aabAbbaBA", "a^7Ba^-5b", "BBBa", "bab^2A^3ba", "A^11"] {
                let w = parse_word(text).unwrap();
                let form = canonicalize_bsnn(&w, n).unwrap();
                assert!(equals(&w, &rebuild(&form, n).unwrap(), bsnn(n)), "{text} n={n}");
                assert_eq!(form.p, coset(&w, n).unwrap());
            }
        }
    }

    #[test]
    fn normality() {
        for n in 1..6 {
            let ws = normality_witnesses(n).unwrap();
            assert_eq!(ws.len(), 4 * (n + 1));
            assert!(ws.iter().all(|w| w.in_subgroup));
        }
        // a · a^{n-1} b a^{-(n-1)} · a^{-1} = b
        let n = 4;
        let conj = parse_word("a a^3 b A^3 A").unwrap();
        let form = canonicalize_bsnn(&conj, n).unwrap();
        assert_eq!(form.h.syllables, vec![(0, 1)]);
    }

    #[test]
    fn residual_finiteness() {
        assert!(residually_finite(1, 5).unwrap());
        assert!(!residually_finite(2, 3).unwrap());
        assert!(residually_finite(-2, 2).unwrap());
        assert!(residually_finite(0, 2).is_err());
    }
}
