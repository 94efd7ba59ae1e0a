use num_bigint::BigInt;
use num_traits::Zero;

use super::{CanonicalForm, GroupParams, GroupWord, Syllable};
use crate::rational::{int, Rational};

/// Number of `b`s minus number of `b^-1`s.
pub fn height(w: &GroupWord) -> i64 {
    w.syllables()
        .iter()
        .map(|s| match s {
            Syllable::B(k) => *k,
            Syllable::A(_) => 0,
        })
        .sum()
}

fn ratio_pow(num: i64, den: i64, h: i64) -> Rational {
    let base = Rational::new(BigInt::from(num), BigInt::from(den));
    if h >= 0 {
        num_traits::pow(base, h as usize)
    } else {
        num_traits::pow(base.recip(), h.unsigned_abs() as usize)
    }
}

/// `α(ε) = 0`, `α(w b^±1) = α(w)`, `α(w a^k) = α(w) + k (n/m)^{||w||_b}`.
pub fn alpha(w: &GroupWord, p: GroupParams) -> Rational {
    let mut acc = Rational::zero();
    let mut h = 0i64;
    for s in w.syllables() {
        match s {
            Syllable::A(k) => {
                acc += Rational::from_integer(k.clone()) * ratio_pow(p.n(), p.m(), h);
            }
            Syllable::B(k) => h += k,
        }
    }
    acc
}

pub fn alpha_form(g: &CanonicalForm) -> Rational {
    alpha(&g.to_word(), g.params())
}

/// `λ(g) = (1/m) (m/n)^{||g||_b} α(g)`.
pub fn lambda(w: &GroupWord, p: GroupParams) -> Rational {
    let scale = ratio_pow(p.m(), p.n(), height(w)) / int(p.m());
    scale * alpha(w, p)
}

pub fn lambda_form(g: &CanonicalForm) -> Rational {
    lambda(&g.to_word(), g.params())
}

/// `Φ(g) = (α(g), ||g||_b)`.
pub fn phi_embed(w: &GroupWord, p: GroupParams) -> (Rational, i64) {
    (alpha(w, p), height(w))
}
