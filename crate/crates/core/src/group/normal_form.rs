use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{GroupParams, GroupWord, Syllable};

/// One `b^{±1} a^rep` block of a normal form. `rep` lies in `0..|m|` after
/// `b` and in `0..|n|` after `b^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub up: bool,
    pub rep: u64,
}

/// Normal form `a^lead · b^ε1 a^r1 · … · b^εk a^rk` of an element of
/// `BS(m,n)`: Britton-reduced, with every `r_i` a coset representative and
/// all excess pushed into `lead`. Two words give the same form iff they are
/// equal in the group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    params: GroupParams,
    lead: BigInt,
    steps: Vec<Step>,
}

impl CanonicalForm {
    pub fn identity(params: GroupParams) -> Self {
        CanonicalForm {
            params,
            lead: BigInt::zero(),
            steps: Vec::new(),
        }
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn lead(&self) -> &BigInt {
        &self.lead
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn is_identity(&self) -> bool {
        self.lead.is_zero() && self.steps.is_empty()
    }

    pub fn height(&self) -> i64 {
        self.steps.iter().map(|s| if s.up { 1 } else { -1 }).sum()
    }

    pub fn to_word(&self) -> GroupWord {
        let mut w = GroupWord::identity();
        w.push(Syllable::A(self.lead.clone()));
        for s in &self.steps {
            w.push(Syllable::B(if s.up { 1 } else { -1 }));
            w.push(Syllable::A(BigInt::from(s.rep)));
        }
        w
    }

    /// Canonical form of `self · other`.
    pub fn mul(&self, other: &CanonicalForm) -> CanonicalForm {
        let mut builder = Builder::from_form(other);
        builder.prepend_word(&self.to_word());
        builder.finish()
    }

    /// Canonical form of `word · self`.
    pub fn left_mul_word(&self, word: &GroupWord) -> CanonicalForm {
        let mut builder = Builder::from_form(self);
        builder.prepend_word(word);
        builder.finish()
    }

    /// Canonical form of `self · word`.
    pub fn right_mul_word(&self, word: &GroupWord) -> CanonicalForm {
        let mut builder = Builder::new(self.params);
        builder.prepend_word(word);
        builder.prepend_word(&self.to_word());
        builder.finish()
    }

    pub fn inverse(&self) -> CanonicalForm {
        canonical_form(&self.to_word().inverse(), self.params)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            write!(f, "e")
        } else {
            write!(f, "{}", self.to_word())
        }
    }
}

/// Builds a normal form right to left. Prepending a letter touches only the
/// leading exponent and at most the first step, so each letter is O(1)
/// apart from big-integer work.
struct Builder {
    params: GroupParams,
    lead: BigInt,
    // steps in reverse order: the last element is the leftmost step
    rev: Vec<Step>,
}

impl Builder {
    fn new(params: GroupParams) -> Self {
        Builder {
            params,
            lead: BigInt::zero(),
            rev: Vec::new(),
        }
    }

    fn from_form(form: &CanonicalForm) -> Self {
        Builder {
            params: form.params,
            lead: form.lead.clone(),
            rev: form.steps.iter().rev().copied().collect(),
        }
    }

    fn prepend_word(&mut self, word: &GroupWord) {
        for s in word.syllables().iter().rev() {
            match s {
                Syllable::A(k) => self.lead += k,
                Syllable::B(k) => {
                    for _ in 0..k.unsigned_abs() {
                        self.prepend_b(*k > 0);
                    }
                }
            }
        }
    }

    // b a^{mt+s} = a^{nt} b a^s      and  b a^{mt} b^-1 = a^{nt}
    // b^-1 a^{nt+s} = a^{mt} b^-1 a^s  and  b^-1 a^{nt} b = a^{mt}
    fn prepend_b(&mut self, up: bool) {
        let (modulus, image) = if up {
            (self.params.m, self.params.n)
        } else {
            (self.params.n, self.params.m)
        };
        let s = self.lead.mod_floor(&BigInt::from(modulus.abs()));
        let t = (&self.lead - &s) / BigInt::from(modulus);
        let pushed = t * BigInt::from(image);
        let pinch = s.is_zero() && self.rev.last().is_some_and(|next| next.up != up);
        if pinch {
            let next = self.rev.pop().expect("checked above");
            self.lead = pushed + BigInt::from(next.rep);
        } else {
            self.rev.push(Step {
                up,
                rep: s.to_u64().expect("coset representative fits u64"),
            });
            self.lead = pushed;
        }
    }

    fn finish(mut self) -> CanonicalForm {
        self.rev.reverse();
        CanonicalForm {
            params: self.params,
            lead: self.lead,
            steps: self.rev,
        }
    }
}

pub fn canonical_form(w: &GroupWord, p: GroupParams) -> CanonicalForm {
    let mut b = Builder::new(p);
    b.prepend_word(w);
    b.finish()
}

/// Word problem: `g = h` in `BS(m,n)`.
pub fn equals(g: &GroupWord, h: &GroupWord, p: GroupParams) -> bool {
    canonical_form(g, p) == canonical_form(h, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_word;

    fn bs(m: i64, n: i64) -> GroupParams {
        GroupParams::new(m, n).unwrap()
    }

    fn nf(w: &str, p: GroupParams) -> CanonicalForm {
        canonical_form(&parse_word(w).unwrap(), p)
    }

    #[test]
    fn relation_collapses() {
        let p = bs(2, 3);
        assert_eq!(nf("baaB", p), nf("aaa", p));
        assert_eq!(nf("baaB", p).to_string(), "a^3");
    }

    #[test]
    fn bs12_moves_a_across_b_inverse() {
        let p = bs(1, 2);
        assert_eq!(nf("aB", p), nf("Baa", p));
        assert!(equals(&parse_word("aB").unwrap(), &parse_word("Ba^2").unwrap(), p));
    }

    #[test]
    fn weak_period_is_nontrivial() {
        let p = bs(2, 3);
        let per = nf("baBabABA", p);
        assert!(!per.is_identity());
        assert!(!equals(&parse_word("baBabABA").unwrap(), &GroupWord::identity(), p));
        assert!(equals(&GroupWord::identity(), &GroupWord::identity(), p));
    }

    #[test]
    fn weak_period_is_trivial_when_m_is_one() {
        // a^m collapses through b in BS(1,n), so the period degenerates
        assert!(nf("baBabABA", bs(1, 3)).is_identity());
    }

    #[test]
    fn idempotent() {
        let p = bs(2, 3);
        for w in ["baBabABA", "a^7bBa^-5b^3", "BBaaabA"] {
            let f = nf(w, p);
            assert_eq!(canonical_form(&f.to_word(), p), f);
        }
    }

    #[test]
    fn representatives_are_in_range() {
        let p = bs(2, 3);
        let f = nf("ba^5Ba^4ba^3b", p);
        for s in f.steps() {
            let bound = if s.up { 2 } else { 3 };
            assert!(s.rep < bound);
        }
    }

    #[test]
    fn negative_parameters() {
        let p = bs(-2, 3);
        let rel = p.relator();
        assert!(canonical_form(&rel, p).is_identity());
        assert_eq!(nf("ba^-2B", p), nf("a^3", p));
        let q = bs(2, -3);
        assert!(canonical_form(&q.relator(), q).is_identity());
    }

    #[test]
    fn multiplication_matches_concatenation() {
        let p = bs(2, 3);
        let g = parse_word("baBa^2").unwrap();
        let h = parse_word("Ab^2a").unwrap();
        let gh = canonical_form(&g.concat(&h), p);
        assert_eq!(canonical_form(&g, p).mul(&canonical_form(&h, p)), gh);
        assert_eq!(canonical_form(&g, p).right_mul_word(&h), gh);
        assert_eq!(canonical_form(&h, p).left_mul_word(&g), gh);
        let f = canonical_form(&g, p);
        assert!(f.mul(&f.inverse()).is_identity());
    }
}
