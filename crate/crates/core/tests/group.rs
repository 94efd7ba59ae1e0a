use std::collections::BTreeSet;

use bs_tiling::group::{
    alpha, ball, canonical_form, equals, height, lambda, parse_word, quasi_normal_form_1n, GroupParams, GroupWord,
    QuasiNormalForm, Syllable,
};
use bs_tiling::rational::{int, ratio, Rational};
use num_traits::Zero;
use proptest::prelude::*;

/// Letters as (is_b, exponent) with unit b letters and merged a runs.
fn letters_of(w: &GroupWord) -> Vec<(bool, i64)> {
    let mut out = Vec::new();
    for s in w.syllables() {
        match s {
            Syllable::A(k) => out.push((false, i64::try_from(k.clone()).unwrap())),
            Syllable::B(k) => {
                for _ in 0..k.unsigned_abs() {
                    out.push((true, k.signum()));
                }
            }
        }
    }
    out
}

fn push(out: &mut Vec<(bool, i64)>, (b, e): (bool, i64)) {
    if let Some(last) = out.last_mut() {
        if !b && !last.0 {
            last.1 += e;
            if last.1 == 0 {
                out.pop();
            }
            return;
        }
        if b && last.0 && last.1 == -e {
            out.pop();
            return;
        }
    }
    if e != 0 {
        out.push((b, e));
    }
}

/// Word problem by Britton's lemma: remove pinches `b a^{km} b^-1 -> a^{kn}`
/// and `b^-1 a^{kn} b -> a^{km}` until none is left.
fn britton_is_identity(w: &GroupWord, m: i64, n: i64) -> bool {
    let mut cur = letters_of(w);
    loop {
        let mut reduced = Vec::new();
        for l in cur.iter().copied() {
            push(&mut reduced, l);
        }
        cur = reduced;
        let mut changed = false;
        let mut i = 0;
        while i < cur.len() {
            // b^e a^k b^-e or b^e b^-e
            if cur[i].0 && i + 2 < cur.len() && !cur[i + 1].0 && cur[i + 2].0 && cur[i + 2].1 == -cur[i].1 {
                let k = cur[i + 1].1;
                let (from, to) = if cur[i].1 > 0 { (m, n) } else { (n, m) };
                if k % from == 0 {
                    cur.splice(i..i + 3, [(false, k / from * to)]);
                    changed = true;
                    break;
                }
            }
            i += 1;
        }
        if !changed {
            return cur.is_empty();
        }
    }
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec(0u8..4, 0..max_len).prop_map(|v| {
        GroupWord::from_syllables(v.into_iter().map(|c| match c {
            0 => Syllable::a(1),
            1 => Syllable::a(-1),
            2 => Syllable::B(1),
            _ => Syllable::B(-1),
        }))
    })
}

fn all_words(len: usize) -> Vec<GroupWord> {
    let mut out = vec![GroupWord::identity()];
    let mut layer = vec![GroupWord::identity()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for g in [GroupWord::a(1), GroupWord::a(-1), GroupWord::b(1), GroupWord::b(-1)] {
                next.push(w.concat(&g));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Number of distinct elements among the words, deciding equality with the
/// Britton oracle.
fn count_distinct(words: &[GroupWord], m: i64, n: i64) -> usize {
    let mut reps: Vec<GroupWord> = Vec::new();
    for w in words {
        if !reps.iter().any(|r| britton_is_identity(&w.concat(&r.inverse()), m, n)) {
            reps.push(w.clone());
        }
    }
    reps.len()
}

#[test]
fn oracle_sanity() {
    let p = GroupParams::new(2, 3).unwrap();
    assert!(britton_is_identity(&p.relator(), 2, 3));
    assert!(!britton_is_identity(&parse_word("baBabABA").unwrap(), 2, 3));
    assert!(britton_is_identity(&parse_word("baBabABA").unwrap(), 1, 2));
}

// Values below come from `count_distinct` over all words of length <= 4.
const BALL4_BS23: usize = 147;
const BALL4_BS12: usize = 93;

#[test]
fn ball_cardinalities_match_oracle() {
    let words = all_words(4);
    assert_eq!(count_distinct(&words, 2, 3), BALL4_BS23);
    assert_eq!(count_distinct(&words, 1, 2), BALL4_BS12);
    assert_eq!(ball(GroupParams::new(2, 3).unwrap(), 4).unwrap().len(), BALL4_BS23);
    assert_eq!(ball(GroupParams::new(1, 2).unwrap(), 4).unwrap().len(), BALL4_BS12);
}

#[test]
fn ball_elements_are_distinct_by_oracle() {
    let p = GroupParams::new(2, 3).unwrap();
    let elems = ball(p, 3).unwrap();
    for (i, g) in elems.iter().enumerate() {
        for h in &elems[..i] {
            assert!(!britton_is_identity(&g.to_word().concat(&h.to_word().inverse()), 2, 3));
        }
    }
}

#[test]
fn frozen_examples() {
    let p = GroupParams::new(2, 3).unwrap();
    assert_eq!(alpha(&parse_word("ba").unwrap(), p), ratio(3, 2));
    assert_eq!(alpha(&parse_word("baBabABA").unwrap(), p), Rational::zero());
    assert_eq!(height(&parse_word("baBabABA").unwrap()), 0);
    assert_eq!(
        quasi_normal_form_1n(&parse_word("aB").unwrap(), 2).unwrap(),
        QuasiNormalForm::new(1, 2, 0)
    );
    assert_eq!(
        quasi_normal_form_1n(&parse_word("ba").unwrap(), 3).unwrap(),
        QuasiNormalForm::new(0, 3, 1)
    );
}

/// `a ↦ x + 1`, `b ↦ n x` as exact affine maps `(scale, shift)`; faithful on BS(1,n).
fn affine(w: &GroupWord, n: i64) -> (Rational, Rational) {
    let mut scale = int(1);
    let mut shift = int(0);
    // compose left to right: g h acts as g ∘ h
    for s in w.letters().iter().rev() {
        match s {
            Syllable::A(k) => shift += Rational::from_integer(k.clone()),
            Syllable::B(k) => {
                let f = if *k > 0 { int(n) } else { ratio(1, n) };
                scale *= &f;
                shift *= &f;
            }
        }
    }
    (scale, shift)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_form_decides_equality(u in word_strategy(12), v in word_strategy(12)) {
        for (m, n) in [(2, 3), (1, 2), (3, 2), (2, 2)] {
            let p = GroupParams::new(m, n).unwrap();
            let oracle = britton_is_identity(&u.concat(&v.inverse()), m, n);
            prop_assert_eq!(equals(&u, &v, p), oracle);
        }
    }

    #[test]
    fn bs1n_agrees_with_affine_action(u in word_strategy(10), v in word_strategy(10)) {
        for n in [2, 3] {
            let p = GroupParams::new(1, n).unwrap();
            prop_assert_eq!(equals(&u, &v, p), affine(&u, n) == affine(&v, n));
        }
    }

    #[test]
    fn relator_insertion(w in word_strategy(14), c in word_strategy(4), at in 0usize..20, inverse: bool) {
        for (m, n) in [(2, 3), (1, 2)] {
            let p = GroupParams::new(m, n).unwrap();
            let r = if inverse { p.relator().inverse() } else { p.relator() };
            let v = w.insert_at(at, &c.concat(&r).concat(&c.inverse()));
            prop_assert_eq!(canonical_form(&v, p), canonical_form(&w, p));
            prop_assert_eq!(alpha(&v, p), alpha(&w, p));
        }
    }

    #[test]
    fn lambda_steps(w in word_strategy(12)) {
        let p = GroupParams::new(2, 3).unwrap();
        let l = lambda(&w, p);
        prop_assert_eq!(lambda(&w.concat(&GroupWord::a(2)), p), &l + int(1));
        prop_assert_eq!(lambda(&w.concat(&GroupWord::b(1)), p), &l * ratio(2, 3));
    }

    #[test]
    fn multiplication_is_associative(u in word_strategy(8), v in word_strategy(8), w in word_strategy(8)) {
        let p = GroupParams::new(2, 3).unwrap();
        let (a, b, c) = (canonical_form(&u, p), canonical_form(&v, p), canonical_form(&w, p));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_identity());
        prop_assert_eq!(canonical_form(&a.to_word(), p), a.clone());
    }

    #[test]
    fn quasi_normal_form_round_trip(w in word_strategy(14)) {
        for n in [2i64, 3, 5] {
            let p = GroupParams::new(1, n).unwrap();
            let q = quasi_normal_form_1n(&w, n).unwrap();
            prop_assert!(equals(&q.to_word(), &w, p));
            prop_assert_eq!(q.up as i64 - q.down as i64, height(&w));
            prop_assert!(!q.power.is_zero() || q.to_word().syllables().iter().all(|s| matches!(s, Syllable::B(_))));
        }
    }
}

#[test]
fn distinct_words_in_small_ball() {
    let p = GroupParams::new(2, 3).unwrap();
    let set: BTreeSet<_> = all_words(3).iter().map(|w| canonical_form(w, p)).collect();
    assert_eq!(set.len(), ball(p, 3).unwrap().len());
}
