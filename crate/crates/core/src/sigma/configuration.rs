use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::tiles::{tau_sigma, SigmaTile};
use crate::error::{Error, Result};
use crate::group::{
    ball_with_limits, canonical_form, quasi_normal_form_1n, BallLimits, CanonicalForm, GroupParams, GroupWord,
    QuasiNormalForm,
};
use crate::subst::{fixpoint2_letter, fixpoint_letter, Letter, PointedWord, TwoCycleWord};
use crate::wang::Patch;

/// `F(k) = ⌊(k+1)/n⌋`.
pub fn f_step(n: i64, k: &BigInt) -> BigInt {
    (k + BigInt::from(1)).div_floor(&BigInt::from(n))
}

/// `R(k) = (k+1) mod n`, always in `0..n`.
pub fn r_step(n: i64, k: &BigInt) -> usize {
    (k + BigInt::from(1))
        .mod_floor(&BigInt::from(n))
        .to_usize()
        .expect("remainder below n")
}

/// `F^t(k)`.
pub fn f_iter(n: i64, k: &BigInt, t: u64) -> BigInt {
    (0..t).fold(k.clone(), |acc, _| f_step(n, &acc))
}

fn letter(n: usize, parity: u64, p: &BigInt) -> Result<Letter> {
    if n == 2 {
        let which = if parity.is_multiple_of(2) { TwoCycleWord::U } else { TwoCycleWord::V };
        Ok(fixpoint2_letter(which, p))
    } else {
        fixpoint_letter(n, p)
    }
}

/// Tile at `b^{-k} a^l b^m`: `(w_l, 1)` when `m = 0`, otherwise
/// `(w_{F^m(l)}, R(F^{m-1}(l)))`, where `w` is the `σ_1` fixpoint. For
/// `n = 2` the word is `u` when `k + m` is even and `v` when odd.
pub fn explicit_tile_qnf(n: usize, g: &QuasiNormalForm) -> Result<SigmaTile> {
    if n < 2 {
        return Err(Error::param(format!("size {n} must be at least 2")));
    }
    let nn = n as i64;
    let parity = g.down + g.up;
    if g.up == 0 {
        return Ok(SigmaTile {
            c: letter(n, parity, &g.power)?,
            i: 1,
        });
    }
    let inner = f_iter(nn, &g.power, g.up - 1);
    Ok(SigmaTile {
        c: letter(n, parity, &f_step(nn, &inner))?,
        i: r_step(nn, &inner),
    })
}

pub fn explicit_tile(n: usize, g: &GroupWord) -> Result<SigmaTile> {
    explicit_tile_qnf(n, &quasi_normal_form_1n(g, n as i64)?)
}

fn tile_at(n: usize, g: &CanonicalForm) -> Result<SigmaTile> {
    explicit_tile(n, &g.to_word())
}

fn ball_for(n: usize, radius: u32) -> Result<Vec<CanonicalForm>> {
    let env = BallLimits::from_env();
    let limits = BallLimits {
        max_radius: env.max_radius.max(radius),
        ..env
    };
    ball_with_limits(GroupParams::new(1, n as i64)?, radius, limits)
}

/// The explicit configuration on the ball of the given radius. For `n = 2`
/// this is the alternating `u`/`v` construction.
pub fn explicit_patch(n: usize, radius: u32) -> Result<Patch> {
    let mut patch = Patch::new(tau_sigma(n)?);
    for g in ball_for(n, radius)? {
        let t = tile_at(n, &g)?;
        patch.insert(g, t.index(n))?;
    }
    Ok(patch)
}

pub fn explicit_patch_n2(radius: u32) -> Result<Patch> {
    explicit_patch(2, radius)
}

/// Some `g` in the ball with `tile(period · g) != tile(g)`.
pub fn periodicity_counterexample(n: usize, period: &GroupWord, radius: u32) -> Result<Option<CanonicalForm>> {
    let shift = canonical_form(period, GroupParams::new(1, n as i64)?);
    for g in ball_for(n, radius)? {
        if tile_at(n, &shift.mul(&g))? != tile_at(n, &g)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// `tile(period · g) = tile(g)` for every `g` in the ball.
pub fn b_periodicity_check(n: usize, period: &GroupWord, radius: u32) -> Result<bool> {
    Ok(periodicity_counterexample(n, period, radius)?.is_none())
}

/// For a period `k`: the first `(level, position)` where the level word
/// breaks `k`-periodicity, or `None` when the scanned windows are
/// consistent with it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodReport {
    pub k: usize,
    pub witness: Option<(usize, i64)>,
}

/// Scans each word for a break of every period `1..=k_max`.
pub fn a_period_witnesses(levels: &[PointedWord], k_max: usize) -> Vec<PeriodReport> {
    (1..=k_max)
        .map(|k| {
            let witness = levels.iter().enumerate().find_map(|(d, w)| {
                let letters = w.letters();
                (0..letters.len().saturating_sub(k))
                    .find(|&i| letters[i] != letters[i + k])
                    .map(|i| (d, i as i64 + w.start()))
            });
            PeriodReport { k, witness }
        })
        .collect()
}

/// Reads the top words of the levels through `b^d`, `d = 0..level_depth`,
/// on positions `-window/2..window/2`, and looks for breaks of every period
/// `1..=k_max`.
pub fn a_period_falsification(n: usize, k_max: usize, level_depth: u64, window: usize) -> Result<Vec<PeriodReport>> {
    if k_max == 0 {
        return Err(Error::param("periods start at 1"));
    }
    let half = (window / 2) as i64;
    let nn = BigInt::from(n);
    let mut levels = Vec::new();
    for d in 0..level_depth.max(1) {
        let scale = num_traits::pow(nn.clone(), d as usize);
        let top = |j: i64| -> Result<Letter> {
            // b^d a^j = a^{j n^d} b^d
            let g = QuasiNormalForm::new(0, BigInt::from(j) * &scale, d);
            Ok(explicit_tile_qnf(n, &g)?.c)
        };
        let left = (-half..0).map(top).collect::<Result<Vec<_>>>()?;
        let right = (0..half).map(top).collect::<Result<Vec<_>>>()?;
        levels.push(PointedWord { left, right });
    }
    Ok(a_period_witnesses(&levels, k_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_word;
    use crate::subst::fixpoint_window;
    use crate::wang::verify_patch;

    #[test]
    fn f_and_r() {
        for n in 2..6i64 {
            for k in -200..200i64 {
                let kb = BigInt::from(k);
                assert_eq!(BigInt::from(n) * f_step(n, &kb) + BigInt::from(r_step(n, &kb)), &kb + 1);
                assert_eq!(f_step(n, &(&kb + n)), f_step(n, &kb) + 1);
                assert_eq!(f_step(n, &(&kb * n)), kb);
            }
        }
        assert_eq!(f_step(3, &BigInt::from(-1)), BigInt::from(0));
        assert_eq!(f_step(3, &BigInt::from(-2)), BigInt::from(-1));
        assert_eq!(r_step(3, &BigInt::from(-2)), 2);
    }

    #[test]
    fn sample_tiles() {
        let w = fixpoint_window(3, 20).unwrap();
        for l in -5..5i64 {
            let t = explicit_tile(3, &GroupWord::a(l)).unwrap();
            assert_eq!((Some(t.c), t.i), (w.get(l), 1));
        }
        let b = explicit_tile(3, &parse_word("b").unwrap()).unwrap();
        assert_eq!(b, SigmaTile { c: 0, i: 1 });
    }

    #[test]
    fn equivalent_forms_agree() {
        for n in 2..5usize {
            for (k, l, m) in [(0u64, 7i64, 2u64), (1, -4, 0), (2, 11, 3), (0, 0, 0), (3, -13, 1)] {
                let g = QuasiNormalForm::new(k, l, m);
                for t in 1..4 {
                    assert_eq!(
                        explicit_tile_qnf(n, &g).unwrap(),
                        explicit_tile_qnf(n, &g.inflate(n as i64, t)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn patches_are_valid() {
        for n in [2, 3, 4] {
            let x = explicit_patch(n, 4).unwrap();
            assert!(verify_patch(&x).is_empty(), "n = {n}");
        }
        assert_eq!(explicit_patch(3, 0).unwrap().len(), 1);
    }

    #[test]
    fn periods() {
        let b = parse_word("b").unwrap();
        let bb = parse_word("bb").unwrap();
        assert!(b_periodicity_check(3, &b, 4).unwrap());
        assert!(!b_periodicity_check(3, &GroupWord::a(1), 4).unwrap());
        assert!(b_periodicity_check(2, &bb, 4).unwrap());
        assert!(periodicity_counterexample(2, &b, 4).unwrap().is_some());
    }

    #[test]
    fn falsification() {
        let reports = a_period_falsification(3, 20, 2, 200).unwrap();
        assert!(reports.iter().all(|r| r.witness.is_some()));
        let constant: PointedWord = "0000|0000".parse().unwrap();
        assert!(a_period_witnesses(&[constant], 3).iter().all(|r| r.witness.is_none()));
        assert!(a_period_falsification(3, 0, 1, 10).is_err());
    }
}
