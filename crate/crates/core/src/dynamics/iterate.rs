use std::collections::BTreeSet;

use super::MultSystem;
use crate::error::{Error, Result};
use crate::rational::{fractions_in, Rational};

/// Caps for set-valued iteration. Exceeding either is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IterationLimits {
    pub max_steps: u32,
    pub max_set: usize,
}

impl Default for IterationLimits {
    fn default() -> Self {
        IterationLimits {
            max_steps: 256,
            max_set: 10_000,
        }
    }
}

/// `{q_i x : x ∈ I_i}`.
pub fn image(s: &MultSystem, x: &Rational) -> BTreeSet<Rational> {
    s.pieces().iter().filter_map(|p| p.apply(x)).collect()
}

fn preimage(s: &MultSystem, y: &Rational) -> BTreeSet<Rational> {
    s.pieces().iter().filter_map(|p| p.apply_inverse(y)).collect()
}

fn step(
    s: &MultSystem,
    set: &BTreeSet<Rational>,
    forward: bool,
    limits: IterationLimits,
) -> Result<BTreeSet<Rational>> {
    let mut out = BTreeSet::new();
    for x in set {
        let next = if forward { image(s, x) } else { preimage(s, x) };
        out.extend(next);
        if out.len() > limits.max_set {
            return Err(Error::ResourceLimit(format!(
                "iteration set exceeds {} elements",
                limits.max_set
            )));
        }
    }
    Ok(out)
}

pub fn iterate(s: &MultSystem, x: &Rational, k: i64) -> Result<BTreeSet<Rational>> {
    iterate_with_limits(s, x, k, IterationLimits::default())
}

/// `S^k(x)`: all values reachable by `k` applications of pieces (inverse
/// pieces when `k < 0`), each application staying inside its interval.
pub fn iterate_with_limits(
    s: &MultSystem,
    x: &Rational,
    k: i64,
    limits: IterationLimits,
) -> Result<BTreeSet<Rational>> {
    if k.unsigned_abs() > limits.max_steps as u64 {
        return Err(Error::ResourceLimit(format!(
            "|k| = {} exceeds {} steps",
            k.unsigned_abs(),
            limits.max_steps
        )));
    }
    let mut set = BTreeSet::from([x.clone()]);
    for _ in 0..k.unsigned_abs() {
        set = step(s, &set, k > 0, limits)?;
        if set.is_empty() {
            break;
        }
    }
    Ok(set)
}

/// Bounded immortality check: `S^k(x) ∩ ⋃ I_i ≠ ∅` for every `|k| <= horizon`.
pub fn is_immortal_up_to(s: &MultSystem, x: &Rational, horizon: u32) -> Result<bool> {
    if !s.in_domain(x) {
        return Ok(false);
    }
    let limits = IterationLimits::default();
    for forward in [true, false] {
        let mut set = BTreeSet::from([x.clone()]);
        for _ in 0..horizon {
            set = step(s, &set, forward, limits)?;
            set.retain(|y| s.in_domain(y));
            if set.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Rationals `p/q ∈ ⋃ I_i` with `q <= max_den` such that `x ∈ S^k(x)` for
/// some `1 <= k <= max_period`, each reported with its least such `k`.
/// Sorted by denominator, then numerator.
pub fn periodic_point_search(
    s: &MultSystem,
    max_den: u64,
    max_period: u32,
) -> Result<Vec<(Rational, u32)>> {
    if max_den == 0 || max_period == 0 {
        return Err(Error::param("denominator and period bounds must be >= 1"));
    }
    let mut candidates = BTreeSet::new();
    for p in s.pieces() {
        candidates.extend(fractions_in(&p.lo(), &p.hi(), max_den));
    }
    let mut ordered: Vec<Rational> = candidates.into_iter().collect();
    ordered.sort_by(|a, b| (a.denom(), a.numer()).cmp(&(b.denom(), b.numer())));

    let limits = IterationLimits::default();
    let mut out = Vec::new();
    for x in ordered {
        let mut set = BTreeSet::from([x.clone()]);
        for k in 1..=max_period {
            set = step(s, &set, true, limits)?;
            if set.contains(&x) {
                out.push((x.clone(), k));
                break;
            }
            set.retain(|y| s.in_domain(y));
            if set.is_empty() {
                break;
            }
        }
    }
    Ok(out)
}
