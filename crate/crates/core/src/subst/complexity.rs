use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use super::fixpoint::{seeded_window, FixpointSeed};
use super::substitution::UniformSubstitution;
use super::word::{Letter, PointedWord};
use crate::error::{Error, Result};

/// `counts[k - 1]` is the number of distinct factors of length `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexityProfile {
    pub counts: Vec<usize>,
}

impl ComplexityProfile {
    pub fn get(&self, k: usize) -> Option<usize> {
        k.checked_sub(1).and_then(|i| self.counts.get(i)).copied()
    }

    pub fn max_len(&self) -> usize {
        self.counts.len()
    }
}

fn count_factors(words: &[&[Letter]], max_len: usize) -> Vec<usize> {
    (1..=max_len)
        .map(|k| {
            let mut seen: HashSet<&[Letter]> = HashSet::new();
            for w in words {
                if w.len() >= k {
                    seen.extend(w.windows(k));
                }
            }
            seen.len()
        })
        .collect()
}

/// Distinct factors of each length `1..=max_len` inside the window.
pub fn factor_complexity(w: &PointedWord, max_len: usize) -> Result<ComplexityProfile> {
    if max_len == 0 || max_len > w.len() {
        return Err(Error::param(format!(
            "factor length {max_len} must be between 1 and the window length {}",
            w.len()
        )));
    }
    let letters = w.letters();
    Ok(ComplexityProfile {
        counts: count_factors(&[&letters], max_len),
    })
}

/// Iterations of the substitution after which the factor counts stopped
/// changing, and the half-length of the window they were read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Stabilization {
    pub iterations: u32,
    pub half_length: usize,
}

/// Factor counts of the fixpoint seeded by `seed`, read from the windows
/// `s^t(left) . s^t(right)` for growing `t` until two consecutive windows
/// give the same counts.
pub fn fixpoint_complexity(
    s: &UniformSubstitution,
    seed: FixpointSeed,
    max_len: usize,
    max_iterations: u32,
) -> Result<(ComplexityProfile, Stabilization)> {
    if max_len == 0 {
        return Err(Error::param("factor length must be positive"));
    }
    let size = s.size();
    let mut previous: Option<Vec<usize>> = None;
    let mut half = size;
    for t in 1..=max_iterations {
        if 2 * half >= max_len {
            let w = seeded_window(s, seed, half)?;
            let counts = factor_complexity(&w, max_len)?.counts;
            if previous.as_ref() == Some(&counts) {
                return Ok((
                    ComplexityProfile { counts },
                    Stabilization {
                        iterations: t,
                        half_length: half,
                    },
                ));
            }
            previous = Some(counts);
        }
        half = half
            .checked_mul(size)
            .ok_or_else(|| Error::ResourceLimit("window length overflow".into()))?;
    }
    Err(Error::Inconclusive(format!(
        "factor counts up to length {max_len} still changing after {max_iterations} iterations"
    )))
}

/// Exact factor counts of the fixpoint seeded by `seed`. Every factor of
/// length `k` lies in `s^t(a) s^t(b)` for a two-letter factor `ab` once
/// `size^t >= k - 1`, and the two-letter factors are the closure of the seed
/// pair under taking two-letter factors of images.
pub fn fixpoint_language_complexity(
    s: &UniformSubstitution,
    seed: FixpointSeed,
    max_len: usize,
) -> Result<ComplexityProfile> {
    if max_len == 0 {
        return Err(Error::param("factor length must be positive"));
    }
    if s.size() < 2 {
        return Err(Error::param("substitution size must be at least 2"));
    }
    // validates the seed
    seeded_window(s, seed, 1)?;
    let mut pairs: BTreeSet<(Letter, Letter)> = BTreeSet::from([(seed.left, seed.right)]);
    let mut queue = vec![(seed.left, seed.right)];
    while let Some((a, b)) = queue.pop() {
        let image = s.apply(&[a, b]);
        for w in image.windows(2) {
            if pairs.insert((w[0], w[1])) {
                queue.push((w[0], w[1]));
            }
        }
    }
    let mut t = 0;
    let mut block = 1usize;
    while block + 1 < max_len {
        block *= s.size();
        t += 1;
    }
    let words: Vec<Vec<Letter>> = pairs
        .iter()
        .map(|&(a, b)| {
            let mut w = s.iterate_letter(a, t);
            w.extend(s.iterate_letter(b, t));
            w
        })
        .collect();
    let slices: Vec<&[Letter]> = words.iter().map(|w| w.as_slice()).collect();
    Ok(ComplexityProfile {
        counts: count_factors(&slices, max_len),
    })
}

/// First window position `p` with `w_p != w_{p+k}`, if any.
pub fn period_witness(w: &PointedWord, k: usize) -> Result<Option<i64>> {
    if k == 0 {
        return Err(Error::param("period must be at least 1"));
    }
    if w.len() < 2 * k {
        return Err(Error::param(format!(
            "a window of {} letters cannot test period {k}",
            w.len()
        )));
    }
    let letters = w.letters();
    Ok((0..letters.len() - k)
        .find(|&i| letters[i] != letters[i + k])
        .map(|i| i as i64 + w.start()))
}

/// `w_{i+k} = w_i` throughout the window.
pub fn is_k_periodic(w: &PointedWord, k: usize) -> Result<bool> {
    Ok(period_witness(w, k)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subst::{fixpoint_window, sigma};

    #[test]
    fn simple_words() {
        let zeros: PointedWord = "0000|0000".parse().unwrap();
        assert_eq!(factor_complexity(&zeros, 5).unwrap().counts, vec![1; 5]);
        let alternating: PointedWord = "010101|010101".parse().unwrap();
        assert_eq!(factor_complexity(&alternating, 6).unwrap().counts, vec![2; 6]);
        assert!(factor_complexity(&zeros, 9).is_err());
    }

    #[test]
    fn periodicity() {
        let alternating: PointedWord = "0101|0101".parse().unwrap();
        assert!(is_k_periodic(&alternating, 2).unwrap());
        assert!(!is_k_periodic(&alternating, 1).unwrap());
        assert_eq!(period_witness(&alternating, 1).unwrap(), Some(-4));
        assert!(is_k_periodic(&alternating, 8).is_err());
        assert!(is_k_periodic(&alternating, 0).is_err());
        let w = fixpoint_window(3, 300).unwrap();
        assert!((1..=50).all(|k| !is_k_periodic(&w, k).unwrap()));
    }

    #[test]
    fn window_and_closure_agree() {
        for n in 3..6 {
            let s = sigma(n, 1).unwrap();
            let seed = FixpointSeed { left: 0, right: 0 };
            let (window, cert) = fixpoint_complexity(&s, seed, 20, 12).unwrap();
            assert!(cert.iterations >= 2);
            let exact = fixpoint_language_complexity(&s, seed, 20).unwrap();
            assert_eq!(window, exact);
            assert!((1..=20).all(|k| exact.get(k).unwrap() > k));
        }
    }

    #[test]
    fn profile_shape() {
        let s = sigma(3, 1).unwrap();
        let p = fixpoint_language_complexity(&s, FixpointSeed { left: 0, right: 0 }, 25).unwrap();
        for k in 1..25 {
            let (a, b) = (p.get(k).unwrap(), p.get(k + 1).unwrap());
            assert!(a <= b && b <= 2 * a);
        }
    }
}
