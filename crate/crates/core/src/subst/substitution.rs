use std::fmt;

use super::word::{Letter, PointedWord};
use crate::error::{Error, Result};

/// A substitution on `{0, 1}` whose two images have the same length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniformSubstitution {
    images: [Vec<Letter>; 2],
}

impl UniformSubstitution {
    pub fn new(zero: Vec<Letter>, one: Vec<Letter>) -> Result<Self> {
        if zero.len() != one.len() || zero.is_empty() {
            return Err(Error::param("images must be nonempty and of equal length"));
        }
        if zero.iter().chain(&one).any(|&c| c > 1) {
            return Err(Error::param("images must be words over {0, 1}"));
        }
        Ok(UniformSubstitution { images: [zero, one] })
    }

    /// Length of each image.
    pub fn size(&self) -> usize {
        self.images[0].len()
    }

    pub fn image(&self, c: Letter) -> &[Letter] {
        &self.images[c as usize]
    }

    pub fn apply(&self, w: &[Letter]) -> Vec<Letter> {
        w.iter().flat_map(|&c| self.image(c).iter().copied()).collect()
    }

    /// Image of a pointed word: the image of the letter at position `j`
    /// occupies positions `n j .. n j + n - 1`.
    pub fn apply_pointed(&self, u: &PointedWord) -> PointedWord {
        PointedWord {
            left: self.apply(&u.left),
            right: self.apply(&u.right),
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &UniformSubstitution) -> UniformSubstitution {
        UniformSubstitution {
            images: [self.apply(inner.image(0)), self.apply(inner.image(1))],
        }
    }

    pub fn power(&self, t: u32) -> UniformSubstitution {
        let mut out = UniformSubstitution {
            images: [vec![0], vec![1]],
        };
        for _ in 0..t {
            out = self.compose(&out);
        }
        out
    }

    /// `s^t(c)` without materializing the power substitution.
    pub fn iterate_letter(&self, c: Letter, t: u32) -> Vec<Letter> {
        let mut w = vec![c];
        for _ in 0..t {
            w = self.apply(&w);
        }
        w
    }
}

impl fmt::Display for UniformSubstitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |w: &[Letter]| -> String { w.iter().map(|&c| char::from(b'0' + c)).collect() };
        write!(f, "0 -> {}, 1 -> {}", show(&self.images[0]), show(&self.images[1]))
    }
}

/// `σ_r`: `0 ↦ 0^{n-r-1} 1 0^r`, `1 ↦ 0^n`.
pub fn sigma(n: usize, r: usize) -> Result<UniformSubstitution> {
    if n < 2 {
        return Err(Error::param(format!("size {n} must be at least 2")));
    }
    if r >= n {
        return Err(Error::param(format!("shift index {r} must be below {n}")));
    }
    let mut zero = vec![0; n];
    zero[n - r - 1] = 1;
    Ok(UniformSubstitution {
        images: [zero, vec![0; n]],
    })
}
