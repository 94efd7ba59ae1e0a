//! Elements of the Baumslag-Solitar group `BS(m,n) = <a, b | b a^m b^-1 = a^n>`.
//!
//! Words are parsed into run-length [`GroupWord`]s and reduced to a unique
//! [`CanonicalForm`] (Britton pinch reduction plus coset normalisation), which
//! solves the word problem. The real-valued maps used by the multiplying
//! tilesets ([`alpha`], [`lambda`], [`phi_embed`]) are evaluated exactly.

mod ball;
mod maps;
mod normal_form;
mod qnf;
mod word;

pub use ball::{ball, ball_with_limits, BallLimits};
pub use maps::{alpha, alpha_form, height, lambda, lambda_form, phi_embed};
pub use normal_form::{canonical_form, equals, CanonicalForm, Step};
pub use qnf::{quasi_normal_form_1n, QuasiNormalForm};
pub use word::{parse_word, Generator, GroupWord, Syllable};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters `(m, n)` of `BS(m,n)`; both nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupParams {
    m: i64,
    n: i64,
}

impl GroupParams {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::param(format!("BS({m},{n}): parameters must be nonzero")));
        }
        Ok(GroupParams { m, n })
    }

    /// Tileset constructions only make sense for positive parameters.
    pub fn positive(m: i64, n: i64) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::param(format!(
                "BS({m},{n}): tilesets require m, n >= 1"
            )));
        }
        Self::new(m, n)
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub(crate) fn require_positive(&self) -> Result<()> {
        if self.m < 1 || self.n < 1 {
            return Err(Error::param(format!(
                "BS({},{}): tilesets require m, n >= 1",
                self.m, self.n
            )));
        }
        Ok(())
    }

    /// The relator `b a^m b^-1 a^-n` as a word.
    pub fn relator(&self) -> GroupWord {
        GroupWord::from_syllables(vec![
            Syllable::B(1),
            Syllable::a(self.m),
            Syllable::B(-1),
            Syllable::a(-self.n),
        ])
    }
}

impl std::fmt::Display for GroupParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BS({},{})", self.m, self.n)
    }
}
