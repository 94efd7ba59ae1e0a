use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

/// `x ↦ slope · x` on `[base + d1/e1, base + 1 - d2/e2]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearPiece {
    #[serde(with = "rational::slash")]
    slope: Rational,
    base: i64,
    d1: u64,
    e1: u64,
    d2: u64,
    e2: u64,
}

impl LinearPiece {
    pub fn new(slope: Rational, base: i64, d1: u64, e1: u64, d2: u64, e2: u64) -> Result<Self> {
        if slope.is_zero() {
            return Err(Error::param("linear piece with zero slope"));
        }
        if e1 == 0 || e2 == 0 {
            return Err(Error::param("interval denominators must be positive"));
        }
        let piece = LinearPiece {
            slope,
            base,
            d1,
            e1,
            d2,
            e2,
        };
        if piece.lo() > piece.hi() {
            return Err(Error::param(format!(
                "empty interval [{}, {}]",
                rational::format(&piece.lo()),
                rational::format(&piece.hi())
            )));
        }
        Ok(piece)
    }

    /// Decomposes `[lo, hi] ⊆ [a, a+1]` with `a = ⌊lo⌋`.
    pub fn from_bounds(slope: Rational, lo: &Rational, hi: &Rational) -> Result<Self> {
        let a = rational::floor(lo);
        let base: i64 = a
            .clone()
            .try_into()
            .map_err(|_| Error::param("interval base out of range"))?;
        let a = Rational::from_integer(a);
        let upper = &a + Rational::one();
        if hi > &upper || lo > hi {
            return Err(Error::param(format!(
                "[{}, {}] is not inside a unit interval [a, a+1]",
                rational::format(lo),
                rational::format(hi)
            )));
        }
        let low = lo - &a;
        let high = upper - hi;
        let part = |x: &Rational| -> Result<(u64, u64)> {
            let d: u64 = x.numer().try_into().map_err(|_| Error::param("bound too large"))?;
            let e: u64 = x.denom().try_into().map_err(|_| Error::param("bound too large"))?;
            Ok((d, e))
        };
        let (d1, e1) = part(&low)?;
        let (d2, e2) = part(&high)?;
        Self::new(slope, base, d1, e1, d2, e2)
    }

    pub fn slope(&self) -> &Rational {
        &self.slope
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    /// `(d1, e1, d2, e2)`.
    pub fn window_parameters(&self) -> (u64, u64, u64, u64) {
        (self.d1, self.e1, self.d2, self.e2)
    }

    pub fn lo(&self) -> Rational {
        int(self.base) + Rational::new(BigInt::from(self.d1), BigInt::from(self.e1))
    }

    pub fn hi(&self) -> Rational {
        int(self.base + 1) - Rational::new(BigInt::from(self.d2), BigInt::from(self.e2))
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo() <= x && x <= &self.hi()
    }

    /// Whether `y` lies in the image interval `slope · [lo, hi]`.
    pub fn image_contains(&self, y: &Rational) -> bool {
        self.contains(&(y / &self.slope))
    }

    pub fn apply(&self, x: &Rational) -> Option<Rational> {
        self.contains(x).then(|| x * &self.slope)
    }

    pub fn apply_inverse(&self, y: &Rational) -> Option<Rational> {
        let x = y / &self.slope;
        self.contains(&x).then_some(x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultSystem {
    pieces: Vec<LinearPiece>,
}

impl MultSystem {
    pub fn new(pieces: Vec<LinearPiece>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::param("a multiplicative system needs at least one piece"));
        }
        Ok(MultSystem { pieces })
    }

    /// `{x ↦ 2x on [1/3, 1], x ↦ x/3 on [1, 2]}`.
    pub fn s0() -> Self {
        let f1 = LinearPiece::new(int(2), 0, 1, 3, 0, 1).expect("valid piece");
        let f2 = LinearPiece::new(rational::ratio(1, 3), 1, 0, 1, 0, 1).expect("valid piece");
        MultSystem {
            pieces: vec![f1, f2],
        }
    }

    pub fn pieces(&self) -> &[LinearPiece] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn in_domain(&self, x: &Rational) -> bool {
        self.pieces.iter().any(|p| p.contains(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn s0_intervals() {
        let s = MultSystem::s0();
        assert_eq!(s.pieces()[0].lo(), ratio(1, 3));
        assert_eq!(s.pieces()[0].hi(), int(1));
        assert_eq!(s.pieces()[1].lo(), int(1));
        assert_eq!(s.pieces()[1].hi(), int(2));
        assert_eq!(s.pieces()[0].window_parameters(), (1, 3, 0, 1));
    }

    #[test]
    fn decomposition_from_bounds() {
        let p = LinearPiece::from_bounds(int(2), &ratio(1, 3), &int(1)).unwrap();
        assert_eq!(p.base(), 0);
        assert_eq!(p.window_parameters(), (1, 3, 0, 1));
        let q = LinearPiece::from_bounds(int(1), &ratio(-3, 4), &ratio(-1, 2)).unwrap();
        assert_eq!(q.base(), -1);
        assert_eq!(q.window_parameters(), (1, 4, 1, 2));
        assert!(LinearPiece::from_bounds(int(1), &ratio(1, 2), &ratio(3, 2)).is_err());
        assert!(LinearPiece::from_bounds(int(0), &int(0), &int(1)).is_err());
    }

    #[test]
    fn degenerate_interval() {
        let p = LinearPiece::from_bounds(int(1), &int(0), &int(0)).unwrap();
        assert_eq!(p.window_parameters(), (0, 1, 1, 1));
        assert!(p.contains(&int(0)));
        assert!(!p.contains(&ratio(1, 2)));
    }
}
