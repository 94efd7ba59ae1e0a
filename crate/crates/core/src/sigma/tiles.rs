use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupParams;
use crate::subst::{sigma, Letter};
use crate::wang::{Label, Tileset, WangTile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SigmaTile {
    pub c: Letter,
    pub i: usize,
}

impl SigmaTile {
    /// Position of this tile in [`tau_sigma`].
    pub fn index(&self, n: usize) -> usize {
        self.c as usize * n + self.i
    }

    /// `bottom_j = σ_i(c)_{j-1}` for `j = 1..n`.
    pub fn to_wang(&self, n: usize) -> Result<WangTile> {
        let s = sigma(n, self.i)?;
        let color = |v: usize| Label::Color(v as i64);
        Ok(WangTile {
            top: vec![color(self.c as usize)],
            left: color(self.i),
            right: color(self.i),
            bottom: s.image(self.c).iter().map(|&b| color(b as usize)).collect(),
        })
    }
}

/// All `2n` tiles, tile `(c, i)` at index `c n + i`.
pub fn tau_sigma(n: usize) -> Result<Tileset> {
    if n < 2 {
        return Err(Error::param(format!("size {n} must be at least 2")));
    }
    let tiles = (0..2u8)
        .flat_map(|c| (0..n).map(move |i| SigmaTile { c, i }))
        .map(|t| t.to_wang(n))
        .collect::<Result<Vec<_>>>()?;
    Tileset::new(GroupParams::new(1, n as i64)?, tiles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        for n in 2..7 {
            assert_eq!(tau_sigma(n).unwrap().len(), 2 * n);
        }
        assert!(tau_sigma(1).is_err());
    }

    #[test]
    fn sample_tiles() {
        let t = SigmaTile { c: 0, i: 1 }.to_wang(3).unwrap();
        assert_eq!(t.top, vec![Label::Color(0)]);
        assert_eq!((t.left.clone(), t.right.clone()), (Label::Color(1), Label::Color(1)));
        assert_eq!(t.bottom, vec![Label::Color(0), Label::Color(1), Label::Color(0)]);
        for r in 0..4 {
            let one = SigmaTile { c: 1, i: r }.to_wang(4).unwrap();
            assert!(one.bottom.iter().all(|l| *l == Label::Color(0)));
        }
        let set = tau_sigma(3).unwrap();
        assert_eq!(set.index_of(&t), Some(SigmaTile { c: 0, i: 1 }.index(3)));
    }
}
