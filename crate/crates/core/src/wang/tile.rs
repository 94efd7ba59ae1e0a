use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::Label;
use crate::error::{Error, Result};
use crate::group::GroupParams;
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WangTile {
    pub top: Vec<Label>,
    pub left: Label,
    pub right: Label,
    pub bottom: Vec<Label>,
}

impl WangTile {
    pub fn fits(&self, p: GroupParams) -> bool {
        self.top.len() as i64 == p.m() && self.bottom.len() as i64 == p.n()
    }
}

/// A finite set of tiles for one group, without duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tileset {
    params: GroupParams,
    tiles: Vec<WangTile>,
    index: HashMap<WangTile, usize>,
}

impl Tileset {
    pub fn new(params: GroupParams, tiles: Vec<WangTile>) -> Result<Self> {
        params.require_positive()?;
        let mut index = HashMap::with_capacity(tiles.len());
        for (i, t) in tiles.iter().enumerate() {
            if !t.fits(params) {
                return Err(Error::param(format!(
                    "tile {i} has {} top / {} bottom labels, {params} needs {} / {}",
                    t.top.len(),
                    t.bottom.len(),
                    params.m(),
                    params.n()
                )));
            }
            if index.insert(t.clone(), i).is_some() {
                return Err(Error::param(format!("duplicate tile at index {i}")));
            }
        }
        Ok(Tileset {
            params,
            tiles,
            index,
        })
    }

    /// Deduplicates and sorts.
    pub fn from_set(params: GroupParams, tiles: impl IntoIterator<Item = WangTile>) -> Result<Self> {
        let set: BTreeSet<WangTile> = tiles.into_iter().collect();
        Self::new(params, set.into_iter().collect())
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn tiles(&self) -> &[WangTile] {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&WangTile> {
        self.tiles.get(i)
    }

    pub fn index_of(&self, t: &WangTile) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn contains(&self, t: &WangTile) -> bool {
        self.index.contains_key(t)
    }

    /// Appends `t` unless already present; returns its index.
    pub fn insert(&mut self, t: WangTile) -> Result<usize> {
        if let Some(i) = self.index_of(&t) {
            return Ok(i);
        }
        if !t.fits(self.params) {
            return Err(Error::param("tile does not fit group parameters"));
        }
        let i = self.tiles.len();
        self.index.insert(t.clone(), i);
        self.tiles.push(t);
        Ok(i)
    }
}

fn numeric(l: &Label) -> Result<&Rational> {
    l.value()
        .ok_or_else(|| Error::LabelType(format!("label {l} has no numeric value")))
}

/// `q (t_1+…+t_m)/m + l - (b_1+…+b_n)/n - r` for one tile.
pub fn multiplies_residual(t: &WangTile, q: &Rational) -> Result<Rational> {
    let m = int(t.top.len() as i64);
    let n = int(t.bottom.len() as i64);
    let mut top = Rational::from_integer(0.into());
    for l in &t.top {
        top += numeric(l)?;
    }
    let mut bottom = Rational::from_integer(0.into());
    for l in &t.bottom {
        bottom += numeric(l)?;
    }
    Ok(q * top / m + numeric(&t.left)? - bottom / n - numeric(&t.right)?)
}

/// True iff every tile satisfies `q·mean(top) + left = mean(bottom) + right`.
pub fn check_multiplies(t: &Tileset, q: &Rational) -> Result<bool> {
    for tile in t.tiles() {
        if !num_traits::Zero::is_zero(&multiplies_residual(tile, q)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn zero_tile() -> WangTile {
        WangTile {
            top: vec![Label::int(0); 2],
            left: Label::int(0),
            right: Label::int(0),
            bottom: vec![Label::int(0); 3],
        }
    }

    #[test]
    fn all_zero_tiles_multiply_by_anything() {
        let p = GroupParams::new(2, 3).unwrap();
        let t = Tileset::new(p, vec![zero_tile()]).unwrap();
        for q in [ratio(2, 1), ratio(-7, 3), ratio(1, 5)] {
            assert!(check_multiplies(&t, &q).unwrap());
        }
    }

    #[test]
    fn perturbed_right_label_fails() {
        let p = GroupParams::new(2, 3).unwrap();
        let mut tile = zero_tile();
        tile.right = Label::int(1);
        let t = Tileset::new(p, vec![tile]).unwrap();
        assert!(!check_multiplies(&t, &ratio(2, 1)).unwrap());
    }

    #[test]
    fn colors_are_a_type_error() {
        let p = GroupParams::new(1, 2).unwrap();
        let tile = WangTile {
            top: vec![Label::Color(0)],
            left: Label::Color(1),
            right: Label::Color(1),
            bottom: vec![Label::Color(0), Label::Color(1)],
        };
        let t = Tileset::new(p, vec![tile]).unwrap();
        assert!(matches!(check_multiplies(&t, &ratio(1, 1)), Err(Error::LabelType(_))));
    }

    #[test]
    fn rejects_duplicates_and_bad_shapes() {
        let p = GroupParams::new(2, 3).unwrap();
        assert!(Tileset::new(p, vec![zero_tile(), zero_tile()]).is_err());
        let q = GroupParams::new(3, 3).unwrap();
        assert!(Tileset::new(q, vec![zero_tile()]).is_err());
        assert_eq!(Tileset::from_set(p, vec![zero_tile(), zero_tile()]).unwrap().len(), 1);
        let neg = GroupParams::new(-2, 3).unwrap();
        assert!(Tileset::new(neg, vec![]).is_err());
    }
}
