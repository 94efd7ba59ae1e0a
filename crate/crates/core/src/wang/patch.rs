use std::collections::BTreeMap;

use super::{Label, Tileset, WangTile};
use crate::error::{Error, Result};
use crate::group::{CanonicalForm, GroupParams, GroupWord, Syllable};

/// A finite partial configuration: canonical group elements mapped to tile
/// indices of one tileset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Patch {
    tileset: Tileset,
    cells: BTreeMap<CanonicalForm, usize>,
}

impl Patch {
    pub fn new(tileset: Tileset) -> Self {
        Patch {
            tileset,
            cells: BTreeMap::new(),
        }
    }

    pub fn params(&self) -> GroupParams {
        self.tileset.params()
    }

    pub fn tileset(&self) -> &Tileset {
        &self.tileset
    }

    pub fn insert(&mut self, g: CanonicalForm, tile: usize) -> Result<()> {
        if g.params() != self.params() {
            return Err(Error::param(format!(
                "cell {g} belongs to {}, patch is over {}",
                g.params(),
                self.params()
            )));
        }
        if tile >= self.tileset.len() {
            return Err(Error::param(format!(
                "tile index {tile} out of range ({} tiles)",
                self.tileset.len()
            )));
        }
        self.cells.insert(g, tile);
        Ok(())
    }

    /// Adds the tile to the tileset if needed and places it at `g`.
    pub fn place(&mut self, g: CanonicalForm, tile: WangTile) -> Result<()> {
        let i = self.tileset.insert(tile)?;
        self.insert(g, i)
    }

    pub fn remove(&mut self, g: &CanonicalForm) -> Option<usize> {
        self.cells.remove(g)
    }

    pub fn cells(&self) -> &BTreeMap<CanonicalForm, usize> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn tile_index(&self, g: &CanonicalForm) -> Option<usize> {
        self.cells.get(g).copied()
    }

    pub fn tile_at(&self, g: &CanonicalForm) -> Option<&WangTile> {
        self.tile_index(g).and_then(|i| self.tileset.get(i))
    }

    /// Replaces the tile at `g` by an edited copy (used for fault injection).
    pub fn edit_tile(&mut self, g: &CanonicalForm, edit: impl FnOnce(&mut WangTile)) -> Result<()> {
        let mut tile = self
            .tile_at(g)
            .cloned()
            .ok_or_else(|| Error::param(format!("no cell at {g}")))?;
        edit(&mut tile);
        self.place(g.clone(), tile)
    }

    /// Restriction to the cells satisfying `keep`.
    pub fn restrict(&self, keep: impl Fn(&CanonicalForm) -> bool) -> Patch {
        Patch {
            tileset: self.tileset.clone(),
            cells: self
                .cells
                .iter()
                .filter(|(g, _)| keep(g))
                .map(|(g, i)| (g.clone(), *i))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Horizontal,
    /// `top_k` of the lower tile against `bottom_l` of `g a^{k-l} b`.
    Vertical { k: usize, l: usize },
}

/// A mismatch between the cell at `site` and its neighbour. `expected` is the
/// label on the site's side, `actual` the label on the neighbour's side.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdjacencyViolation {
    pub site: CanonicalForm,
    pub neighbor: CanonicalForm,
    pub rule: Rule,
    pub expected: Label,
    pub actual: Label,
}

/// Checks both rule families from the lower/left tile of every pair. Pairs
/// with a missing cell are skipped. The result is sorted.
pub fn verify_patch(x: &Patch) -> Vec<AdjacencyViolation> {
    let p = x.params();
    let (m, n) = (p.m() as usize, p.n() as usize);
    let horizontal = GroupWord::a(p.m());
    let vertical: Vec<(usize, usize, GroupWord)> = (1..=m)
        .flat_map(|k| (1..=n).map(move |l| (k, l)))
        .map(|(k, l)| {
            let w = GroupWord::from_syllables([Syllable::a(k as i64 - l as i64), Syllable::B(1)]);
            (k, l, w)
        })
        .collect();

    let mut out = Vec::new();
    for (g, &i) in x.cells() {
        let tile = &x.tileset().tiles()[i];
        let right = g.right_mul_word(&horizontal);
        if let Some(other) = x.tile_at(&right) {
            if tile.right != other.left {
                out.push(AdjacencyViolation {
                    site: g.clone(),
                    neighbor: right,
                    rule: Rule::Horizontal,
                    expected: tile.right.clone(),
                    actual: other.left.clone(),
                });
            }
        }
        for (k, l, w) in &vertical {
            let up = g.right_mul_word(w);
            if let Some(other) = x.tile_at(&up) {
                let (top, bottom) = (&tile.top[k - 1], &other.bottom[l - 1]);
                if top != bottom {
                    out.push(AdjacencyViolation {
                        site: g.clone(),
                        neighbor: up,
                        rule: Rule::Vertical { k: *k, l: *l },
                        expected: top.clone(),
                        actual: bottom.clone(),
                    });
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{canonical_form, parse_word};

    fn tile(v: i64) -> WangTile {
        WangTile {
            top: vec![Label::int(v); 2],
            left: Label::int(v),
            right: Label::int(v),
            bottom: vec![Label::int(v); 3],
        }
    }

    fn patch_of(cells: &[(&str, i64)]) -> Patch {
        let p = GroupParams::new(2, 3).unwrap();
        let mut x = Patch::new(Tileset::new(p, vec![]).unwrap());
        for (w, v) in cells {
            x.place(canonical_form(&parse_word(w).unwrap(), p), tile(*v)).unwrap();
        }
        x
    }

    #[test]
    fn single_cell_has_no_violations() {
        assert!(verify_patch(&patch_of(&[("", 0)])).is_empty());
    }

    #[test]
    fn detects_horizontal_mismatch() {
        let x = patch_of(&[("", 0), ("aa", 1)]);
        let v = verify_patch(&x);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rule, Rule::Horizontal);
    }

    #[test]
    fn detects_vertical_mismatch() {
        // g a^{k-l} b with k = 1, l = 1 is b
        let x = patch_of(&[("", 0), ("b", 1)]);
        let v = verify_patch(&x);
        assert!(v.iter().any(|v| v.rule == Rule::Vertical { k: 1, l: 1 }));
        assert!(v.iter().all(|v| v.site.is_identity()));
    }

    #[test]
    fn missing_neighbours_are_not_violations() {
        let x = patch_of(&[("", 0), ("a", 1), ("B", 2)]);
        // e and a are on the same level but not a^m apart; B's neighbours
        // above are e a^{k-l}, which are absent except for the identity when
        // k = l ... B a^{0} b = e
        let v = verify_patch(&x);
        assert!(v.iter().all(|v| v.site == canonical_form(&parse_word("B").unwrap(), x.params())));
    }
}
