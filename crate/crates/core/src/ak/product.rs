use serde::Serialize;

use super::enumerate::{enumerate_tileset, Certificate, Strategy};
use crate::dynamics::{LinearPiece, MultSystem};
use crate::error::{Error, Result};
use crate::group::{CanonicalForm, GroupParams};
use crate::rational::int;
use crate::wang::{line_word, rows, window_check, Label, Patch, Side, Tileset, WangTile};

/// On rows of color `color`, every `window` consecutive top labels contain at
/// least `min_count` copies of `label`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowConstraint {
    pub color: usize,
    pub window: usize,
    pub min_count: usize,
    pub label: Label,
}

#[derive(Debug, Clone)]
pub struct ProductTileset {
    pub tileset: Tileset,
    pub constraints: Vec<WindowConstraint>,
    /// One per piece, in piece order.
    pub certificates: Vec<Certificate>,
}

/// Replaces the side labels of `t` by `(value, color)` pairs.
pub fn pair_sides(t: &WangTile, color: usize) -> Result<WangTile> {
    let pair = |l: &Label| -> Result<Label> {
        l.value()
            .map(|v| Label::Pair(v.clone(), color))
            .ok_or_else(|| Error::LabelType(format!("side label {l} has no value")))
    };
    Ok(WangTile {
        top: t.top.clone(),
        left: pair(&t.left)?,
        right: pair(&t.right)?,
        bottom: t.bottom.clone(),
    })
}

/// Two constraints per piece `i` (color `i + 1`) with interval
/// `[a + d1/e1, a + 1 - d2/e2]`: windows of `e1` need `d1` labels `a + 1`,
/// windows of `e2` need `d2` labels `a`.
pub fn window_constraints(system: &MultSystem) -> Vec<WindowConstraint> {
    system
        .pieces()
        .iter()
        .enumerate()
        .flat_map(|(i, piece)| {
            let (d1, e1, d2, e2) = piece.window_parameters();
            let a = piece.base();
            [
                WindowConstraint {
                    color: i + 1,
                    window: e1 as usize,
                    min_count: d1 as usize,
                    label: Label::int(a + 1),
                },
                WindowConstraint {
                    color: i + 1,
                    window: e2 as usize,
                    min_count: d2 as usize,
                    label: Label::int(a),
                },
            ]
        })
        .collect()
}

/// The colored union of the multiplying tilesets on `[a_i, a_i + 1]`, with
/// the window constraints restricting each color to its interval.
pub fn build_ys(p: GroupParams, system: &MultSystem, strategy: &Strategy) -> Result<ProductTileset> {
    let mut tiles = Vec::new();
    let mut certificates = Vec::new();
    for (i, piece) in system.pieces().iter().enumerate() {
        let a = piece.base();
        let unit = LinearPiece::from_bounds(piece.slope().clone(), &int(a), &int(a + 1))?;
        let e = enumerate_tileset(p, &unit, strategy)?;
        for t in e.tileset.tiles() {
            tiles.push(pair_sides(t, i + 1)?);
        }
        certificates.push(e.certificate);
    }
    Ok(ProductTileset {
        tileset: Tileset::from_set(p, tiles)?,
        constraints: window_constraints(system),
        certificates,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowFailure {
    pub row_start: CanonicalForm,
    pub constraint: WindowConstraint,
}

/// Runs every constraint on the top word of every maximal row of the patch
/// whose color matches and whose word is at least one window long.
pub fn check_window_constraints(x: &Patch, constraints: &[WindowConstraint]) -> Result<Vec<WindowFailure>> {
    let mut out = Vec::new();
    for row in rows(x) {
        let first = &row[0];
        let color = x
            .tile_at(first)
            .and_then(|t| t.left.color())
            .ok_or_else(|| Error::LabelType("row without colored side labels".into()))?;
        let word = line_word(x, first, Side::Top, 0, row.len() as i64 - 1)?;
        for c in constraints.iter().filter(|c| c.color == color) {
            if c.window > word.len() || c.window == 0 {
                continue;
            }
            if !window_check(&word, c.window, c.min_count, &c.label)? {
                out.push(WindowFailure {
                    row_start: first.clone(),
                    constraint: c.clone(),
                });
            }
        }
    }
    Ok(out)
}
