use std::collections::BTreeSet;

use super::{Label, Patch};
use crate::error::{Error, Result};
use crate::group::{CanonicalForm, GroupWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Top,
    Bottom,
}

/// Side labels of the tiles `g a^{jm}` for `j` in `lo..=hi`, concatenated:
/// `m` labels per tile on the top side, `n` on the bottom side.
pub fn line_word(x: &Patch, g: &CanonicalForm, side: Side, lo: i64, hi: i64) -> Result<Vec<Label>> {
    if lo > hi {
        return Ok(Vec::new());
    }
    let m = x.params().m();
    let mut out = Vec::new();
    let mut missing = Vec::new();
    for j in lo..=hi {
        let h = g.right_mul_word(&GroupWord::a(j * m));
        match x.tile_at(&h) {
            Some(t) => match side {
                Side::Top => out.extend(t.top.iter().cloned()),
                Side::Bottom => out.extend(t.bottom.iter().cloned()),
            },
            None => missing.push(j),
        }
    }
    if !missing.is_empty() {
        return Err(Error::Gap(missing));
    }
    Ok(out)
}

/// True iff every `e` consecutive labels of `w` contain at least `d` copies
/// of `target`.
pub fn window_check(w: &[Label], e: usize, d: usize, target: &Label) -> Result<bool> {
    if e == 0 {
        return Err(Error::param("window length must be positive"));
    }
    if e > w.len() {
        return Err(Error::param(format!(
            "window of {e} labels is longer than the word ({})",
            w.len()
        )));
    }
    let hits: Vec<usize> = w.iter().map(|l| usize::from(l == target)).collect();
    let mut count: usize = hits[..e].iter().sum();
    if count < d {
        return Ok(false);
    }
    for i in e..w.len() {
        count = count + hits[i] - hits[i - e];
        if count < d {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Maximal runs `g, g a^m, g a^{2m}, …` of cells present in the patch, each
/// listed left to right. Every cell belongs to exactly one run.
pub fn rows(x: &Patch) -> Vec<Vec<CanonicalForm>> {
    let m = x.params().m();
    let step = GroupWord::a(m);
    let back = GroupWord::a(-m);
    let mut done = BTreeSet::new();
    let mut out = Vec::new();
    for g in x.cells().keys() {
        if done.contains(g) || x.tile_index(&g.right_mul_word(&back)).is_some() {
            continue;
        }
        let mut run = Vec::new();
        let mut cur = g.clone();
        while x.tile_index(&cur).is_some() && done.insert(cur.clone()) {
            run.push(cur.clone());
            cur = cur.right_mul_word(&step);
        }
        out.push(run);
    }
    // cells on a cycle with no start (cannot happen in BS, a has infinite
    // order) would be left out; keep the invariant explicit
    debug_assert_eq!(done.len(), x.len());
    out
}
