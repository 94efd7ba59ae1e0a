//! JSON documents for tilesets and patches.
//!
//! Tileset: `{"m": 2, "n": 3, "tiles": [{"top": [...], "left": ..., "right": ..., "bottom": [...]}]}`.
//! Patch: `{"m": 2, "n": 3, "tileset_ref": <tileset object or path>, "cells": [{"word": "bA", "tile_index": 4}]}`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{canonical_form, parse_word, GroupParams};
use crate::wang::{Patch, Tileset, WangTile};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilesetDoc {
    pub m: i64,
    pub n: i64,
    pub tiles: Vec<WangTile>,
}

impl TilesetDoc {
    pub fn from_tileset(t: &Tileset) -> Self {
        TilesetDoc {
            m: t.params().m(),
            n: t.params().n(),
            tiles: t.tiles().to_vec(),
        }
    }

    pub fn into_tileset(self) -> Result<Tileset> {
        Tileset::new(GroupParams::new(self.m, self.n)?, self.tiles)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TilesetRef {
    Inline(TilesetDoc),
    Path(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDoc {
    pub word: String,
    pub tile_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchDoc {
    pub m: i64,
    pub n: i64,
    pub tileset_ref: TilesetRef,
    pub cells: Vec<CellDoc>,
}

impl PatchDoc {
    /// Embeds the tileset.
    pub fn from_patch(x: &Patch) -> Self {
        PatchDoc {
            m: x.params().m(),
            n: x.params().n(),
            tileset_ref: TilesetRef::Inline(TilesetDoc::from_tileset(x.tileset())),
            cells: x
                .cells()
                .iter()
                .map(|(g, &i)| CellDoc {
                    word: g.to_string(),
                    tile_index: i,
                })
                .collect(),
        }
    }

    /// Relative tileset paths are resolved against `base`.
    pub fn into_patch(self, base: Option<&Path>) -> Result<Patch> {
        let p = GroupParams::new(self.m, self.n)?;
        let tileset = match self.tileset_ref {
            TilesetRef::Inline(doc) => doc.into_tileset()?,
            TilesetRef::Path(path) => {
                let path = match base {
                    Some(dir) if Path::new(&path).is_relative() => dir.join(path),
                    _ => Path::new(&path).to_path_buf(),
                };
                read_tileset(&path)?
            }
        };
        if tileset.params() != p {
            return Err(Error::param(format!(
                "patch is on {p} but its tileset is on {}",
                tileset.params()
            )));
        }
        let mut x = Patch::new(tileset);
        for cell in self.cells {
            let g = canonical_form(&parse_word(&cell.word)?, p);
            x.insert(g, cell.tile_index)?;
        }
        Ok(x)
    }
}

pub fn tileset_to_string(t: &Tileset) -> String {
    serde_json::to_string_pretty(&TilesetDoc::from_tileset(t)).expect("tileset serializes")
}

pub fn tileset_from_str(s: &str) -> Result<Tileset> {
    serde_json::from_str::<TilesetDoc>(s)?.into_tileset()
}

pub fn patch_to_string(x: &Patch) -> String {
    serde_json::to_string_pretty(&PatchDoc::from_patch(x)).expect("patch serializes")
}

pub fn patch_from_str(s: &str, base: Option<&Path>) -> Result<Patch> {
    serde_json::from_str::<PatchDoc>(s)?.into_patch(base)
}

pub fn read_tileset(path: &Path) -> Result<Tileset> {
    tileset_from_str(&fs::read_to_string(path)?)
}

pub fn write_tileset(path: &Path, t: &Tileset) -> Result<()> {
    Ok(fs::write(path, tileset_to_string(t) + "\n")?)
}

pub fn read_patch(path: &Path) -> Result<Patch> {
    patch_from_str(&fs::read_to_string(path)?, path.parent())
}

pub fn write_patch(path: &Path, x: &Patch) -> Result<()> {
    Ok(fs::write(path, patch_to_string(x) + "\n")?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ak::{orbit_configuration, orbit_for_s0};
    use crate::dynamics::MultSystem;
    use crate::rational::ratio;
    use crate::sigma::explicit_patch;

    #[test]
    fn orbit_patch_round_trip() {
        let p = GroupParams::new(2, 3).unwrap();
        let b = orbit_for_s0(&ratio(1, 2), 2).unwrap();
        let x = orbit_configuration(&MultSystem::s0(), &b, p, 2).unwrap();
        let text = patch_to_string(&x);
        let back = patch_from_str(&text, None).unwrap();
        assert_eq!(back.cells(), x.cells());
        assert_eq!(back.tileset(), x.tileset());
        assert_eq!(patch_to_string(&back), text);
    }

    #[test]
    fn color_patch_round_trip() {
        let x = explicit_patch(3, 2).unwrap();
        let back = patch_from_str(&patch_to_string(&x), None).unwrap();
        assert_eq!(back.cells(), x.cells());
    }

    #[test]
    fn tileset_by_path() {
        let dir = std::env::temp_dir().join(format!("bs-tiling-io-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let x = explicit_patch(3, 1).unwrap();
        write_tileset(&dir.join("tiles.json"), x.tileset()).unwrap();
        let mut doc = PatchDoc::from_patch(&x);
        doc.tileset_ref = TilesetRef::Path("tiles.json".into());
        fs::write(dir.join("patch.json"), serde_json::to_string(&doc).unwrap()).unwrap();
        let back = read_patch(&dir.join("patch.json")).unwrap();
        assert_eq!(back.cells(), x.cells());
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(tileset_from_str("{\"m\": 2}").is_err());
        let bad = r#"{"m":1,"n":2,"tileset_ref":{"m":1,"n":3,"tiles":[]},"cells":[]}"#;
        assert!(patch_from_str(bad, None).is_err());
    }
}
