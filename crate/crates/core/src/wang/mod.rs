//! Wang tiles on `BS(m,n)`: `m` top labels, one left, one right and `n`
//! bottom labels. A tile at `g` must satisfy
//!
//! * `T_g(right) = T_{g a^m}(left)`
//! * `T_g(top_k) = T_{g a^{k-l} b}(bottom_l)` for `k` in `1..=m`, `l` in `1..=n`.

mod label;
mod line;
mod patch;
mod tile;

pub use label::Label;
pub use line::{line_word, rows, window_check, Side};
pub use patch::{verify_patch, AdjacencyViolation, Patch, Rule};
pub use tile::{check_multiplies, multiplies_residual, Tileset, WangTile};
