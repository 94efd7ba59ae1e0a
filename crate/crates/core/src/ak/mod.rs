//! Multiplying Wang tilesets on BS(m,n): tiles encoding a real `x` on each
//! level so that the level above encodes `q x`, their colored product for a
//! multiplicative system, and the configurations built from orbits.

mod enumerate;
mod orbit;
mod product;
mod tile;

pub use enumerate::{enumerate_tileset, Certificate, Enumeration, SamplingConfig, Strategy, StrategyKind};
pub use orbit::{orbit_configuration, orbit_for_s0, orbit_tile, weak_period_check, OrbitBranch};
pub use product::{
    build_ys, check_window_constraints, pair_sides, window_constraints, ProductTileset, WindowConstraint, WindowFailure,
};
pub use tile::{ak_tile, ak_tile_form, balanced, left_label_bounds};
