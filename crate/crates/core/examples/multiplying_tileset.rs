//! Enumerates the multiplying tilesets for x ↦ 2x on [1/3, 1] and x ↦ x/3 on
//! [1, 2] over BS(2,3) and checks that every tile multiplies.

use std::time::Instant;

use bs_tiling::ak::{enumerate_tileset, left_label_bounds, Strategy};
use bs_tiling::dynamics::MultSystem;
use bs_tiling::group::GroupParams;
use bs_tiling::rational::format;
use bs_tiling::wang::check_multiplies;

fn main() -> bs_tiling::error::Result<()> {
    let p = GroupParams::new(2, 3)?;
    for piece in MultSystem::s0().pieces() {
        let start = Instant::now();
        let e = enumerate_tileset(p, piece, &Strategy::default())?;
        let q = piece.slope();
        let (k1, k2, den) = left_label_bounds(p, q)?;
        println!(
            "q = {}, I = [{}, {}]: {} tiles, multiplies: {}, side labels in [{k1}/{den}, {k2}/{den}]",
            format(q),
            format(&piece.lo()),
            format(&piece.hi()),
            e.tileset.len(),
            check_multiplies(&e.tileset, q)?,
        );
        println!(
            "  {} rounds, last growth at {:?}, sizes {:?} ({:.2?})",
            e.certificate.rounds,
            e.certificate.last_growth,
            e.certificate.sizes,
            start.elapsed()
        );
        let over = enumerate_tileset(p, piece, &Strategy::OverApproximation)?;
        println!("  over-approximation: {} tiles", over.tileset.len());
    }
    Ok(())
}
