//! Writes SVG drawings of an orbit patch and a substitution patch.

use bs_tiling::ak::{orbit_configuration, orbit_for_s0};
use bs_tiling::dynamics::MultSystem;
use bs_tiling::group::GroupParams;
use bs_tiling::io::write_patch;
use bs_tiling::rational::ratio;
use bs_tiling::render::{render_svg, RenderOptions};
use bs_tiling::sigma::explicit_patch;

fn main() -> bs_tiling::error::Result<()> {
    let dir = std::env::args().nth(1).map(std::path::PathBuf::from).unwrap_or_else(std::env::temp_dir);
    let p = GroupParams::new(2, 3)?;
    let orbit = orbit_configuration(&MultSystem::s0(), &orbit_for_s0(&ratio(1, 2), 3)?, p, 3)?;
    let subst = explicit_patch(3, 3)?;
    for (name, x) in [("orbit", &orbit), ("substitution", &subst)] {
        let svg = dir.join(format!("{name}.svg"));
        std::fs::write(&svg, render_svg(x, &RenderOptions::default()))?;
        write_patch(&dir.join(format!("{name}.json")), x)?;
        println!("{} cells -> {}", x.len(), svg.display());
    }
    Ok(())
}
