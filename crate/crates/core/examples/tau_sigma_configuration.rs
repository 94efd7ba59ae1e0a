//! The tileset built from sigma_1 on BS(1,n), its explicit configuration,
//! and which translations fix it.

use bs_tiling::group::GroupWord;
use bs_tiling::sigma::{a_period_falsification, b_periodicity_check, explicit_patch, periodicity_counterexample, tau_sigma};
use bs_tiling::wang::verify_patch;

fn main() -> bs_tiling::error::Result<()> {
    for n in 2..=5 {
        let t = tau_sigma(n)?;
        let x = explicit_patch(n, 5)?;
        println!(
            "n = {n}: {} tiles, radius-5 patch of {} cells, {} violations",
            t.len(),
            x.len(),
            verify_patch(&x).len()
        );
        println!(
            "  fixed by b: {}, fixed by b^2: {}",
            b_periodicity_check(n, &GroupWord::b(1), 4)?,
            b_periodicity_check(n, &GroupWord::b(2), 4)?
        );
    }
    if let Some(g) = periodicity_counterexample(2, &GroupWord::b(1), 4)? {
        println!("n = 2: b moves the tile at {g}");
    }
    let reports = a_period_falsification(3, 20, 3, 729)?;
    for r in reports.iter().take(5) {
        println!("a^{} is broken at (level, position) {:?}", r.k, r.witness);
    }
    Ok(())
}
