//! Builds the configuration of the S0 tileset along the orbit of a rational
//! x0, verifies it, and prints the labels on the identity level.

use bs_tiling::ak::{check_window_constraints, orbit_configuration, orbit_for_s0, window_constraints};
use bs_tiling::dynamics::MultSystem;
use bs_tiling::group::{CanonicalForm, GroupParams};
use bs_tiling::rational::{format, parse};
use bs_tiling::wang::{line_word, verify_patch, Side};

fn main() -> bs_tiling::error::Result<()> {
    let x0 = parse(&std::env::args().nth(1).unwrap_or_else(|| "1/2".into()))?;
    let p = GroupParams::new(2, 3)?;
    let s0 = MultSystem::s0();
    let branch = orbit_for_s0(&x0, 5)?;
    let values: Vec<String> = (-5..=5).map(|k| format(branch.value(k).expect("in range"))).collect();
    println!("orbit through x0 = {}: {}", format(&x0), values.join(", "));

    let x = orbit_configuration(&s0, &branch, p, 5)?;
    println!("radius-5 patch: {} cells, {} distinct tiles", x.len(), x.tileset().len());
    println!("adjacency violations: {}", verify_patch(&x).len());
    println!("window failures: {}", check_window_constraints(&x, &window_constraints(&s0))?.len());

    let top = line_word(&x, &CanonicalForm::identity(p), Side::Top, -2, 2)?;
    let digits: Vec<String> = top.iter().map(|l| format(l.value().expect("numeric"))).collect();
    println!("top labels along the identity level: {}", digits.join(""));
    Ok(())
}
