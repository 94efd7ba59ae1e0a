//! S0 seen as a circle rotation: the quotient map, its angle, and a bounded
//! search for periodic points.

use bs_tiling::dynamics::{
    f_quotient, iterate, periodic_point_search, phi_circle, rotation_angle, rotation_residual, MultSystem,
    QuotientPoint,
};
use bs_tiling::rational::{format, ratio};

fn main() -> bs_tiling::error::Result<()> {
    let s0 = MultSystem::s0();
    let mut x = QuotientPoint::new(ratio(1, 2))?;
    for step in 0..8 {
        println!("f^{step}(1/2) = {:>6}  phi = {:.6}", format(x.value()), phi_circle(&x).0);
        x = f_quotient(&x);
    }
    println!("rotation angle {:.10}", rotation_angle());
    println!("largest residual over 10^4 points: {:.2e}", rotation_residual(10_000));

    for k in -3..=3 {
        let set: Vec<String> = iterate(&s0, &ratio(1, 2), k)?.iter().map(format).collect();
        println!("S0^{k}(1/2) = {{{}}}", set.join(", "));
    }
    let found = periodic_point_search(&s0, 200, 12)?;
    println!("periodic points with denominator <= 200 and period <= 12: {}", found.len());
    Ok(())
}
