//! Fixpoints of the substitutions sigma_r, their factor complexity, and the
//! two-cycle for n = 2.

use bs_tiling::subst::{
    fixpoint2_windows, fixpoint_language_complexity, fixpoint_seeds, fixpoint_window, is_k_periodic, sigma,
};

fn main() -> bs_tiling::error::Result<()> {
    for n in 2..=5 {
        for r in 0..n {
            let s = sigma(n, r)?;
            let seeds = fixpoint_seeds(&s);
            print!("n = {n}, r = {r}: {s}; ");
            match seeds.first() {
                None => println!("no pointed fixpoint"),
                Some(&seed) => {
                    let p = fixpoint_language_complexity(&s, seed, 12)?;
                    let counts: Vec<usize> = (1..=12).map(|k| p.get(k).unwrap_or(0)).collect();
                    println!("complexity {counts:?}");
                }
            }
        }
    }
    let w = fixpoint_window(3, 27)?;
    println!("fixpoint of sigma_1, n = 3: {w}");
    let periodic = (1..=50).filter(|&k| is_k_periodic(&fixpoint_window(3, 729).unwrap(), k).unwrap()).count();
    println!("periods up to 50 found in a 1458-letter window: {periodic}");
    let (u, v) = fixpoint2_windows(16);
    println!("n = 2: u = {u}\n       v = {v}");
    Ok(())
}
