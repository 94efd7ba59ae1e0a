//! The word baBabABA is a nontrivial element of BS(2,3) with alpha = 0 that
//! fixes every orbit configuration; a single generator does not.

use bs_tiling::ak::{orbit_for_s0, weak_period_check};
use bs_tiling::dynamics::MultSystem;
use bs_tiling::group::{alpha, canonical_form, parse_word, GroupParams};
use bs_tiling::rational::{format, ratio};

fn main() -> bs_tiling::error::Result<()> {
    let p = GroupParams::new(2, 3)?;
    let s0 = MultSystem::s0();
    let branch = orbit_for_s0(&ratio(5, 7), 4)?;
    for text in ["baBabABA", "a", "b", "aa"] {
        let w = parse_word(text)?;
        println!(
            "{text:>9}: normal form {}, alpha {}, fixes the radius-4 patch: {}",
            canonical_form(&w, p),
            format(&alpha(&w, p)),
            weak_period_check(&s0, &branch, p, &w, 4)?
        );
    }
    Ok(())
}
