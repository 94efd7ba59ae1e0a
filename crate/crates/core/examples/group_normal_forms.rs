//! Normal forms, heights and the maps alpha and lambda on a few words of
//! BS(2,3), plus quasi-normal forms in BS(1,2).

use bs_tiling::group::{alpha, ball, canonical_form, equals, lambda, parse_word, quasi_normal_form_1n, GroupParams};
use bs_tiling::rational::format;

fn main() -> bs_tiling::error::Result<()> {
    let p = GroupParams::new(2, 3)?;
    for text in ["baaB", "aaa", "baBabABA", "abAB", "bbaaBB"] {
        let w = parse_word(text)?;
        let g = canonical_form(&w, p);
        println!(
            "{text:>10} -> {g:<16} height {:>2}  alpha {:>5}  lambda {:>5}",
            g.height(),
            format(&alpha(&w, p)),
            format(&lambda(&w, p))
        );
    }
    println!("b a^2 b^-1 = a^3: {}", equals(&parse_word("baaB")?, &parse_word("aaa")?, p));
    for r in 0..=5 {
        println!("|ball(BS(2,3), {r})| = {}", ball(p, r)?.len());
    }

    let q = GroupParams::new(1, 2)?;
    for text in ["aB", "ba", "BabAbA", "bbaBBa"] {
        let w = parse_word(text)?;
        let f = quasi_normal_form_1n(&w, 2)?;
        println!(
            "BS(1,2): {text} has quasi-normal form (k, l, m) = ({}, {}, {}), round trip {}",
            f.down,
            f.power,
            f.up,
            equals(&f.to_word(), &w, q)
        );
    }
    Ok(())
}
