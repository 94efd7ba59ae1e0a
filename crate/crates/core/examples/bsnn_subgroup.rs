//! Z x F_n inside BS(n,n): the isomorphism, canonical forms, cosets and the
//! residual finiteness predicate.

use bs_tiling::bsnn::{canonicalize_bsnn, coset, normality_witnesses, phi_inverse, phi_iso, residually_finite, ZxFn};
use bs_tiling::group::parse_word;

fn main() -> bs_tiling::error::Result<()> {
    let n = 3;
    let z = ZxFn::new(2, "g1 g0^-1 g2".parse()?);
    let w = phi_iso(&z, n)?;
    println!("phi({}, {}) = {w}", z.k, z.w);
    let back = phi_inverse(&w, n)?;
    println!("back: ({}, {})", back.k, back.w);
    for text in ["a", "ab", "aaab", "bAbaB"] {
        let word = parse_word(text)?;
        let f = canonicalize_bsnn(&word, n)?;
        println!("{text:>6}: coset {}, a^{} a^(3*{}) {:?}", coset(&word, n)?, f.p, f.h.k, f.h.syllables);
    }
    match phi_inverse(&parse_word("a")?, n) {
        Ok(_) => println!("a is in H"),
        Err(e) => println!("a: {e}"),
    }
    let all = normality_witnesses(n)?;
    println!("{} conjugates checked, all in H: {}", all.len(), all.iter().all(|w| w.in_subgroup));
    for (a, b) in [(1, 2), (2, 2), (2, 3), (-3, 3)] {
        println!("BS({a},{b}) residually finite: {}", residually_finite(a, b)?);
    }
    Ok(())
}
