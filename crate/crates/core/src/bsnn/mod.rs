//! BS(n,n) and its normal subgroup `H = ⟨a^n, a^i b a^{-i}⟩` of index `n`,
//! identified with `ℤ × F_n`.

mod forms;
mod free;

pub use forms::{
    canonicalize_bsnn, coset, normality_witnesses, phi_inverse, phi_iso, rebuild, residually_finite, subgroup_generators,
    BSnnForm, HForm, NormalityWitness, ZxFn,
};
pub use free::FreeWord;
