//! Uniform substitutions on `{0, 1}` acting on pointed biinfinite words,
//! their fixpoints, and factor complexity.

mod complexity;
mod fixpoint;
mod substitution;
mod word;

pub use complexity::{
    factor_complexity, fixpoint_complexity, fixpoint_language_complexity, is_k_periodic, period_witness,
    ComplexityProfile, Stabilization,
};
pub use fixpoint::{
    fixpoint2_letter, fixpoint2_windows, fixpoint_letter, fixpoint_seeds, fixpoint_window, seeded_window, FixpointSeed,
    TwoCycleWord,
};
pub use substitution::{sigma, UniformSubstitution};
pub use word::{Letter, PointedWord};
