//! The substitution tileset on BS(1,n): tile `(c, i)` has top `c`, both
//! sides `i` and bottom `σ_i(c)`. Includes the explicit configuration read
//! off a fixpoint of `σ_1` and bounded periodicity checks on it.

mod configuration;
mod tiles;

pub use configuration::{
    a_period_falsification, a_period_witnesses, b_periodicity_check, explicit_patch, explicit_patch_n2, explicit_tile,
    explicit_tile_qnf, f_iter, f_step, periodicity_counterexample, r_step, PeriodReport,
};
pub use tiles::{tau_sigma, SigmaTile};
