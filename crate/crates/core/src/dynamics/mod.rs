//! Multiplicative systems: finite families of rational linear maps
//! `x ↦ q_i x` on closed rational intervals, with set-valued images and
//! iterations, plus the circle map attached to the system
//! `{×2 on [1/3,1], ×1/3 on [1,2]}`.

mod circle;
mod iterate;
mod quotient;
mod system;

pub use circle::{circle_distance, phi_circle, rotation_angle, rotation_residual, CirclePoint};
pub use iterate::{image, is_immortal_up_to, iterate, iterate_with_limits, periodic_point_search, IterationLimits};
pub use quotient::{f_quotient, f_quotient_inverse, QuotientPoint};
pub use system::{LinearPiece, MultSystem};
