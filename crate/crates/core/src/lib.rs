pub mod acceptance;
pub mod ak;
pub mod bsnn;
pub mod dynamics;
pub mod error;
pub mod group;
pub mod io;
pub mod rational;
pub mod render;
pub mod sigma;
pub mod subst;
pub mod wang;
