//! Exact scalar layer: rationals, polynomials, rational functions and
//! truncated series.

pub mod hseries;
pub mod laurent;
pub mod mpoly;
pub mod rat;
pub mod ratfun;
pub mod ring;
pub mod upoly;

pub use hseries::HSeries;
pub use mpoly::{MPoly, Vars};
pub use rat::Rat;
pub use ratfun::RatFun;
pub use ring::Ring;
pub use upoly::UPoly;
