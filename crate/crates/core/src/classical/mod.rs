//! Classical oracle: the affine Lie algebra of `g_N`, PBW normal forms in
//! the vacuum module `V_c(g_N)` and the Segal-Sugawara vectors.

pub mod lie;
pub mod checks;
pub mod vacuum;

pub use lie::{Comb, LieBasis};
pub use vacuum::{ClassicalElem, ClassicalModule, Mode};
