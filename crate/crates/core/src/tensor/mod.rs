//! Sparse operators on labelled tensor legs and the R-matrix builders.

pub mod checks;
pub mod op;
pub mod rmatrix;

pub use op::{all_indices, Index, TensorOp};
pub use rmatrix::{build_pq, build_r, build_rbar, build_r_product, prime, Direction, FSeries};
