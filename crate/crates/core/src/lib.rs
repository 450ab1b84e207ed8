//! Exact computations with the rational R-matrix of types B, C and D and the
//! vacuum modules of the associated double Yangians.
//!
//! The crate is organised bottom-up:
//!
//! - [`scalar`]: exact rationals, sparse polynomials, rational functions and
//!   truncated `h`-adic series.
//! - [`tensor`]: sparse operators on labelled tensor legs, `P`, `Q`, `R(u)`,
//!   the normalization series and `R̄(u)`.
//! - [`brauer`]: Brauer-algebra symmetrizers, the fusion procedure and trace
//!   reduction.
//! - [`classical`]: the affine Lie algebra oracle, PBW normal forms in the
//!   classical vacuum module and Segal-Sugawara vectors.
//! - [`engine`]: the quantum relation table and the vacuum-module normal form.
//! - [`center`]: the central series `𝕋ₘ⁺(u)`, the `Φ`-pipeline, centrality
//!   sweeps and the braiding fixed point.
//! - [`report`]: run configuration, check records and JSON reports.
//!
//! Each capability has a runnable example:
//!
//! ```text
//! cargo run --release --example rmatrix_identities
//! cargo run --release --example normalization_series
//! cargo run --release --example fusion_symmetrizer
//! cargo run --release --example classical_oracle
//! cargo run --release --example vacuum_module
//! cargo run --release --example central_series
//! cargo run --release --example braiding_fixed_point
//! cargo run --release --example suite_report
//! ```

pub mod brauer;
pub mod center;
pub mod classical;
pub mod context;
pub mod engine;
pub mod error;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use context::{AlgebraContext, Kind, Truncation};
pub use error::{Error, Result};
