//! Reordering engine for the vacuum module of the `h`-adic quantum vertex
//! algebra attached to the rational R-matrix.
//!
//! Creation modes are normal ordered with the RTT relation for `T⁺`;
//! annihilation modes are moved to the vacuum with the mixed relation
//! between `T` and `T⁺` at level `c`.

pub mod checks;
pub mod classical_limit;
pub mod family;
pub mod module;
pub mod pq;
pub mod rules;

pub use classical_limit::{to_classical, to_classical_gen};
pub use family::{apply_d, family_sub, substitute_shift, UFamily};
pub use module::{degree, elem_add, elem_axpy, elem_cap, elem_sub, word_text, Elem, Presentation, VacuumModule, Word};
pub use rules::{Ann, Bracket, Coef, Gen, Passage, RuleTables};

#[cfg(test)]
mod tests;
