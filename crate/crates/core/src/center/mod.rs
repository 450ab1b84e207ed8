//! Central series of the vacuum module at the critical level.
//!
//! `𝕋ₘ⁺(u) = tr_{1..m} S_[m] T⁺_1(u_1) ... T⁺_m(u_m) 1` is kept as a family of
//! module vectors indexed by powers of `u`. On top of it sit the centrality
//! sweep, the `Φₘ` combination and its classical limit, the braiding fixed
//! point and spot checks of the operator series `𝕋ₘ(u)`.

pub mod centrality;
pub mod checks;
pub mod operator;
pub mod phi;
pub mod smap;
pub mod tplus;

pub use centrality::{centrality_witness, CentralityScan};

pub use operator::{basis_words, completed_commutator_witness, operator_on, LFamily};
pub use checks::{center_checks, negative_checks, CenterTrunc};
pub use smap::smap_fixed_point_witness;
pub use phi::{build_phi, classical_limit_witness, divisibility_witness, segal_sugawara_central_witness};

pub use tplus::{build_t_plus, CentralSeries, ShiftOrder};


use crate::engine::{word_text, Elem};
use crate::report::Witness;
use crate::scalar::rat::to_text;
use num::Zero;

/// The first nonzero `h`-coefficient of `e`, labelled by `context`.
pub fn elem_witness(e: &Elem, context: &str) -> Option<Witness> {
    for (w, c) in e {
        for (l, v) in c.coeffs().iter().enumerate() {
            if !Zero::is_zero(v) {
                return Some(Witness::new(format!("{context}: h^{l} {}", word_text(w)), to_text(v)));
            }
        }
    }
    None
}
