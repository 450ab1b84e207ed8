//! The sweep `t^{(r)}_{ij} 𝕋ₘ⁺(u) = 0` behind `T(v) 𝕋ₘ⁺(u) = 𝕋ₘ⁺(u)`.

use super::{elem_witness, CentralSeries};
use crate::engine::{elem_cap, Ann, VacuumModule};
use crate::report::Witness;

/// Outcome of a centrality sweep.
#[derive(Clone, Debug)]
pub struct CentralityScan {
    /// Number of `(r, i, j, u-power)` probes evaluated.
    pub probes: usize,
    pub witness: Option<Witness>,
}

/// Apply every annihilation mode `t^{(r)}_{ij}`, `r = 1..D`, to every
/// `u`-coefficient and keep output words of degree at most `D - r`, the range
/// unaffected by the degree cap. Stops at the first nonzero coefficient.
pub fn centrality_witness(module: &VacuumModule, series: &CentralSeries) -> CentralityScan {
    let n = module.ctx.n;
    let mut probes = 0;
    for r in 1..=module.d {
        for i in 0..n {
            for j in 0..n {
                for (e, x) in series.coeffs.iter().enumerate() {
                    probes += 1;
                    let y = elem_cap(&module.act_elem(Ann::new(r, i, j), x), module.d - r);
                    let label = format!("t({r})_{}{} on u^{e}", i + 1, j + 1);
                    if let Some(w) = elem_witness(&y, &label) {
                        return CentralityScan { probes, witness: Some(w) };
                    }
                }
            }
        }
    }
    CentralityScan { probes, witness: None }
}
