//! The central series 𝕋ₘ⁺(u) at the critical level and its centrality sweep.

use bcd_yangian::center::{build_t_plus, centrality_witness, ShiftOrder};
use bcd_yangian::engine::VacuumModule;
use bcd_yangian::AlgebraContext;

fn main() -> bcd_yangian::Result<()> {
    for ctx in [AlgebraContext::orthogonal(3)?, AlgebraContext::symplectic(4)?] {
        let crit = ctx.critical_level();
        for (label, level) in [("critical", crit), ("zero", num::Zero::zero())] {
            let module = VacuumModule::new(&ctx, level, 3, 3)?.unitary();
            for m in 1..=2 {
                let series = build_t_plus(&module, m, ShiftOrder::Fusion, 2)?;
                let terms: usize = series.coeffs.iter().map(|e| e.len()).sum();
                let scan = centrality_witness(&module, &series);
                let verdict = match &scan.witness {
                    None => "central".to_string(),
                    Some(w) => format!("not central: {} = {}", w.location, w.value),
                };
                println!("{ctx} {label:<8} m = {m}: {terms} terms, {} probes, {verdict}", scan.probes);
            }
        }
    }
    Ok(())
}
