//! Normal forms in the quantum vacuum module and the engine checks.

use bcd_yangian::engine::checks::engine_checks;
use bcd_yangian::engine::{word_text, Gen, VacuumModule};
use bcd_yangian::scalar::rat::to_text;
use bcd_yangian::AlgebraContext;

fn main() -> bcd_yangian::Result<()> {
    let ctx = AlgebraContext::orthogonal(3)?;
    let level = ctx.critical_level();
    let module = VacuumModule::new(&ctx, level.clone(), 3, 3)?.unitary();
    let word = [Gen::new(1, 1, 2), Gen::new(2, 2, 1)];
    println!("{ctx}, K = 3, unitary presentation: {} in normal form", word_text(&word));
    for (w, c) in module.normal_form(&word) {
        let coeffs: Vec<String> = c.coeffs().iter().map(to_text).collect();
        println!("  [{}] {}", coeffs.join(", "), word_text(&w));
    }
    for r in engine_checks(&ctx, &level, 2, 3, 11) {
        println!("  {:?} {}", r.status, r.name);
    }
    Ok(())
}
