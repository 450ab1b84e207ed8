//! The classical vacuum module: Lie structure checks and Segal-Sugawara vectors.

use bcd_yangian::classical::checks::classical_checks;
use bcd_yangian::classical::vacuum::word_text;
use bcd_yangian::classical::{ClassicalModule, LieBasis};
use bcd_yangian::scalar::rat::to_text;
use bcd_yangian::AlgebraContext;

fn main() -> bcd_yangian::Result<()> {
    let ctx = AlgebraContext::orthogonal(3)?;
    let level = ctx.critical_level();
    let lie = LieBasis::new(&ctx);
    println!("{ctx}: dim = {}, critical level = {}", lie.dim(), to_text(&level));
    let cm = ClassicalModule::new(lie.clone(), level.clone());
    let phi = cm.segal_sugawara(2)?;
    for (k, e) in phi.iter().enumerate() {
        let mut line = String::new();
        for (w, c) in e {
            let sign = if c < &num::Zero::zero() { " - " } else if line.is_empty() { "" } else { " + " };
            line.push_str(&format!("{sign}{} {}", to_text(&num::Signed::abs(c)), word_text(&lie, w)));
        }
        println!("  phi_2{k} = {}", if line.is_empty() { "0" } else { &line });
    }
    for r in classical_checks(&ctx.clone().with_level(level), 3, 7) {
        println!("  {:?} {}", r.status, r.name);
    }
    Ok(())
}
