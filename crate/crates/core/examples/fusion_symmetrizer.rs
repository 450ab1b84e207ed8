//! Brauer symmetrizers, the fusion procedure and trace reduction.

use bcd_yangian::brauer::{b_coefficients, brauer_checks, fusion_offsets, max_m, symmetrizer, trace_coefficient};
use bcd_yangian::scalar::rat::to_text;
use bcd_yangian::AlgebraContext;

fn main() -> bcd_yangian::Result<()> {
    for ctx in [AlgebraContext::orthogonal(3)?, AlgebraContext::symplectic(4)?] {
        println!("{ctx}");
        for m in 1..=max_m(&ctx).min(3) {
            let s = symmetrizer(&ctx, m)?;
            let b: Vec<String> = b_coefficients(&ctx, m)?.iter().map(to_text).collect();
            println!(
                "  m = {m}: offsets {:?}, nnz {}, tr S = {}, trace coefficient {}, b = [{}]",
                fusion_offsets(ctx.kind, m),
                s.nnz(),
                to_text(&s.trace()),
                to_text(&trace_coefficient(&ctx, m)?),
                b.join(", ")
            );
        }
        for r in brauer_checks(&ctx, 3) {
            println!("  {:?} {}", r.status, r.name);
        }
    }
    Ok(())
}
