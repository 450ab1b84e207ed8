//! P, Q, R(u) and R̄(u) identities for o3 and sp4, checked exactly.

use bcd_yangian::report::CheckRecord;
use bcd_yangian::tensor::checks::{pq_checks, rbar_checks, rmatrix_checks};
use bcd_yangian::AlgebraContext;

fn show(recs: &[CheckRecord]) {
    for r in recs {
        println!("  {:<5} {}", format!("{:?}", r.status).to_uppercase(), r.name);
    }
}

fn main() -> bcd_yangian::Result<()> {
    for ctx in [AlgebraContext::orthogonal(3)?, AlgebraContext::symplectic(4)?] {
        println!("{ctx}");
        show(&pq_checks(&ctx));
        show(&rmatrix_checks(&ctx));
        show(&rbar_checks(&ctx, 3, 4));
    }
    Ok(())
}
