//! Coefficients of the normalization series f(x) = 1 + Σ f_r x^{-r}.

use bcd_yangian::scalar::rat::to_text;
use bcd_yangian::tensor::checks::fseries_checks;
use bcd_yangian::tensor::FSeries;
use bcd_yangian::AlgebraContext;

fn main() -> bcd_yangian::Result<()> {
    for ctx in [AlgebraContext::orthogonal(3)?, AlgebraContext::orthogonal(4)?, AlgebraContext::symplectic(4)?] {
        let f = FSeries::compute(&ctx.kappa(), 8);
        let coeffs: Vec<String> = f.coeffs.iter().map(to_text).collect();
        println!("{ctx}: f = [{}]", coeffs.join(", "));
        for r in fseries_checks(&ctx, 8) {
            println!("  {:?} {}", r.status, r.name);
        }
    }
    Ok(())
}
