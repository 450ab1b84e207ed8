//! The braiding fixed point of tr T⁺(u)² and its shifted-crossing control.

use bcd_yangian::center::smap::{fixed_point_witness, scalars_from_shifts};
use bcd_yangian::center::smap_fixed_point_witness;
use bcd_yangian::scalar::rat::int;
use bcd_yangian::AlgebraContext;

fn main() -> bcd_yangian::Result<()> {
    let ctx = AlgebraContext::orthogonal(3)?;
    for k in [2, 3] {
        let w = smap_fixed_point_witness(&ctx, &ctx.critical_level(), k, 2, 2, false)?;
        println!("{ctx} K = {k}: fixed point {}", if w.is_none() { "holds" } else { "fails" });
    }
    let sc = ctx.critical_level() * int(ctx.sigma());
    let shifted = Some((int(1) - ctx.kappa() - &sc, sc));
    for k in [4, 5] {
        let scalars = scalars_from_shifts(&ctx, shifted.clone(), k)?;
        match fixed_point_witness(&ctx, &scalars, k, 2, 2) {
            None => println!("shifted crossing K = {k}: no witness"),
            Some(w) => println!("shifted crossing K = {k}: {} = {}", w.location, w.value),
        }
    }
    Ok(())
}
