//! Report checks for the central series, the `Φ`-pipeline, the braiding and
//! the operator series of the completed double Yangian.

use super::smap::{fixed_point_witness, scalars_from_shifts};
use super::{
    build_t_plus, centrality_witness, classical_limit_witness, completed_commutator_witness, divisibility_witness,
    elem_witness, ShiftOrder,
};
use crate::brauer::max_m;
use crate::context::{AlgebraContext, Kind};
use crate::engine::{elem_sub, VacuumModule};
use crate::error::Result;
use crate::report::{CheckRecord, Expect, Witness};
use crate::scalar::rat::{int, to_text, Rat};

/// Truncations of a center run.
#[derive(Clone, Copy, Debug)]
pub struct CenterTrunc {
    pub k: usize,
    pub d: u32,
    pub u: u32,
}

fn rec(ctx: &AlgebraContext, name: &str, anchor: &str, level: &Rat) -> CheckRecord {
    CheckRecord::new(name, anchor).param("algebra", ctx.label()).param("level", to_text(level))
}

fn sweep(ctx: &AlgebraContext, level: &Rat, m: usize, t: CenterTrunc) -> Result<Option<Witness>> {
    let md = VacuumModule::new(ctx, level.clone(), t.k, t.d)?;
    let series = build_t_plus(&md, m, ShiftOrder::Fusion, t.u)?;
    Ok(centrality_witness(&md, &series).witness)
}

fn central(ctx: &AlgebraContext, level: &Rat, m: usize, t: CenterTrunc, expect: Expect) -> CheckRecord {
    let name = match expect {
        Expect::Nonzero => format!("T+_{m} not central at level {}", to_text(level)),
        _ => format!("T+_{m} central"),
    };
    rec(ctx, &name, "t_ij(v) T⁺_m(u) 1 = δ_ij T⁺_m(u) 1 at the critical level", level)
        .param("m", m)
        .param("K", t.k)
        .param("D", t.d)
        .param("U", t.u)
        .expect(expect)
        .outcome(sweep(ctx, level, m, t))
}

fn completed(ctx: &AlgebraContext, level: &Rat, k: usize, d: u32, unitary: bool, expect: Expect) -> CheckRecord {
    let presentation = if unitary { "unitary" } else { "extended" };
    let name = match expect {
        Expect::Nonzero => format!("T_1 not central at level {}", to_text(level)),
        _ => format!("T_1 central in completed double Yangian ({presentation})"),
    };
    rec(ctx, &name, "coefficients of T_m(u) are central in the completed double Yangian", level)
        .param("m", 1)
        .param("K", k)
        .param("D", d)
        .param("presentation", presentation)
        .expect(expect)
        .outcome((|| {
            let md = VacuumModule::new(ctx, level.clone(), k, d + 1)?;
            let md = if unitary { md.unitary() } else { md };
            completed_commutator_witness(&md, 1, 1, 1)
        })())
}

/// The checks of the `center` suite at the given level. Checks that need a
/// deeper `h`-order than `t.k` raise it to the minimum that makes them
/// meaningful and record the order used.
pub fn center_checks(ctx: &AlgebraContext, level: &Rat, t: CenterTrunc) -> Vec<CheckRecord> {
    let deep = CenterTrunc { k: t.k.max(3), ..t };
    let ms = 1..=max_m(ctx).min(2);
    let mut out: Vec<CheckRecord> = ms.clone().map(|m| central(ctx, level, m, t, Expect::Zero)).collect();
    out.extend(ms.map(|m| central(ctx, &int(0), m, deep, Expect::Nonzero)));
    if ctx.kind == Kind::Orthogonal && max_m(ctx) >= 2 {
        out.push(
            rec(ctx, "ascending = descending T+_2", "alternative form of T⁺_m via reversed fusion points", level)
                .param("K", deep.k)
                .param("D", t.d)
                .param("U", t.u)
                .outcome((|| {
                    let md = VacuumModule::new(ctx, level.clone(), deep.k, t.d)?;
                    let a = build_t_plus(&md, 2, ShiftOrder::Ascending, t.u)?;
                    let d = build_t_plus(&md, 2, ShiftOrder::Descending, t.u)?;
                    Ok(a.coeffs.iter().zip(&d.coeffs).enumerate().find_map(|(e, (x, y))| elem_witness(&elem_sub(x, y), &format!("u^{e}"))))
                })()),
        );
    }
    if max_m(ctx) >= 2 {
        out.push(
            rec(ctx, "sum b_k T+_k divisible by h^2", "Σ_k b_k T⁺_k(u) e^{-khd/du} is divisible by h^m", level)
                .param("m", 2)
                .param("K", deep.k)
                .param("D", t.d)
                .param("U", t.u)
                .outcome((|| divisibility_witness(&VacuumModule::new(ctx, level.clone(), deep.k, t.d)?, 2, 2, t.u))()),
        );
        let crit = ctx.critical_level();
        out.push(
            rec(ctx, "classical limit of Phi_20 is phi_22", "Φ_{m,0} mod h = φ_{m,m}", &crit)
                .param("m", 2)
                .param("K", deep.k)
                .param("D", 2)
                .outcome((|| classical_limit_witness(&VacuumModule::new(ctx, crit.clone(), deep.k, 2)?, 2))()),
        );
    }
    let sd = t.d.min(2);
    out.push(
        rec(ctx, "braiding fixes T+_1 (x) T+_1", "S(z)(T⁺_m(u) 1 ⊗ T⁺_k(v) 1) = T⁺_m(u) 1 ⊗ T⁺_k(v) 1", level)
            .param("K", t.k)
            .param("D", sd)
            .param("U", t.u)
            .outcome((|| {
                let sc = level * int(ctx.sigma());
                let s = scalars_from_shifts(ctx, Some((-ctx.kappa() - &sc, sc)), t.k)?;
                Ok(fixed_point_witness(ctx, &s, t.k, sd, t.u))
            })()),
    );
    out.push(
        rec(ctx, "braiding with shifted crossing moves T+_1 (x) T+_1", "S(z)(T⁺_m(u) 1 ⊗ T⁺_k(v) 1) = T⁺_m(u) 1 ⊗ T⁺_k(v) 1", level)
            .param("K", t.k.max(5))
            .param("D", sd)
            .param("U", t.u)
            .param("crossing shift", "+h")
            .expect(Expect::Nonzero)
            .outcome((|| {
                let sc = level * int(ctx.sigma());
                // the perturbation first reaches the output at h^4
                let k = t.k.max(5);
                let s = scalars_from_shifts(ctx, Some((int(1) - ctx.kappa() - &sc, sc)), k)?;
                Ok(fixed_point_witness(ctx, &s, k, sd, t.u))
            })()),
    );
    out.push(completed(ctx, level, t.k, sd, true, Expect::Zero));
    out.push(completed(ctx, level, t.k, sd, false, Expect::Probe));
    out.push(completed(ctx, &int(0), deep.k, sd, true, Expect::Nonzero));
    out
}

/// Expected-failure sweeps at a level that is not critical.
pub fn negative_checks(ctx: &AlgebraContext, level: &Rat, t: CenterTrunc) -> Vec<CheckRecord> {
    let deep = CenterTrunc { k: t.k.max(3), ..t };
    let mut out: Vec<CheckRecord> = (1..=max_m(ctx).min(2)).map(|m| central(ctx, level, m, deep, Expect::Nonzero)).collect();
    out.push(completed(ctx, level, deep.k, t.d.min(2), true, Expect::Nonzero));
    out
}
