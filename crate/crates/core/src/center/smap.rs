//! The braiding `𝒮(z)` on `𝕋₁⁺(u) ⊗ 𝕋₁⁺(v)`.
//!
//! With `ω = z + u - v`, crossing symmetry turns the braiding of
//! `T⁺_{13}(u) T⁺_{24}(v) (1 ⊗ 1)` into
//! `R̄'(ω - hκ - hσc) ·_{LR} (R̄(ω) T⁺_{13}(u) R̄(ω + hσc)^{-1} T⁺_{24}(v) R̄(ω) (1 ⊗ 1))`,
//! where `·_{LR}` multiplies the first leg on the left and the second on the
//! right. Tracing both legs leaves scalars `s_{abcd}(ω)` in front of
//! `T⁺_{ab}(u) 1 ⊗ T⁺_{cd}(v) 1`. Powers `ω^{-n}` are expanded in `u` and `v`.

use super::elem_witness;
use crate::context::AlgebraContext;
use crate::engine::pq::{rbar_pq, wzero, WSeries, PQ};
use crate::engine::{Coef, Elem, Gen, Word};
use crate::error::Result;
use crate::report::Witness;
use crate::scalar::hseries::HSeries;
use crate::scalar::rat::{binom, int, Rat};
use crate::tensor::{build_pq, prime, FSeries, TensorOp};
use num::Zero;
use std::collections::BTreeMap;

const LEGS: [&str; 2] = ["1", "2"];

fn pq_op(ctx: &AlgebraContext, x: &PQ) -> Result<TensorOp<WSeries>> {
    let proto = wzero(x.order());
    let (p, q) = build_pq(ctx, ("1", "2"), &proto);
    TensorOp::identity(&LEGS, ctx.n, &proto).scale_by(&x.one).add(&p.scale_by(&x.p))?.add(&q.scale_by(&x.q))
}

fn unit(ctx: &AlgebraContext, leg: usize, (a, b): (usize, usize), k: usize) -> TensorOp<WSeries> {
    let proto = wzero(k);
    let one = HSeries::constant(crate::scalar::upoly::UPoly::constant(Rat::from_integer(1.into())), k);
    let mut op = TensorOp::zero(&LEGS, ctx.n, &proto);
    for x in 0..ctx.n {
        let (r, c) = if leg == 0 { (vec![a as u8, x as u8], vec![b as u8, x as u8]) } else { (vec![x as u8, a as u8], vec![x as u8, b as u8]) };
        op.add_entry(r, c, one.clone());
    }
    op
}

/// `s_{abcd}(y)` with `y = 1/ω`, or the trivial braiding when `trivial` is set.
pub fn braiding_scalars(ctx: &AlgebraContext, level: &Rat, k: usize, trivial: bool) -> Result<BTreeMap<[u8; 4], WSeries>> {
    let sc = level * int(ctx.sigma());
    let shifts = if trivial { None } else { Some((-ctx.kappa() - &sc, sc)) };
    scalars_from_shifts(ctx, shifts, k)
}

/// The scalars for `R̄'(ω + a h)` and `R̄(ω + c h)^{-1}` given `(a, c)`; `None` replaces all three factors by `1`.
pub fn scalars_from_shifts(ctx: &AlgebraContext, shifts: Option<(Rat, Rat)>, k: usize) -> Result<BTreeMap<[u8; 4], WSeries>> {
    let n = ctx.n;
    let f = FSeries::compute(&ctx.kappa(), k + 1);
    let (a, b, c) = match shifts {
        None => {
            let id = pq_op(ctx, &PQ::identity(ctx, k))?;
            (id.clone(), id.clone(), id)
        }
        Some((sa, sc)) => (
            prime(ctx, &pq_op(ctx, &rbar_pq(ctx, &sa, &f, k)?)?, "1")?,
            pq_op(ctx, &rbar_pq(ctx, &Rat::zero(), &f, k)?)?,
            pq_op(ctx, &rbar_pq(ctx, &sc, &f, k)?.inverse()?)?,
        ),
    };
    let at = a.transpose("2")?;
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            left.insert((i, j), b.mul(&unit(ctx, 0, (i, j), k))?.mul(&c)?);
            right.insert((i, j), unit(ctx, 1, (i, j), k).mul(&b)?);
        }
    }
    let mut out = BTreeMap::new();
    for ((i, j), l) in &left {
        for ((p, q), r) in &right {
            let x = l.mul(r)?.transpose("2")?;
            let s = at.mul(&x)?.trace();
            if !s.is_zero() {
                out.insert([*i as u8, *j as u8, *p as u8, *q as u8], s);
            }
        }
    }
    Ok(out)
}

/// Vector of the truncated tensor square: words on both factors, powers
/// `u^e`, `v^f` and `z^{-g}`.
pub type SquareElem = BTreeMap<(Word, Word, u32, u32, u32), Coef>;

fn square_add(acc: &mut SquareElem, key: (Word, Word, u32, u32, u32), c: Coef) {
    if c.is_zero() {
        return;
    }
    let v = match acc.remove(&key) {
        Some(old) => old.add(&c),
        None => c,
    };
    if !v.is_zero() {
        acc.insert(key, v);
    }
}

/// `T⁺_{ab}(u) 1` as `(word, u-power, coefficient)` with `u`-powers up to `u_max`, modes up to `d`.
fn t_plus_entry((a, b): (u8, u8), k: usize, d: u32, u_max: u32) -> Vec<(Word, u32, Coef)> {
    let mut out = Vec::new();
    if a == b {
        out.push((Vec::new(), 0, HSeries::constant(Rat::from_integer(1.into()), k)));
    }
    if k > 1 {
        for p in 1..=d.min(u_max + 1) {
            out.push((vec![Gen::new(p, a as usize, b as usize)], p - 1, HSeries::constant(int(-1), k).mul_h(1)));
        }
    }
    out
}

/// `Σ s_{abcd}(ω) T⁺_{ab}(u) 1 ⊗ T⁺_{cd}(v) 1` expanded in `u`, `v`, `z^{-1}`.
pub fn braid_t1_square(scalars: &BTreeMap<[u8; 4], WSeries>, k: usize, d: u32, u_max: u32) -> SquareElem {
    let mut out = SquareElem::new();
    for (idx, s) in scalars {
        let fa = t_plus_entry((idx[0], idx[1]), k, d, u_max);
        let fb = t_plus_entry((idx[2], idx[3]), k, d, u_max);
        for l in 0..k {
            for (ny, c) in s.coeff(l).terms() {
                // y^ny = Σ_a C(-ny, a) (u - v)^a z^{-ny-a}
                for deg in 0..=2 * u_max {
                    let wa = if ny == 0 {
                        if deg == 0 { Rat::from_integer(1.into()) } else { continue }
                    } else {
                        binom(-(ny as i64), deg)
                    };
                    for i in 0..=deg {
                        let (ue, ve) = (i, deg - i);
                        if ue > u_max || ve > u_max {
                            continue;
                        }
                        let sign = if ve % 2 == 0 { 1 } else { -1 };
                        let w = c * &wa * binom(deg as i64, i) * int(sign);
                        if Zero::is_zero(&w) {
                            continue;
                        }
                        let base = HSeries::constant(w, k).mul_h(l);
                        for (w1, e1, c1) in &fa {
                            if ue + e1 > u_max {
                                continue;
                            }
                            for (w2, e2, c2) in &fb {
                                if ve + e2 > u_max {
                                    continue;
                                }
                                let key = (w1.clone(), w2.clone(), ue + e1, ve + e2, ny as u32 + deg);
                                square_add(&mut out, key, base.mul(c1).mul(c2));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// `𝕋₁⁺(u) 1 ⊗ 𝕋₁⁺(v) 1` in the same layout.
pub fn t1_square(n: usize, k: usize, d: u32, u_max: u32) -> SquareElem {
    let mut out = SquareElem::new();
    for a in 0..n as u8 {
        for c in 0..n as u8 {
            for (w1, e1, c1) in t_plus_entry((a, a), k, d, u_max) {
                for (w2, e2, c2) in t_plus_entry((c, c), k, d, u_max) {
                    square_add(&mut out, (w1.clone(), w2, e1, e2, 0), c1.mul(&c2));
                }
            }
        }
    }
    out
}

/// First coefficient where `𝒮(z)(𝕋₁⁺(u) ⊗ 𝕋₁⁺(v))` differs from its input.
pub fn smap_fixed_point_witness(ctx: &AlgebraContext, level: &Rat, k: usize, d: u32, u_max: u32, trivial: bool) -> Result<Option<Witness>> {
    let scalars = braiding_scalars(ctx, level, k, trivial)?;
    Ok(fixed_point_witness(ctx, &scalars, k, d, u_max))
}

/// The same comparison for braiding scalars computed elsewhere.
pub fn fixed_point_witness(ctx: &AlgebraContext, scalars: &BTreeMap<[u8; 4], WSeries>, k: usize, d: u32, u_max: u32) -> Option<Witness> {
    let mut diff = braid_t1_square(scalars, k, d, u_max);
    for (key, c) in t1_square(ctx.n, k, d, u_max) {
        square_add(&mut diff, key, c.neg());
    }
    diff.into_iter().next().and_then(|((w1, w2, e, f, g), c)| {
        let label = format!("u^{e} v^{f} z^-{g}, {} ⊗", crate::engine::word_text(&w1));
        elem_witness(&Elem::from([(w2, c)]), &label)
    })
}
