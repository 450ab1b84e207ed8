//! The operator series `𝕋ₘ(u) = tr S_[m] T⁺_[m](u_[m]) T_[m](u_[m] - hκ)^{-1}`
//! on the truncated vacuum module.
//!
//! `T(w)^{-1} = Σ_j (-h t(w))^j` with `w^{-r}` expanded in `h`, so outputs are
//! Laurent families in `u`. Both factors are applied leg by leg, the inverses
//! first in the order `T_m^{-1}, ..., T_1^{-1}` read from the right.

use super::{elem_witness, ShiftOrder};
use crate::brauer::{max_m, symmetrizer};
use crate::engine::{degree, elem_axpy, elem_cap, elem_sub, Ann, Coef, Elem, Gen, VacuumModule, Word};
use crate::error::{Error, Result};
use crate::report::Witness;
use crate::scalar::hseries::HSeries;
use crate::scalar::rat::{binom, int, Rat};
use num::Zero;
use std::collections::BTreeMap;

/// `Σ_e x_e u^e` with finitely many integer powers.
pub type LFamily = BTreeMap<i64, Elem>;

fn lf_axpy(acc: &mut LFamily, e: i64, c: &Coef, x: &Elem) {
    let slot = acc.entry(e).or_default();
    elem_axpy(slot, c, x);
    if slot.is_empty() {
        acc.remove(&e);
    }
}

fn max_degree(x: &Elem) -> u32 {
    x.keys().map(|w| degree(w)).max().unwrap_or(0)
}

/// `h t_{ac}(u + s h) x` with `t(w) = Σ_r t^{(r)} w^{-r}`.
fn ht_apply(module: &VacuumModule, (a, c): (usize, usize), s: &Rat, x: &LFamily) -> LFamily {
    let k = module.k;
    let mut out = LFamily::new();
    for (e, xe) in x {
        // annihilators reach past the degree through the central terms
        for r in 1..=max_degree(xe) + k as u32 + 1 {
            let y = module.act_elem(Ann::new(r, a, c), xe);
            if y.is_empty() {
                continue;
            }
            for i in 0..k.saturating_sub(1) {
                let w = binom(-(r as i64), i as u32) * s.pow(i as i32);
                if Zero::is_zero(&w) {
                    continue;
                }
                lf_axpy(&mut out, e - r as i64 - i as i64, &HSeries::constant(w, k).mul_h(i + 1), &y);
            }
        }
    }
    out
}

/// `T(u + s h)^{-1}_{a b} x` for every `a`.
fn inverse_column(module: &VacuumModule, b: usize, s: &Rat, x: &LFamily) -> Vec<LFamily> {
    let n = module.ctx.n;
    let mut cur: Vec<LFamily> = (0..n).map(|c| if c == b { x.clone() } else { LFamily::new() }).collect();
    let mut total = cur.clone();
    for j in 1..module.k {
        let next: Vec<LFamily> = (0..n)
            .map(|a| {
                let mut acc = LFamily::new();
                for (c, y) in cur.iter().enumerate() {
                    if !y.is_empty() {
                        for (e, v) in ht_apply(module, (a, c), s, y) {
                            lf_axpy(&mut acc, e, &module.one(), &v);
                        }
                    }
                }
                acc
            })
            .collect();
        let sign = module.coef(int(if j % 2 == 0 { 1 } else { -1 }));
        for (t, y) in total.iter_mut().zip(&next) {
            for (e, v) in y {
                lf_axpy(t, *e, &sign, v);
            }
        }
        cur = next;
    }
    total
}

/// `T⁺_{ba}(u + d h) x`.
fn t_plus_apply(module: &VacuumModule, (b, a): (usize, usize), d: i64, x: &LFamily) -> LFamily {
    let k = module.k;
    let mut out = if a == b { x.clone() } else { LFamily::new() };
    for p in 1..=module.d {
        let g = Gen::new(p, b, a);
        for (e0, xe) in x {
            let y = module.mul_left_elem(g, xe);
            if y.is_empty() {
                continue;
            }
            for e in 0..p {
                let hp = (p - e) as usize;
                if hp >= k {
                    continue;
                }
                let c = -binom(p as i64 - 1, e) * int(d).pow((p - 1 - e) as i32);
                if !Zero::is_zero(&c) {
                    lf_axpy(&mut out, e0 + e as i64, &HSeries::constant(c, k).mul_h(hp), &y);
                }
            }
        }
    }
    out
}

/// `𝕋ₘ(u) x` with the fusion points of the algebra type.
pub fn operator_on(module: &VacuumModule, m: usize, x: &Elem) -> Result<LFamily> {
    let ctx = &module.ctx;
    if m > max_m(ctx) {
        return Err(Error::Config(format!("m = {m} exceeds the range of symmetrizers for {}", ctx.label())));
    }
    let s = symmetrizer(ctx, m)?;
    let offsets = ShiftOrder::Fusion.offsets(ctx.kind, m);
    let shifts: Vec<Rat> = offsets.iter().map(|&d| int(d) - ctx.kappa()).collect();
    let start = LFamily::from([(0, x.clone())]);
    let mut out = LFamily::new();
    for ((row, col), coef) in s.entries() {
        // T_l^{-1} on legs 1..m in that order, summing the inner indices k_l
        let mut stage: Vec<(Vec<usize>, LFamily)> = vec![(Vec::new(), start.clone())];
        for l in 0..m {
            let mut next = Vec::new();
            for (ks, y) in &stage {
                for (kl, z) in inverse_column(module, row[l] as usize, &shifts[l], y).into_iter().enumerate() {
                    if !z.is_empty() {
                        let mut ks2 = ks.clone();
                        ks2.push(kl);
                        next.push((ks2, z));
                    }
                }
            }
            stage = next;
        }
        for (ks, mut y) in stage {
            for l in (0..m).rev() {
                y = t_plus_apply(module, (col[l] as usize, ks[l]), offsets[l], &y);
            }
            let c = module.coef(coef.clone());
            for (e, v) in &y {
                lf_axpy(&mut out, *e, &c, v);
            }
        }
    }
    Ok(out)
}

/// Basis words `t^{(-s_1)}_{..} ... 1` of degree at most `d`, sorted,
/// in the generators the module keeps.
pub fn basis_words(module: &VacuumModule, d: u32) -> Vec<Word> {
    let n = module.ctx.n;
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Word> = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            let dw = degree(w);
            for s in 1..=d - dw {
                for i in 0..n {
                    for j in 0..n {
                        let g = Gen::new(s, i, j);
                        if module.is_kept(g) && w.last().is_none_or(|l| *l <= g) {
                            let mut v = w.clone();
                            v.push(g);
                            next.push(v);
                        }
                    }
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Commutators of `𝕋ₘ(u)` with `t^{(±r)}_{ij}`, `r <= r_max`, on basis
/// words of degree at most `x_deg`, compared at degree at most `d`.
/// The module passed in must carry the degree cap `d + 1`.
pub fn completed_commutator_witness(module: &VacuumModule, m: usize, r_max: u32, x_deg: u32) -> Result<Option<Witness>> {
    let n = module.ctx.n;
    let d = module.d.checked_sub(1).ok_or_else(|| Error::Config("degree cap must be positive".into()))?;
    let mut cache: BTreeMap<Word, LFamily> = BTreeMap::new();
    let mut op = |w: &Word, x: &Elem| -> Result<LFamily> {
        if let Some(v) = cache.get(w) {
            return Ok(v.clone());
        }
        let v = operator_on(module, m, x)?;
        cache.insert(w.clone(), v.clone());
        Ok(v)
    };
    let apply_to_elem = |op: &mut dyn FnMut(&Word, &Elem) -> Result<LFamily>, e: &Elem| -> Result<LFamily> {
        let mut acc = LFamily::new();
        for (w, c) in e {
            for (p, v) in op(w, &BTreeMap::from([(w.clone(), module.one())]))? {
                lf_axpy(&mut acc, p, c, &v);
            }
        }
        Ok(acc)
    };
    for w in basis_words(module, x_deg) {
        let x = module.word(w.clone());
        let tx = op(&w, &x)?;
        for r in 1..=r_max {
            for i in 0..n {
                for j in 0..n {
                    for ann in [true, false] {
                        let act = |e: &Elem| if ann { module.act_elem(Ann::new(r, i, j), e) } else { module.mul_left_elem(Gen::new(r, i, j), e) };
                        let left = apply_to_elem(&mut op, &act(&x))?;
                        let mut diff = LFamily::new();
                        let keys: std::collections::BTreeSet<i64> = left.keys().chain(tx.keys()).copied().collect();
                        for e in keys {
                            let a = left.get(&e).cloned().unwrap_or_default();
                            let b = tx.get(&e).map(&act).unwrap_or_default();
                            let dlt = elem_cap(&elem_sub(&a, &b), d);
                            if !dlt.is_empty() {
                                diff.insert(e, dlt);
                            }
                        }
                        if let Some((e, v)) = diff.into_iter().next() {
                            let mode = if ann { format!("t({r})_{}{}", i + 1, j + 1) } else { format!("t(-{r})_{}{}", i + 1, j + 1) };
                            let label = format!("[𝕋_{m}(u), {mode}] on {}, u^{e}", crate::engine::word_text(&w));
                            return Ok(elem_witness(&v, &label));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}
