//! Construction of `𝕋ₘ⁺(u)`.

use crate::brauer::{fusion_offsets, max_m, symmetrizer};
use crate::engine::{elem_axpy, Elem, Gen, UFamily, VacuumModule};
use crate::error::{Error, Result};
use crate::scalar::hseries::HSeries;
use crate::scalar::rat::{binom, int, to_text, Rat};
use num::Zero;
use sha2::{Digest, Sha256};
use std::collections::HashMap;

/// Placement of the evaluation points `u_i = u + d_i h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftOrder {
    /// The fusion points of the algebra type.
    Fusion,
    /// `(u - (m-1)h, ..., u - h, u)`.
    Ascending,
    /// `(u, u - h, ..., u - (m-1)h)`.
    Descending,
}

impl ShiftOrder {
    pub fn offsets(self, kind: crate::Kind, m: usize) -> Vec<i64> {
        let m = m as i64;
        match self {
            ShiftOrder::Fusion => fusion_offsets(kind, m as usize),
            ShiftOrder::Ascending => (1..=m).map(|i| i - m).collect(),
            ShiftOrder::Descending => (1..=m).map(|i| 1 - i).collect(),
        }
    }
}

/// A `u`-polynomial family of module vectors with its construction data.
#[derive(Clone, Debug)]
pub struct CentralSeries {
    pub m: usize,
    pub offsets: Vec<i64>,
    /// SHA-256 of the symmetrizer entries in text form.
    pub symmetrizer_hash: String,
    /// Coefficients of `u^0, ..., u^U`.
    pub coeffs: UFamily,
}

/// `T⁺_{ba}(u + d h) x` on a family, keeping powers of `u` up to `u_max`.
fn apply_leg(module: &VacuumModule, (b, a): (u8, u8), d: i64, x: &UFamily, u_max: u32) -> UFamily {
    let k = module.k;
    let len = u_max as usize + 1;
    let mut out = vec![Elem::new(); len];
    if a == b {
        out[..x.len()].clone_from_slice(x);
    }
    for p in 1..=module.d {
        let es: Vec<u32> = (0..p).filter(|&e| e <= u_max && ((p - e) as usize) < k).collect();
        if es.is_empty() {
            continue;
        }
        let g = Gen::new(p, b as usize, a as usize);
        let prods: Vec<Elem> = x.iter().map(|xe| module.mul_left_elem(g, xe)).collect();
        for e in es {
            let c = -binom(p as i64 - 1, e) * int(d).pow((p - 1 - e) as i32);
            if Zero::is_zero(&c) {
                continue;
            }
            let coef = HSeries::constant(c, k).mul_h((p - e) as usize);
            for (e2, pr) in prods.iter().enumerate() {
                if let Some(slot) = out.get_mut(e as usize + e2) {
                    elem_axpy(slot, &coef, pr);
                }
            }
        }
    }
    out
}

/// `tr S_[m] T⁺_1(u + d_1 h) ... T⁺_m(u + d_m h) 1` with `u`-powers up to `u_max`.
pub fn build_t_plus(module: &VacuumModule, m: usize, order: ShiftOrder, u_max: u32) -> Result<CentralSeries> {
    let ctx = &module.ctx;
    if m > max_m(ctx) {
        return Err(Error::Config(format!("m = {m} exceeds the range of symmetrizers for {}", ctx.label())));
    }
    let s = symmetrizer(ctx, m)?;
    let offsets = order.offsets(ctx.kind, m);
    let mut hasher = Sha256::new();
    for ((r, c), v) in s.entries() {
        hasher.update(format!("{r:?}{c:?}{};", to_text(v)));
    }
    let symmetrizer_hash = format!("{:x}", hasher.finalize());

    let mut vac = vec![Elem::new(); u_max as usize + 1];
    vac[0] = module.vacuum();
    let mut memo: HashMap<Vec<(u8, u8)>, UFamily> = HashMap::new();
    let mut total = vec![Elem::new(); u_max as usize + 1];
    for ((row, col), coef) in s.entries() {
        let pairs: Vec<(u8, u8)> = (0..m).map(|l| (col[l], row[l])).collect();
        let fam = suffix_product(module, &pairs, &offsets, &vac, u_max, &mut memo);
        let c = module.coef(coef.clone());
        for (slot, x) in total.iter_mut().zip(&fam) {
            elem_axpy(slot, &c, x);
        }
    }
    Ok(CentralSeries { m, offsets, symmetrizer_hash, coeffs: total })
}

fn suffix_product(
    module: &VacuumModule,
    pairs: &[(u8, u8)],
    offsets: &[i64],
    vac: &UFamily,
    u_max: u32,
    memo: &mut HashMap<Vec<(u8, u8)>, UFamily>,
) -> UFamily {
    if pairs.is_empty() {
        return vac.clone();
    }
    if let Some(f) = memo.get(pairs) {
        return f.clone();
    }
    let l = offsets.len() - pairs.len();
    let inner = suffix_product(module, &pairs[1..], offsets, vac, u_max, memo);
    let out = apply_leg(module, pairs[0], offsets[l], &inner, u_max);
    memo.insert(pairs.to_vec(), out.clone());
    out
}

/// Multiply a family by `(u + c h)^j`.
pub fn times_shifted_power(fam: &UFamily, c: &Rat, j: u32, k: usize) -> UFamily {
    let mut out = vec![Elem::new(); fam.len()];
    for e in 0..=j {
        let hp = (j - e) as usize;
        if hp >= k {
            continue;
        }
        let coef = binom(j as i64, e) * c.pow(hp as i32);
        if Zero::is_zero(&coef) {
            continue;
        }
        let coef = HSeries::constant(coef, k).mul_h(hp);
        for (e2, x) in fam.iter().enumerate() {
            if let Some(slot) = out.get_mut(e as usize + e2) {
                elem_axpy(slot, &coef, x);
            }
        }
    }
    out
}
