//! Polynomial families `Σ_e x_e u^e` of module vectors and the translation operator.

use super::module::{degree, elem_add, elem_axpy, Elem, VacuumModule};
use super::rules::Gen;
use crate::error::{Error, Result};
use crate::scalar::rat::{binom, Rat};
use num::{One, Zero};

/// Coefficients of `u^0, ..., u^U`.
pub type UFamily = Vec<Elem>;

/// `u ↦ u + a h` by binomial expansion, keeping powers of `u` within the family.
pub fn substitute_shift(fam: &UFamily, a: &Rat) -> UFamily {
    let mut out = vec![Elem::new(); fam.len()];
    for (e, x) in fam.iter().enumerate() {
        let mut apow = Rat::one();
        for j in 0..=e {
            let c = binom(e as i64, j as u32) * &apow;
            if !Zero::is_zero(&c) {
                for (w, v) in x {
                    if j < v.order() {
                        elem_add(&mut out[e - j], w.clone(), v.mul_h(j).scale(&c));
                    }
                }
            }
            apow *= a;
        }
    }
    out
}

pub fn family_sub(a: &UFamily, b: &UFamily) -> UFamily {
    let n = a.len().max(b.len());
    (0..n)
        .map(|e| {
            let mut x = a.get(e).cloned().unwrap_or_default();
            if let Some(y) = b.get(e) {
                for (w, v) in y {
                    elem_add(&mut x, w.clone(), v.neg());
                }
            }
            x
        })
        .collect()
}

/// `𝒟 x` for the translation operator: `𝒟 1 = 0` and `𝒟` acts on products
/// of creation modes as the derivation `t^{(-s)} ↦ s t^{(-s-1)}`.
pub fn apply_d(m: &VacuumModule, x: &Elem) -> Result<Elem> {
    let mut out = Elem::new();
    for (w, c) in x {
        if degree(w) + 1 > m.d {
            return Err(Error::Truncation(format!("translation of a degree-{} word exceeds D = {}", degree(w), m.d)));
        }
        for k in 0..w.len() {
            let mut v = w.clone();
            v[k] = Gen { s: w[k].s + 1, ..w[k] };
            let c2 = c.scale(&Rat::from_integer(w[k].s.into()));
            elem_axpy(&mut out, &c2, &m.normal_form(&v));
        }
    }
    Ok(out)
}
