//! `Φₘ(u) = h^{-m} Σ_k b_k 𝕋_k⁺(u)` and its classical limit.
//!
//! The operator `Σ_k b_k 𝕋_k⁺(u) e^{-khd/du}` is divisible by `h^m`; applied
//! to `u^j` this says `Σ_k b_k 𝕋_k⁺(u) (u - kh)^j ≡ 0 mod h^m`. Here each
//! `𝕋_k⁺` uses the descending points `u, u - h, ..., u - (k-1)h`.

use super::tplus::times_shifted_power;
use super::{build_t_plus, CentralSeries, ShiftOrder};
use crate::brauer::b_coefficients;
use crate::classical::vacuum::{elem_axpy as classical_axpy, word_text};
use crate::classical::{ClassicalElem, ClassicalModule, LieBasis};
use crate::context::AlgebraContext;
use crate::engine::{elem_axpy, to_classical, word_text as engine_word, Elem, UFamily, VacuumModule};
use crate::error::{Error, Result};
use crate::report::Witness;
use crate::scalar::rat::{int, to_text, Rat};
use num::Zero;

fn combination(module: &VacuumModule, m: usize, j: u32, u_max: u32) -> Result<UFamily> {
    let b = b_coefficients(&module.ctx, m)?;
    let mut out = vec![Elem::new(); u_max as usize + 1];
    for (k, bk) in b.iter().enumerate() {
        let t = build_t_plus(module, k, ShiftOrder::Descending, u_max)?;
        let shifted = times_shifted_power(&t.coeffs, &int(-(k as i64)), j, module.k);
        let c = module.coef(bk.clone());
        for (slot, x) in out.iter_mut().zip(&shifted) {
            elem_axpy(slot, &c, x);
        }
    }
    Ok(out)
}

/// First coefficient of `Σ_k b_k 𝕋_k⁺(u) (u - kh)^j`, `j <= j_max`, below `h^m`.
pub fn divisibility_witness(module: &VacuumModule, m: usize, j_max: u32, u_max: u32) -> Result<Option<Witness>> {
    for j in 0..=j_max {
        let fam = combination(module, m, j, u_max)?;
        for (e, x) in fam.iter().enumerate() {
            for (w, c) in x {
                if let Some(l) = c.valuation().filter(|&l| l < m) {
                    let loc = format!("(u - kh)^{j}, u^{e}: h^{l} {}", engine_word(w));
                    return Ok(Some(Witness::new(loc, to_text(c.coeff(l)))));
                }
            }
        }
    }
    Ok(None)
}

/// `Φₘ(u)` modulo `h^{K-m}`. Failure of divisibility is reported as an error.
pub fn build_phi(module: &VacuumModule, m: usize, u_max: u32) -> Result<CentralSeries> {
    if module.k <= m {
        return Err(Error::Truncation(format!("Φ_{m} needs h-order above {m}, got {}", module.k)));
    }
    let fam = combination(module, m, 0, u_max)?;
    let mut coeffs = Vec::with_capacity(fam.len());
    for (e, x) in fam.into_iter().enumerate() {
        let mut y = Elem::new();
        for (w, c) in x {
            let q = c.div_h(m).map_err(|_| {
                Error::Internal(format!("Σ b_k 𝕋_k⁺ is not divisible by h^{m} at u^{e}, {}", engine_word(&w)))
            })?;
            y.insert(w, q);
        }
        coeffs.push(y);
    }
    Ok(CentralSeries { m, offsets: ShiftOrder::Descending.offsets(module.ctx.kind, m), symmetrizer_hash: String::new(), coeffs })
}

fn classical_diff(a: &ClassicalElem, b: &ClassicalElem, lie: &LieBasis, label: &str) -> Option<Witness> {
    let mut d = a.clone();
    classical_axpy(&mut d, &-Rat::from_integer(1.into()), b);
    d.iter().next().map(|(w, c)| Witness::new(format!("{label}: {}", word_text(lie, w)), to_text(c)))
}

/// Compare the image of `Φ_{m,0}` modulo `h` with `φ_{m,m}`.
pub fn classical_limit_witness(module: &VacuumModule, m: usize) -> Result<Option<Witness>> {
    let phi = build_phi(module, m, 0)?;
    let h0 = VacuumModule::h_part(&phi.coeffs[0], 0);
    let ctx = &module.ctx;
    let cm = ClassicalModule::new(LieBasis::new(ctx), ctx.critical_level());
    let lhs = to_classical(&cm, &h0);
    let rhs = cm.segal_sugawara(m)?.swap_remove(m);
    Ok(classical_diff(&lhs, &rhs, &cm.lie, &format!("Φ_{m}0 mod h - φ_{m}{m}")))
}

/// First nonzero `f_a(r) φ_{m,m}`, `0 <= r <= r_max`, in `V_c` at the given level.
pub fn segal_sugawara_central_witness(ctx: &AlgebraContext, m: usize, level: &Rat, r_max: u32) -> Result<Option<Witness>> {
    let cm = ClassicalModule::new(LieBasis::new(ctx), level.clone());
    let phi = cm.segal_sugawara(m)?.swap_remove(m);
    for r in 0..=r_max {
        for a in 0..cm.lie.dim() {
            let y = cm.act_elem(a, r, &phi);
            if let Some((w, c)) = y.iter().find(|(_, c)| !Zero::is_zero(*c)) {
                let loc = format!("{}({r}) φ_{m}{m}: {}", cm.lie.name(a), word_text(&cm.lie, w));
                return Ok(Some(Witness::new(loc, to_text(c))));
            }
        }
    }
    Ok(None)
}
