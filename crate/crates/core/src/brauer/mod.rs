//! Brauer-algebra symmetrizers on `(C^N)^{⊗m}` and the fusion procedure.
//!
//! The symmetrizer `S_[m]` is the image of the one-dimensional idempotent of
//! the Brauer algebra `B_m(±N)`. It is computed here as the projection onto
//! the joint fixed space of all `s_ij` that is annihilated by all `ε_ij`,
//! along the span of the images of `s_ij - 1` and `ε_ij`. The fusion
//! procedure evaluates the ordered product of `R(u_i - u_j)` at the points
//! `u_[m]`, and the two constructions must agree.

use crate::context::{AlgebraContext, Kind};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::report::{CheckRecord, Witness};
use crate::scalar::mpoly::Vars;
use crate::scalar::rat::{binom, int, to_text, Rat};
use crate::scalar::ratfun::RatFun;
use crate::tensor::{all_indices, build_pq, build_r, TensorOp};
use num::{One};

/// Leg labels `"1".."m"`.
pub fn leg_names(m: usize) -> Vec<String> {
    (1..=m).map(|i| i.to_string()).collect()
}

fn refs(v: &[String]) -> Vec<&str> {
    v.iter().map(|s| s.as_str()).collect()
}

/// Images of `s_ij` and `ε_ij` on legs `i < j` of an `m`-leg space:
/// `±P_ij` and `±Q_ij` with the sign `+` in the orthogonal case.
pub fn brauer_generators(ctx: &AlgebraContext, m: usize) -> Result<Vec<(TensorOp<Rat>, TensorOp<Rat>)>> {
    let names = leg_names(m);
    let legs = refs(&names);
    let sign = int(ctx.type_sign());
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (p, q) = build_pq(ctx, (legs[i], legs[j]), &int(0));
            out.push((p.scale(&sign).embed(&legs)?, q.scale(&sign).embed(&legs)?));
        }
    }
    Ok(out)
}

fn to_mat(op: &TensorOp<Rat>, idx: &[Vec<u8>]) -> Mat {
    let pos: std::collections::BTreeMap<&Vec<u8>, usize> = idx.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let mut m = Mat::zeros(idx.len(), idx.len());
    for ((r, c), v) in op.entries() {
        m.set(pos[r], pos[c], v.clone());
    }
    m
}

fn from_mat(m: &Mat, legs: &[&str], n: usize, idx: &[Vec<u8>]) -> TensorOp<Rat> {
    let mut op = TensorOp::zero(legs, n, &int(0));
    for (a, r) in idx.iter().enumerate() {
        for (b, c) in idx.iter().enumerate() {
            op.add_entry(r.clone(), c.clone(), m.get(a, b).clone());
        }
    }
    op
}

/// `S_[m]` as the projection described in the module docs. `m = 0` gives the
/// scalar `1` on no legs.
pub fn symmetrizer(ctx: &AlgebraContext, m: usize) -> Result<TensorOp<Rat>> {
    let names = leg_names(m);
    let legs = refs(&names);
    if m <= 1 {
        return Ok(TensorOp::identity(&legs, ctx.n, &int(0)));
    }
    let idx = all_indices(ctx.n, m);
    let dim = idx.len();
    let id = Mat::identity(dim);
    let mut stacked = Mat::zeros(0, dim);
    let mut images = Mat::zeros(dim, 0);
    for (s, e) in brauer_generators(ctx, m)? {
        let a = to_mat(&s, &idx);
        let a = Mat { data: a.data.iter().zip(&id.data).map(|(x, y)| x - y).collect(), ..a };
        let b = to_mat(&e, &idx);
        stacked = stacked.vstack(&a).vstack(&b);
        images = images.hstack(&a).hstack(&b);
    }
    let fixed = stacked.kernel();
    let killed = images.image();
    if fixed.cols + killed.cols != dim {
        return Err(Error::Internal(format!(
            "fixed space ({}) and kernel ({}) do not split a space of dimension {dim}",
            fixed.cols, killed.cols
        )));
    }
    let basis = fixed.hstack(&killed);
    let mut diag = Mat::zeros(dim, dim);
    for i in 0..fixed.cols {
        diag.set(i, i, Rat::one());
    }
    let s = basis.mul(&diag).mul(&basis.inverse()?);
    Ok(from_mat(&s, &legs, ctx.n, &idx))
}

/// Offsets `d_i` with `u_i = u + d_i h` for the fusion points `u_[m]`.
pub fn fusion_offsets(kind: Kind, m: usize) -> Vec<i64> {
    match kind {
        Kind::Orthogonal => (1..=m as i64).map(|i| i - m as i64).collect(),
        Kind::Symplectic => (1..=m as i64).map(|i| 1 - i).collect(),
    }
}

/// `(1/m!) Π_{i<j} R_ij(u_i - u_j)` with symbolic `u` and `h`, in
/// lexicographic order of the pairs. Errors unless all entries are constants.
pub fn fusion_eval(ctx: &AlgebraContext, m: usize) -> Result<TensorOp<Rat>> {
    let names = leg_names(m);
    let legs = refs(&names);
    let vars = Vars::new(&["h", "u"]);
    let h = RatFun::var(&vars, "h");
    let u = RatFun::var(&vars, "u");
    let pts: Vec<RatFun> = fusion_offsets(ctx.kind, m).iter().map(|&d| u.add(&h.scale(&int(d)))).collect();
    let mut acc = TensorOp::identity(&legs, ctx.n, &u);
    for i in 0..m {
        for j in i + 1..m {
            let arg = pts[i].sub(&pts[j]);
            let r = build_r(ctx, (legs[i], legs[j]), &arg, &h)
                .map_err(|e| Error::Domain(format!("fusion point is a pole of R_{}{}: {e}", i + 1, j + 1)))?;
            acc = acc.mul(&r.embed(&legs)?)?;
        }
    }
    let fact = crate::scalar::rat::factorial(m as u32);
    let mut out = TensorOp::zero(&legs, ctx.n, &int(0));
    for ((r, c), v) in acc.entries() {
        let k = v.as_constant().ok_or_else(|| Error::Internal(format!("entry {r:?},{c:?} depends on u or h: {v}")))?;
        out.add_entry(r.clone(), c.clone(), k / &fact);
    }
    Ok(out)
}

/// `a_m = ±(±N+m-3)(±N+2m-2) / (m(±N+2m-4))`, upper sign orthogonal.
pub fn trace_coefficient(ctx: &AlgebraContext, m: usize) -> Result<Rat> {
    if m == 0 {
        return Err(Error::Config("a_m needs m >= 1".into()));
    }
    let s = ctx.type_sign();
    let n = s * ctx.n as i64;
    let m = m as i64;
    let den = m * (n + 2 * m - 4);
    if den == 0 {
        return Err(Error::Domain(format!("a_m has a vanishing denominator for {} and m = {m}", ctx.label())));
    }
    Ok(int(s) * int((n + m - 3) * (n + 2 * m - 2)) / int(den))
}

/// `b_k = (-1)^k a_{k+1} ... a_m C(m, k)`.
pub fn b_coefficients(ctx: &AlgebraContext, m: usize) -> Result<Vec<Rat>> {
    (0..=m)
        .map(|k| {
            let mut b = binom(m as i64, k as u32) * int(if k % 2 == 0 { 1 } else { -1 });
            for j in k + 1..=m {
                b *= trace_coefficient(ctx, j)?;
            }
            Ok(b)
        })
        .collect()
}

/// Largest `m` for which `S_[m]` is nonzero on `(C^N)^{⊗m}` in the symplectic case.
pub fn max_m(ctx: &AlgebraContext) -> usize {
    match ctx.kind {
        Kind::Orthogonal => usize::MAX,
        Kind::Symplectic => ctx.n / 2,
    }
}

fn witness(a: &TensorOp<Rat>, b: &TensorOp<Rat>) -> Result<Option<Witness>> {
    crate::tensor::checks::op_witness(a, b, to_text)
}

/// Fusion, idempotency and trace-reduction checks for `m = 1..=m_max`.
pub fn brauer_checks(ctx: &AlgebraContext, m_max: usize) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let mut prev: Option<TensorOp<Rat>> = None;
    for m in 1..=m_max.min(max_m(ctx)) {
        let tag = |name: &str, anchor: &str| CheckRecord::new(name, anchor).param("algebra", ctx.label()).param("m", m);
        let s = symmetrizer(ctx, m);
        out.push(tag("symmetrizer = fusion", "fusion procedure at u_[m] gives S_[m]").outcome((|| {
            let s = s.clone()?;
            witness(&s, &fusion_eval(ctx, m)?)
        })()));
        out.push(tag("symmetrizer idempotent", "S_[m]^2 = S_[m]").outcome((|| {
            let s = s.clone()?;
            witness(&s.mul(&s)?, &s)
        })()));
        out.push(tag("trace reduction", "tr_m S_[m] = a_m S_[m-1]").outcome((|| {
            let s = s.clone()?;
            let names = leg_names(m);
            let lower = match &prev {
                Some(p) => p.clone(),
                None => TensorOp::identity(&[], ctx.n, &int(0)),
            };
            witness(&s.partial_trace(&[names[m - 1].as_str()])?, &lower.scale(&trace_coefficient(ctx, m)?))
        })()));
        prev = s.ok();
    }
    out
}

#[cfg(test)]
mod tests;
