//! `P`, `Q`, the rational R-matrix, the normalization series and `R̄`.

use super::op::TensorOp;
use crate::context::AlgebraContext;
use crate::error::{Error, Result};
use crate::scalar::hseries::HSeries;
use crate::scalar::rat::{binom, int, Rat};
use crate::scalar::ratfun::RatFun;
use crate::scalar::ring::Ring;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

/// `P = Σ e_ij ⊗ e_ji` and `Q = Σ ε_i ε_j e_ij ⊗ e_i'j'` on the two given legs.
pub fn build_pq<C: Ring>(ctx: &AlgebraContext, legs: (&str, &str), proto: &C) -> (TensorOp<C>, TensorOp<C>) {
    let n = ctx.n;
    let one = proto.one_like();
    let mut p = TensorOp::zero(&[legs.0, legs.1], n, proto);
    let mut q = TensorOp::zero(&[legs.0, legs.1], n, proto);
    for i in 0..n {
        for j in 0..n {
            p.add_entry(vec![i as u8, j as u8], vec![j as u8, i as u8], one.clone());
            let s = ctx.eps0(i) * ctx.eps0(j);
            let v = if s > 0 { one.clone() } else { one.neg() };
            q.add_entry(vec![i as u8, ctx.prime0(i) as u8], vec![j as u8, ctx.prime0(j) as u8], v);
        }
    }
    (p, q)
}

/// Prime transposition `A ↦ A'` of one leg, with the context's signs.
pub fn prime<C: Ring>(ctx: &AlgebraContext, op: &TensorOp<C>, leg: &str) -> Result<TensorOp<C>> {
    op.prime_transpose(leg, &|i| ctx.eps0(i), &|i| ctx.prime0(i))
}

/// `R(x) = 1 - h P / x + h Q / (x - h κ)` with exact rational-function entries.
pub fn build_r(ctx: &AlgebraContext, legs: (&str, &str), x: &RatFun, h: &RatFun) -> Result<TensorOp<RatFun>> {
    let (p, q) = build_pq(ctx, legs, x);
    let a = h.div(x)?;
    let b = h.div(&x.sub(&h.scale(&ctx.kappa())))?;
    TensorOp::identity(&[legs.0, legs.1], ctx.n, x).sub(&p.scale_by(&a))?.add(&q.scale_by(&b))
}

/// Coefficients `f_0 = 1, f_1, ..., f_M` of the normalization series
/// `f(x) = 1 + Σ f_r x^{-r}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FSeries {
    #[serde(with = "crate::scalar::rat::serde_text")]
    pub kappa: Rat,
    #[serde(with = "crate::report::rat_vec")]
    pub coeffs: Vec<Rat>,
}

impl FSeries {
    /// Solve `f(x) f(x + κ) = (1 - x^{-2})^{-1}` order by order.
    pub fn compute(kappa: &Rat, m: usize) -> Self {
        let mut f: Vec<Rat> = vec![Rat::one()];
        for r in 1..=m {
            f.push(Rat::zero());
            let g = shift_series(&f, kappa, r);
            let mut rhs = if r % 2 == 0 { Rat::one() } else { Rat::zero() };
            // unknown f_r appears once in f and once in g
            let mut known = g[r].clone();
            for a in 1..r {
                known += &f[a] * &g[r - a];
            }
            rhs -= known;
            f[r] = rhs / int(2);
        }
        FSeries { kappa: kappa.clone(), coeffs: f }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, r: usize) -> Rat {
        self.coeffs.get(r).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficients of `f(x + a)` in powers of `x^{-1}` through order `m`.
    pub fn shifted(&self, a: &Rat, m: usize) -> Vec<Rat> {
        shift_series(&self.coeffs, a, m)
    }

    /// Coefficients of `f(-x)`.
    pub fn reflected(&self) -> Vec<Rat> {
        self.coeffs.iter().enumerate().map(|(r, c)| if r % 2 == 1 { -c } else { c.clone() }).collect()
    }
}

/// `Σ c_s (x + a)^{-s}` re-expanded in `x^{-1}` through order `m`.
fn shift_series(c: &[Rat], a: &Rat, m: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); m + 1];
    out[0] = c[0].clone();
    for (s, cs) in c.iter().enumerate().skip(1) {
        if Zero::is_zero(cs) {
            continue;
        }
        let mut apow = Rat::one();
        for j in 0..=m.saturating_sub(s) {
            if s + j > m {
                break;
            }
            out[s + j] += cs * binom(-(s as i64), j as u32) * &apow;
            apow *= a;
        }
    }
    out
}

/// Product of two series in `x^{-1}`, truncated at order `m`.
pub fn series_mul(a: &[Rat], b: &[Rat], m: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); m + 1];
    for (i, x) in a.iter().enumerate().take(m + 1) {
        for (j, y) in b.iter().enumerate().take(m + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(w + c h)^{-n}` modulo `h^k`.
pub fn inv_pow_shift(w: &RatFun, n: u32, c: &Rat, k: usize) -> Result<HSeries<RatFun>> {
    let mut coeffs = Vec::with_capacity(k);
    let mut cpow = Rat::one();
    for j in 0..k {
        let e = n as i32 + j as i32;
        coeffs.push(w.pow(-e)?.scale(&(binom(-(n as i64), j as u32) * &cpow)));
        cpow *= c;
    }
    Ok(HSeries::from_coeffs(w, coeffs, k))
}

/// `R̄(w + c h) = f((w + c h)/h) R(w + c h)` modulo `h^k`.
pub fn build_rbar(
    ctx: &AlgebraContext,
    legs: (&str, &str),
    w: &RatFun,
    c: &Rat,
    f: &FSeries,
    k: usize,
) -> Result<TensorOp<HSeries<RatFun>>> {
    if f.order() + 1 < k {
        return Err(Error::Truncation(format!("normalization series of order {} is too short for h^{k}", f.order())));
    }
    let proto = HSeries::zero(w, k);
    let mut scal = proto.clone();
    for r in 0..k {
        let fr = f.coeff(r);
        if !Zero::is_zero(&fr) {
            scal = scal.add(&inv_pow_shift(w, r as u32, c, k)?.mul_h(r).scale(&fr));
        }
    }
    let a = inv_pow_shift(w, 1, c, k)?.mul_h(1).neg();
    let b = inv_pow_shift(w, 1, &(c - ctx.kappa()), k)?.mul_h(1);
    let (p, q) = build_pq(ctx, legs, &proto);
    let r = TensorOp::identity(&[legs.0, legs.1], ctx.n, &proto).add(&p.scale_by(&a))?.add(&q.scale_by(&b))?;
    Ok(r.scale_by(&scal))
}

/// Ordering of multi-leg products of `R̄`-factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// Factor order `(i, j)` of the product over legs `1..n` and `n+1..n+m`.
pub fn r_product_order(n: usize, m: usize, dir: Direction) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    match dir {
        Direction::Forward => {
            for i in 1..=n {
                for j in (1..=m).rev() {
                    out.push((i, n + j));
                }
            }
        }
        Direction::Backward => {
            for i in (1..=n).rev() {
                for j in 1..=m {
                    out.push((i, n + j));
                }
            }
        }
    }
    out
}

/// The product of `R̄_{i,n+j}(z + u_i - v_j + c h)` over the ordering of
/// [`r_product_order`]. Variables are `z, u1..un, v1..vm` in `vars`.
#[allow(clippy::too_many_arguments)]
pub fn build_r_product(
    ctx: &AlgebraContext,
    vars: &crate::scalar::mpoly::Vars,
    n: usize,
    m: usize,
    dir: Direction,
    c: &Rat,
    f: &FSeries,
    k: usize,
) -> Result<TensorOp<HSeries<RatFun>>> {
    let labels: Vec<String> = (1..=n + m).map(|i| i.to_string()).collect();
    let legs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let z = RatFun::var(vars, "z");
    let proto = HSeries::zero(&z, k);
    let mut acc = TensorOp::identity(&legs, ctx.n, &proto);
    for (i, j) in r_product_order(n, m, dir) {
        let arg = z.add(&RatFun::var(vars, &format!("u{i}"))).sub(&RatFun::var(vars, &format!("v{}", j - n)));
        let r = build_rbar(ctx, (legs[i - 1], legs[j - 1]), &arg, c, f, k)?;
        acc = acc.mul(&r.embed(&legs)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::mpoly::Vars;
    use crate::scalar::rat::rat;

    fn ctxs() -> Vec<AlgebraContext> {
        vec![AlgebraContext::orthogonal(3).unwrap(), AlgebraContext::symplectic(4).unwrap()]
    }

    #[test]
    fn pq_relations() {
        for ctx in ctxs() {
            let (p, q) = build_pq(&ctx, ("1", "2"), &int(0));
            let id = TensorOp::identity(&["1", "2"], ctx.n, &int(0));
            assert_eq!(p.mul(&p).unwrap(), id);
            assert_eq!(q.mul(&q).unwrap(), q.scale(&int(ctx.n as i64)));
            let sq = q.scale(&int(ctx.type_sign()));
            assert_eq!(p.mul(&q).unwrap(), sq);
            assert_eq!(q.mul(&p).unwrap(), sq);
            for leg in ["1", "2"] {
                assert_eq!(prime(&ctx, &p, leg).unwrap(), q);
                assert_eq!(prime(&ctx, &q, leg).unwrap(), p);
            }
            assert_eq!(p.transpose("1").unwrap(), p.transpose("2").unwrap());
        }
    }

    #[test]
    fn partial_traces_of_p_and_q() {
        for ctx in ctxs() {
            let (p, q) = build_pq(&ctx, ("1", "2"), &int(0));
            let id1 = TensorOp::identity(&["1"], ctx.n, &int(0));
            assert_eq!(p.partial_trace(&["2"]).unwrap(), id1);
            assert_eq!(q.partial_trace(&["2"]).unwrap(), id1);
        }
    }

    #[test]
    fn fseries_low_terms() {
        for ctx in ctxs() {
            let f = FSeries::compute(&ctx.kappa(), 4);
            assert_eq!(f.coeffs, vec![int(1), int(0), rat(1, 2), ctx.kappa() / int(2), rat(3, 8)]);
        }
    }

    #[test]
    fn fseries_reflection_identity() {
        let m = 12;
        let mut target = vec![Rat::zero(); m + 1];
        for r in (0..=m).step_by(2) {
            target[r] = Rat::one();
        }
        for ctx in ctxs() {
            let f = FSeries::compute(&ctx.kappa(), m);
            assert_eq!(series_mul(&f.coeffs, &f.shifted(&ctx.kappa(), m), m), target);
            assert_eq!(series_mul(&f.coeffs, &f.reflected(), m), target);
        }
    }

    #[test]
    fn rbar_unitarity_low_order() {
        let ctx = AlgebraContext::orthogonal(3).unwrap();
        let v = Vars::new(&["u"]);
        let u = RatFun::var(&v, "u");
        let f = FSeries::compute(&ctx.kappa(), 4);
        let a = build_rbar(&ctx, ("1", "2"), &u, &int(0), &f, 4).unwrap();
        let b = build_rbar(&ctx, ("1", "2"), &u.neg(), &int(0), &f, 4).unwrap();
        let prod = a.mul(&b).unwrap();
        let id = TensorOp::identity(&["1", "2"], 3, a.proto());
        assert_eq!(prod, id);
    }

    #[test]
    fn product_orders() {
        let fmt = |o: Vec<(usize, usize)>| o.iter().map(|(a, b)| format!("{a}{b}")).collect::<Vec<_>>().join(" ");
        assert_eq!(fmt(r_product_order(3, 2, Direction::Forward)), "15 14 25 24 35 34");
        assert_eq!(fmt(r_product_order(3, 2, Direction::Backward)), "34 35 24 25 14 15");
    }

    #[test]
    fn r_product_unitarity() {
        let ctx = AlgebraContext::orthogonal(3).unwrap();
        let v = Vars::new(&["z", "u1", "v1"]);
        let f = FSeries::compute(&ctx.kappa(), 3);
        let fwd = build_r_product(&ctx, &v, 1, 1, Direction::Forward, &int(0), &f, 3).unwrap();
        let w = RatFun::var(&v, "z").add(&RatFun::var(&v, "u1")).sub(&RatFun::var(&v, "v1"));
        let back = build_rbar(&ctx, ("1", "2"), &w.neg(), &int(0), &f, 3).unwrap();
        assert_eq!(fwd.mul(&back).unwrap(), TensorOp::identity(&["1", "2"], 3, fwd.proto()));
    }
}
