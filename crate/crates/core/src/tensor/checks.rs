//! Identity checks for `P`, `Q`, `R(u)`, `f` and `R̄(u)`.

use super::op::TensorOp;
use super::rmatrix::{build_pq, build_r, build_rbar, prime, series_mul, FSeries};
use crate::context::AlgebraContext;
use crate::error::Result;
use crate::report::{CheckRecord, Witness};
use crate::scalar::hseries::HSeries;
use crate::scalar::mpoly::Vars;
use crate::scalar::rat::{int, to_text, Rat};
use crate::scalar::ratfun::RatFun;
use crate::scalar::ring::Ring;
use num::{One, Zero};

/// Witness for the first differing entry of two operators.
pub fn op_witness<C: Ring>(a: &TensorOp<C>, b: &TensorOp<C>, show: impl Fn(&C) -> String) -> Result<Option<Witness>> {
    Ok(a.first_difference(b)?.map(|(r, c, v)| Witness::new(format!("row {r:?} col {c:?}"), show(&v))))
}

/// Text of the lowest nonzero `h`-coefficient of a series.
pub fn show_hseries(s: &HSeries<RatFun>) -> String {
    match s.valuation() {
        Some(j) => format!("h^{j}: {}", s.coeff(j)),
        None => "0".into(),
    }
}

fn rf_witness(a: &TensorOp<RatFun>, b: &TensorOp<RatFun>) -> Result<Option<Witness>> {
    op_witness(a, b, |v| v.to_string())
}

fn hs_witness(a: &TensorOp<HSeries<RatFun>>, b: &TensorOp<HSeries<RatFun>>) -> Result<Option<Witness>> {
    op_witness(a, b, show_hseries)
}

fn rec(ctx: &AlgebraContext, name: &str, anchor: &str) -> CheckRecord {
    CheckRecord::new(name, anchor).param("algebra", ctx.label())
}

/// Relations among `P` and `Q` and their transposes.
pub fn pq_checks(ctx: &AlgebraContext) -> Vec<CheckRecord> {
    let z = int(0);
    let (p, q) = build_pq(ctx, ("1", "2"), &z);
    let id = TensorOp::identity(&["1", "2"], ctx.n, &z);
    let w = |a: &TensorOp<Rat>, b: &TensorOp<Rat>| op_witness(a, b, to_text);
    let sq = q.scale(&int(ctx.type_sign()));
    let mut out = vec![
        rec(ctx, "P^2 = 1", "P^2 = 1").outcome(p.mul(&p).and_then(|x| w(&x, &id))),
        rec(ctx, "Q^2 = NQ", "Q^2 = N Q").outcome(q.mul(&q).and_then(|x| w(&x, &q.scale(&int(ctx.n as i64))))),
        rec(ctx, "PQ = QP = ±Q", "PQ = QP = ±Q").outcome((|| {
            if let Some(x) = w(&p.mul(&q)?, &sq)? {
                return Ok(Some(x));
            }
            w(&q.mul(&p)?, &sq)
        })()),
    ];
    for leg in ["1", "2"] {
        out.push(rec(ctx, &format!("P' = Q (leg {leg})"), "P' = Q").outcome(prime(ctx, &p, leg).and_then(|x| w(&x, &q))));
        out.push(rec(ctx, &format!("Q' = P (leg {leg})"), "Q' = P").outcome(prime(ctx, &q, leg).and_then(|x| w(&x, &p))));
    }
    out.push(
        rec(ctx, "P^t1 = P^t2", "partial transposes of P agree")
            .outcome((|| w(&p.transpose("1")?, &p.transpose("2")?))()),
    );
    out.push(
        rec(ctx, "Q'1 = Q'2", "prime transposes of Q agree")
            .outcome((|| w(&prime(ctx, &q, "1")?, &prime(ctx, &q, "2")?))()),
    );
    out
}

/// Yang-Baxter equation and the two quadratic identities of `R(u)`, exactly.
pub fn rmatrix_checks(ctx: &AlgebraContext) -> Vec<CheckRecord> {
    let vars = Vars::new(&["h", "u", "v"]);
    let h = RatFun::var(&vars, "h");
    let u = RatFun::var(&vars, "u");
    let v = RatFun::var(&vars, "v");
    let legs = ["1", "2", "3"];
    let ybe = (|| {
        let r12 = build_r(ctx, ("1", "2"), &u, &h)?.embed(&legs)?;
        let r13 = build_r(ctx, ("1", "3"), &u.add(&v), &h)?.embed(&legs)?;
        let r23 = build_r(ctx, ("2", "3"), &v, &h)?.embed(&legs)?;
        let lhs = TensorOp::product(&[r12.clone(), r13.clone(), r23.clone()])?;
        let rhs = TensorOp::product(&[r23, r13, r12])?;
        rf_witness(&lhs, &rhs)
    })();
    let target = || -> Result<TensorOp<RatFun>> {
        let c = RatFun::constant(&vars, Rat::one()).sub(&h.mul(&h).div(&u.mul(&u))?);
        Ok(TensorOp::identity(&["1", "2"], ctx.n, &u).scale_by(&c))
    };
    let unitary = (|| {
        let a = build_r(ctx, ("1", "2"), &u, &h)?.mul(&build_r(ctx, ("1", "2"), &u.neg(), &h)?)?;
        rf_witness(&a, &target()?)
    })();
    let mut out = vec![
        rec(ctx, "Yang-Baxter equation", "R12(u) R13(u+v) R23(v) = R23(v) R13(u+v) R12(u)").outcome(ybe),
        rec(ctx, "R(u) R(-u)", "R(u) R(-u) = 1 - h^2 u^-2").outcome(unitary),
    ];
    for leg in ["1", "2"] {
        let cross = (|| {
            let shifted = build_r(ctx, ("1", "2"), &u.add(&h.scale(&ctx.kappa())), &h)?;
            let a = build_r(ctx, ("1", "2"), &u, &h)?.mul(&prime(ctx, &shifted, leg)?)?;
            rf_witness(&a, &target()?)
        })();
        out.push(
            rec(ctx, &format!("R(u) R(u+hk)' (leg {leg})"), "R(u) R(u + h kappa)' = 1 - h^2 u^-2").outcome(cross),
        );
    }
    out.extend(pq_checks(ctx));
    out
}

/// Low coefficients of `f` and both functional equations through order `m`.
pub fn fseries_checks(ctx: &AlgebraContext, m: usize) -> Vec<CheckRecord> {
    let kappa = ctx.kappa();
    let f = FSeries::compute(&kappa, m.max(4));
    let expect = [int(1), int(0), crate::scalar::rat::rat(1, 2), &kappa / int(2), crate::scalar::rat::rat(3, 8)];
    let low = expect
        .iter()
        .enumerate()
        .find(|(r, e)| &f.coeff(*r) != *e)
        .map(|(r, _)| Witness::rat(format!("f_{r}"), &f.coeff(r)));
    let mut target = vec![Rat::zero(); m + 1];
    for r in (0..=m).step_by(2) {
        target[r] = Rat::one();
    }
    let first_diff = |got: Vec<Rat>| {
        got.iter()
            .zip(&target)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(r, (a, b))| Witness::rat(format!("u^-{r}"), &(a - b)))
    };
    vec![
        rec(ctx, "f low coefficients", "f(u) = 1 + u^-2/2 + kappa u^-3/2 + 3u^-4/8 + ...").outcome(Ok(low)),
        rec(ctx, "f(u) f(u+k)", "f(u) f(u + kappa) = (1 - u^-2)^-1")
            .param("M", m)
            .outcome(Ok(first_diff(series_mul(&f.coeffs, &f.shifted(&kappa, m), m)))),
        rec(ctx, "f(u) f(-u)", "f(u) f(-u) = (1 - u^-2)^-1")
            .param("M", m)
            .outcome(Ok(first_diff(series_mul(&f.coeffs, &f.reflected(), m)))),
    ]
}

/// Crossing symmetry and unitarity of `R̄(u)` modulo `h^k`.
pub fn rbar_checks(ctx: &AlgebraContext, k: usize, m: usize) -> Vec<CheckRecord> {
    let vars = Vars::new(&["u"]);
    let u = RatFun::var(&vars, "u");
    let f = FSeries::compute(&ctx.kappa(), m);
    let z = int(0);
    let kappa = ctx.kappa();
    let id = || TensorOp::identity(&["1", "2"], ctx.n, &HSeries::zero(&u, k));
    let rb = |w: &RatFun, c: &Rat| build_rbar(ctx, ("1", "2"), w, c, &f, k);
    let tag = |r: CheckRecord| r.param("K", k).param("M", m);
    let mut out = Vec::new();
    for leg in ["1", "2"] {
        let cross = (|| hs_witness(&rb(&u, &z)?.mul(&prime(ctx, &rb(&u, &kappa)?, leg)?)?, &id()))();
        out.push(tag(rec(ctx, &format!("crossing symmetry (leg {leg})"), "Rbar(u) Rbar(u + h kappa)' = 1")).outcome(cross));
        let c3 = (|| hs_witness(&prime(ctx, &rb(&u.neg(), &z)?, leg)?, &rb(&u, &kappa)?))();
        out.push(tag(rec(ctx, &format!("Rbar(-u)' = Rbar(u+hk) (leg {leg})"), "Rbar(-u)' = Rbar(u + h kappa)")).outcome(c3));
    }
    let uni = (|| hs_witness(&rb(&u, &z)?.mul(&rb(&u.neg(), &z)?)?, &id()))();
    out.push(tag(rec(ctx, "unitarity", "Rbar(u) Rbar(-u) = 1")).outcome(uni));
    out
}
