//! Elements `a + bP + cQ` of the algebra spanned by `1, P, Q`, with
//! coefficients that are `h`-series of polynomials in `y = 1/w`.

use crate::context::AlgebraContext;
use crate::error::{Error, Result};
use crate::scalar::hseries::HSeries;
use crate::scalar::rat::{binom, int, Rat};
use crate::scalar::ring::Ring;
use crate::scalar::upoly::UPoly;
use crate::tensor::FSeries;
use num::{One, Zero};

pub type WSeries = HSeries<UPoly>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    One,
    P,
    Q,
}

pub const BASES: [Basis; 3] = [Basis::One, Basis::P, Basis::Q];

#[derive(Clone, Debug, PartialEq)]
pub struct PQ {
    pub one: WSeries,
    pub p: WSeries,
    pub q: WSeries,
    n: i64,
    sign: i64,
}

pub fn wzero(k: usize) -> WSeries {
    HSeries::zero(&UPoly::zero(), k)
}

/// `(w + c h)^{-n} = Σ_j C(-n, j) c^j h^j y^{n+j}` modulo `h^k`.
pub fn inv_pow(n: u32, c: &Rat, k: usize) -> WSeries {
    let mut cpow = Rat::one();
    let coeffs = (0..k)
        .map(|j| {
            let t = UPoly::monomial(n as usize + j, binom(-(n as i64), j as u32) * &cpow);
            cpow *= c;
            t
        })
        .collect();
    HSeries::from_coeffs(&UPoly::zero(), coeffs, k)
}

impl PQ {
    pub fn zero(ctx: &AlgebraContext, k: usize) -> Self {
        PQ { one: wzero(k), p: wzero(k), q: wzero(k), n: ctx.n as i64, sign: ctx.type_sign() }
    }

    pub fn identity(ctx: &AlgebraContext, k: usize) -> Self {
        let mut z = Self::zero(ctx, k);
        z.one = HSeries::constant(UPoly::constant(Rat::one()), k);
        z
    }

    pub fn order(&self) -> usize {
        self.one.order()
    }

    pub fn component(&self, b: Basis) -> &WSeries {
        match b {
            Basis::One => &self.one,
            Basis::P => &self.p,
            Basis::Q => &self.q,
        }
    }

    fn with(&self, one: WSeries, p: WSeries, q: WSeries) -> Self {
        PQ { one, p, q, n: self.n, sign: self.sign }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.with(self.one.add(&o.one), self.p.add(&o.p), self.q.add(&o.q))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.with(self.one.sub(&o.one), self.p.sub(&o.p), self.q.sub(&o.q))
    }

    pub fn neg(&self) -> Self {
        self.with(self.one.neg(), self.p.neg(), self.q.neg())
    }

    /// Product using `P^2 = 1`, `Q^2 = NQ`, `PQ = QP = ±Q`.
    pub fn mul(&self, o: &Self) -> Self {
        let one = self.one.mul(&o.one).add(&self.p.mul(&o.p));
        let p = self.one.mul(&o.p).add(&self.p.mul(&o.one));
        let mixed = self.p.mul(&o.q).add(&self.q.mul(&o.p)).scale(&int(self.sign));
        let q = self.one.mul(&o.q).add(&self.q.mul(&o.one)).add(&mixed).add(&self.q.mul(&o.q).scale(&int(self.n)));
        self.with(one, p, q)
    }

    pub fn map(&self, f: impl Fn(&WSeries) -> WSeries) -> Self {
        self.with(f(&self.one), f(&self.p), f(&self.q))
    }

    pub fn truncate(&self, k: usize) -> Self {
        self.map(|s| s.truncate(k))
    }

    pub fn div_h(&self, j: usize) -> Result<Self> {
        Ok(self.with(self.one.div_h(j)?, self.p.div_h(j)?, self.q.div_h(j)?))
    }

    /// Inverse of an element congruent to `1` modulo `h`.
    pub fn inverse(&self) -> Result<Self> {
        let k = self.order();
        let id = Self::identity_like(self);
        let z = self.sub(&id);
        if [&z.one, &z.p, &z.q].iter().any(|s| !s.coeff(0).is_zero()) {
            return Err(Error::NotUnit("element is not 1 modulo h".into()));
        }
        let mz = z.neg();
        let mut acc = id.clone();
        let mut pw = id;
        for _ in 1..k {
            pw = pw.mul(&mz);
            acc = acc.add(&pw);
        }
        Ok(acc)
    }

    fn identity_like(&self) -> Self {
        let k = self.order();
        self.with(HSeries::constant(UPoly::constant(Rat::one()), k), wzero(k), wzero(k))
    }

    pub fn is_zero(&self) -> bool {
        self.one.is_zero() && self.p.is_zero() && self.q.is_zero()
    }
}

/// `R̄(w + d h)` as an element of span{1, P, Q} modulo `h^k`.
pub fn rbar_pq(ctx: &AlgebraContext, d: &Rat, f: &FSeries, k: usize) -> Result<PQ> {
    if f.order() + 1 < k {
        return Err(Error::Truncation(format!("normalization series of order {} is too short for h^{k}", f.order())));
    }
    let mut scal = wzero(k);
    for r in 0..k {
        let fr = f.coeff(r);
        if !Zero::is_zero(&fr) {
            scal = scal.add(&inv_pow(r as u32, d, k).mul_h(r).scale(&fr));
        }
    }
    let mut out = PQ::zero(ctx, k);
    out.one = scal.clone();
    out.p = scal.mul(&inv_pow(1, d, k).mul_h(1)).neg();
    out.q = scal.mul(&inv_pow(1, &(d - ctx.kappa()), k).mul_h(1));
    Ok(out)
}

/// `h^{-1}(R(w) - 1) = -P y + Q Σ_j κ^j h^j y^{j+1}` modulo `h^k`.
pub fn r_minus_one_over_h(ctx: &AlgebraContext, k: usize) -> PQ {
    let mut g = PQ::zero(ctx, k);
    g.p = HSeries::constant(UPoly::monomial(1, -Rat::one()), k);
    g.q = inv_pow(1, &ctx.kappa(), k);
    g
}

/// Nonzero index lists of `X` rows and `Y` columns.
pub fn row_entries(ctx: &AlgebraContext, b: Basis, i: usize, k: usize) -> Vec<((usize, usize), i64)> {
    match b {
        Basis::One => vec![((i, k), 1)],
        Basis::P => vec![((k, i), 1)],
        Basis::Q => {
            if k == ctx.prime0(i) {
                (0..ctx.n).map(|a| ((a, ctx.prime0(a)), ctx.eps0(i) * ctx.eps0(a))).collect()
            } else {
                vec![]
            }
        }
    }
}

pub fn col_entries(ctx: &AlgebraContext, b: Basis, j: usize, l: usize) -> Vec<((usize, usize), i64)> {
    match b {
        Basis::One => vec![((j, l), 1)],
        Basis::P => vec![((l, j), 1)],
        Basis::Q => {
            if l == ctx.prime0(j) {
                (0..ctx.n).map(|a| ((a, ctx.prime0(a)), ctx.eps0(a) * ctx.eps0(j))).collect()
            } else {
                vec![]
            }
        }
    }
}

/// Terms of the entry `((i,k),(j,l))` of `X M Y` for a two-leg matrix
/// `M_{(α,γ),(β,δ)} = a_{αβ} b_{γδ}`: `(coefficient, α, β, γ, δ)`.
pub fn triple(ctx: &AlgebraContext, x: Basis, y: Basis, (i, k, j, l): (usize, usize, usize, usize)) -> Vec<(i64, [usize; 4])> {
    let mut out = Vec::new();
    for ((al, ga), c1) in row_entries(ctx, x, i, k) {
        for ((be, de), c2) in col_entries(ctx, y, j, l) {
            out.push((c1 * c2, [al, be, ga, de]));
        }
    }
    out
}

/// Coefficient of `y^n` in each `h`-order.
pub fn ycoef(s: &WSeries, n: usize) -> HSeries<Rat> {
    let k = s.order();
    HSeries::from_coeffs(&Rat::zero(), (0..k).map(|i| s.coeff(i).coeff(n)).collect(), k)
}

/// Largest power of `y` present.
pub fn ydeg(s: &WSeries) -> usize {
    s.coeffs().iter().filter_map(|p| p.degree()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat::rat;

    #[test]
    fn rbar_unitary_and_crossing_in_pq_form() {
        for ctx in [AlgebraContext::orthogonal(3).unwrap(), AlgebraContext::symplectic(4).unwrap()] {
            let k = 5;
            let f = FSeries::compute(&ctx.kappa(), k);
            let a = rbar_pq(&ctx, &rat(1, 3), &f, k).unwrap();
            let inv = a.inverse().unwrap();
            assert_eq!(a.mul(&inv), PQ::identity(&ctx, k));
            assert_eq!(inv.mul(&a), PQ::identity(&ctx, k));
        }
    }

    #[test]
    fn inverse_requires_unit() {
        let ctx = AlgebraContext::orthogonal(3).unwrap();
        assert!(PQ::zero(&ctx, 3).inverse().is_err());
    }
}
