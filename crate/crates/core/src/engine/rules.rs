//! Coefficient tables for reordering modes.
//!
//! Creation modes obey `R(u - v) T⁺_1(u) T⁺_2(v) = T⁺_2(v) T⁺_1(u) R(u - v)`.
//! An annihilation mode passes a creation mode through
//! `T_1(u) T⁺_2(v) = R̄(w + hσc/2)^{-1} T⁺_2(v) T_1(u) R̄(w - hσc/2)`.
//! Both are expanded with `w = u - v` and `|v| < |u|`.

use super::pq::{r_minus_one_over_h, rbar_pq, triple, ycoef, ydeg, Basis, BASES, PQ};
use crate::context::AlgebraContext;
use crate::error::{Error, Result};
use crate::scalar::hseries::HSeries;
use crate::scalar::rat::{binom, int, Rat};
use crate::scalar::ring::Ring;
use crate::tensor::FSeries;
use num::{One, Zero};

pub type Coef = HSeries<Rat>;

/// The creation mode `t^{(-s)}_{ij}`, zero-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub s: u32,
    pub i: u8,
    pub j: u8,
}

impl Gen {
    pub fn new(s: u32, i: usize, j: usize) -> Self {
        Gen { s, i: i as u8, j: j as u8 }
    }
}

/// The annihilation mode `t^{(r)}_{ij}`, `r >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ann {
    pub r: u32,
    pub i: u8,
    pub j: u8,
}

impl Ann {
    pub fn new(r: u32, i: usize, j: usize) -> Self {
        Ann { r, i: i as u8, j: j as u8 }
    }
}

/// Weight of `u^{-n-b} v^b` in `(u - v)^{-n}`.
fn weight(n: usize, b: usize) -> Rat {
    if n == 0 {
        if b == 0 {
            Rat::one()
        } else {
            Rat::zero()
        }
    } else {
        binom((n + b - 1) as i64, b as u32)
    }
}

/// `[x, y]` for creation modes: linear terms and ordered quadratic terms.
#[derive(Clone, Debug, Default)]
pub struct Bracket {
    pub linear: Vec<(Coef, Gen)>,
    pub quadratic: Vec<(Coef, Gen, Gen)>,
}

/// Terms of `t^{(r)}_{ij} t^{(-s)}_{kl}` after moving the annihilation mode right.
#[derive(Clone, Debug, Default)]
pub struct Passage {
    pub scalar: Option<Coef>,
    pub ann: Vec<(Coef, Ann)>,
    pub cre: Vec<(Coef, Gen)>,
    pub mixed: Vec<(Coef, Gen, Ann)>,
}

type Grid = [[PQCoef; 3]; 3];
type PQCoef = super::pq::WSeries;

/// Precomputed series for a fixed algebra, level and `h`-order.
pub struct RuleTables {
    pub ctx: AlgebraContext,
    pub k: usize,
    g: PQ,
    scalar: PQ,
    ann: Grid,
    mixed: Grid,
}

fn grid(a: &PQ, b: &PQ, mut f: impl FnMut(Basis, Basis, PQCoef) -> PQCoef) -> Grid {
    let mut cell = |x: usize, y: usize| f(BASES[x], BASES[y], a.component(BASES[x]).mul(b.component(BASES[y])));
    [[cell(0, 0), cell(0, 1), cell(0, 2)], [cell(1, 0), cell(1, 1), cell(1, 2)], [cell(2, 0), cell(2, 1), cell(2, 2)]]
}

impl RuleTables {
    pub fn new(ctx: &AlgebraContext, level: &Rat, k: usize) -> Result<Self> {
        let kk = k + 2;
        let f = FSeries::compute(&ctx.kappa(), kk);
        let half = level * int(ctx.sigma()) / int(2);
        let a = rbar_pq(ctx, &half, &f, kk)?.inverse()?;
        let b = rbar_pq(ctx, &-half, &f, kk)?;
        let scalar = PQ::identity(ctx, kk).sub(&a.mul(&b)).div_h(2)?;
        let mut err = None;
        let ann = grid(&a, &b, |x, y, ab| {
            let one = if x == Basis::One && y == Basis::One { Ring::one_like(&ab) } else { Ring::zero_like(&ab) };
            match one.sub(&ab).div_h(1) {
                Ok(s) => s.truncate(k),
                Err(e) => {
                    err = Some(e);
                    ab.truncate(k)
                }
            }
        });
        if let Some(e) = err {
            return Err(Error::Internal(format!("passage coefficient not divisible by h: {e}")));
        }
        let mixed = grid(&a, &b, |_, _, ab| ab.truncate(k));
        Ok(RuleTables { ctx: ctx.clone(), k, g: r_minus_one_over_h(ctx, k), scalar, ann, mixed })
    }

    /// Tables for `R = 1` and `R̄ = 1`: every mode commutes and the level drops out.
    pub fn trivial(ctx: &AlgebraContext, k: usize) -> Self {
        let z = PQ::zero(ctx, k);
        let zg = || std::array::from_fn(|_| std::array::from_fn(|_| super::pq::wzero(k)));
        let mut mixed: Grid = zg();
        mixed[0][0] = PQ::identity(ctx, k).one;
        RuleTables { ctx: ctx.clone(), k, g: z.clone(), scalar: z, ann: zg(), mixed }
    }

    /// Drop the `Q` part of the creation relation, leaving the type A relation `R(u) = 1 - hP/u`.
    #[cfg(test)]
    pub(crate) fn drop_q(&mut self) {
        self.g.q = super::pq::wzero(self.k);
    }

    fn zero(&self) -> Coef {
        HSeries::zero(&Rat::zero(), self.k)
    }

    /// `[t^{(-r)}_{ij}, t^{(-s)}_{kl}]`.
    pub fn bracket(&self, x: Gen, y: Gen) -> Bracket {
        let ctx = &self.ctx;
        let idx = (x.i as usize, y.i as usize, x.j as usize, y.j as usize);
        let (r, s) = (x.s as usize, y.s as usize);
        let mut out = Bracket::default();
        for xb in BASES {
            let gx = self.g.component(xb);
            if gx.is_zero() {
                continue;
            }
            for n in 1..=ydeg(gx) {
                let c = ycoef(gx, n);
                if c.is_zero() {
                    continue;
                }
                // linear: g t_1 - t_1 g
                let w = weight(n, s - 1);
                let p = (r + n + s - 1) as u32;
                for (sign, xx, yy) in [(1, xb, Basis::One), (-1, Basis::One, xb)] {
                    for (m, [al, be, ga, de]) in triple(ctx, xx, yy, idx) {
                        if ga == de {
                            out.linear.push((c.scale(&(&w * int(sign * m))), Gen::new(p, al, be)));
                        }
                    }
                }
                // quadratic: -h (g t_1 t_2 - t_2 t_1 g)
                let ch = c.mul_h(1);
                for b in 0..s {
                    let w = weight(n, b);
                    let (p, q) = ((r + n + b) as u32, (s - b) as u32);
                    for (m, [al, be, ga, de]) in triple(ctx, xb, Basis::One, idx) {
                        out.quadratic.push((ch.scale(&(&w * int(-m))), Gen::new(p, al, be), Gen::new(q, ga, de)));
                    }
                    for (m, [al, be, ga, de]) in triple(ctx, Basis::One, xb, idx) {
                        out.quadratic.push((ch.scale(&(&w * int(m))), Gen::new(q, ga, de), Gen::new(p, al, be)));
                    }
                }
            }
        }
        out.linear.retain(|(c, _)| !c.is_zero());
        out.quadratic.retain(|(c, _, _)| !c.is_zero());
        out
    }

    /// `t^{(r)}_{ij} t^{(-s)}_{kl}` rewritten with annihilation modes on the right.
    pub fn passage(&self, a: Ann, y: Gen) -> Passage {
        let ctx = &self.ctx;
        let idx = (a.i as usize, y.i as usize, a.j as usize, y.j as usize);
        let (r, s) = (a.r as usize, y.s as usize);
        let mut out = Passage::default();
        // scalar part at n = r - s + 1
        if r + 1 > s {
            let n = r + 1 - s;
            let w = weight(n, s - 1);
            let mut acc = self.zero();
            for xb in BASES {
                let c = ycoef(self.scalar.component(xb), n).truncate(self.k);
                for (m, [al, be, ga, de]) in triple(ctx, xb, Basis::One, idx) {
                    if al == be && ga == de {
                        acc = acc.add(&c.scale(&(&w * int(m))));
                    }
                }
            }
            if !acc.is_zero() {
                out.scalar = Some(acc);
            }
        }
        for (xi, xb) in BASES.iter().enumerate() {
            for (yi, yb) in BASES.iter().enumerate() {
                let terms = triple(ctx, *xb, *yb, idx);
                if terms.is_empty() {
                    continue;
                }
                let ann = &self.ann[xi][yi];
                let mix = &self.mixed[xi][yi];
                for n in 0..=ydeg(ann).max(ydeg(mix)) {
                    let ca = ycoef(ann, n);
                    let cm = ycoef(mix, n);
                    if !ca.is_zero() {
                        // annihilation-linear: b = s - 1
                        let b = s - 1;
                        if r > n + b {
                            let w = weight(n, b);
                            let rp = (r - n - b) as u32;
                            for (m, [al, be, ga, de]) in &terms {
                                if ga == de {
                                    out.ann.push((ca.scale(&(&w * int(*m))), Ann::new(rp, *al, *be)));
                                }
                            }
                        }
                        // creation-linear: n + b = r, with the opposite sign
                        if n <= r && r - n < s {
                            let b = r - n;
                            let w = weight(n, b);
                            let q = (s - b) as u32;
                            for (m, [al, be, ga, de]) in &terms {
                                if al == be {
                                    out.cre.push((ca.scale(&(&w * int(-*m))), Gen::new(q, *ga, *de)));
                                }
                            }
                        }
                    }
                    if !cm.is_zero() {
                        for b in 0..s {
                            if r <= n + b {
                                break;
                            }
                            let w = weight(n, b);
                            if Zero::is_zero(&w) {
                                continue;
                            }
                            let (rp, q) = ((r - n - b) as u32, (s - b) as u32);
                            for (m, [al, be, ga, de]) in &terms {
                                out.mixed.push((cm.scale(&(&w * int(*m))), Gen::new(q, *ga, *de), Ann::new(rp, *al, *be)));
                            }
                        }
                    }
                }
            }
        }
        out.ann.retain(|(c, _)| !c.is_zero());
        out.cre.retain(|(c, _)| !c.is_zero());
        out.mixed.retain(|(c, _, _)| !c.is_zero());
        out
    }
}
