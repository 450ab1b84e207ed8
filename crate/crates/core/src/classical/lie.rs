//! The Lie algebra `g_N` spanned by `f_ij` with `f_ij = -ε_i ε_j f_j'i'`.

use crate::context::AlgebraContext;
use crate::scalar::rat::{int, Rat};
use num::Zero;
use std::collections::BTreeMap;

/// A sparse linear combination of basis indices.
pub type Comb = BTreeMap<usize, Rat>;

pub fn comb_add(acc: &mut Comb, k: usize, c: Rat) {
    if c.is_zero() {
        return;
    }
    let v = acc.remove(&k).unwrap_or_else(Rat::zero) + c;
    if !v.is_zero() {
        acc.insert(k, v);
    }
}

#[derive(Clone, Debug)]
pub struct LieBasis {
    pub ctx: AlgebraContext,
    /// Representative pairs `(i, j)`, zero-based, in lexicographic order.
    pub elems: Vec<(usize, usize)>,
    index: BTreeMap<(usize, usize), usize>,
    consts: Vec<Vec<Comb>>,
}

impl LieBasis {
    pub fn new(ctx: &AlgebraContext) -> Self {
        let n = ctx.n;
        let mut elems = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let dual = (ctx.prime0(j), ctx.prime0(i));
                let self_dual = dual == (i, j);
                let vanishes = self_dual && ctx.eps0(i) * ctx.eps0(j) > 0;
                if !vanishes && (i, j) <= dual {
                    elems.push((i, j));
                }
            }
        }
        let index = elems.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let mut b = LieBasis { ctx: ctx.clone(), elems, index, consts: Vec::new() };
        let d = b.dim();
        b.consts = (0..d)
            .map(|x| (0..d).map(|y| b.bracket_pairs(b.elems[x], b.elems[y])).collect())
            .collect();
        b
    }

    pub fn dim(&self) -> usize {
        self.elems.len()
    }

    /// `f_ij` in the basis: `Some((index, coefficient))`, or `None` if it vanishes.
    pub fn express(&self, i: usize, j: usize) -> Option<(usize, Rat)> {
        if let Some(&k) = self.index.get(&(i, j)) {
            return Some((k, int(1)));
        }
        let (ip, jp) = (self.ctx.prime0(j), self.ctx.prime0(i));
        self.index.get(&(ip, jp)).map(|&k| (k, int(-self.ctx.eps0(i) * self.ctx.eps0(j))))
    }

    /// `(P - Q)_{(i,k),(j,l)}`.
    pub fn pq(&self, i: usize, k: usize, j: usize, l: usize) -> i64 {
        let c = &self.ctx;
        let p = (i == l && k == j) as i64;
        let q = (k == c.prime0(i) && l == c.prime0(j)) as i64 * c.eps0(i) * c.eps0(j);
        p - q
    }

    /// `[f_ij, f_kl]` read off from `[F_1, F_2] = (P - Q) F_2 - F_2 (P - Q)`.
    pub fn bracket_pairs(&self, (i, j): (usize, usize), (k, l): (usize, usize)) -> Comb {
        let mut out = Comb::new();
        for b in 0..self.ctx.n {
            let c1 = self.pq(i, k, j, b);
            if c1 != 0 {
                if let Some((x, s)) = self.express(b, l) {
                    comb_add(&mut out, x, s * int(c1));
                }
            }
            let c2 = self.pq(i, b, j, l);
            if c2 != 0 {
                if let Some((x, s)) = self.express(k, b) {
                    comb_add(&mut out, x, s * int(-c2));
                }
            }
        }
        out
    }

    /// Structure constants `[e_a, e_b] = Σ c e_c`.
    pub fn bracket(&self, a: usize, b: usize) -> &Comb {
        &self.consts[a][b]
    }

    /// Invariant form `σ (P - Q)_{(i,k),(j,l)}` on basis elements; the
    /// central term of `[f_a(r), f_b(s)]` is `r δ_{r+s,0} form(a, b) c`.
    pub fn form(&self, a: usize, b: usize) -> Rat {
        let (i, j) = self.elems[a];
        let (k, l) = self.elems[b];
        int(self.ctx.sigma() * self.pq(i, k, j, l))
    }

    pub fn name(&self, a: usize) -> String {
        let (i, j) = self.elems[a];
        format!("f{}{}", i + 1, j + 1)
    }
}
