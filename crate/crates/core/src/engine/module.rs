//! The vacuum module over the dual Yangian in a truncated PBW basis.
//!
//! Vectors are combinations of sorted words `t^{(-s_1)}_{i_1j_1} ... 1`
//! with `h`-series coefficients. Words of total mode degree above `D`
//! and powers `h^K` and beyond are dropped; neither the creation
//! reordering nor the annihilation passage lowers `Σ s` below the
//! degree of the created part, so kept terms are exact.

use super::rules::{Ann, Bracket, Coef, Gen, Passage, RuleTables};
use crate::context::AlgebraContext;
use crate::error::Result;
use crate::scalar::hseries::HSeries;
use crate::scalar::rat::{binom, int, rat, Rat};
use num::{One, Zero};
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

pub type Word = Vec<Gen>;

/// A vector of the truncated vacuum module.
pub type Elem = BTreeMap<Word, Coef>;

pub fn degree(w: &[Gen]) -> u32 {
    w.iter().map(|g| g.s).sum()
}

pub fn elem_add(acc: &mut Elem, w: Word, c: Coef) {
    if c.is_zero() {
        return;
    }
    let v = match acc.remove(&w) {
        Some(old) => old.add(&c),
        None => c,
    };
    if !v.is_zero() {
        acc.insert(w, v);
    }
}

pub fn elem_axpy(acc: &mut Elem, c: &Coef, x: &Elem) {
    for (w, v) in x {
        elem_add(acc, w.clone(), c.mul(v));
    }
}

pub fn elem_sub(a: &Elem, b: &Elem) -> Elem {
    let mut out = a.clone();
    for (w, v) in b {
        elem_add(&mut out, w.clone(), v.neg());
    }
    out
}

/// Drop words above degree `d`.
pub fn elem_cap(e: &Elem, d: u32) -> Elem {
    e.iter().filter(|(w, _)| degree(w) <= d).map(|(w, c)| (w.clone(), c.clone())).collect()
}

/// Which relations the creation modes satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Presentation {
    /// Only the `RTT` relation among creation modes; all `N^2` generators stay.
    Extended,
    /// The quotient by `T⁺(u) T⁺(u + hκ)' = 1`: generators outside a basis
    /// of `g_N` are eliminated and words use the remaining ones only.
    Unitary,
}

pub struct VacuumModule {
    pub ctx: AlgebraContext,
    pub level: Rat,
    pub k: usize,
    pub d: u32,
    pub presentation: Presentation,
    /// `kept[i][j]` marks generators that survive elimination.
    kept: Vec<Vec<bool>>,
    tables: RuleTables,
    brackets: RefCell<HashMap<(Gen, Gen), Bracket>>,
    passages: RefCell<HashMap<(Ann, Gen), Passage>>,
    mul_memo: RefCell<HashMap<(Gen, Word, usize), Elem>>,
    act_memo: RefCell<HashMap<(Ann, Word), Elem>>,
}

impl VacuumModule {
    pub fn new(ctx: &AlgebraContext, level: Rat, k: usize, d: u32) -> Result<Self> {
        Ok(VacuumModule {
            ctx: ctx.clone(),
            tables: RuleTables::new(ctx, &level, k)?,
            level,
            k,
            d,
            presentation: Presentation::Extended,
            kept: vec![vec![true; ctx.n]; ctx.n],
            brackets: RefCell::new(HashMap::new()),
            passages: RefCell::new(HashMap::new()),
            mul_memo: RefCell::new(HashMap::new()),
            act_memo: RefCell::new(HashMap::new()),
        })
    }

    /// Module over the degenerate relations with trivial R-matrices.
    pub fn trivial(ctx: &AlgebraContext, k: usize, d: u32) -> Self {
        let mut m = Self::new(ctx, Rat::zero(), k, d).expect("level 0 tables");
        m.tables = RuleTables::trivial(ctx, k);
        m
    }

    /// Switch to the quotient by `T⁺(u) T⁺(u + hκ)' = 1`.
    pub fn unitary(mut self) -> Self {
        let c = &self.ctx;
        for i in 0..c.n {
            for j in 0..c.n {
                let dual = (c.prime0(j), c.prime0(i));
                let vanishes = dual == (i, j) && c.eps0(i) * c.eps0(j) > 0;
                self.kept[i][j] = !vanishes && (i, j) <= dual;
            }
        }
        self.presentation = Presentation::Unitary;
        self.mul_memo.borrow_mut().clear();
        self.act_memo.borrow_mut().clear();
        self
    }

    pub fn is_kept(&self, g: Gen) -> bool {
        self.kept[g.i as usize][g.j as usize]
    }

    #[cfg(test)]
    pub(crate) fn drop_q(mut self) -> Self {
        self.tables.drop_q();
        self
    }

    pub fn one(&self) -> Coef {
        HSeries::constant(Rat::one(), self.k)
    }

    pub fn coef(&self, c: Rat) -> Coef {
        HSeries::constant(c, self.k)
    }

    pub fn vacuum(&self) -> Elem {
        BTreeMap::from([(Vec::new(), self.one())])
    }

    pub fn word(&self, w: Word) -> Elem {
        BTreeMap::from([(w, self.one())])
    }

    pub fn bracket(&self, x: Gen, y: Gen) -> Bracket {
        if let Some(b) = self.brackets.borrow().get(&(x, y)) {
            return b.clone();
        }
        let b = self.tables.bracket(x, y);
        self.brackets.borrow_mut().insert((x, y), b.clone());
        b
    }

    pub fn passage(&self, a: Ann, y: Gen) -> Passage {
        if let Some(p) = self.passages.borrow().get(&(a, y)) {
            return p.clone();
        }
        let p = self.tables.passage(a, y);
        self.passages.borrow_mut().insert((a, y), p.clone());
        p
    }

    /// Normal form of `x · w` for a sorted word `w`.
    pub fn mul_left(&self, x: Gen, w: &[Gen]) -> Elem {
        self.mul_left_to(x, w, self.k)
    }

    /// `x · w` modulo `h^prec`.
    fn mul_left_to(&self, x: Gen, w: &[Gen], prec: usize) -> Elem {
        if prec == 0 || x.s + degree(w) > self.d {
            return Elem::new();
        }
        let kept = self.is_kept(x);
        if kept && (w.is_empty() || x <= w[0]) {
            let mut v = Vec::with_capacity(w.len() + 1);
            v.push(x);
            v.extend_from_slice(w);
            return self.word(v);
        }
        let key = (x, w.to_vec(), prec);
        if let Some(v) = self.mul_memo.borrow().get(&key) {
            return v.clone();
        }
        let out = if kept {
            let y = w[0];
            let rest = &w[1..];
            let mut out = self.mul_left_elem_to(y, &self.mul_left_to(x, rest, prec), prec);
            let br = self.bracket(x, y);
            for (c, g) in &br.linear {
                let Some(p) = left(c, prec) else { continue };
                elem_axpy(&mut out, c, &self.mul_left_to(*g, rest, p));
            }
            for (c, p, q) in &br.quadratic {
                let Some(pr) = left(c, prec) else { continue };
                let inner = self.mul_left_to(*q, rest, pr);
                elem_axpy(&mut out, c, &self.mul_left_elem_to(*p, &inner, pr));
            }
            out
        } else {
            self.eliminate(x, w, prec)
        };
        let out = if prec < self.k { self.cut(out, prec) } else { out };
        self.mul_memo.borrow_mut().insert(key, out.clone());
        out
    }

    /// Drop the coefficients of `h^prec` and above.
    fn cut(&self, e: Elem, prec: usize) -> Elem {
        e.into_iter()
            .filter_map(|(w, c)| {
                let c = HSeries::from_coeffs(&Rat::zero(), c.coeffs()[..prec].to_vec(), self.k);
                (!c.is_zero()).then_some((w, c))
            })
            .collect()
    }

    /// `x · w` for an eliminated generator `x = t^{(-s)}_{ij}`, from the
    /// `u^{s-1}` coefficient of `t⁺(u) + t⁺(u + hκ)' = h t⁺(u) t⁺(u + hκ)'`.
    /// The right side contains `x` again, but only behind a power of `h`.
    fn eliminate(&self, x: Gen, w: &[Gen], prec: usize) -> Elem {
        let c = &self.ctx;
        let (s, i, j) = (x.s, x.i as usize, x.j as usize);
        let (jp, ip) = (c.prime0(j), c.prime0(i));
        let theta = int(c.eps0(i) * c.eps0(j));
        let kappa = c.kappa();
        let self_dual = (jp, ip) == (i, j);
        let scale = if self_dual { rat(1, 2) } else { Rat::one() };
        let room = self.d - degree(w);
        let mut out = Elem::new();
        if !self_dual {
            elem_axpy(&mut out, &self.coef(-&theta), &self.mul_left_to(Gen::new(s, jp, ip), w, prec));
        }
        for r in s + 1..=room {
            let hp = (r - s) as usize;
            if hp >= prec {
                break;
            }
            let v = -&theta * binom(r as i64 - 1, s - 1) * kappa.pow(hp as i32) * &scale;
            elem_axpy(&mut out, &self.coef(v).mul_h(hp), &self.mul_left_to(Gen::new(r, jp, ip), w, prec - hp));
        }
        for kk in 0..c.n {
            let th = int(c.eps0(kk) * c.eps0(j));
            for a in 1..=s {
                for b in (s - a + 1).. {
                    let hp = (a + b - s) as usize;
                    if hp >= prec || a + b > room {
                        break;
                    }
                    let v = &th * binom(b as i64 - 1, s - a) * kappa.pow((b - 1 + a - s) as i32) * &scale;
                    if Zero::is_zero(&v) {
                        continue;
                    }
                    let inner = self.mul_left_to(Gen::new(b, jp, c.prime0(kk)), w, prec - hp);
                    let outer = self.mul_left_elem_to(Gen::new(a, i, kk), &inner, prec - hp);
                    elem_axpy(&mut out, &self.coef(v).mul_h(hp), &outer);
                }
            }
        }
        out
    }

    pub fn mul_left_elem(&self, x: Gen, e: &Elem) -> Elem {
        self.mul_left_elem_to(x, e, self.k)
    }

    fn mul_left_elem_to(&self, x: Gen, e: &Elem, prec: usize) -> Elem {
        let mut out = Elem::new();
        for (w, c) in e {
            elem_axpy(&mut out, c, &self.mul_left_to(x, w, prec));
        }
        out
    }

    /// Normal form of an arbitrary product of creation modes applied to `1`.
    pub fn normal_form(&self, word: &[Gen]) -> Elem {
        let mut e = self.vacuum();
        for &x in word.iter().rev() {
            e = self.mul_left_elem(x, &e);
        }
        e
    }

    /// `t^{(r)}_{ij} · w` for a sorted word `w`.
    pub fn act(&self, a: Ann, w: &[Gen]) -> Elem {
        if w.is_empty() {
            return Elem::new();
        }
        let key = (a, w.to_vec());
        if let Some(v) = self.act_memo.borrow().get(&key) {
            return v.clone();
        }
        let y = w[0];
        let rest = &w[1..];
        let p = self.passage(a, y);
        let mut out = Elem::new();
        if let Some(c) = &p.scalar {
            elem_add(&mut out, rest.to_vec(), c.clone());
        }
        for (c, b) in &p.ann {
            elem_axpy(&mut out, c, &self.act(*b, rest));
        }
        for (c, g) in &p.cre {
            elem_axpy(&mut out, c, &self.mul_left(*g, rest));
        }
        for (c, g, b) in &p.mixed {
            let inner = self.act(*b, rest);
            elem_axpy(&mut out, c, &self.mul_left_elem(*g, &inner));
        }
        self.act_memo.borrow_mut().insert(key, out.clone());
        out
    }

    pub fn act_elem(&self, a: Ann, e: &Elem) -> Elem {
        let mut out = Elem::new();
        for (w, c) in e {
            elem_axpy(&mut out, c, &self.act(a, w));
        }
        out
    }

    /// Number of memoised reorderings and passages.
    pub fn memo_sizes(&self) -> (usize, usize) {
        (self.mul_memo.borrow().len(), self.act_memo.borrow().len())
    }

    /// Coefficient of `h^l` as an exact rational element.
    pub fn h_part(e: &Elem, l: usize) -> BTreeMap<Word, Rat> {
        e.iter()
            .filter_map(|(w, c)| {
                let v = c.coeff(l).clone();
                if Zero::is_zero(&v) {
                    None
                } else {
                    Some((w.clone(), v))
                }
            })
            .collect()
    }
}

/// Text form `t(-1)_12 t(-2)_31` of a word with one-based indices, `1` for the vacuum.
pub fn word_text(w: &[Gen]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|g| format!("t(-{})_{}{}", g.s, g.i + 1, g.j + 1)).collect::<Vec<_>>().join(" ")
}

/// Precision still needed for a factor multiplied by `c`, if any.
fn left(c: &Coef, prec: usize) -> Option<usize> {
    c.valuation().filter(|&v| v < prec).map(|v| prec - v)
}
