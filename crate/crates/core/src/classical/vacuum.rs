//! PBW normal forms in the classical vacuum module `V_c(g_N)`.
//!
//! Elements are combinations of sorted monomials `f_{a_1}(-r_1) ... f_{a_k}(-r_k) 1`
//! with `(r, a)` nondecreasing. Products are straightened by
//! `xy = yx + [x, y]`, and nonnegative modes act by commuting to the vacuum.

use super::lie::{Comb, LieBasis};
use crate::brauer::symmetrizer;
use crate::error::Result;
use crate::scalar::rat::{binom, factorial, int, Rat};
use num::Zero;
use rand::Rng;
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

/// The creation mode `f_a(-r)`, `r >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mode {
    pub r: u32,
    pub a: usize,
}

pub type Word = Vec<Mode>;

/// A vector of the vacuum module in the PBW basis.
pub type ClassicalElem = BTreeMap<Word, Rat>;

pub fn elem_add(acc: &mut ClassicalElem, w: Word, c: Rat) {
    if c.is_zero() {
        return;
    }
    let v = acc.remove(&w).unwrap_or_else(Rat::zero) + c;
    if !v.is_zero() {
        acc.insert(w, v);
    }
}

pub fn elem_axpy(acc: &mut ClassicalElem, c: &Rat, x: &ClassicalElem) {
    for (w, v) in x {
        elem_add(acc, w.clone(), c * v);
    }
}

pub fn vacuum() -> ClassicalElem {
    BTreeMap::from([(Vec::new(), int(1))])
}

/// The vacuum module at level `c` with a memoised straightening table.
pub struct ClassicalModule {
    pub lie: LieBasis,
    pub level: Rat,
    memo: RefCell<HashMap<(Mode, Word), ClassicalElem>>,
}

impl ClassicalModule {
    pub fn new(lie: LieBasis, level: Rat) -> Self {
        ClassicalModule { lie, level, memo: RefCell::new(HashMap::new()) }
    }

    /// `[f_a(-r), f_b(-s)]` as a combination at mode `-(r + s)`.
    pub fn creation_bracket(&self, x: Mode, y: Mode) -> Comb {
        self.lie.bracket(x.a, y.a).clone()
    }

    /// Normal form of `x · w` for a sorted word `w`.
    pub fn mul_left(&self, x: Mode, w: &[Mode]) -> ClassicalElem {
        if w.is_empty() || x <= w[0] {
            let mut v = Vec::with_capacity(w.len() + 1);
            v.push(x);
            v.extend_from_slice(w);
            return BTreeMap::from([(v, int(1))]);
        }
        let key = (x, w.to_vec());
        if let Some(v) = self.memo.borrow().get(&key) {
            return v.clone();
        }
        let y = w[0];
        let rest = &w[1..];
        let mut out = ClassicalElem::new();
        for (word, c) in self.mul_left(x, rest) {
            elem_axpy(&mut out, &c, &self.mul_left(y, &word));
        }
        let r = x.r + y.r;
        for (a, c) in self.creation_bracket(x, y) {
            elem_axpy(&mut out, &c, &self.mul_left(Mode { r, a }, rest));
        }
        self.memo.borrow_mut().insert(key, out.clone());
        out
    }

    pub fn mul_left_elem(&self, x: Mode, e: &ClassicalElem) -> ClassicalElem {
        let mut out = ClassicalElem::new();
        for (w, c) in e {
            elem_axpy(&mut out, c, &self.mul_left(x, w));
        }
        out
    }

    /// Normal form of an arbitrary product of creation modes applied to `1`.
    pub fn normal_form(&self, word: &[Mode]) -> ClassicalElem {
        let mut e = vacuum();
        for &x in word.iter().rev() {
            e = self.mul_left_elem(x, &e);
        }
        e
    }

    /// Straighten by swapping randomly chosen out-of-order neighbours.
    pub fn normal_form_random<R: Rng>(&self, word: &[Mode], rng: &mut R) -> ClassicalElem {
        let mut e = BTreeMap::from([(word.to_vec(), int(1))]);
        loop {
            let Some(w) = e.keys().find(|w| w.windows(2).any(|p| p[0] > p[1])).cloned() else {
                return e;
            };
            let c = e.remove(&w).unwrap();
            let bad: Vec<usize> = (0..w.len() - 1).filter(|&p| w[p] > w[p + 1]).collect();
            let p = bad[rng.gen_range(0..bad.len())];
            let mut swapped = w.clone();
            swapped.swap(p, p + 1);
            elem_add(&mut e, swapped, c.clone());
            let r = w[p].r + w[p + 1].r;
            for (a, k) in self.creation_bracket(w[p], w[p + 1]) {
                let mut v = w[..p].to_vec();
                v.push(Mode { r, a });
                v.extend_from_slice(&w[p + 2..]);
                elem_add(&mut e, v, &c * k);
            }
        }
    }

    /// `f_a(r) · w` for `r >= 0` and a sorted word `w`.
    pub fn act(&self, a: usize, r: u32, w: &[Mode]) -> ClassicalElem {
        let mut out = ClassicalElem::new();
        if w.is_empty() {
            return out;
        }
        let y = w[0];
        let rest = &w[1..];
        let inner = self.act(a, r, rest);
        out = self.mul_left_elem(y, &inner);
        let shift = r as i64 - y.r as i64;
        for (c, k) in self.lie.bracket(a, y.a) {
            if shift < 0 {
                elem_axpy(&mut out, k, &self.mul_left(Mode { r: (-shift) as u32, a: *c }, rest));
            } else {
                elem_axpy(&mut out, k, &self.act(*c, shift as u32, rest));
            }
        }
        if shift == 0 && r > 0 {
            let central = int(r as i64) * self.lie.form(a, y.a) * &self.level;
            elem_add(&mut out, rest.to_vec(), central);
        }
        out
    }

    pub fn act_elem(&self, a: usize, r: u32, e: &ClassicalElem) -> ClassicalElem {
        let mut out = ClassicalElem::new();
        for (w, c) in e {
            elem_axpy(&mut out, c, &self.act(a, r, w));
        }
        out
    }

    /// `φ_{m,0}, ..., φ_{m,m}` defined by
    /// `tr S_[m] (τ + F(-1)_1) ... (τ + F(-1)_m) = Σ_k φ_{m,k} τ^{m-k}`,
    /// with `τ f(-r) = f(-r) τ + r f(-r-1)`.
    pub fn segal_sugawara(&self, m: usize) -> Result<Vec<ClassicalElem>> {
        let s = symmetrizer(&self.lie.ctx, m)?;
        let mut phi = vec![ClassicalElem::new(); m + 1];
        for ((row, col), coef) in s.entries() {
            // entry (col, row) of the product, leg by leg
            let mut e: BTreeMap<usize, ClassicalElem> = BTreeMap::from([(0, vacuum())]);
            for a in 0..m {
                let (j, i) = (col[a] as usize, row[a] as usize);
                let mut next: BTreeMap<usize, ClassicalElem> = BTreeMap::new();
                for (p, c) in &e {
                    if i == j {
                        elem_axpy(next.entry(p + 1).or_default(), &int(1), c);
                    }
                    let Some((b, sign)) = self.lie.express(j, i) else { continue };
                    for q in 0..=*p {
                        let k = &sign * binom(*p as i64, q as u32) * factorial(q as u32);
                        let x = Mode { r: 1 + q as u32, a: b };
                        let slot = next.entry(p - q).or_default();
                        for (w, v) in c {
                            let mut word = w.clone();
                            word.push(x);
                            elem_axpy(slot, &(v * &k), &self.normal_form(&word));
                        }
                    }
                }
                e = next;
            }
            for (p, c) in e {
                elem_axpy(&mut phi[m - p], coef, &c);
            }
        }
        Ok(phi)
    }

    /// `[f_a(r), f_b(s)]` in the affine algebra: modes at `r + s` and the central scalar.
    pub fn affine_bracket(&self, (a, r): (usize, i64), (b, s): (usize, i64)) -> (Comb, Rat) {
        let central = if r + s == 0 { int(r) * self.lie.form(a, b) * &self.level } else { Rat::zero() };
        (self.lie.bracket(a, b).clone(), central)
    }

    pub fn memo_len(&self) -> usize {
        self.memo.borrow().len()
    }
}

/// Text form `f12(-1) f13(-2)` of a word, with `1` for the vacuum.
pub fn word_text(lie: &LieBasis, w: &[Mode]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|m| format!("{}(-{})", lie.name(m.a), m.r)).collect::<Vec<_>>().join(" ")
}
