//! Laurent expansion of rational functions in one small variable.
//!
//! For variables `(u, v)` a function like `1/(u - v)` is expanded in
//! nonnegative powers of the later variable `v`, so the coefficients are
//! rational functions of the remaining variables.

use super::mpoly::MPoly;
use super::ratfun::RatFun;
use super::ring::Ring;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Which variable is expanded around zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub small: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries {
    pub var: String,
    pub lo: i64,
    pub hi: i64,
    /// Nonzero coefficients with exponents in `[lo, hi]`.
    pub coeffs: BTreeMap<i64, RatFun>,
}

impl LaurentSeries {
    pub fn coeff(&self, e: i64) -> Option<&RatFun> {
        self.coeffs.get(&e)
    }

    /// Truncated product on the common window.
    pub fn mul(&self, o: &Self, template: &RatFun) -> Self {
        let (lo, hi) = (self.lo.max(o.lo), self.hi.min(o.hi));
        let mut coeffs: BTreeMap<i64, RatFun> = BTreeMap::new();
        for (a, x) in &self.coeffs {
            for (b, y) in &o.coeffs {
                let e = a + b;
                if e < lo || e > hi {
                    continue;
                }
                let t = coeffs.remove(&e).unwrap_or_else(|| template.zero_like()).add(&x.mul(y));
                if !t.is_zero() {
                    coeffs.insert(e, t);
                }
            }
        }
        LaurentSeries { var: self.var.clone(), lo, hi, coeffs }
    }
}

/// Expand `f` in powers of `dir.small`, keeping exponents in `[lo, hi]`.
pub fn expand_ratfun(f: &RatFun, dir: &Expansion, lo: i64, hi: i64) -> Result<LaurentSeries> {
    if hi < lo {
        return Err(Error::Config(format!("empty expansion window [{lo}, {hi}]")));
    }
    let vars = f.vars().clone();
    let x = vars
        .index(&dir.small)
        .ok_or_else(|| Error::Config(format!("variable {} not in context", dir.small)))?;
    let mut den = f.denom();
    let mut shift = 0i64;
    let xp = MPoly::var(&vars, &dir.small);
    while let Some(q) = den.div_exact(&xp) {
        den = q;
        shift += 1;
    }
    let d = den.coeffs_in(x);
    let d0 = RatFun::from_poly(d[0].clone());
    if d0.is_zero() {
        return Err(Error::Domain("denominator vanishes at the expansion point".into()));
    }
    let d0inv = d0.inv()?;
    let n = f.numer().coeffs_in(x);
    // Exponent e of x in the result needs series terms up to e + shift.
    let top = hi + shift;
    let mut coeffs = BTreeMap::new();
    if top >= 0 {
        let top = top as usize;
        let mut e: Vec<RatFun> = vec![d0inv.clone()];
        for j in 1..=top {
            let mut acc = d0.zero_like();
            for i in 1..=j.min(d.len() - 1) {
                acc = acc.add(&RatFun::from_poly(d[i].clone()).mul(&e[j - i]));
            }
            e.push(acc.mul(&d0inv).neg());
        }
        for t in 0..=top {
            let mut acc = d0.zero_like();
            for (a, na) in n.iter().enumerate().take(t + 1) {
                if !na.is_zero() {
                    acc = acc.add(&RatFun::from_poly(na.clone()).mul(&e[t - a]));
                }
            }
            let exp = t as i64 - shift;
            if exp >= lo && !acc.is_zero() {
                coeffs.insert(exp, acc);
            }
        }
    }
    Ok(LaurentSeries { var: dir.small.clone(), lo, hi, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::mpoly::Vars;
    use crate::scalar::rat::{binom, int, rat};

    fn uv() -> (Vars, RatFun, RatFun) {
        let v = Vars::new(&["u", "v"]);
        let u = RatFun::var(&v, "u");
        let w = RatFun::var(&v, "v");
        (v, u, w)
    }

    fn small_v() -> Expansion {
        Expansion { small: "v".into() }
    }

    #[test]
    fn geometric_expansion() {
        let (_, u, v) = uv();
        let f = u.sub(&v).inv().unwrap();
        let s = expand_ratfun(&f, &small_v(), 0, 6).unwrap();
        for k in 0..=6 {
            assert_eq!(s.coeff(k).unwrap(), &u.pow(-1 - k as i32).unwrap());
        }
    }

    #[test]
    fn negative_square() {
        let (_, u, v) = uv();
        let f = u.sub(&v).pow(-2).unwrap();
        let s = expand_ratfun(&f, &small_v(), 0, 5).unwrap();
        for k in 0..=5i64 {
            let c = binom(-2, k as u32) * int(if k % 2 == 0 { 1 } else { -1 });
            assert_eq!(c, int(k + 1));
            assert_eq!(s.coeff(k).unwrap(), &u.pow(-2 - k as i32).unwrap().scale(&c));
        }
    }

    #[test]
    fn polynomial_is_unchanged() {
        let (_, u, v) = uv();
        let f = u.mul(&u).add(&v);
        let s = expand_ratfun(&f, &small_v(), -2, 4).unwrap();
        assert_eq!(s.coeffs.len(), 2);
        assert_eq!(s.coeff(0).unwrap(), &u.mul(&u));
        assert!(expand_ratfun(&f, &small_v(), 3, 1).is_err());
        assert!(expand_ratfun(&f, &Expansion { small: "z".into() }, 0, 1).is_err());
    }

    #[test]
    fn pole_in_small_variable() {
        let (_, u, v) = uv();
        let f = v.mul(&u.sub(&v)).inv().unwrap();
        let s = expand_ratfun(&f, &small_v(), -1, 2).unwrap();
        assert_eq!(s.coeff(-1).unwrap(), &u.inv().unwrap());
        assert_eq!(s.coeff(2).unwrap(), &u.pow(-4).unwrap());
    }

    #[test]
    fn numerator_reexpands() {
        let (_, u, v) = uv();
        let den = u.sub(&v).mul(&u.add(&v.scale(&rat(1, 3))));
        let num = u.add(&v);
        let f = num.div(&den).unwrap();
        let s = expand_ratfun(&f, &small_v(), 0, 5).unwrap();
        let d = expand_ratfun(&den, &small_v(), 0, 5).unwrap();
        let back = s.mul(&d, &u);
        assert_eq!(back.coeff(0).unwrap(), &u);
        assert_eq!(back.coeff(1).unwrap(), &u.one_like());
        for k in 2..=5 {
            assert!(back.coeff(k).is_none());
        }
    }
}
