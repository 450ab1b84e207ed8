//! Sparse multivariate polynomials over `Rat`.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors under the
//! graded lexicographic order, so the last entry is the leading term.

use super::rat::{self, Rat};
use super::ring::Ring;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Ordered list of variable names shared by polynomials of one computation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new(names: &[&str]) -> Self {
        Vars(Arc::new(names.iter().map(|s| s.to_string()).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }
}

/// Exponent vector with graded lexicographic comparison.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    fn sub(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    fn add(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: Vars,
    terms: BTreeMap<Mono, Rat>,
}

impl MPoly {
    pub fn zero(vars: &Vars) -> Self {
        MPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: Rat) -> Self {
        let mut p = Self::zero(vars);
        if !Zero::is_zero(&c) {
            p.terms.insert(Mono(vec![0; vars.len()]), c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rat::one())
    }

    /// The variable `name`; panics if it is not in the context.
    pub fn var(vars: &Vars, name: &str) -> Self {
        let i = vars.index(name).unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, Rat::one())
    }

    pub fn monomial(vars: &Vars, exps: Vec<u32>, c: Rat) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        if !Zero::is_zero(&c) {
            p.terms.insert(Mono(exps), c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> Rat {
        self.terms.get(&Mono(vec![0; self.vars.len()])).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Indices of variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|&i| self.terms.keys().any(|m| m.0[i] > 0)).collect()
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.vars, o.vars, "variable contexts differ");
    }

    fn push(&mut self, m: Mono, c: Rat) {
        if Zero::is_zero(&c) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if Zero::is_zero(e.get()) {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.push(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if Zero::is_zero(s) {
            return Self::zero(&self.vars);
        }
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        let mut r = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.push(m1.add(m2), c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one(&self.vars);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Exact evaluation at a rational point (one value per variable).
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitute polynomial `val` for variable `var`.
    pub fn substitute(&self, var: usize, val: &MPoly) -> Self {
        self.check(val);
        let mut r = Self::zero(&self.vars);
        let mut powers: Vec<MPoly> = vec![Self::one(&self.vars)];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(val);
                powers.push(next);
            }
            let mut rest = m.0.clone();
            rest[var] = 0;
            let t = Self::monomial(&self.vars, rest, c.clone()).mul(&powers[e]);
            r = r.add(&t);
        }
        r
    }

    /// Coefficients of the powers of `var`, each a polynomial free of `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<MPoly> {
        let mut out = vec![Self::zero(&self.vars); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut rest = m.0.clone();
            rest[var] = 0;
            out[e].push(Mono(rest), c.clone());
        }
        out
    }

    /// Multivariate division by `d`: returns `(q, r)` with `self = q d + r`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        self.check(d);
        assert!(!d.is_zero(), "division by zero polynomial");
        let (lm, lc) = d.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut p = self.clone();
        let mut q = Self::zero(&self.vars);
        let mut r = Self::zero(&self.vars);
        while let Some((m, c)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if lm.divides(&m) {
                let t = Self::monomial(&self.vars, m.sub(&lm).0, &c / &lc);
                p = p.sub(&t.mul(d));
                q = q.add(&t);
            } else {
                p.terms.remove(&m);
                r.push(m, c);
            }
        }
        (q, r)
    }

    /// `Some(q)` when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Positive rational content: gcd of numerators over lcm of denominators.
    pub fn content(&self) -> Rat {
        use num::Integer;
        let mut g = num::BigInt::zero();
        let mut l = num::BigInt::one();
        for c in self.terms.values() {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        if g.is_zero() {
            Rat::one()
        } else {
            Rat::new(g, l)
        }
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive(&self) -> (Rat, Self) {
        if self.is_zero() {
            return (Rat::one(), self.clone());
        }
        let mut c = self.content();
        if self.leading().unwrap().1.is_negative() {
            c = -c;
        }
        (c.clone(), self.scale(&c.recip()))
    }

    /// Monic gcd of two polynomials in the single variable `var`.
    pub fn univariate_gcd(&self, o: &Self, var: usize) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lc = a.leading().unwrap().1.clone();
        let _ = var;
        a.scale(&lc.recip())
    }

    pub fn is_univariate_in(&self, var: usize) -> bool {
        self.support_vars().iter().all(|&i| i == var)
    }
}

impl Ring for MPoly {
    fn zero_like(&self) -> Self {
        Self::zero(&self.vars)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.vars)
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        MPoly::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        MPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        MPoly::neg(self)
    }
    fn scale(&self, r: &Rat) -> Self {
        MPoly::scale(self, r)
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_constant() && !self.is_zero() {
            Some(Self::constant(&self.vars, self.constant_term().recip()))
        } else {
            None
        }
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            let mut parts = vec![];
            if !a.is_one() || m.degree() == 0 {
                parts.push(rat::to_text(&a));
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(self.vars.name(i).to_string()),
                    _ => parts.push(format!("{}^{}", self.vars.name(i), e)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat::{int, rat};

    fn ctx() -> Vars {
        Vars::new(&["h", "u", "v"])
    }

    #[test]
    fn grlex_leading_term() {
        let v = ctx();
        let p = MPoly::var(&v, "u").mul(&MPoly::var(&v, "u")).add(&MPoly::var(&v, "h"));
        assert_eq!(p.leading().unwrap().0 .0, vec![0, 2, 0]);
    }

    #[test]
    fn exact_division() {
        let v = ctx();
        let u = MPoly::var(&v, "u");
        let w = MPoly::var(&v, "v");
        let num = u.mul(&u).sub(&w.mul(&w));
        let q = num.div_exact(&u.sub(&w)).unwrap();
        assert_eq!(q, u.add(&w));
        assert!(u.div_exact(&w).is_none());
    }

    #[test]
    fn substitution_shift() {
        let v = ctx();
        let u = MPoly::var(&v, "u");
        let h = MPoly::var(&v, "h");
        let p = u.mul(&u);
        let shifted = p.substitute(1, &u.sub(&h));
        assert_eq!(shifted, u.mul(&u).sub(&u.mul(&h).scale(&int(2))).add(&h.mul(&h)));
        assert_eq!(p.eval(&[int(0), rat(1, 2), int(0)]), rat(1, 4));
    }

    #[test]
    fn univariate_gcd_common_factor() {
        let v = ctx();
        let u = MPoly::var(&v, "u");
        let one = MPoly::one(&v);
        let a = u.sub(&one).mul(&u.add(&one));
        let b = u.sub(&one).mul(&u);
        assert_eq!(a.univariate_gcd(&b, 1), u.sub(&one));
    }
}
