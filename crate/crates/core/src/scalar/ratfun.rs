//! Exact rational functions with factored denominators.
//!
//! The denominator is a list of primitive factors with multiplicities, and
//! every scalar is pushed into the numerator. Sums use the least common
//! multiple of the two factor lists, which keeps the pole structure of
//! R-matrix products (`u`, `u - h k`, ...) small and readable.

use super::mpoly::{MPoly, Vars};
use super::rat::Rat;
use super::ring::Ring;
use crate::error::{Error, Result};
use num::{One, Zero};
use std::fmt;

#[derive(Clone)]
pub struct RatFun {
    num: MPoly,
    /// Primitive factors with positive leading coefficient, sorted by text.
    den: Vec<(MPoly, u32)>,
}

impl RatFun {
    /// `num / den`; errors on a zero denominator.
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        let mut r = RatFun::from_poly(num);
        r = r.mul(&RatFun::factor_inverse(&den, 1));
        Ok(r)
    }

    pub fn from_poly(num: MPoly) -> Self {
        RatFun { num, den: Vec::new() }
    }

    pub fn constant(vars: &Vars, c: Rat) -> Self {
        Self::from_poly(MPoly::constant(vars, c))
    }

    pub fn var(vars: &Vars, name: &str) -> Self {
        Self::from_poly(MPoly::var(vars, name))
    }

    /// `den^{-e}` with `den` a nonzero polynomial.
    fn factor_inverse(den: &MPoly, e: u32) -> Self {
        let (c, p) = den.primitive();
        let scale = (0..e).fold(Rat::one(), |a, _| a * c.recip());
        let mut r = RatFun::constant(den.vars(), scale);
        if !p.is_constant() {
            r.den.push((p, e));
        }
        r
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    pub fn numer(&self) -> &MPoly {
        &self.num
    }

    pub fn denom_factors(&self) -> &[(MPoly, u32)] {
        &self.den
    }

    /// Denominator multiplied out.
    pub fn denom(&self) -> MPoly {
        self.den.iter().fold(MPoly::one(self.vars()), |a, (f, e)| a.mul(&f.pow(*e)))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(c)` if the function is the constant `c`.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.den.is_empty() && self.num.is_constant() {
            Some(self.num.constant_term())
        } else {
            None
        }
    }

    pub fn as_poly(&self) -> Option<&MPoly> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn sort_den(&mut self) {
        self.den.retain(|(_, e)| *e > 0);
        self.den.sort_by_cached_key(|(f, _)| f.to_string());
    }

    /// Cancel common factors: trial division by every denominator factor,
    /// then univariate gcds for factors sharing a single variable with the
    /// numerator.
    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let mut split: Vec<(MPoly, u32)> = Vec::new();
        for (f, e) in std::mem::take(&mut self.den) {
            let sv = f.support_vars();
            if sv.len() == 1 && self.num.is_univariate_in(sv[0]) && !self.num.is_constant() {
                let g = self.num.univariate_gcd(&f, sv[0]);
                if !g.is_constant() && g.total_degree() < f.total_degree() {
                    let rest = f.div_exact(&g).expect("gcd divides");
                    split.push((g.primitive().1, e));
                    split.push((rest.primitive().1, e));
                    continue;
                }
            }
            split.push((f, e));
        }
        for (f, e) in split.iter_mut() {
            while *e > 0 {
                match self.num.div_exact(f) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        let mut merged: Vec<(MPoly, u32)> = Vec::new();
        for (f, e) in split {
            if e == 0 {
                continue;
            }
            match merged.iter_mut().find(|(g, _)| *g == f) {
                Some(slot) => slot.1 += e,
                None => merged.push((f, e)),
            }
        }
        self.den = merged;
        self.sort_den();
        self
    }

    pub fn add(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let mut lcm: Vec<(MPoly, u32)> = self.den.clone();
        for (f, e) in &o.den {
            match lcm.iter_mut().find(|(g, _)| g == f) {
                Some(slot) => slot.1 = slot.1.max(*e),
                None => lcm.push((f.clone(), *e)),
            }
        }
        let cofactor = |den: &[(MPoly, u32)]| {
            lcm.iter().fold(MPoly::one(self.vars()), |acc, (f, e)| {
                let have = den.iter().find(|(g, _)| g == f).map(|x| x.1).unwrap_or(0);
                acc.mul(&f.pow(e - have))
            })
        };
        let num = self.num.mul(&cofactor(&self.den)).add(&o.num.mul(&cofactor(&o.den)));
        RatFun { num, den: lcm }.reduce()
    }

    pub fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if Zero::is_zero(s) {
            return RatFun::from_poly(MPoly::zero(self.vars()));
        }
        RatFun { num: self.num.scale(s), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return RatFun::from_poly(MPoly::zero(self.vars()));
        }
        let mut den = self.den.clone();
        for (f, e) in &o.den {
            match den.iter_mut().find(|(g, _)| g == f) {
                Some(slot) => slot.1 += e,
                None => den.push((f.clone(), *e)),
            }
        }
        RatFun { num: self.num.mul(&o.num), den }.reduce()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotUnit("zero rational function".into()));
        }
        let mut r = RatFun::from_poly(self.denom());
        r = r.mul(&RatFun::factor_inverse(&self.num, 1));
        Ok(r)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut r = RatFun::constant(self.vars(), Rat::one());
        for _ in 0..e.unsigned_abs() {
            r = r.mul(&base);
        }
        Ok(r)
    }

    /// Exact value at a rational point; errors at a pole.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        let d = self.denom().eval(point);
        if Zero::is_zero(&d) {
            return Err(Error::Domain("evaluation at a pole".into()));
        }
        Ok(self.num.eval(point) / d)
    }

    /// Substitute the rational function `val` for variable `var`.
    pub fn substitute(&self, var: usize, val: &RatFun) -> Result<Self> {
        let sub_poly = |p: &MPoly| -> RatFun {
            let coeffs = p.coeffs_in(var);
            let mut acc = RatFun::from_poly(MPoly::zero(p.vars()));
            let mut pw = RatFun::constant(p.vars(), Rat::one());
            for c in coeffs {
                acc = acc.add(&RatFun::from_poly(c).mul(&pw));
                pw = pw.mul(val);
            }
            acc
        };
        let mut r = sub_poly(&self.num);
        for (f, e) in &self.den {
            let fs = sub_poly(f);
            r = r.div(&fs.pow(*e as i32)?)?;
        }
        Ok(r)
    }

    /// Cross-multiplication test `p1 q2 = p2 q1`.
    pub fn equals(&self, o: &Self) -> bool {
        self.num.mul(&o.denom()) == o.num.mul(&self.denom())
    }
}

impl PartialEq for RatFun {
    fn eq(&self, o: &Self) -> bool {
        self.equals(o)
    }
}

impl Ring for RatFun {
    fn zero_like(&self) -> Self {
        RatFun::from_poly(MPoly::zero(self.vars()))
    }
    fn one_like(&self) -> Self {
        RatFun::constant(self.vars(), Rat::one())
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFun::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFun::mul(self, o)
    }
    fn neg(&self) -> Self {
        RatFun::neg(self)
    }
    fn scale(&self, r: &Rat) -> Self {
        RatFun::scale(self, r)
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(p, e)| if *e == 1 { format!("({p})") } else { format!("({p})^{e}") })
            .collect();
        write!(f, "({})/({})", self.num, den.join("*"))
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
    fn content_reduction() {
        let v = ctx();
        let f = RatFun::new(MPoly::var(&v, "u").scale(&int(2)), MPoly::var(&v, "v").scale(&int(4))).unwrap();
        let g = RatFun::new(MPoly::var(&v, "u"), MPoly::var(&v, "v").scale(&int(2))).unwrap();
        assert_eq!(f.to_string(), g.to_string());
        assert_eq!(f.numer().to_string(), "1/2*u");
    }

    #[test]
    fn difference_of_squares_cancels() {
        let v = ctx();
        let u = MPoly::var(&v, "u");
        let w = MPoly::var(&v, "v");
        let f = RatFun::new(u.mul(&u).sub(&w.mul(&w)), u.sub(&w)).unwrap();
        assert!(f.denom_factors().is_empty());
        assert_eq!(f, RatFun::from_poly(u.add(&w)));
    }

    #[test]
    fn zero_numerator_clears_denominator() {
        let v = ctx();
        let d = MPoly::var(&v, "u").sub(&MPoly::var(&v, "h").scale(&rat(1, 2)));
        let f = RatFun::new(MPoly::zero(&v), d).unwrap();
        assert!(f.is_zero());
        assert!(f.denom_factors().is_empty());
        assert!(RatFun::new(MPoly::one(&v), MPoly::zero(&v)).is_err());
    }

    #[test]
    fn univariate_gcd_cancellation() {
        let v = ctx();
        let u = MPoly::var(&v, "u");
        let one = MPoly::one(&v);
        let f = RatFun::new(u.sub(&one), u.mul(&u).sub(&one)).unwrap();
        assert_eq!(f.denom_factors().len(), 1);
        assert_eq!(f.numer().to_string(), "1");
    }

    #[test]
    fn sums_and_evaluation() {
        let v = ctx();
        let u = RatFun::var(&v, "u");
        let h = RatFun::var(&v, "h");
        let a = h.div(&u).unwrap();
        let b = h.div(&u.sub(&h)).unwrap();
        let s = a.add(&b);
        let pt = [rat(1, 3), int(2), int(0)];
        let expect = rat(1, 3) / int(2) + rat(1, 3) / (int(2) - rat(1, 3));
        assert_eq!(s.eval(&pt).unwrap(), expect);
        assert!(u.inv().unwrap().eval(&[int(1), int(0), int(0)]).is_err());
    }
}
