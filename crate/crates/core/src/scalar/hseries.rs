//! Power series in `h` truncated modulo `h^K`.

use super::rat::Rat;
use super::ring::Ring;
use crate::error::{Error, Result};

/// `c_0 + c_1 h + ... + c_{K-1} h^{K-1}` with the order `K` stored in the value.
#[derive(Clone, Debug, PartialEq)]
pub struct HSeries<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> HSeries<C> {
    /// Builds a series of order `k`, padding or cutting `coeffs` as needed.
    /// `template` supplies the zero element.
    pub fn from_coeffs(template: &C, mut coeffs: Vec<C>, k: usize) -> Self {
        assert!(k >= 1, "h-order must be positive");
        coeffs.truncate(k);
        while coeffs.len() < k {
            coeffs.push(template.zero_like());
        }
        HSeries { coeffs }
    }

    pub fn constant(c: C, k: usize) -> Self {
        let t = c.clone();
        Self::from_coeffs(&t, vec![c], k)
    }

    pub fn zero(template: &C, k: usize) -> Self {
        Self::from_coeffs(template, vec![], k)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.order(), o.order(), "h-orders differ");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        HSeries { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check(o);
        HSeries { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn neg(&self) -> Self {
        HSeries { coeffs: self.coeffs.iter().map(|a| a.neg()).collect() }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        HSeries { coeffs: self.coeffs.iter().map(|a| a.scale(r)).collect() }
    }

    /// Multiply every coefficient by a ring element.
    pub fn scale_by(&self, c: &C) -> Self {
        HSeries { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    /// Truncated product.
    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        let k = self.order();
        let mut out: Vec<C> = (0..k).map(|_| self.coeffs[0].zero_like()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().take(k - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        HSeries { coeffs: out }
    }

    /// Multiply by `h^j`.
    pub fn mul_h(&self, j: usize) -> Self {
        let k = self.order();
        let z = self.coeffs[0].zero_like();
        let coeffs = (0..k).map(|i| if i < j { z.clone() } else { self.coeffs[i - j].clone() }).collect();
        HSeries { coeffs }
    }

    /// Divide by `h^j`; the result has order `K - j`. Errors unless the
    /// lowest `j` coefficients vanish.
    pub fn div_h(&self, j: usize) -> Result<Self> {
        if j >= self.order() {
            return Err(Error::Truncation(format!("cannot divide an order-{} series by h^{j}", self.order())));
        }
        if self.coeffs[..j].iter().any(|c| !c.is_zero()) {
            return Err(Error::Domain(format!("series is not divisible by h^{j}")));
        }
        Ok(HSeries { coeffs: self.coeffs[j..].to_vec() })
    }

    /// Reduce to a smaller order.
    pub fn truncate(&self, k: usize) -> Self {
        assert!(k >= 1 && k <= self.order());
        HSeries { coeffs: self.coeffs[..k].to_vec() }
    }

    /// Inverse modulo `h^K`; errors when `c_0` is not a unit.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .try_inv()
            .ok_or_else(|| Error::NotUnit("constant term is not invertible in the h-adic ring".into()))?;
        let k = self.order();
        let mut out = vec![inv0.clone()];
        for n in 1..k {
            let mut acc = self.coeffs[0].zero_like();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc = acc.add(&self.coeffs[i].mul(&out[n - i]));
                }
            }
            out.push(acc.mul(&inv0).neg());
        }
        Ok(HSeries { coeffs: out })
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> HSeries<D> {
        HSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<C: Ring> Ring for HSeries<C> {
    fn zero_like(&self) -> Self {
        HSeries::zero(&self.coeffs[0], self.order())
    }
    fn one_like(&self) -> Self {
        HSeries::constant(self.coeffs[0].one_like(), self.order())
    }
    fn is_zero(&self) -> bool {
        HSeries::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        HSeries::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        HSeries::mul(self, o)
    }
    fn neg(&self) -> Self {
        HSeries::neg(self)
    }
    fn scale(&self, r: &Rat) -> Self {
        HSeries::scale(self, r)
    }
    fn try_inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::mpoly::Vars;
    use crate::scalar::rat::{int, rat};
    use crate::scalar::ratfun::RatFun;

    #[test]
    fn geometric_inverse() {
        let v = Vars::new(&["x"]);
        let x = RatFun::var(&v, "x");
        let one = RatFun::constant(&v, int(1));
        let s = HSeries::from_coeffs(&one, vec![one.clone(), x.neg()], 5);
        let inv = s.inverse().unwrap();
        for k in 0..5 {
            assert_eq!(inv.coeff(k), &x.pow(k as i32).unwrap());
        }
        assert_eq!(HSeries::constant(int(1), 3).inverse().unwrap(), HSeries::constant(int(1), 3));
    }

    #[test]
    fn rational_inverse_multiplies_back() {
        let v = Vars::new(&["u", "v"]);
        let one = RatFun::constant(&v, int(1));
        let w = RatFun::var(&v, "u").sub(&RatFun::var(&v, "v"));
        let s = HSeries::from_coeffs(&one, vec![one.clone(), w.inv().unwrap()], 6);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.coeff(2), &w.pow(-2).unwrap());
        assert!(s.mul(&inv).sub(&s.one_like()).is_zero());
        assert!(inv.mul(&s).sub(&s.one_like()).is_zero());
    }

    #[test]
    fn non_unit_rejected() {
        let s = HSeries::from_coeffs(&int(0), vec![int(0), int(1)], 3);
        assert!(s.inverse().is_err());
    }

    #[test]
    fn h_shifts() {
        let s = HSeries::from_coeffs(&int(0), vec![int(0), int(0), rat(1, 2)], 4);
        assert_eq!(s.div_h(2).unwrap().coeff(0), &rat(1, 2));
        assert!(s.div_h(3).is_err());
        assert_eq!(s.div_h(2).unwrap().mul_h(2).order(), 2);
    }
}
