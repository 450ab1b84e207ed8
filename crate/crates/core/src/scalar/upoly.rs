//! Dense univariate polynomials over `Rat`, used for series in `1/w`.

use super::rat::Rat;
use super::ring::Ring;
use num::Zero;

#[derive(Clone, Debug, PartialEq, Default)]
pub struct UPoly(pub Vec<Rat>);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn constant(c: Rat) -> Self {
        UPoly(vec![c]).trim()
    }

    /// `c * y^n`.
    pub fn monomial(n: usize, c: Rat) -> Self {
        let mut v = vec![Rat::zero(); n + 1];
        v[n] = c;
        UPoly(v).trim()
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn coeff(&self, n: usize) -> Rat {
        self.0.get(n).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.0.iter().enumerate().filter(|(_, c)| !Zero::is_zero(*c))
    }

    /// Composition `self(q)`.
    pub fn compose(&self, q: &UPoly) -> UPoly {
        let mut acc = UPoly::zero();
        for c in self.0.iter().rev() {
            acc = Ring::add(&Ring::mul(&acc, q), &UPoly::constant(c.clone()));
        }
        acc
    }
}

impl Ring for UPoly {
    fn zero_like(&self) -> Self {
        UPoly::zero()
    }
    fn one_like(&self) -> Self {
        UPoly::constant(Rat::from_integer(1.into()))
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        UPoly((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect()).trim()
    }
    fn mul(&self, o: &Self) -> Self {
        if self.0.is_empty() || o.0.is_empty() {
            return UPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly(v).trim()
    }
    fn neg(&self) -> Self {
        UPoly(self.0.iter().map(|c| -c).collect())
    }
    fn scale(&self, r: &Rat) -> Self {
        UPoly(self.0.iter().map(|c| c * r).collect()).trim()
    }
    fn try_inv(&self) -> Option<Self> {
        if self.0.len() == 1 {
            Some(UPoly::constant(self.0[0].recip()))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat::int;

    #[test]
    fn compose_and_multiply() {
        let y = UPoly::monomial(1, int(1));
        let p = UPoly(vec![int(1), int(2), int(1)]);
        let q = Ring::add(&y, &UPoly::constant(int(1)));
        assert_eq!(p, Ring::mul(&q, &q));
        let r = p.compose(&Ring::sub(&y, &UPoly::constant(int(1))));
        assert_eq!(r, UPoly::monomial(2, int(1)));
    }
}
