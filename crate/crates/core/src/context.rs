//! Fixed parameters of a run: algebra type, rank data, level and truncations.

use crate::error::{Error, Result};
use crate::scalar::rat::{int, rat, Rat};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum Kind {
    #[serde(rename = "o")]
    Orthogonal,
    #[serde(rename = "sp")]
    Symplectic,
}

impl Kind {
    pub fn parse(s: &str) -> Result<Kind> {
        match s {
            "o" | "orthogonal" => Ok(Kind::Orthogonal),
            "sp" | "symplectic" => Ok(Kind::Symplectic),
            _ => Err(Error::Config(format!("unknown algebra kind {s:?}, expected o or sp"))),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Kind::Orthogonal => "o",
            Kind::Symplectic => "sp",
        }
    }
}

/// Truncation orders shared by the series computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    /// Work modulo `h^k`.
    pub k: usize,
    /// Keep module words of total degree at most `d`.
    pub d: u32,
    /// Keep powers `u^e` with `e <= u`.
    pub u: u32,
    /// Number of normalization coefficients `f_1..f_m`.
    pub m: usize,
}

impl Default for Truncation {
    fn default() -> Self {
        Truncation { k: 2, d: 3, u: 2, m: 6 }
    }
}

/// `N`, type and level, together with the derived constants.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraContext {
    pub kind: Kind,
    pub n: usize,
    pub level: Rat,
    pub trunc: Truncation,
}

impl AlgebraContext {
    pub fn new(kind: Kind, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Config(format!("N must be at least 2, got {n}")));
        }
        if kind == Kind::Symplectic && n % 2 == 1 {
            return Err(Error::Config(format!("symplectic type needs even N, got {n}")));
        }
        let mut ctx = AlgebraContext { kind, n, level: Rat::from_integer(0.into()), trunc: Truncation::default() };
        ctx.level = ctx.critical_level();
        Ok(ctx)
    }

    pub fn orthogonal(n: usize) -> Result<Self> {
        Self::new(Kind::Orthogonal, n)
    }

    pub fn symplectic(n: usize) -> Result<Self> {
        Self::new(Kind::Symplectic, n)
    }

    pub fn with_level(mut self, c: Rat) -> Self {
        self.level = c;
        self
    }

    pub fn with_trunc(mut self, t: Truncation) -> Self {
        self.trunc = t;
        self
    }

    /// Sign `ε_i` for `i` in `1..=N`.
    pub fn eps(&self, i: usize) -> i64 {
        match self.kind {
            Kind::Orthogonal => 1,
            Kind::Symplectic => {
                if i <= self.n / 2 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// `i' = N - i + 1` on 1-based indices.
    pub fn prime(&self, i: usize) -> usize {
        self.n + 1 - i
    }

    /// Zero-based variants used by the dense index loops.
    pub fn eps0(&self, i: usize) -> i64 {
        self.eps(i + 1)
    }

    pub fn prime0(&self, i: usize) -> usize {
        self.n - 1 - i
    }

    pub fn kappa(&self) -> Rat {
        match self.kind {
            Kind::Orthogonal => rat(self.n as i64, 2) - int(1),
            Kind::Symplectic => rat(self.n as i64, 2) + int(1),
        }
    }

    pub fn sigma(&self) -> i64 {
        match self.kind {
            Kind::Orthogonal => 1,
            Kind::Symplectic => 2,
        }
    }

    /// `-2 kappa / sigma`.
    pub fn critical_level(&self) -> Rat {
        -int(2) * self.kappa() / int(self.sigma())
    }

    /// Sign `+1` for orthogonal and `-1` for symplectic type.
    pub fn type_sign(&self) -> i64 {
        match self.kind {
            Kind::Orthogonal => 1,
            Kind::Symplectic => -1,
        }
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind.tag(), self.n)
    }
}

impl fmt::Display for AlgebraContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (kappa = {}, c = {})", self.label(), self.kappa(), self.level)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        let o3 = AlgebraContext::orthogonal(3).unwrap();
        assert_eq!(o3.kappa(), rat(1, 2));
        assert_eq!(o3.critical_level(), int(-1));
        let sp4 = AlgebraContext::symplectic(4).unwrap();
        assert_eq!(sp4.kappa(), int(3));
        assert_eq!(sp4.critical_level(), int(-3));
        assert_eq!((1..=4).map(|i| sp4.eps(i)).collect::<Vec<_>>(), vec![1, 1, -1, -1]);
        assert_eq!(sp4.prime(1), 4);
        for n in [2usize, 4, 6, 8] {
            let o = AlgebraContext::orthogonal(n).unwrap();
            let sp = AlgebraContext::symplectic(n).unwrap();
            assert_eq!(o.critical_level(), int(2 - n as i64));
            assert_eq!(sp.critical_level(), -rat(n as i64, 2) - int(1));
        }
    }

    #[test]
    fn validation() {
        assert!(AlgebraContext::symplectic(5).is_err());
        assert!(AlgebraContext::orthogonal(1).is_err());
        assert!(Kind::parse("gl").is_err());
    }
}
