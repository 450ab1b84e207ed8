//! Arbitrary-precision rationals.
//!
//! `Rat` is a thin alias over [`num::BigRational`], which already keeps
//! the fraction reduced with a positive denominator. This module adds the
//! constructors and the `"p/q"` text form used by reports.

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rat = BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Binomial coefficient `C(n, k)` for arbitrary integer `n` and `k >= 0`.
pub fn binom(n: i64, k: u32) -> Rat {
    let mut acc = one();
    for i in 0..k as i64 {
        acc *= int(n - i);
        acc /= int(i + 1);
    }
    acc
}

pub fn factorial(n: u32) -> Rat {
    (1..=n as i64).fold(one(), |a, i| a * int(i))
}

/// Serialise as `"p/q"`, or `"p"` for integers.
pub fn to_text(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"p/q"` or `"p"`.
pub fn from_text(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn abs(r: &Rat) -> Rat {
    r.abs()
}

/// Serde adapter storing a `Rat` as its `"p/q"` string.
pub mod serde_text {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_text(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        from_text(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for r in [rat(3, 8), rat(-5, 2), int(7), zero()] {
            assert_eq!(from_text(&to_text(&r)).unwrap(), r);
        }
        assert_eq!(to_text(&rat(2, 4)), "1/2");
        assert!(from_text("1/0").is_none());
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), int(10));
        assert_eq!(binom(-1, 3), int(-1));
        assert_eq!(binom(-2, 2), int(3));
        assert_eq!(factorial(5), int(120));
    }
}
