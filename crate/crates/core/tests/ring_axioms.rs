//! Property tests for the exact scalar rings: commutative-ring axioms for
//! polynomials, rational functions and truncated `h`-series.

use bcd_yangian::scalar::hseries::HSeries;
use bcd_yangian::scalar::mpoly::{MPoly, Vars};
use bcd_yangian::scalar::rat::{rat, Rat};
use bcd_yangian::scalar::ratfun::RatFun;
use bcd_yangian::scalar::ring::Ring;
use proptest::prelude::*;

fn vars() -> Vars {
    Vars::new(&["u", "v", "h"])
}

fn rational() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=2, 3), rational()), 0..4).prop_map(|terms| {
        let vs = vars();
        terms.into_iter().fold(MPoly::zero(&vs), |acc, (e, c)| acc.add(&MPoly::monomial(&vs, e, c)))
    })
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| {
        let d = d.add(&MPoly::one(&vars()));
        if d.is_zero() {
            None
        } else {
            RatFun::new(n, d).ok()
        }
    })
}

fn hseries() -> impl Strategy<Value = HSeries<Rat>> {
    prop::collection::vec(rational(), 4).prop_map(|c| HSeries::from_coeffs(&rat(0, 1), c, 4))
}

fn axioms<C: Ring>(a: &C, b: &C, c: &C) {
    assert_eq!(a.add(b), b.add(a));
    assert_eq!(a.mul(b), b.mul(a));
    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    assert!(a.sub(a).is_zero());
    assert_eq!(a.mul(&a.one_like()), *a);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polynomials(a in poly(), b in poly(), c in poly()) {
        axioms(&a, &b, &c);
    }

    #[test]
    fn rational_functions(a in ratfun(), b in ratfun(), c in ratfun()) {
        axioms(&a, &b, &c);
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).sub(&a.one_like()).is_zero());
        }
    }

    #[test]
    fn polynomial_division(a in poly(), d in poly()) {
        prop_assume!(!d.is_zero());
        let (q, r) = a.div_rem(&d);
        prop_assert_eq!(q.mul(&d).add(&r), a);
    }

    #[test]
    fn truncated_series(a in hseries(), b in hseries(), c in hseries()) {
        axioms(&a, &b, &c);
        if !Ring::is_zero(a.coeff(0)) {
            let inv = a.inverse().unwrap();
            prop_assert_eq!(a.mul(&inv), HSeries::constant(rat(1, 1), 4));
        }
    }
}
