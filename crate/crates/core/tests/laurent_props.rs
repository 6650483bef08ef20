use std::collections::BTreeMap;

use cube_recurrence::laurent::{Exponents, LaurentError, LaurentPoly, VarKey};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const VARS: [VarKey; 5] = [
    VarKey::X(0, 0, 0),
    VarKey::X(-1, 0, 0),
    VarKey::X(0, -1, -1),
    VarKey::A(0, 0),
    VarKey::Gamma,
];

fn exponents() -> impl Strategy<Value = Exponents> {
    proptest::collection::vec(-2i32..=2, VARS.len()).prop_map(|es| Exponents::from_pairs(VARS.iter().copied().zip(es)))
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((exponents(), -4i64..=4), 0..5)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn assignment() -> impl Strategy<Value = BTreeMap<VarKey, BigRational>> {
    let nonzero = (-5i64..=5).prop_filter("nonzero", |v| *v != 0);
    proptest::collection::vec((nonzero, 1i64..=3), VARS.len()).prop_map(|vals| {
        VARS.iter()
            .copied()
            .zip(vals)
            .map(|(v, (n, d))| (v, BigRational::new(n.into(), d.into())))
            .collect()
    })
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p - &p, LaurentPoly::zero());
    }

    #[test]
    fn multiplication_is_commutative_and_associative(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &LaurentPoly::one(), p.clone());
    }

    #[test]
    fn multiplication_distributes(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn exact_division_recovers_the_factor(q in poly(), d in nonzero_poly()) {
        prop_assert_eq!((&q * &d).div_exact(&d), Ok(q));
    }

    #[test]
    fn division_by_zero_is_an_error(p in poly()) {
        prop_assert_eq!(p.div_exact(&LaurentPoly::zero()), Err(LaurentError::DivisionByZero));
    }

    #[test]
    fn json_roundtrip(p in poly()) {
        let text = p.to_json();
        prop_assert_eq!(LaurentPoly::from_json(&text).unwrap(), p.clone());
        prop_assert_eq!(LaurentPoly::from_json(&text).unwrap().to_json(), text);
    }

    #[test]
    fn evaluation_is_a_ring_map(p in poly(), q in poly(), at in assignment()) {
        let (vp, vq) = (p.evaluate(&at).unwrap(), q.evaluate(&at).unwrap());
        prop_assert_eq!((&p * &q).evaluate(&at).unwrap(), &vp * &vq);
        prop_assert_eq!((&p + &q).evaluate(&at).unwrap(), vp + vq);
    }
}

#[test]
fn inexact_division_is_reported() {
    let x = LaurentPoly::var(VarKey::X(0, 0, 0));
    let y = LaurentPoly::var(VarKey::X(-1, 0, 0));
    let p = &(&x * &x) + &LaurentPoly::one();
    assert_eq!(p.div_exact(&(&x + &y)), Err(LaurentError::NonzeroRemainder));
}
