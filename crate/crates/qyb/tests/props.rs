use proptest::prelude::*;
use qyb::ring::{Coeff, Mono, Scalar, ScalarFrac, Var};
use qyb::rmatrix::{Family, RData};
use qyb::tensor::TensorOp;

fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-4i32..=4, -2i32..=2, -9i64..=9, 1i64..=3), 0..5).prop_map(|ts| {
        Scalar::from_terms(
            ts.into_iter()
                .map(|(eq, ev, n, d)| (Mono::new([eq, ev, 0]), Coeff::ratio(n, d))),
        )
    })
}

fn op() -> impl Strategy<Value = TensorOp> {
    prop::collection::vec(scalar(), 4).prop_map(|v| {
        TensorOp::from_entries(
            2,
            1,
            v.into_iter()
                .enumerate()
                .map(|(k, s)| (k / 2, k % 2, ScalarFrac::new(s, Scalar::one()).unwrap())),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        prop_assert_eq!(Scalar::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn exact_division(a in scalar(), b in scalar()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).exact_div(&b), Some(a));
    }

    #[test]
    fn fractions_reduce(a in scalar(), b in scalar(), c in scalar()) {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let f = ScalarFrac::new(a.mul(&c), b.mul(&c)).unwrap();
        let g = ScalarFrac::new(a, b).unwrap();
        prop_assert_eq!(&f, &g);
        prop_assert_eq!(ScalarFrac::parse(&f.to_string()).unwrap(), g);
    }

    #[test]
    fn q_substitution_is_a_homomorphism(a in scalar(), b in scalar(), n in -3i64..=3) {
        prop_assume!(n != 0);
        let c = Coeff::int(n);
        prop_assert_eq!(a.mul(&b).subs_const(Var::Q, &c), a.subs_const(Var::Q, &c).mul(&b.subs_const(Var::Q, &c)));
    }

    #[test]
    fn tensor_json_round_trip(a in op()) {
        prop_assert_eq!(TensorOp::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn kron_is_multiplicative(a in op(), b in op(), c in op(), d in op()) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn trace_is_cyclic(a in op(), b in op()) {
        prop_assert_eq!(a.mul(&b).full_trace(None), b.mul(&a).full_trace(None));
    }

    #[test]
    fn rhat_commutes_with_diagonal_twists(x in 1i64..=9, y in 1i64..=9) {
        let r = RData::build(&Family::GLq { n: 2 }).unwrap();
        let d = TensorOp::from_entries(2, 1, [(0, 0, ScalarFrac::int(x)), (1, 1, ScalarFrac::int(y))]);
        let dd = d.kron(&d);
        prop_assert!(r.rhat.commutator(&dd).is_zero());
    }
}
