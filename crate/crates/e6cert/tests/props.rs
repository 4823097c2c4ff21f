//! Property tests for the exact scalar layer and the dump format.

use e6cert::cyclotomic::{find_order36_root, CycloScalar, Field};
use e6cert::liealg::{dump, parse_dump, TensorBuilder};
use proptest::prelude::*;

fn arb_scalar() -> impl Strategy<Value = CycloScalar> {
    proptest::collection::vec((0i64..36, -6i64..7, 1i64..5), 1..4).prop_map(|terms| {
        let mut acc = CycloScalar::zero();
        for (k, n, d) in terms {
            acc = acc.add(&CycloScalar::root_of_unity(k).mul(&CycloScalar::from_ratio(n, d)));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn text_round_trips(a in arb_scalar()) {
        let t = a.to_text();
        let back = CycloScalar::from_text(&t).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn field_laws(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn modular_image_is_multiplicative(a in arb_scalar(), b in arb_scalar()) {
        for p in [37u64, 73, 109] {
            let r = find_order36_root(p).unwrap();
            let lhs = a.mul(&b).modular_image(p, r).unwrap();
            let rhs = a.modular_image(p, r).unwrap().mul(&b.modular_image(p, r).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn dump_round_trips(coeffs in proptest::collection::vec(arb_scalar(), 3)) {
        let mut b = TensorBuilder::new(
            3,
            vec!["e".into(), "f".into(), "h".into()],
            CycloScalar::one(),
        );
        // an arbitrary antisymmetric tensor on three basis elements
        b.add(0, 1, 2, coeffs[0].clone());
        b.add(0, 2, 1, coeffs[1].clone());
        b.add(1, 2, 0, coeffs[2].clone());
        let alg = b.finish();
        let text = dump(&alg);
        let back = parse_dump(&text).unwrap();
        prop_assert_eq!(dump(&back), text);
    }
}
