mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use sbraid_core::relations::presentation;
use sbraid_core::{eta, gr_combine, gr_equal, gr_mul, GroupRingElement, SingularWord};

fn element(n: usize) -> impl Strategy<Value = GroupRingElement> {
    prop::collection::vec((braid_word(n, 6), -3i64..=3), 0..4).prop_map(move |terms| {
        let mut x = GroupRingElement::zero(n);
        for (w, c) in terms {
            x = x
                .combine(&GroupRingElement::from_word(&w), &BigInt::from(c))
                .unwrap();
        }
        x
    })
}

proptest! {
    #[test]
    fn eta_is_multiplicative(w in (2usize..=5).prop_flat_map(|n| singular_word(n, 14, 3)), cut in 0usize..15) {
        let cut = cut.min(w.len());
        let n = w.strands();
        let prefix = SingularWord::new(n, w.letters()[..cut].to_vec()).unwrap();
        let suffix = SingularWord::new(n, w.letters()[cut..].to_vec()).unwrap();
        let whole = eta(&w).unwrap();
        prop_assert_eq!(&whole, &gr_mul(&eta(&prefix).unwrap(), &eta(&suffix).unwrap()).unwrap());
        prop_assert!(whole.len() <= 1 << w.singular_degree());
    }

    #[test]
    fn ring_axioms(
        (x, y, z) in (2usize..=4).prop_flat_map(|n| (element(n), element(n), element(n)))
    ) {
        let one = BigInt::from(1);
        let xy_z = gr_mul(&gr_mul(&x, &y).unwrap(), &z).unwrap();
        let x_yz = gr_mul(&x, &gr_mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(xy_z, x_yz);
        let left = gr_mul(&x, &gr_combine(&y, &z, &one).unwrap()).unwrap();
        let right = gr_combine(&gr_mul(&x, &y).unwrap(), &gr_mul(&x, &z).unwrap(), &one).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(gr_combine(&x, &x, &BigInt::from(-1)).unwrap().is_zero());
        prop_assert!(x.terms().all(|(_, c)| *c != BigInt::from(0)));
    }
}

#[test]
fn eta_respects_every_defining_relation() {
    for n in 2..=6 {
        for rel in presentation(n) {
            let l = SingularWord::new(n, rel.lhs.clone()).unwrap();
            let r = SingularWord::new(n, rel.rhs.clone()).unwrap();
            assert!(
                gr_equal(&eta(&l).unwrap(), &eta(&r).unwrap()).unwrap(),
                "{:?} with n = {n}",
                rel.family
            );
        }
    }
}
