use proptest::prelude::*;
use sugra_bv::scalars::{GaussianRational as Q, GrassmannElement as G, Parity};

fn q() -> impl Strategy<Value = Q> {
    (-50i64..50, -50i64..50, 1i64..20).prop_map(|(re, im, den)| Q::new(re, im, den))
}

fn monomial(odd: bool) -> impl Strategy<Value = G> {
    (q(), proptest::sample::subsequence((0..8usize).collect::<Vec<_>>(), 0..=4))
        .prop_filter("parity", move |(_, g)| (g.len() % 2 == 1) == odd)
        .prop_map(|(c, g)| G::monomial(c, &g))
}

fn homogeneous(odd: bool) -> impl Strategy<Value = G> {
    proptest::collection::vec(monomial(odd), 1..4).prop_map(|v| v.iter().fold(G::zero(), |a, b| a.add(b)))
}

proptest! {
    #[test]
    fn field_axioms(a in q(), b in q(), c in q()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn display_round_trips(a in q()) {
        prop_assert_eq!(a.to_string().parse::<Q>().unwrap(), a);
    }

    #[test]
    fn supercommutativity((a, b) in (any::<bool>(), any::<bool>()).prop_flat_map(|(x, y)| (homogeneous(x), homogeneous(y)))) {
        let (a_odd, b_odd) = (a.parity() == Parity::Odd, b.parity() == Parity::Odd);
        let ab = a.mul(&b);
        let ba = b.mul(&a);
        if a_odd && b_odd {
            prop_assert_eq!(ab, ba.neg());
        } else {
            prop_assert_eq!(ab, ba);
        }
    }

    #[test]
    fn odd_elements_square_to_zero(a in homogeneous(true)) {
        prop_assert!(a.mul(&a).is_zero());
    }

    #[test]
    fn associativity(a in homogeneous(false), b in homogeneous(true), c in homogeneous(true)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }
}
