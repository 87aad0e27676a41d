use proptest::prelude::*;

use mvstone::supernatural::{multiset_of, Exponent, FiniteMultiset, Supernatural};
use mvstone::{Bounds, FiniteMvAlgebra, ProductSignature};

const PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

fn supernatural() -> impl Strategy<Value = Supernatural> {
    prop::collection::vec(prop_oneof![4 => (0u32..4).prop_map(Exponent::Finite), 1 => Just(Exponent::Omega)], 5)
        .prop_map(|es| Supernatural::new(PRIMES.iter().copied().zip(es)).unwrap())
}

proptest! {
    #[test]
    fn lattice_laws(a in supernatural(), b in supernatural(), c in supernatural()) {
        prop_assert_eq!(a.join(&b), b.join(&a));
        prop_assert_eq!(a.meet(&b), b.meet(&a));
        prop_assert_eq!(a.join(&a.meet(&b)), a.clone());
        prop_assert_eq!(a.meet(&a.join(&b)), a.clone());
        prop_assert_eq!(a.meet(&b.join(&c)), a.meet(&b).join(&a.meet(&c)));
        prop_assert_eq!(a.join(&b.meet(&c)), a.join(&b).meet(&a.join(&c)));
        prop_assert_eq!(a.leq(&b), a.join(&b) == b);
        prop_assert!(a.meet(&b).leq(&a) && a.leq(&a.join(&b)));
    }

    #[test]
    fn display_round_trips(a in supernatural()) {
        let back: Supernatural = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn naturals_embed_by_divisibility(m in 1u64..2000, n in 1u64..2000) {
        let (sm, sn) = (Supernatural::from_natural(m).unwrap(), Supernatural::from_natural(n).unwrap());
        prop_assert_eq!(sm.leq(&sn), n % m == 0);
        prop_assert_eq!(sm.to_natural(), Some(m));
        prop_assert_eq!(sm.join(&sn).to_natural(), Some(num_integer::lcm(m, n)));
        prop_assert_eq!(sm.meet(&sn).to_natural(), Some(num_integer::gcd(m, n)));
    }
}

#[test]
fn omega_is_above_every_power() {
    let s: Supernatural = "2^omega".parse().unwrap();
    for k in 0..20 {
        let p = Supernatural::from_natural(1 << k).unwrap();
        assert!(p.lt(&s));
        assert!(s.in_basic_open(1 << k).unwrap());
    }
    assert_eq!(s.to_natural(), None);
    assert!(!s.in_basic_open(3).unwrap());
}

#[test]
fn multisets_of_products() {
    let bounds = Bounds::default();
    let a = FiniteMvAlgebra::full_product(ProductSignature::from_orders(&[3, 2, 3, 5]).unwrap());
    let m = multiset_of(&a, &bounds).unwrap();
    assert_eq!(m, FiniteMultiset::from_items([1, 2, 2, 4]).unwrap());
    assert_eq!(m.multiplicity(2), 2);
    assert_eq!(m.total(), 4);
    assert_eq!(m.to_string(), "{1:1, 2:2, 4:1}");
}
