use std::sync::Arc;

use num_rational::Ratio;
use proptest::prelude::*;

use mvstone::algebra::{
    all_ideals, chain_factorization, enumerate_homomorphisms, find_isomorphism, maximal_ideals,
    maximal_ideals_by_inclusion, prime_ideals, quotient,
};
use mvstone::{Bounds, Chain, FiniteMvAlgebra, MvElement, ProductSignature};

fn signature() -> impl Strategy<Value = ProductSignature> {
    prop::collection::vec(2u32..=6, 1..=3).prop_map(|o| ProductSignature::from_orders(&o).unwrap())
}

fn element(sig: &ProductSignature) -> impl Strategy<Value = MvElement> {
    let parts: Vec<_> = sig.factors().iter().map(|c| 0..=c.top()).collect();
    parts.prop_map(MvElement)
}

fn sig_and(k: usize) -> impl Strategy<Value = (ProductSignature, Vec<MvElement>)> {
    signature().prop_flat_map(move |s| {
        let e = prop::collection::vec(element(&s), k);
        (Just(s), e)
    })
}

proptest! {
    #[test]
    fn mv_axioms_hold_in_products((sig, v) in sig_and(3)) {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let zero = sig.zero();
        prop_assert_eq!(sig.oplus(x, &sig.oplus(y, z)), sig.oplus(&sig.oplus(x, y), z));
        prop_assert_eq!(sig.oplus(x, y), sig.oplus(y, x));
        prop_assert_eq!(sig.oplus(x, &zero), x.clone());
        prop_assert_eq!(sig.neg(&sig.neg(x)), x.clone());
        prop_assert_eq!(sig.oplus(x, &sig.neg(&zero)), sig.one());
        let l = sig.oplus(&sig.neg(&sig.oplus(&sig.neg(x), y)), y);
        let r = sig.oplus(&sig.neg(&sig.oplus(&sig.neg(y), x)), x);
        prop_assert_eq!(&l, &r);
        prop_assert_eq!(l, sig.join(x, y));
        prop_assert_eq!(sig.odot(x, y), sig.neg(&sig.oplus(&sig.neg(x), &sig.neg(y))));
        prop_assert_eq!(sig.meet(x, y), sig.odot(x, &sig.oplus(&sig.neg(x), y)));
        prop_assert_eq!(sig.leq(x, y), sig.ominus(x, y) == zero);
    }

    #[test]
    fn quasi_equation((sig, v) in sig_and(2)) {
        let (x, y) = (&v[0], &v[1]);
        if sig.odot(x, y) == sig.zero() {
            let sq = |a: &MvElement| sig.odot(a, a);
            prop_assert_eq!(sig.meet(&sq(x), &sq(y)), sig.zero());
        }
    }

    #[test]
    fn chain_matches_rationals(order in 2u32..=12, a in 0u32..12, b in 0u32..12) {
        let c = Chain::new(order).unwrap();
        let (a, b) = (a % order, b % order);
        let q = |k: u32| Ratio::new(k as i64, c.top() as i64);
        let one = Ratio::from_integer(1);
        prop_assert_eq!(q(c.oplus(a, b)), (q(a) + q(b)).min(one));
        prop_assert_eq!(q(c.odot(a, b)), (q(a) + q(b) - one).max(Ratio::from_integer(0)));
        prop_assert_eq!(q(c.distance(a, b)), (q(a) - q(b)).max(q(b) - q(a)));
        prop_assert_eq!(q(c.delta(a)), if a == c.top() { one } else { Ratio::from_integer(0) });
    }

    #[test]
    fn generated_subalgebras_are_closed((sig, gens) in sig_and(2)) {
        let a = FiniteMvAlgebra::generate(sig.clone(), gens.clone()).unwrap();
        for g in &gens {
            prop_assert!(a.index_of(g).is_some());
        }
        for x in 0..a.len() {
            prop_assert!(a.index_of(&sig.neg(a.element(x))).is_some());
            for y in 0..a.len() {
                prop_assert!(a.index_of(&sig.oplus(a.element(x), a.element(y))).is_some());
            }
        }
    }

    #[test]
    fn maximal_ideals_and_factorization((sig, gens) in sig_and(2)) {
        let bounds = Bounds::default();
        let a = FiniteMvAlgebra::generate(sig, gens).unwrap();
        let max = maximal_ideals(&a, &bounds).unwrap();
        let by_inclusion = maximal_ideals_by_inclusion(&a, &bounds).unwrap();
        let mut certified: Vec<_> = max.iter().map(|m| m.ideal.clone()).collect();
        let mut plain = by_inclusion.clone();
        certified.sort();
        plain.sort();
        prop_assert_eq!(&certified, &plain);
        for m in &max {
            prop_assert!(m.verify(&a));
            prop_assert!(quotient(&a, &m.ideal).unwrap().algebra.is_chain());
        }
        // Finite MV-algebras are products of their quotients by maximal ideals.
        let orders = chain_factorization(&a, &bounds).unwrap();
        prop_assert_eq!(orders.iter().map(|&k| k as usize).product::<usize>(), a.len());
        // Finite chains are simple, so prime and maximal ideals coincide.
        let mut primes = prime_ideals(&a, &bounds).unwrap();
        primes.sort();
        prop_assert_eq!(primes, plain);
    }
}

#[test]
fn ideals_of_a_product_are_boxes() {
    let bounds = Bounds::default();
    let a = FiniteMvAlgebra::full_product(ProductSignature::from_orders(&[3, 4, 2]).unwrap());
    // Ideals of a product of simple algebras pick a sub-product: 2^3 of them.
    assert_eq!(all_ideals(&a, &bounds).unwrap().len(), 8);
    assert_eq!(chain_factorization(&a, &bounds).unwrap(), vec![2, 3, 4]);
}

#[test]
fn isomorphism_ignores_factor_order() {
    let bounds = Bounds::default();
    let a = Arc::new(FiniteMvAlgebra::full_product(ProductSignature::from_orders(&[3, 5]).unwrap()));
    let b = Arc::new(FiniteMvAlgebra::full_product(ProductSignature::from_orders(&[5, 3]).unwrap()));
    let c = Arc::new(FiniteMvAlgebra::full_product(ProductSignature::from_orders(&[4, 4]).unwrap()));
    let h = find_isomorphism(&a, &b, &bounds).unwrap().expect("isomorphic");
    assert!(h.is_bijective());
    assert!(find_isomorphism(&a, &c, &bounds).unwrap().is_none());
}

#[test]
fn homomorphisms_between_chains() {
    let bounds = Bounds::default();
    // Ł3 → Ł5 is the unique embedding; Ł5 → Ł3 has none; Ł3 → Ł4 has none.
    let l = |n| Arc::new(FiniteMvAlgebra::chain(n).unwrap());
    assert_eq!(enumerate_homomorphisms(&l(3), &l(5), &bounds).unwrap().len(), 1);
    assert_eq!(enumerate_homomorphisms(&l(5), &l(3), &bounds).unwrap().len(), 0);
    assert_eq!(enumerate_homomorphisms(&l(3), &l(4), &bounds).unwrap().len(), 0);
    assert_eq!(enumerate_homomorphisms(&l(3), &l(3), &bounds).unwrap().len(), 1);
}
