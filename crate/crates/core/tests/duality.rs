use std::sync::Arc;

use mvstone::algebra::{enumerate_homomorphisms, find_isomorphism};
use mvstone::corpus::generated_algebras;
use mvstone::duality::{
    check_extension, check_naturality, dualize_hom, dualize_map, lc_completion, max_space, unit_iso_algebra,
    unit_iso_space,
};
use mvstone::{Bounds, FiniteMvAlgebra, ProductSignature};

fn full(orders: &[u32]) -> Arc<FiniteMvAlgebra> {
    Arc::new(FiniteMvAlgebra::full_product(ProductSignature::from_orders(orders).unwrap()))
}

fn small_algebras() -> Vec<Arc<FiniteMvAlgebra>> {
    let mut all = vec![full(&[2]), full(&[3]), full(&[2, 2]), full(&[2, 3]), full(&[3, 3]), full(&[5])];
    all.extend(generated_algebras().into_iter().filter(|a| a.algebra.len() <= 12).map(|a| a.algebra));
    all
}

#[test]
fn every_homomorphism_is_natural_and_extends_uniquely() {
    let bounds = Bounds::default();
    let algs = small_algebras();
    let mut seen = 0;
    for a in &algs {
        for b in &algs {
            for h in enumerate_homomorphisms(a, b, &bounds).unwrap() {
                assert!(check_naturality(&h, &bounds).unwrap());
                let ext = check_extension(&h, &bounds).unwrap();
                assert!(ext.commutes && ext.unique);
                seen += 1;
            }
        }
    }
    assert!(seen > 50, "only {seen} homomorphisms");
}

#[test]
fn dual_maps_compose_back() {
    // Clop(Max h) agrees with h up to the units, on every homomorphism.
    let bounds = Bounds::default();
    let algs = small_algebras();
    for a in &algs {
        for b in &algs {
            for h in enumerate_homomorphisms(a, b, &bounds).unwrap() {
                let ua = unit_iso_algebra(a, &bounds).unwrap();
                let ub = unit_iso_algebra(b, &bounds).unwrap();
                let f = dualize_hom(&h, &ua.dual, &ub.dual).unwrap();
                let back = dualize_map(&f, &ub.dual.space, &ua.dual.space).unwrap();
                for x in 0..a.len() {
                    assert_eq!(back.apply(ua.iso.apply(x)), ub.iso.apply(h.apply(x)));
                }
            }
        }
    }
}

#[test]
fn dual_of_a_product_has_one_point_per_factor() {
    let bounds = Bounds::default();
    for orders in [&[2u32][..], &[3, 4], &[2, 3, 5], &[4, 4, 4]] {
        let d = max_space(&full(orders), &bounds).unwrap();
        assert_eq!(d.universe().len(), orders.len());
        let mut q = d.hat.quotient_orders.clone();
        q.sort_unstable();
        let mut want = orders.to_vec();
        want.sort_unstable();
        assert_eq!(q, want);
        assert!(d.stone.stone);
    }
}

#[test]
fn completion_of_a_finite_algebra_is_itself() {
    let bounds = Bounds::default();
    for a in small_algebras() {
        let c = lc_completion(&a, &bounds).unwrap();
        assert!(find_isomorphism(&a, &c.clop, &bounds).unwrap().is_some());
    }
}

#[test]
fn non_stone_spaces_are_rejected() {
    use mvstone::topology::MvTopology;
    use mvstone::{Chain, MvError, Universe};
    let u = Universe::new(["p", "q"]).unwrap();
    let ind = MvTopology::indiscrete(u, Chain::new(3).unwrap());
    assert!(matches!(unit_iso_space(&ind, &Bounds::default()), Err(MvError::NotStone(_))));
}
