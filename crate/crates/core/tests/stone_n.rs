use std::collections::BTreeSet;

use mvstone::stone_n::{
    check_morphism_boole_n, check_morphism_brn, enumerate_boole_n, max_n_morphism, relation_from_ideals,
    roundtrip_r, BoolHom, BoolIdeal, BooleNObject, FiniteBooleanAlgebra,
};
use mvstone::Bounds;

fn objects(k: u32, n: u32) -> Vec<BooleNObject> {
    enumerate_boole_n(FiniteBooleanAlgebra::new(k).unwrap(), n)
}

#[test]
fn morphisms_agree_across_the_three_categories() {
    // A Boolean map preserves the ideal sequences iff it preserves the
    // relations iff its dual map pulls the opens back inside.
    let bounds = Bounds::default();
    let mut checked = 0;
    let mut morphisms = 0;
    for n in 2..=4 {
        for k1 in 1..=2 {
            for k2 in 1..=2 {
                let (b1, b2) = (FiniteBooleanAlgebra::new(k1).unwrap(), FiniteBooleanAlgebra::new(k2).unwrap());
                for from in objects(k1, n) {
                    for to in objects(k2, n) {
                        let (rf, rt) = (relation_from_ideals(&from).unwrap(), relation_from_ideals(&to).unwrap());
                        for f in BoolHom::enumerate(b1, b2) {
                            let j = check_morphism_boole_n(&f, &from, &to).unwrap().holds;
                            let r = check_morphism_brn(&f, &rf, &rt).unwrap().holds;
                            let (_, s) = max_n_morphism(&f, &from, &to, &bounds).unwrap();
                            assert_eq!(j, r, "{from} → {to}");
                            assert_eq!(j, s.holds, "{from} → {to}");
                            checked += 1;
                            morphisms += j as usize;
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 100 && morphisms > 0 && morphisms < checked);
}

#[test]
fn relation_roundtrip_on_every_object() {
    for k in 1..=3 {
        for n in 2..=4 {
            for bn in objects(k, n) {
                let r = relation_from_ideals(&bn).unwrap();
                assert!(roundtrip_r(&r).unwrap().holds, "{bn}");
            }
        }
    }
}

#[test]
fn enumeration_counts() {
    // n = 2 leaves J₁ free: one object per ideal, and 2^k has 2^k ideals.
    for k in 1..=4 {
        assert_eq!(objects(k, 2).len(), 1 << k);
    }
    // n = 3 forces J₁ = J₂, again one object per ideal.
    for k in 1..=3 {
        assert_eq!(objects(k, 3).len(), 1 << k);
    }
    // n = 4: J₁ = J₃ = I and J₂ = I′ with I ⊆ I′, i.e. pairs of subsets
    // nested inside the atoms: 3^k.
    for k in 1..=3 {
        assert_eq!(objects(k, 4).len(), 3usize.pow(k));
    }
}

#[test]
fn homomorphism_count_is_functions_on_atoms() {
    for k1 in 1..=3u32 {
        for k2 in 1..=3u32 {
            let homs = BoolHom::enumerate(FiniteBooleanAlgebra::new(k1).unwrap(), FiniteBooleanAlgebra::new(k2).unwrap());
            let want = (k1 as usize).pow(k2);
            assert_eq!(homs.len(), want, "2^{k1} → 2^{k2}");
            let distinct: BTreeSet<Vec<u32>> = homs.iter().map(|h| (0..1 << k1).map(|a| h.apply(a)).collect()).collect();
            assert_eq!(distinct.len(), homs.len());
        }
    }
}

#[test]
fn symmetric_sequences_only() {
    let b = FiniteBooleanAlgebra::new(2).unwrap();
    let a = BoolIdeal::principal(b, b.parse("a").unwrap());
    let zero = BoolIdeal::principal(b, 0);
    assert!(BooleNObject::new(b, 3, vec![a.clone(), zero.clone()]).is_err());
    // J₁ ∩ J₁ ⊆ J₂ fails when J₂ is smaller.
    assert!(BooleNObject::new(b, 4, vec![a.clone(), zero, a]).is_err());
}
