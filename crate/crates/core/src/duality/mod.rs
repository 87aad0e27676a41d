//! The `Clop`/`Max` functors between finite MV-algebras and Stone MV-spaces,
//! with certified unit isomorphisms on both sides.
//!
//! `Max A` is the set of maximal ideals topologized by the joins of the hat
//! images `â`. `Clop τ` is the algebra of clopen tables. Every isomorphism
//! returned here is an explicit table that has been checked exhaustively.

mod cuts;

use std::sync::Arc;

pub use cuts::{
    check_liminary_duality, check_sfc, cut_closure, enumerate_cuts, hat_join, hat_meet, is_cut,
    is_lcc, is_limit_cut, is_limit_cut_in_algebra, lc_completion, limit_cut_partner, lower_bounds,
    upper_bounds, Cut, CutCensus, LccReport, LiminaryDualityReport, PartnerCheck, SfcReport,
};

use crate::algebra::{embed_max, FiniteMvAlgebra, HatEmbedding, Ideal, MaximalIdeal, MvHomomorphism};
use crate::bounds::Bounds;
use crate::error::{MvError, Result};
use crate::fuzzy::{FuzzySubset, PointMap, Universe};
use crate::topology::{
    check_continuous, check_continuous_via_base, generate_from_base, is_homeomorphism, is_stone_mv_space,
    MvTopology, StoneReport,
};

/// `⟨Max A, Ω_A⟩` together with the hat table it was generated from.
#[derive(Clone, Debug)]
pub struct DualSpace {
    pub algebra: Arc<FiniteMvAlgebra>,
    pub hat: HatEmbedding,
    pub space: MvTopology,
    pub stone: StoneReport,
}

impl DualSpace {
    pub fn universe(&self) -> &Arc<Universe> {
        &self.hat.universe
    }

    pub fn hat_of(&self, a: usize) -> &FuzzySubset {
        &self.hat.hats[a]
    }

    /// The base `Â` in canonical order.
    pub fn base(&self) -> Vec<FuzzySubset> {
        let mut b = self.hat.hats.clone();
        b.sort();
        b.dedup();
        b
    }

    pub fn point_of(&self, ideal: &Ideal) -> Option<usize> {
        self.hat.maximal.iter().position(|m| m.ideal == *ideal)
    }
}

/// Builds the dual space and certifies it is a Stone MV-space.
pub fn max_space(algebra: &Arc<FiniteMvAlgebra>, bounds: &Bounds) -> Result<DualSpace> {
    let hat = embed_max(algebra, bounds)?;
    let mut base = hat.hats.clone();
    base.sort();
    base.dedup();
    let space = generate_from_base(&hat.universe, hat.chain, &base)?;
    let stone = is_stone_mv_space(&space, bounds)?;
    if !stone.stone {
        return Err(MvError::Internal("dual space is not a Stone MV-space".into()));
    }
    Ok(DualSpace {
        algebra: algebra.clone(),
        hat,
        space,
        stone,
    })
}

/// `Max h : Max B → Max A`, `N ↦ h⁻¹[N]`, checked continuous via the base
/// `Â` and against `(Max h)⇐(â) = (h(a))^`.
pub fn dualize_hom(h: &MvHomomorphism, domain: &DualSpace, codomain: &DualSpace) -> Result<PointMap> {
    if **h.domain() != *domain.algebra || **h.codomain() != *codomain.algebra {
        return Err(MvError::InvalidArgument("dual spaces do not match the homomorphism".into()));
    }
    let table = codomain
        .hat
        .maximal
        .iter()
        .map(|n| {
            domain
                .point_of(&h.preimage_ideal(&n.ideal))
                .ok_or_else(|| MvError::Internal("preimage of a maximal ideal is not maximal".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let f = PointMap::new(codomain.universe().clone(), domain.universe().clone(), table)?;
    if !check_continuous_via_base(&f, &codomain.space, &domain.base())?.holds {
        return Err(MvError::Internal("dual of a homomorphism is not continuous".into()));
    }
    for a in 0..domain.algebra.len() {
        if !f.preimage(domain.hat_of(a))?.same_values(codomain.hat_of(h.apply(a))) {
            return Err(MvError::Internal(format!(
                "pulled-back hat differs at {}",
                domain.algebra.format_element(a)
            )));
        }
    }
    Ok(f)
}

/// `Clop f : Clop σ → Clop τ`, the restriction of `f⇐` to clopens.
pub fn dualize_map(f: &PointMap, tau: &MvTopology, sigma: &MvTopology) -> Result<MvHomomorphism> {
    if !check_continuous(f, tau, sigma)?.holds {
        return Err(MvError::NotContinuous);
    }
    let source = Arc::new(sigma.clopen_algebra()?);
    let target = Arc::new(tau.clopen_algebra()?);
    let table = source
        .elements()
        .iter()
        .map(|e| {
            let pulled = f
                .preimage(&sigma.table_of(e)?)?
                .to_chain(tau.chain())
                .ok_or_else(|| MvError::Internal("preimage off the domain grid".into()))?;
            target
                .index_of(&pulled.as_element())
                .ok_or_else(|| MvError::Internal("preimage of a clopen is not clopen".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    MvHomomorphism::new(source, target, table)
}

/// `A ≅ Clop Max A` through `a ↦ â`.
#[derive(Clone, Debug)]
pub struct UnitIsoAlgebra {
    pub dual: DualSpace,
    pub clop: Arc<FiniteMvAlgebra>,
    pub iso: MvHomomorphism,
}

pub fn unit_iso_algebra(algebra: &Arc<FiniteMvAlgebra>, bounds: &Bounds) -> Result<UnitIsoAlgebra> {
    let dual = max_space(algebra, bounds)?;
    let clop = Arc::new(dual.space.clopen_algebra()?);
    let table = dual
        .hat
        .hats
        .iter()
        .map(|h| {
            clop.index_of(&h.as_element())
                .ok_or_else(|| MvError::Internal(format!("hat {h} is not clopen")))
        })
        .collect::<Result<Vec<_>>>()?;
    let iso = MvHomomorphism::new(algebra.clone(), clop.clone(), table)
        .map_err(|e| MvError::Internal(format!("hat map: {e}")))?;
    if !iso.is_bijective() {
        return Err(MvError::Internal("hat map is not onto the clopens".into()));
    }
    Ok(UnitIsoAlgebra { dual, clop, iso })
}

/// `τ ≅ Max Clop τ` through `x ↦ {o ∈ Clop τ : o(x) = 0}`.
#[derive(Clone, Debug)]
pub struct UnitIsoSpace {
    pub clop: Arc<FiniteMvAlgebra>,
    pub dual: DualSpace,
    pub map: PointMap,
}

pub fn unit_iso_space(tau: &MvTopology, bounds: &Bounds) -> Result<UnitIsoSpace> {
    let report = is_stone_mv_space(tau, bounds)?;
    if !report.stone {
        let reason = if !report.hausdorff {
            "not Hausdorff"
        } else if !report.zero_dimensional {
            "not zero-dimensional"
        } else {
            "not compact"
        };
        return Err(MvError::NotStone(reason.into()));
    }
    let clop = Arc::new(tau.clopen_algebra()?);
    let dual = max_space(&clop, bounds)?;
    let table = (0..tau.universe().len())
        .map(|x| {
            let ideal = Ideal::new(&clop, (0..clop.len()).filter(|&a| clop.element(a).0[x] == 0))?;
            MaximalIdeal::certify(&clop, &ideal)
                .ok_or_else(|| MvError::Internal("point ideal has no power certificate".into()))?;
            dual.point_of(&ideal)
                .ok_or_else(|| MvError::Internal("point ideal missing from Max".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let map = PointMap::new(tau.universe().clone(), dual.universe().clone(), table)?;
    if !map.is_bijective() {
        return Err(MvError::Internal("point map is not bijective".into()));
    }
    if !is_homeomorphism(&map, tau, &dual.space)? {
        return Err(MvError::Internal("point map is not a homeomorphism".into()));
    }
    for a in 0..clop.len() {
        let o = tau.table_of(clop.element(a))?;
        if !map.preimage(dual.hat_of(a))?.same_values(&o) {
            return Err(MvError::Internal(format!("evaluation identity fails at {o}")));
        }
    }
    Ok(UnitIsoSpace { clop, dual, map })
}

/// Both faces of the skeleton / Boolean-center square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareReport {
    /// `M ↦ M ∩ B(A)`, as indices into `Max B(A)`.
    pub point_map: Vec<usize>,
    /// `Sk(Max A)` is homeomorphic to `Max B(A)` through `point_map`.
    pub spaces_agree: bool,
    /// `B(Clop Max A)` and `Clop Sk(Max A)` hold the same crisp tables.
    pub algebras_agree: bool,
    /// `B(A) ≅ Clop Sk(Max A)` with a verified isomorphism.
    pub center_isomorphic: bool,
    pub holds: bool,
}

pub fn check_square(algebra: &Arc<FiniteMvAlgebra>, bounds: &Bounds) -> Result<SquareReport> {
    let dual = max_space(algebra, bounds)?;
    let skeleton = dual.space.skeleton()?;
    let center = Arc::new(algebra.boolean_center());
    let center_dual = max_space(&center, bounds)?;
    let emb = algebra
        .embedding_of(&center)
        .ok_or_else(|| MvError::Internal("center is not a subset".into()))?;

    let mut point_map = Vec::with_capacity(dual.hat.maximal.len());
    for m in &dual.hat.maximal {
        let restricted = Ideal::new(&center, (0..center.len()).filter(|&b| m.ideal.contains(emb[b])))?;
        match center_dual.point_of(&restricted) {
            Some(p) => point_map.push(p),
            None => {
                return Ok(SquareReport {
                    point_map,
                    spaces_agree: false,
                    algebras_agree: false,
                    center_isomorphic: false,
                    holds: false,
                })
            }
        }
    }
    let f = PointMap::new(dual.universe().clone(), center_dual.universe().clone(), point_map.clone())?;
    let spaces_agree = is_homeomorphism(&f, &skeleton, &center_dual.space)?;

    let clop = dual.space.clopen_algebra()?;
    let clop_center = clop.boolean_center();
    let mut from_center: Vec<FuzzySubset> = clop_center
        .elements()
        .iter()
        .map(|e| {
            dual.space
                .table_of(e)
                .map(|t| t.to_chain(crate::chain::Chain::BOOLEAN).expect("idempotent tables are crisp"))
        })
        .collect::<Result<_>>()?;
    from_center.sort();
    let skeleton_clopens = skeleton.clopens();
    let algebras_agree = from_center == skeleton_clopens;

    let sk_clop = Arc::new(skeleton.clopen_algebra()?);
    let center_isomorphic = crate::algebra::find_isomorphism(&center, &sk_clop, bounds)?.is_some();
    Ok(SquareReport {
        holds: spaces_agree && algebras_agree && center_isomorphic,
        point_map,
        spaces_agree,
        algebras_agree,
        center_isomorphic,
    })
}

/// Naturality of the hat: `(h(a))^ = Clop(Max h)(â)` for every `a`.
pub fn check_naturality(h: &MvHomomorphism, bounds: &Bounds) -> Result<bool> {
    let ua = unit_iso_algebra(h.domain(), bounds)?;
    let ub = unit_iso_algebra(h.codomain(), bounds)?;
    let f = dualize_hom(h, &ua.dual, &ub.dual)?;
    let clop_h = dualize_map(&f, &ub.dual.space, &ua.dual.space)?;
    Ok((0..h.domain().len()).all(|a| clop_h.apply(ua.iso.apply(a)) == ub.iso.apply(h.apply(a))))
}

/// Extension of `h : A → B` to the completions, `Clop Max A → Clop Max B`,
/// and a check that it is the only map commuting with the hats.
#[derive(Clone, Debug)]
pub struct ExtensionCheck {
    pub extension: MvHomomorphism,
    pub commutes: bool,
    pub unique: bool,
}

pub fn check_extension(h: &MvHomomorphism, bounds: &Bounds) -> Result<ExtensionCheck> {
    let ua = unit_iso_algebra(h.domain(), bounds)?;
    let ub = unit_iso_algebra(h.codomain(), bounds)?;
    let f = dualize_hom(h, &ua.dual, &ub.dual)?;
    let extension = dualize_map(&f, &ub.dual.space, &ua.dual.space)?;
    let commutes = (0..h.domain().len()).all(|a| extension.apply(ua.iso.apply(a)) == ub.iso.apply(h.apply(a)));
    // The hat of A is onto Clop Max A, so any commuting map is determined.
    let inv = ua
        .iso
        .inverse()
        .ok_or_else(|| MvError::Internal("unit is not invertible".into()))?;
    let forced: Vec<usize> = (0..ua.clop.len()).map(|c| ub.iso.apply(h.apply(inv.apply(c)))).collect();
    let unique = forced == extension.table();
    Ok(ExtensionCheck {
        extension,
        commutes,
        unique,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{enumerate_homomorphisms, find_isomorphism};
    use crate::chain::Chain;
    use crate::element::{MvElement, ProductSignature};

    fn full(orders: &[u32]) -> Arc<FiniteMvAlgebra> {
        Arc::new(FiniteMvAlgebra::full_product(ProductSignature::from_orders(orders).unwrap()))
    }

    #[test]
    fn dual_of_small_algebras() {
        let b = Bounds::default();
        let d = max_space(&full(&[2]), &b).unwrap();
        assert_eq!(d.universe().len(), 1);
        assert_eq!(d.space.len(), 2);
        let d = max_space(&full(&[2, 2]), &b).unwrap();
        assert_eq!(d.space, MvTopology::discrete(d.universe().clone(), Chain::BOOLEAN));
        let d = max_space(&full(&[3]), &b).unwrap();
        assert_eq!(d.space.len(), 3);
    }

    #[test]
    fn roundtrips() {
        let b = Bounds::default();
        for orders in [&[2][..], &[4], &[2, 3, 5]] {
            let a = full(orders);
            let u = unit_iso_algebra(&a, &b).unwrap();
            assert!(u.iso.is_bijective());
            assert!(find_isomorphism(&a, &u.clop, &b).unwrap().is_some());
        }
    }

    #[test]
    fn space_roundtrips() {
        let b = Bounds::default();
        let one = Universe::new(["x"]).unwrap();
        let u = unit_iso_space(&MvTopology::full(one, Chain::new(3).unwrap()), &b).unwrap();
        assert_eq!(u.dual.hat.maximal.len(), 1);
        let two = Universe::new(["x", "y"]).unwrap();
        let u = unit_iso_space(&MvTopology::discrete(two, Chain::BOOLEAN), &b).unwrap();
        assert_eq!(u.clop.len(), 4);
        let not_stone = MvTopology::indiscrete(Universe::new(["x", "y"]).unwrap(), Chain::BOOLEAN);
        assert!(matches!(unit_iso_space(&not_stone, &b), Err(MvError::NotStone(_))));
    }

    #[test]
    fn projection_dualizes_to_inclusion() {
        let b = Bounds::default();
        let a = full(&[2, 3]);
        let l3 = full(&[3]);
        let table = a
            .elements()
            .iter()
            .map(|e| l3.index_of(&MvElement(vec![e.0[1]])).unwrap())
            .collect();
        let h = MvHomomorphism::new(a.clone(), l3.clone(), table).unwrap();
        let da = max_space(&a, &b).unwrap();
        let dl = max_space(&l3, &b).unwrap();
        let f = dualize_hom(&h, &da, &dl).unwrap();
        // The single point of Max Ł₃ goes to the ideal killing the Ł₃ coordinate's complement.
        let target = &da.hat.maximal[f.apply(0)].ideal;
        assert!(target.members().iter().all(|&m| a.element(m).0[1] == 0));
        assert!(check_naturality(&h, &b).unwrap());
        let ext = check_extension(&h, &b).unwrap();
        assert!(ext.commutes && ext.unique);
    }

    #[test]
    fn dualize_constant_map() {
        let x = Universe::new(["p", "q"]).unwrap();
        let y = Universe::new(["a", "b"]).unwrap();
        let c = Chain::new(3).unwrap();
        let tau = MvTopology::full(x.clone(), c);
        let sigma = MvTopology::full(y.clone(), c);
        let f = PointMap::constant(x, y, 1).unwrap();
        let h = dualize_map(&f, &tau, &sigma).unwrap();
        for (i, e) in h.domain().elements().iter().enumerate() {
            let img = h.codomain().element(h.apply(i));
            assert_eq!(img.0, vec![e.0[1], e.0[1]]);
        }
    }

    #[test]
    fn homomorphism_duals_compose() {
        let b = Bounds::default();
        let a = full(&[2, 3]);
        let c = full(&[3]);
        for h in enumerate_homomorphisms(&a, &c, &b).unwrap() {
            let da = max_space(&a, &b).unwrap();
            let dc = max_space(&c, &b).unwrap();
            let f = dualize_hom(&h, &da, &dc).unwrap();
            let id = dualize_hom(&MvHomomorphism::identity(a.clone()), &da, &da).unwrap();
            assert_eq!(id, PointMap::identity(da.universe().clone()));
            assert_eq!(id.after(&f).unwrap(), f);
        }
    }

    #[test]
    fn squares() {
        let b = Bounds::default();
        for orders in [&[3][..], &[2, 2], &[3, 2], &[2, 3, 4]] {
            let r = check_square(&full(orders), &b).unwrap();
            assert!(r.holds, "{orders:?}: {r:?}");
        }
    }
}
