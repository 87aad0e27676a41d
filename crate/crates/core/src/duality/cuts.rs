//! Cuts, limit cuts, limit cut completeness and the related class checks.
//!
//! In a finite lattice every cut is a principal down-set `↓c`, and the pair
//! `(c, c)` makes the distance condition vanish, so every cut is a limit cut
//! with a supremum. The routines here compute all of that directly instead
//! of assuming it.

use std::sync::Arc;

use super::{max_space, unit_iso_algebra, UnitIsoAlgebra};
use crate::algebra::{find_isomorphism, is_liminary, quotient, FiniteMvAlgebra, HatEmbedding};
use crate::bounds::Bounds;
use crate::error::{MvError, Result};
use crate::fuzzy::FuzzySubset;
use crate::topology::compactness;

/// `lS`: elements below every member of `S`.
pub fn lower_bounds(algebra: &FiniteMvAlgebra, set: &[usize]) -> Vec<usize> {
    (0..algebra.len())
        .filter(|&a| set.iter().all(|&s| algebra.leq(a, s)))
        .collect()
}

/// `uS`: elements above every member of `S`.
pub fn upper_bounds(algebra: &FiniteMvAlgebra, set: &[usize]) -> Vec<usize> {
    (0..algebra.len())
        .filter(|&a| set.iter().all(|&s| algebra.leq(s, a)))
        .collect()
}

fn normalized(set: &[usize]) -> Vec<usize> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

/// `S = luS`.
pub fn is_cut(algebra: &FiniteMvAlgebra, set: &[usize]) -> bool {
    normalized(set) == lower_bounds(algebra, &upper_bounds(algebra, set))
}

/// A subset of the carrier equal to its lower bounds of upper bounds.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cut {
    members: Vec<usize>,
}

impl Cut {
    pub fn new(algebra: &FiniteMvAlgebra, members: &[usize]) -> Result<Self> {
        if !is_cut(algebra, members) {
            return Err(MvError::InvalidArgument("set is not a cut".into()));
        }
        Ok(Cut {
            members: normalized(members),
        })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }
}

/// `luS`.
pub fn cut_closure(algebra: &FiniteMvAlgebra, set: &[usize]) -> Cut {
    Cut {
        members: lower_bounds(algebra, &upper_bounds(algebra, set)),
    }
}

/// All cuts found, and how they were found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutCensus {
    pub cuts: Vec<Cut>,
    /// Every subset of the carrier was tested.
    pub exhaustive: bool,
    pub subsets_examined: u64,
}

/// Every subset up to `bounds.cut_exhaustive` elements; principal seeds
/// `lu{a}` (and `lu∅`) above that.
pub fn enumerate_cuts(algebra: &FiniteMvAlgebra, bounds: &Bounds) -> CutCensus {
    let n = algebra.len();
    if n <= bounds.cut_exhaustive.min(26) {
        exhaustive_cuts(algebra)
    } else {
        let mut cuts: Vec<Cut> = std::iter::once(cut_closure(algebra, &[]))
            .chain((0..n).map(|a| cut_closure(algebra, &[a])))
            .collect();
        cuts.sort();
        cuts.dedup();
        CutCensus {
            cuts,
            exhaustive: false,
            subsets_examined: n as u64 + 1,
        }
    }
}

fn exhaustive_cuts(algebra: &FiniteMvAlgebra) -> CutCensus {
    let n = algebra.len();
    let all: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let up: Vec<u32> = (0..n)
        .map(|a| (0..n).filter(|&b| algebra.leq(a, b)).fold(0, |m, b| m | 1 << b))
        .collect();
    let down: Vec<u32> = (0..n)
        .map(|a| (0..n).filter(|&b| algebra.leq(b, a)).fold(0, |m, b| m | 1 << b))
        .collect();
    let total = 1usize << n;
    // upper[mask] = u(mask), built from mask without its lowest bit.
    let mut upper = vec![all; total];
    let mut cuts = Vec::new();
    for mask in 0..total {
        if mask != 0 {
            let low = mask.trailing_zeros() as usize;
            upper[mask] = upper[mask & (mask - 1)] & up[low];
        }
        let mut u = upper[mask];
        let mut lower = all;
        while u != 0 {
            let b = u.trailing_zeros() as usize;
            lower &= down[b];
            u &= u - 1;
        }
        if lower as usize == mask {
            cuts.push(Cut {
                members: (0..n).filter(|&i| mask & (1 << i) != 0).collect(),
            });
        }
    }
    cuts.sort();
    CutCensus {
        cuts,
        exhaustive: true,
        subsets_examined: total as u64,
    }
}

/// Pointwise join of the hats of `set` (`0` when empty).
pub fn hat_join(hat: &HatEmbedding, set: &[usize]) -> FuzzySubset {
    let zero = FuzzySubset::zero(hat.universe.clone(), hat.chain);
    set.iter().fold(zero, |acc, &a| acc.join(&hat.hats[a]).expect("hats share a grid"))
}

/// Pointwise meet of the hats of `set` (`1` when empty).
pub fn hat_meet(hat: &HatEmbedding, set: &[usize]) -> FuzzySubset {
    let one = FuzzySubset::one(hat.universe.clone(), hat.chain);
    set.iter().fold(one, |acc, &a| acc.meet(&hat.hats[a]).expect("hats share a grid"))
}

/// `⋀{b̂ ⊖ â : b ∈ uX, a ∈ X} = 0`, evaluated pointwise on the hats.
pub fn is_limit_cut(algebra: &FiniteMvAlgebra, hat: &HatEmbedding, cut: &Cut) -> bool {
    let ups = upper_bounds(algebra, cut.members());
    let mut meet = FuzzySubset::one(hat.universe.clone(), hat.chain);
    for &b in &ups {
        for &a in cut.members() {
            meet = meet
                .meet(&hat.hats[b].ominus(&hat.hats[a]).expect("hats share a grid"))
                .expect("hats share a grid");
        }
    }
    meet.is_zero()
}

/// The same condition with the meet taken inside `A`.
pub fn is_limit_cut_in_algebra(algebra: &FiniteMvAlgebra, cut: &Cut) -> bool {
    let ups = upper_bounds(algebra, cut.members());
    let diffs = ups
        .iter()
        .flat_map(|&b| cut.members().iter().map(move |&a| algebra.ominus(b, a)));
    algebra.meet_all(diffs) == algebra.zero()
}

/// The partner `Y = (uX)*` of a limit cut, with its checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartnerCheck {
    pub partner: Cut,
    pub partner_is_limit: bool,
    /// `⋁X̂ = ⋀{ŷ* : y ∈ Y}`.
    pub joins_match: bool,
}

pub fn limit_cut_partner(algebra: &FiniteMvAlgebra, hat: &HatEmbedding, cut: &Cut) -> Result<PartnerCheck> {
    if !is_cut(algebra, cut.members()) {
        return Err(MvError::InvalidArgument("set is not a cut".into()));
    }
    let ups = upper_bounds(algebra, cut.members());
    let y: Vec<usize> = normalized(&ups.iter().map(|&b| algebra.neg(b)).collect::<Vec<_>>());
    let partner = Cut::new(algebra, &y).map_err(|_| MvError::Internal("(uX)* is not a cut".into()))?;
    let negs: Vec<usize> = y.iter().map(|&v| algebra.neg(v)).collect();
    let joins_match = hat_join(hat, cut.members()) == hat_meet(hat, &negs);
    Ok(PartnerCheck {
        partner_is_limit: is_limit_cut(algebra, hat, &partner),
        partner,
        joins_match,
    })
}

/// Cut census and supremum checks behind the limit-cut-completeness verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LccReport {
    pub cuts: usize,
    pub limit_cuts: usize,
    pub exhaustive: bool,
    /// Limit cuts with a least upper bound in `A` whose hat is `⋁X̂`.
    pub with_supremum: usize,
    /// The hat-side and in-algebra distance meets agree on every cut.
    pub meets_agree: bool,
    /// Every limit cut's partner is a limit cut with the matching join.
    pub partners_ok: bool,
    pub lcc: bool,
}

pub fn is_lcc(algebra: &Arc<FiniteMvAlgebra>, bounds: &Bounds) -> Result<LccReport> {
    let hat = crate::algebra::embed_max(algebra, bounds)?;
    let census = enumerate_cuts(algebra, bounds);
    let mut limit_cuts = 0;
    let mut with_supremum = 0;
    let mut meets_agree = true;
    let mut partners_ok = true;
    for cut in &census.cuts {
        let limit = is_limit_cut(algebra, &hat, cut);
        meets_agree &= limit == is_limit_cut_in_algebra(algebra, cut);
        if !limit {
            continue;
        }
        limit_cuts += 1;
        let sup = algebra.join_all(cut.members().iter().copied());
        let least = upper_bounds(algebra, cut.members())
            .iter()
            .all(|&b| algebra.leq(sup, b));
        if least && hat.hats[sup] == hat_join(&hat, cut.members()) {
            with_supremum += 1;
        }
        let p = limit_cut_partner(algebra, &hat, cut)?;
        partners_ok &= p.partner_is_limit && p.joins_match;
    }
    Ok(LccReport {
        cuts: census.cuts.len(),
        limit_cuts,
        exhaustive: census.exhaustive,
        with_supremum,
        meets_agree,
        partners_ok,
        lcc: with_supremum == limit_cuts,
    })
}

/// `Clop Max A` with its certified isomorphism from `A`.
///
/// For a finite algebra the completion adds nothing; this is checked again
/// with an independent isomorphism search.
pub fn lc_completion(algebra: &Arc<FiniteMvAlgebra>, bounds: &Bounds) -> Result<UnitIsoAlgebra> {
    let unit = unit_iso_algebra(algebra, bounds)?;
    if find_isomorphism(algebra, &unit.clop, bounds)?.is_none() {
        return Err(MvError::Internal("completion is not isomorphic to the algebra".into()));
    }
    Ok(unit)
}

/// Quotients by maximal ideals, each checked to be a (complete) finite chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SfcReport {
    /// `|A/M|`, sorted.
    pub quotient_orders: Vec<u32>,
    pub sfc: bool,
    pub lcc: bool,
    /// Both classes contain every finite algebra, so agreement here says
    /// nothing about the general question.
    pub classes_agree_vacuously: bool,
}

pub fn check_sfc(algebra: &Arc<FiniteMvAlgebra>, bounds: &Bounds) -> Result<SfcReport> {
    let maximal = crate::algebra::maximal_ideals(algebra, bounds)?;
    let mut quotient_orders = Vec::with_capacity(maximal.len());
    let mut sfc = true;
    for m in &maximal {
        let q = quotient(algebra, &m.ideal)?;
        sfc &= q.algebra.is_chain();
        quotient_orders.push(q.algebra.len() as u32);
    }
    quotient_orders.sort_unstable();
    let lcc = is_lcc(algebra, bounds)?.lcc;
    Ok(SfcReport {
        quotient_orders,
        sfc,
        lcc,
        classes_agree_vacuously: sfc == lcc,
    })
}

/// Each leg of: liminary ⇒ strongly compact dual ⇒ liminary clopens ⇒ lcc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiminaryDualityReport {
    pub liminary: bool,
    pub dual_strongly_compact: bool,
    pub clop_liminary: bool,
    pub lcc: bool,
    pub holds: bool,
}

pub fn check_liminary_duality(algebra: &Arc<FiniteMvAlgebra>, bounds: &Bounds) -> Result<LiminaryDualityReport> {
    let liminary = is_liminary(algebra, bounds)?.liminary;
    let dual = max_space(algebra, bounds)?;
    let dual_strongly_compact = compactness(&dual.space, bounds)?.strongly_compact;
    let clop = Arc::new(dual.space.clopen_algebra()?);
    let clop_liminary = is_liminary(&clop, bounds)?.liminary;
    let lcc = is_lcc(algebra, bounds)?.lcc;
    let holds = (!liminary || dual_strongly_compact)
        && (!dual_strongly_compact || clop_liminary)
        && (!clop_liminary || lcc);
    Ok(LiminaryDualityReport {
        liminary,
        dual_strongly_compact,
        clop_liminary,
        lcc,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::embed_max;
    use crate::element::ProductSignature;

    fn full(orders: &[u32]) -> Arc<FiniteMvAlgebra> {
        Arc::new(FiniteMvAlgebra::full_product(ProductSignature::from_orders(orders).unwrap()))
    }

    #[test]
    fn bound_conventions() {
        let a = full(&[3]);
        assert_eq!(upper_bounds(&a, &[]), vec![0, 1, 2]);
        assert_eq!(cut_closure(&a, &[]).members(), &[0]);
        assert_eq!(upper_bounds(&a, &[0, 1]), vec![1, 2]);
        assert!(is_cut(&a, &[0, 1]));
        assert!(!is_cut(&a, &[1]));
    }

    #[test]
    fn cuts_of_a_chain_are_principal() {
        let a = full(&[4]);
        let census = enumerate_cuts(&a, &Bounds::default());
        assert!(census.exhaustive);
        assert_eq!(census.cuts.len(), 4);
        for (c, cut) in census.cuts.iter().enumerate() {
            assert_eq!(cut.members(), lower_bounds(&a, &[c]).as_slice());
        }
    }

    #[test]
    fn limit_cut_examples() {
        let a = full(&[3]);
        let hat = embed_max(&a, &Bounds::default()).unwrap();
        let x = Cut::new(&a, &[0, 1]).unwrap();
        assert!(is_limit_cut(&a, &hat, &x));
        assert_eq!(a.join_all(x.members().iter().copied()), 1);
        let bottom = Cut::new(&a, &[0]).unwrap();
        assert!(is_limit_cut(&a, &hat, &bottom));
        let p = limit_cut_partner(&a, &hat, &x).unwrap();
        assert!(p.partner_is_limit && p.joins_match);
        let pp = limit_cut_partner(&a, &hat, &p.partner).unwrap();
        assert_eq!(hat_join(&hat, pp.partner.members()), hat_join(&hat, x.members()));
    }

    #[test]
    fn finite_algebras_are_lcc_and_sfc() {
        let b = Bounds::default();
        for orders in [&[3][..], &[3, 2], &[2, 4]] {
            let a = full(orders);
            let r = is_lcc(&a, &b).unwrap();
            assert!(r.lcc && r.meets_agree && r.partners_ok, "{r:?}");
            let s = check_sfc(&a, &b).unwrap();
            assert!(s.sfc);
            assert!(check_liminary_duality(&a, &b).unwrap().holds);
        }
        assert_eq!(check_sfc(&full(&[3, 2]), &b).unwrap().quotient_orders, vec![2, 3]);
        assert!(lc_completion(&full(&[3]), &b).is_ok());
    }
}
