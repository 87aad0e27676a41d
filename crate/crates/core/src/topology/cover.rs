//! Coverings, additive coverings and the two compactness notions.
//!
//! On a finite space every open covering is finite, and a finite covering
//! with join `1` has a member equal to `1` at each point, so it is already an
//! additive covering. Both predicates therefore always hold here; the
//! functions below still verify them covering by covering.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::{check_members, MvTopology};
use crate::bounds::Bounds;
use crate::chain::Chain;
use crate::error::{MvError, Result};
use crate::fuzzy::{family_join, FuzzySubset, Universe};

/// `⋁ family = 1`. The empty family covers nothing.
pub fn is_covering(universe: &Arc<Universe>, chain: Chain, family: &[FuzzySubset]) -> Result<bool> {
    check_members(universe, chain, family)?;
    Ok(family_join(universe, chain, family)?.is_one())
}

/// `n₁α₁ ⊕ … ⊕ nₖαₖ = 1`.
pub fn is_additive_covering(
    universe: &Arc<Universe>,
    chain: Chain,
    family: &[(FuzzySubset, u32)],
) -> Result<bool> {
    let members: Vec<FuzzySubset> = family.iter().map(|(a, _)| a.clone()).collect();
    check_members(universe, chain, &members)?;
    let mut sum = vec![0u32; universe.len()];
    for (a, n) in family {
        for (s, &v) in sum.iter_mut().zip(a.values()) {
            *s = chain.oplus(*s, chain.multiple(*n, v));
        }
    }
    Ok(sum.iter().all(|&s| s == chain.top()))
}

/// A multiset drawn from a covering whose `⊕`-sum is `1`, as
/// `(index into family, multiplicity)` pairs.
///
/// Returns `None` when `family` is not a covering. Multiplicities are capped
/// at `order − 1`, which already saturates every coordinate a member can
/// saturate. A greedy per-point pass runs first; an exhaustive search over
/// multiplicity vectors (capped by `bounds.subcover_search`) backs it up.
pub fn extract_additive_subcover(
    universe: &Arc<Universe>,
    chain: Chain,
    family: &[FuzzySubset],
    bounds: &Bounds,
) -> Result<Option<Vec<(usize, u32)>>> {
    if !is_covering(universe, chain, family)? {
        return Ok(None);
    }
    if let Some(found) = greedy(chain, family) {
        return Ok(Some(found));
    }
    exhaustive(universe, chain, family, bounds)
}

fn greedy(chain: Chain, family: &[FuzzySubset]) -> Option<Vec<(usize, u32)>> {
    let top = chain.top();
    let points = family.first()?.values().len();
    let mut sum = vec![0u32; points];
    let mut mult = vec![0u32; family.len()];
    for x in 0..points {
        while sum[x] < top {
            let pick = (0..family.len())
                .filter(|&i| mult[i] < top && family[i].values()[x] > 0)
                .max_by_key(|&i| (family[i].values()[x], std::cmp::Reverse(i)))?;
            mult[pick] += 1;
            for (s, &v) in sum.iter_mut().zip(family[pick].values()) {
                *s = chain.oplus(*s, v);
            }
        }
    }
    Some(
        mult.into_iter()
            .enumerate()
            .filter(|&(_, m)| m > 0)
            .collect(),
    )
}

fn exhaustive(
    universe: &Arc<Universe>,
    chain: Chain,
    family: &[FuzzySubset],
    bounds: &Bounds,
) -> Result<Option<Vec<(usize, u32)>>> {
    let base = chain.order() as usize;
    let total = family
        .iter()
        .try_fold(1usize, |acc, _| acc.checked_mul(base))
        .filter(|&t| t <= bounds.subcover_search)
        .ok_or(MvError::BoundExceeded {
            what: "additive subcover search",
            size: family.len(),
            bound: bounds.subcover_search,
        })?;
    let mut mult = vec![0u32; family.len()];
    for mut code in 0..total {
        for m in mult.iter_mut() {
            *m = (code % base) as u32;
            code /= base;
        }
        let pairs: Vec<(FuzzySubset, u32)> = family
            .iter()
            .cloned()
            .zip(mult.iter().copied())
            .filter(|&(_, m)| m > 0)
            .collect();
        if is_additive_covering(universe, chain, &pairs)? {
            return Ok(Some(
                mult.iter()
                    .enumerate()
                    .filter(|&(_, &m)| m > 0)
                    .map(|(i, &m)| (i, m))
                    .collect(),
            ));
        }
    }
    Ok(None)
}

/// The `⊆`-minimal open coverings of `τ`, in canonical order.
///
/// Each member of a minimal covering is the only member equal to `1` at some
/// point, so every minimal covering is the image of a choice of one
/// `1`-valued open per point. The number of choices is capped by
/// `bounds.coverings`.
pub fn minimal_coverings(tau: &MvTopology, bounds: &Bounds) -> Result<Vec<Vec<FuzzySubset>>> {
    let opens: Vec<&FuzzySubset> = tau.opens().iter().collect();
    let top = tau.chain().top();
    let candidates: Vec<Vec<usize>> = (0..tau.universe().len())
        .map(|x| (0..opens.len()).filter(|&i| opens[i].values()[x] == top).collect())
        .collect();
    let count = candidates
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
        .filter(|&t| t <= bounds.coverings)
        .ok_or(MvError::BoundExceeded {
            what: "covering enumeration",
            size: opens.len(),
            bound: bounds.coverings,
        })?;
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for mut code in 0..count {
        let mut chosen: Vec<usize> = candidates
            .iter()
            .map(|c| {
                let i = c[code % c.len()];
                code /= c.len();
                i
            })
            .collect();
        chosen.sort_unstable();
        chosen.dedup();
        let minimal = chosen.iter().all(|&i| {
            (0..tau.universe().len()).any(|x| {
                opens[i].values()[x] == top
                    && chosen.iter().all(|&j| j == i || opens[j].values()[x] != top)
            })
        });
        if minimal {
            found.insert(chosen);
        }
    }
    Ok(found
        .into_iter()
        .map(|c| c.into_iter().map(|i| opens[i].clone()).collect())
        .collect())
}

/// Compactness verdicts certified on every minimal open covering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactnessReport {
    pub minimal_coverings: Vec<Vec<FuzzySubset>>,
    /// Additive subcover of each minimal covering, as `(member, multiplicity)`.
    pub additive_subcovers: Vec<Option<Vec<(FuzzySubset, u32)>>>,
    /// Finite subcover of each minimal covering.
    pub finite_subcovers: Vec<Option<Vec<FuzzySubset>>>,
    pub compact: bool,
    pub strongly_compact: bool,
    /// The verdicts are about a finite family of opens; the
    /// compact-but-not-strongly-compact phenomenon needs infinitely many.
    pub finite_scale: bool,
}

/// Runs both compactness checks. Any covering contains a minimal one, so it
/// suffices to certify the minimal coverings.
pub fn compactness(tau: &MvTopology, bounds: &Bounds) -> Result<CompactnessReport> {
    let minimal = minimal_coverings(tau, bounds)?;
    let u = tau.universe();
    let c = tau.chain();
    let mut additive_subcovers = Vec::with_capacity(minimal.len());
    let mut finite_subcovers = Vec::with_capacity(minimal.len());
    for cover in &minimal {
        let additive = extract_additive_subcover(u, c, cover, bounds)?
            .map(|picks| picks.into_iter().map(|(i, m)| (cover[i].clone(), m)).collect());
        additive_subcovers.push(additive);
        finite_subcovers.push(is_covering(u, c, cover)?.then(|| cover.clone()));
    }
    Ok(CompactnessReport {
        compact: additive_subcovers.iter().all(Option::is_some),
        strongly_compact: finite_subcovers.iter().all(Option::is_some),
        minimal_coverings: minimal,
        additive_subcovers,
        finite_subcovers,
        finite_scale: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pq() -> Arc<Universe> {
        Universe::new(["p", "q"]).unwrap()
    }

    fn t(u: &Arc<Universe>, c: Chain, v: &[u32]) -> FuzzySubset {
        FuzzySubset::new(u.clone(), c, v.to_vec()).unwrap()
    }

    #[test]
    fn coverings_by_one() {
        let u = pq();
        let c = Chain::new(3).unwrap();
        let one = FuzzySubset::one(u.clone(), c);
        let fam = vec![one.clone()];
        assert!(is_covering(&u, c, &fam).unwrap());
        assert!(is_additive_covering(&u, c, &[(one, 1)]).unwrap());
        assert_eq!(
            extract_additive_subcover(&u, c, &fam, &Bounds::default()).unwrap(),
            Some(vec![(0, 1)])
        );
        assert!(!is_covering(&u, c, &[]).unwrap());
    }

    #[test]
    fn join_versus_sum() {
        let u = pq();
        let c = Chain::new(3).unwrap();
        let half = t(&u, c, &[1, 1]);
        assert!(!is_covering(&u, c, std::slice::from_ref(&half)).unwrap());
        assert!(is_additive_covering(&u, c, &[(half.clone(), 2)]).unwrap());
        assert_eq!(
            extract_additive_subcover(&u, c, &[half], &Bounds::default()).unwrap(),
            None
        );
    }

    #[test]
    fn crisp_pair() {
        let u = pq();
        let c = Chain::new(2).unwrap();
        let fam = vec![t(&u, c, &[1, 0]), t(&u, c, &[0, 1])];
        assert_eq!(
            extract_additive_subcover(&u, c, &fam, &Bounds::default()).unwrap(),
            Some(vec![(0, 1), (1, 1)])
        );
    }

    #[test]
    fn exhaustive_agrees_with_greedy() {
        let u = pq();
        let c = Chain::new(4).unwrap();
        let fam = vec![t(&u, c, &[3, 1]), t(&u, c, &[1, 3]), t(&u, c, &[2, 2])];
        let e = exhaustive(&u, c, &fam, &Bounds::default()).unwrap().unwrap();
        let pairs: Vec<_> = e.iter().map(|&(i, m)| (fam[i].clone(), m)).collect();
        assert!(is_additive_covering(&u, c, &pairs).unwrap());
    }

    #[test]
    fn indiscrete_has_one_minimal_covering() {
        let u = pq();
        let c = Chain::new(3).unwrap();
        let r = compactness(&MvTopology::indiscrete(u.clone(), c), &Bounds::default()).unwrap();
        assert_eq!(r.minimal_coverings, vec![vec![FuzzySubset::one(u, c)]]);
        assert!(r.compact && r.strongly_compact);
    }

    #[test]
    fn full_space_minimal_coverings() {
        let u = pq();
        let c = Chain::new(3).unwrap();
        let r = compactness(&MvTopology::full(u, c), &Bounds::default()).unwrap();
        // {1} and every {(1, a), (b, 1)} with a, b < 1.
        assert_eq!(r.minimal_coverings.len(), 1 + 4);
        assert!(r.compact && r.strongly_compact);
    }
}
