//! Quotients, the maximal-spectrum embedding `a ↦ â`, and structural predicates
//! built on them.

use std::collections::HashMap;
use std::sync::Arc;

use num_integer::Integer;

use super::{maximal_ideals, prime_ideals, radical, FiniteMvAlgebra, Ideal, MaximalIdeal, MvHomomorphism};
use crate::bounds::Bounds;
use crate::chain::Chain;
use crate::element::{MvElement, ProductSignature};
use crate::error::{MvError, Result};
use crate::fuzzy::{FuzzySubset, Universe};

/// `A/I` materialized inside the coordinates on which `I` vanishes.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: FiniteMvAlgebra,
    /// Element of `A` ↦ class index in `algebra`.
    pub projection: Vec<usize>,
    /// Class index ↦ least element of `A` in the class.
    pub representatives: Vec<usize>,
    /// Coordinates of `A`'s signature kept by the quotient.
    pub coordinates: Vec<usize>,
}

/// Quotient by the congruence `a ~ b ⇔ d(a, b) ∈ I`.
pub fn quotient(algebra: &FiniteMvAlgebra, ideal: &Ideal) -> Result<Quotient> {
    if !ideal.is_proper(algebra) {
        return Err(MvError::ImproperIdeal);
    }
    // Classes in carrier order, so each representative is the least member.
    let mut class_of = vec![usize::MAX; algebra.len()];
    let mut reps: Vec<usize> = Vec::new();
    for a in 0..algebra.len() {
        let found = reps
            .iter()
            .position(|&r| ideal.contains(algebra.distance(a, r)));
        match found {
            Some(c) => class_of[a] = c,
            None => {
                class_of[a] = reps.len();
                reps.push(a);
            }
        }
    }

    let sig = algebra.signature();
    let coordinates: Vec<usize> = (0..sig.len())
        .filter(|&c| ideal.members().iter().all(|&m| algebra.element(m).0[c] == 0))
        .collect();
    if coordinates.is_empty() {
        return Err(MvError::Internal("proper ideal with no vanishing coordinate".into()));
    }
    let sub_sig = ProductSignature::new(coordinates.iter().map(|&c| sig.factors()[c]).collect())?;
    let restrict = |a: usize| MvElement(coordinates.iter().map(|&c| algebra.element(a).0[c]).collect());

    let q = FiniteMvAlgebra::from_carrier(sub_sig, reps.iter().map(|&r| restrict(r)))?;
    if q.len() != reps.len() {
        return Err(MvError::Internal("restriction merges distinct classes".into()));
    }
    let mut projection = vec![0; algebra.len()];
    let mut representatives = vec![0; q.len()];
    for a in 0..algebra.len() {
        let qi = q.index_of(&restrict(a)).expect("restriction of a member");
        if qi != q.index_of(&restrict(reps[class_of[a]])).unwrap() {
            return Err(MvError::Internal("restriction disagrees with congruence".into()));
        }
        projection[a] = qi;
    }
    for &r in &reps {
        representatives[projection[r]] = r;
    }
    Ok(Quotient {
        algebra: q,
        projection,
        representatives,
        coordinates,
    })
}

/// `Rad A = {0}`.
pub fn is_semisimple(algebra: &FiniteMvAlgebra, bounds: &Bounds) -> Result<bool> {
    Ok(radical(algebra, bounds)? == Ideal::zero(algebra))
}

/// The embedding `a ↦ â ∈ [0,1]^{Max A}` on a common grid.
#[derive(Clone, Debug)]
pub struct HatEmbedding {
    pub maximal: Vec<MaximalIdeal>,
    /// `|A/M|` per maximal ideal, in canonical order.
    pub quotient_orders: Vec<u32>,
    /// Grid `Łₘ` with `m − 1 = lcm(|A/M| − 1)`.
    pub chain: Chain,
    /// Points `M0, M1, …` naming the maximal ideals.
    pub universe: Arc<Universe>,
    /// `â` for every element, indexed like the carrier.
    pub hats: Vec<FuzzySubset>,
}

impl HatEmbedding {
    /// Rank of `π_M(a)` in the chain `A/M`.
    pub fn rank(&self, a: usize, point: usize) -> u32 {
        let k = self.quotient_orders[point] - 1;
        self.hats[a].values()[point] * k / self.chain.top()
    }
}

pub fn embed_max(algebra: &FiniteMvAlgebra, bounds: &Bounds) -> Result<HatEmbedding> {
    let maximal = maximal_ideals(algebra, bounds)?;
    let mut quotient_orders = Vec::with_capacity(maximal.len());
    let mut ranks: Vec<Vec<u32>> = Vec::with_capacity(maximal.len());
    for m in &maximal {
        let q = quotient(algebra, &m.ideal)?;
        if !q.algebra.is_chain() {
            return Err(MvError::Internal(
                "quotient by a maximal ideal is not totally ordered".into(),
            ));
        }
        // Carrier index equals rank in a chain.
        ranks.push(q.projection.iter().map(|&c| c as u32).collect());
        quotient_orders.push(q.algebra.len() as u32);
    }
    let top = quotient_orders.iter().fold(1u32, |acc, &k| acc.lcm(&(k - 1)));
    let chain = Chain::new(top + 1)?;
    let universe = Universe::numbered("M", maximal.len())?;
    let hats = (0..algebra.len())
        .map(|a| {
            let values = ranks
                .iter()
                .zip(&quotient_orders)
                .map(|(r, &k)| r[a] * (top / (k - 1)))
                .collect();
            FuzzySubset::new(universe.clone(), chain, values)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HatEmbedding {
        maximal,
        quotient_orders,
        chain,
        universe,
        hats,
    })
}

/// The multiset `{|A/M| : M ∈ Max A}` (sorted), after certifying
/// `A ≅ ∏ A/M` through the hat embedding.
pub fn chain_factorization(algebra: &FiniteMvAlgebra, bounds: &Bounds) -> Result<Vec<u32>> {
    let hat = embed_max(algebra, bounds)?;
    check_factorization(algebra, &hat)?;
    let mut orders = hat.quotient_orders.clone();
    orders.sort_unstable();
    Ok(orders)
}

fn check_factorization(algebra: &FiniteMvAlgebra, hat: &HatEmbedding) -> Result<()> {
    let mut distinct: Vec<&[u32]> = hat.hats.iter().map(|h| h.values()).collect();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != algebra.len() {
        return Err(MvError::Internal("hat embedding is not injective".into()));
    }
    let product: usize = hat.quotient_orders.iter().map(|&k| k as usize).product();
    if product != algebra.len() {
        return Err(MvError::Internal(format!(
            "hat embedding misses part of the product of quotients ({} of {product})",
            algebra.len()
        )));
    }
    Ok(())
}

/// A certified isomorphism `A → B`, if one exists.
///
/// Rejects on differing factorizations; otherwise aligns maximal ideals by
/// quotient order and maps each element to the one with the same rank
/// profile.
pub fn find_isomorphism(
    a: &Arc<FiniteMvAlgebra>,
    b: &Arc<FiniteMvAlgebra>,
    bounds: &Bounds,
) -> Result<Option<MvHomomorphism>> {
    if a.len() != b.len() {
        return Ok(None);
    }
    let ha = embed_max(a, bounds)?;
    let hb = embed_max(b, bounds)?;
    check_factorization(a, &ha)?;
    check_factorization(b, &hb)?;
    let order_a = sorted_points(&ha.quotient_orders);
    let order_b = sorted_points(&hb.quotient_orders);
    let profile_a: Vec<u32> = order_a.iter().map(|&p| ha.quotient_orders[p]).collect();
    let profile_b: Vec<u32> = order_b.iter().map(|&p| hb.quotient_orders[p]).collect();
    if profile_a != profile_b {
        return Ok(None);
    }
    let key = |h: &HatEmbedding, order: &[usize], x: usize| -> Vec<u32> {
        order.iter().map(|&p| h.rank(x, p)).collect()
    };
    let lookup: HashMap<Vec<u32>, usize> = (0..b.len()).map(|y| (key(&hb, &order_b, y), y)).collect();
    let table = (0..a.len())
        .map(|x| lookup.get(&key(&ha, &order_a, x)).copied())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| MvError::Internal("rank profile missing in target".into()))?;
    let iso = MvHomomorphism::new(a.clone(), b.clone(), table)?;
    if !iso.is_bijective() {
        return Err(MvError::Internal("aligned map is not bijective".into()));
    }
    Ok(Some(iso))
}

fn sorted_points(orders: &[u32]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..orders.len()).collect();
    idx.sort_by_key(|&p| (orders[p], p));
    idx
}

/// Least witnesses for the three Archimedean conditions at one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperArchimedeanRow {
    pub element: usize,
    /// `n·a ∈ B(A)`
    pub boolean_multiple: Option<u32>,
    /// `a* ∨ n·a = 1`
    pub complement_join: Option<u32>,
    /// `n·a = (n+1)·a`
    pub stable_multiple: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperArchimedeanReport {
    pub rows: Vec<HyperArchimedeanRow>,
    /// The three conditions hold or fail together at every element.
    pub conditions_agree: bool,
    pub hyper_archimedean: bool,
}

pub fn hyper_archimedean(algebra: &FiniteMvAlgebra) -> HyperArchimedeanReport {
    // n·a is constant once n exceeds the largest denominator.
    let limit = algebra
        .signature()
        .factors()
        .iter()
        .map(|c| c.top())
        .max()
        .unwrap_or(1)
        + 1;
    let first = |pred: &dyn Fn(u32) -> bool| (1..=limit).find(|&n| pred(n));
    let rows: Vec<HyperArchimedeanRow> = (0..algebra.len())
        .map(|a| {
            let mult = |n: u32| algebra.multiple(n, a);
            HyperArchimedeanRow {
                element: a,
                boolean_multiple: first(&|n| algebra.is_boolean(mult(n))),
                complement_join: first(&|n| algebra.join(algebra.neg(a), mult(n)) == algebra.one()),
                stable_multiple: first(&|n| mult(n) == mult(n + 1)),
            }
        })
        .collect();
    let conditions_agree = rows.iter().all(|r| {
        r.boolean_multiple.is_some() == r.complement_join.is_some()
            && r.complement_join.is_some() == r.stable_multiple.is_some()
    });
    let hyper_archimedean = rows.iter().all(|r| r.boolean_multiple.is_some());
    HyperArchimedeanReport {
        rows,
        conditions_agree,
        hyper_archimedean,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiminaryReport {
    pub prime_count: usize,
    /// `|A/P|` per prime ideal, canonical order.
    pub quotient_sizes: Vec<usize>,
    pub liminary: bool,
}

/// Every quotient by a prime ideal is finite; computed by materializing each one.
pub fn is_liminary(algebra: &FiniteMvAlgebra, bounds: &Bounds) -> Result<LiminaryReport> {
    let primes = prime_ideals(algebra, bounds)?;
    let quotient_sizes = primes
        .iter()
        .map(|p| quotient(algebra, p).map(|q| q.algebra.len()))
        .collect::<Result<Vec<_>>>()?;
    Ok(LiminaryReport {
        prime_count: primes.len(),
        liminary: quotient_sizes.iter().all(|&s| s >= 2),
        quotient_sizes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::generate_ideal;

    fn full(orders: &[u32]) -> FiniteMvAlgebra {
        FiniteMvAlgebra::full_product(ProductSignature::from_orders(orders).unwrap())
    }

    fn idx(a: &FiniteMvAlgebra, v: &[u32]) -> usize {
        a.index_of(&MvElement(v.to_vec())).unwrap()
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let a = full(&[3, 2]);
        let q = quotient(&a, &Ideal::zero(&a)).unwrap();
        assert_eq!(q.algebra, a);
        assert_eq!(q.projection, (0..a.len()).collect::<Vec<_>>());
    }

    #[test]
    fn collapsing_first_coordinate() {
        let a = full(&[3, 2]);
        let i = generate_ideal(&a, [idx(&a, &[2, 0])]).ideal;
        let q = quotient(&a, &i).unwrap();
        assert_eq!(q.algebra, full(&[2]));
        assert_eq!(q.coordinates, vec![1]);
    }

    #[test]
    fn improper_quotient_rejected() {
        let a = full(&[3]);
        assert!(matches!(
            quotient(&a, &Ideal::whole(&a)),
            Err(MvError::ImproperIdeal)
        ));
    }

    #[test]
    fn class_matches_ideal_formula() {
        // a/I = {(a ⊕ b) ⊙ c* : b, c ∈ I}
        let a = full(&[3, 4, 2]);
        for ideal in crate::algebra::all_ideals(&a, &Bounds::default()).unwrap() {
            if !ideal.is_proper(&a) {
                continue;
            }
            let q = quotient(&a, &ideal).unwrap();
            let members = ideal.members();
            for x in 0..a.len() {
                let mut formula: Vec<usize> = members
                    .iter()
                    .flat_map(|&b| members.iter().map(move |&c| (b, c)))
                    .map(|(b, c)| a.odot(a.oplus(x, b), a.neg(c)))
                    .collect();
                formula.sort_unstable();
                formula.dedup();
                let class: Vec<usize> = (0..a.len())
                    .filter(|&y| q.projection[y] == q.projection[x])
                    .collect();
                assert_eq!(formula, class);
            }
        }
    }

    #[test]
    fn embed_max_of_chain_is_identity() {
        let l3 = full(&[3]);
        let hat = embed_max(&l3, &Bounds::default()).unwrap();
        assert_eq!(hat.chain.order(), 3);
        for a in 0..3 {
            assert_eq!(hat.hats[a].values(), &[a as u32]);
        }
    }

    #[test]
    fn embed_max_reads_coordinates() {
        let a = full(&[2, 3]);
        let hat = embed_max(&a, &Bounds::default()).unwrap();
        assert_eq!(hat.chain.order(), 3);
        // M0 = {x : x₀ = 0} keeps coordinate 0, M1 keeps coordinate 1.
        assert_eq!(hat.quotient_orders, vec![2, 3]);
        for x in 0..a.len() {
            let e = a.element(x);
            assert_eq!(hat.hats[x].values(), &[e.0[0] * 2, e.0[1]]);
        }
    }

    #[test]
    fn factorization_examples() {
        let b = Bounds::default();
        assert_eq!(chain_factorization(&full(&[3]), &b).unwrap(), vec![3]);
        assert_eq!(chain_factorization(&full(&[3, 2, 3]), &b).unwrap(), vec![2, 3, 3]);
        assert_eq!(chain_factorization(&full(&[2, 2, 2, 2]), &b).unwrap(), vec![2; 4]);
    }

    #[test]
    fn isomorphism_examples() {
        let b = Bounds::default();
        let a = Arc::new(full(&[2, 3]));
        let c = Arc::new(full(&[3, 2]));
        let iso = find_isomorphism(&a, &c, &b).unwrap().unwrap();
        assert!(iso.is_bijective());
        let e = a.element(iso.table().len() - 2).clone();
        let image = c.element(iso.apply(a.len() - 2));
        assert_eq!(image.0, vec![e.0[1], e.0[0]]);
        let id = find_isomorphism(&a, &a, &b).unwrap().unwrap();
        assert_eq!(id.table(), MvHomomorphism::identity(a.clone()).table());
        let l4 = Arc::new(full(&[4]));
        let b22 = Arc::new(full(&[2, 2]));
        assert!(find_isomorphism(&l4, &b22, &b).unwrap().is_none());
    }

    #[test]
    fn hyper_archimedean_witnesses() {
        let l3 = full(&[3]);
        let r = hyper_archimedean(&l3);
        assert!(r.hyper_archimedean && r.conditions_agree);
        assert_eq!(r.rows[1].boolean_multiple, Some(2));
        assert_eq!(r.rows[0].boolean_multiple, Some(1));
        assert_eq!(r.rows[2].boolean_multiple, Some(1));
    }

    #[test]
    fn liminary_examples() {
        let r = is_liminary(&full(&[3]), &Bounds::default()).unwrap();
        assert_eq!(r.prime_count, 1);
        assert!(r.liminary);
        let r = is_liminary(&full(&[2, 4]), &Bounds::default()).unwrap();
        assert_eq!(r.quotient_sizes.len(), 2);
        assert!(r.liminary);
    }
}
