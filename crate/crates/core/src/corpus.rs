//! Fixed collections of small algebras and spaces used by the test suites
//! and the CLI, plus exhaustive enumeration of tiny topologies.

use std::sync::Arc;

use crate::algebra::FiniteMvAlgebra;
use crate::bounds::Bounds;
use crate::chain::Chain;
use crate::duality::max_space;
use crate::element::{MvElement, ProductSignature};
use crate::error::{MvError, Result};
use crate::fuzzy::{FuzzySubset, Universe};
use crate::topology::{check_mv_topology, MvTopology};

#[derive(Clone, Debug)]
pub struct NamedAlgebra {
    pub name: String,
    pub algebra: Arc<FiniteMvAlgebra>,
}

#[derive(Clone, Debug)]
pub struct NamedSpace {
    pub name: String,
    pub space: MvTopology,
}

/// Generators as numerator tuples over a product of chains.
const GENERATED: &[(&[u32], &[&[u32]])] = &[
    (&[3], &[&[1]]),
    (&[5], &[&[1]]),
    (&[5], &[&[2]]),
    (&[7], &[&[2]]),
    (&[7], &[&[3]]),
    (&[6], &[&[2]]),
    (&[3, 3], &[&[1, 1]]),
    (&[3, 3], &[&[1, 0]]),
    (&[2, 3], &[&[1, 1]]),
    (&[3, 5], &[&[1, 2]]),
    (&[3, 5], &[&[1, 1]]),
    (&[5, 3], &[&[2, 1]]),
    (&[4, 4], &[&[1, 2]]),
    (&[3, 4], &[&[1, 1]]),
    (&[4, 3], &[&[1, 1]]),
    (&[3, 3, 3], &[&[1, 1, 0]]),
    (&[3, 3, 2], &[&[1, 1, 1]]),
    (&[2, 2, 2], &[&[1, 0, 0], &[0, 1, 1]]),
    (&[2, 2, 3], &[&[1, 0, 1]]),
    (&[5, 5], &[&[1, 2]]),
];

fn signature_name(orders: &[u32]) -> String {
    orders.iter().map(|o| format!("L{o}")).collect::<Vec<_>>().join("x")
}

/// Twenty subalgebras generated inside small products; several are not
/// products of their coordinate projections.
pub fn generated_algebras() -> Vec<NamedAlgebra> {
    GENERATED
        .iter()
        .map(|(orders, gens)| {
            let sig = ProductSignature::from_orders(orders).expect("valid orders");
            let gens: Vec<MvElement> = gens.iter().map(|g| MvElement(g.to_vec())).collect();
            let label: Vec<String> = gens.iter().map(|g| sig.format(g)).collect();
            let algebra = FiniteMvAlgebra::generate(sig.clone(), gens).expect("valid generators");
            NamedAlgebra {
                name: format!("gen {} {{{}}}", signature_name(orders), label.join(", ")),
                algebra: Arc::new(algebra),
            }
        })
        .collect()
}

/// Every full product with at most `max_factors` factors of orders in
/// `orders`, each multiset of orders once (sorted ascending).
pub fn full_products(orders: &[u32], max_factors: usize) -> Vec<NamedAlgebra> {
    let mut sorted = orders.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn walk(sorted: &[u32], start: usize, max: usize, current: &mut Vec<u32>, out: &mut Vec<NamedAlgebra>) {
        if !current.is_empty() {
            let sig = ProductSignature::from_orders(current).expect("valid orders");
            out.push(NamedAlgebra {
                name: signature_name(current),
                algebra: Arc::new(FiniteMvAlgebra::full_product(sig)),
            });
        }
        if current.len() == max {
            return;
        }
        for i in start..sorted.len() {
            current.push(sorted[i]);
            walk(sorted, i, max, current, out);
            current.pop();
        }
    }
    walk(&sorted, 0, max_factors, &mut current, &mut out);
    out
}

/// Full products with up to three factors of orders 2 to 5, then the
/// generated algebras.
pub fn algebra_corpus() -> Vec<NamedAlgebra> {
    let mut all = full_products(&[2, 3, 4, 5], 3);
    all.extend(generated_algebras());
    all
}

/// Discrete crisp spaces on 1 to `max_points` points.
pub fn discrete_crisp_spaces(max_points: usize) -> Vec<NamedSpace> {
    (1..=max_points)
        .map(|k| NamedSpace {
            name: format!("discrete crisp {k}"),
            space: MvTopology::discrete(Universe::numbered("x", k).expect("k ≥ 1"), Chain::BOOLEAN),
        })
        .collect()
}

/// Dual spaces of the algebra corpus, discrete crisp spaces, and a few
/// spaces that are not Stone.
pub fn space_corpus(bounds: &Bounds) -> Result<Vec<NamedSpace>> {
    let mut out = Vec::new();
    for a in algebra_corpus() {
        out.push(NamedSpace {
            name: format!("Max {}", a.name),
            space: max_space(&a.algebra, bounds)?.space,
        });
    }
    out.extend(discrete_crisp_spaces(4));
    let pq = Universe::new(["p", "q"])?;
    let l3 = Chain::new(3)?;
    out.push(NamedSpace {
        name: "indiscrete L3 on 2 points".into(),
        space: MvTopology::indiscrete(pq.clone(), l3),
    });
    out.push(NamedSpace {
        name: "full L3 on 2 points".into(),
        space: MvTopology::full(pq.clone(), l3),
    });
    out.push(NamedSpace {
        name: "discrete L4 on 2 points".into(),
        space: MvTopology::discrete(pq, Chain::new(4)?),
    });
    Ok(out)
}

/// Every MV-topology on `universe` over `chain`, by filtering all families
/// that contain `0` and `1`.
///
/// The search is over `2^(m−2)` families with `m = |chain|^|X|`, capped by
/// `bounds.coverings`.
pub fn enumerate_topologies(universe: &Arc<Universe>, chain: Chain, bounds: &Bounds) -> Result<Vec<MvTopology>> {
    let all = FuzzySubset::all(universe, chain);
    let zero = FuzzySubset::zero(universe.clone(), chain);
    let one = FuzzySubset::one(universe.clone(), chain);
    let middle: Vec<FuzzySubset> = all.into_iter().filter(|f| *f != zero && *f != one).collect();
    let families = 1u128 << middle.len().min(127);
    if families > bounds.coverings as u128 {
        return Err(MvError::BoundExceeded {
            what: "candidate families",
            size: families.min(usize::MAX as u128) as usize,
            bound: bounds.coverings,
        });
    }
    let families = families as usize;
    let mut out = Vec::new();
    for mask in 0..families {
        let mut family = vec![zero.clone(), one.clone()];
        family.extend(
            middle
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, f)| f.clone()),
        );
        if check_mv_topology(universe, chain, &family)?.is_none() {
            out.push(MvTopology::new(universe.clone(), chain, family)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shape() {
        let gens = generated_algebras();
        assert_eq!(gens.len(), 20);
        assert!(gens.iter().all(|a| a.algebra.len() <= 64));
        assert!(gens.iter().any(|a| a.algebra.box_factors().is_none()));
        assert_eq!(full_products(&[2, 3, 4, 5], 3).len(), 34);
    }

    #[test]
    fn two_point_boolean_topologies() {
        // On two points with crisp values the MV-topologies are the four
        // classical topologies closed under intersection and union.
        let u = Universe::new(["p", "q"]).unwrap();
        let tops = enumerate_topologies(&u, Chain::BOOLEAN, &Bounds::default()).unwrap();
        assert_eq!(tops.len(), 4);
    }
}
