//! Ideals, maximal and prime ideals, and the radical.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use super::FiniteMvAlgebra;
use crate::bounds::Bounds;
use crate::error::{MvError, Result};

/// A set of carrier indices closed downward and under `⊕`, containing `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    members: FixedBitSet,
}

impl Ideal {
    pub(crate) fn from_indices<I: IntoIterator<Item = usize>>(size: usize, members: I) -> Self {
        let mut bits = FixedBitSet::with_capacity(size);
        for m in members {
            bits.insert(m);
        }
        Ideal { members: bits }
    }

    /// Validates the ideal axioms against `algebra`.
    pub fn new<I: IntoIterator<Item = usize>>(algebra: &FiniteMvAlgebra, members: I) -> Result<Self> {
        let members: Vec<usize> = members.into_iter().collect();
        if let Some(&m) = members.iter().find(|&&m| m >= algebra.len()) {
            return Err(MvError::InvalidArgument(format!("index {m} outside the carrier")));
        }
        let ideal = Self::from_indices(algebra.len(), members);
        if !ideal.is_ideal_of(algebra) {
            return Err(MvError::InvalidArgument(
                "set is not downward closed and ⊕-closed with 0".into(),
            ));
        }
        Ok(ideal)
    }

    pub fn zero(algebra: &FiniteMvAlgebra) -> Self {
        Self::from_indices(algebra.len(), [algebra.zero()])
    }

    pub fn whole(algebra: &FiniteMvAlgebra) -> Self {
        Self::from_indices(algebra.len(), 0..algebra.len())
    }

    /// Exhaustive check of the three ideal conditions.
    pub fn is_ideal_of(&self, algebra: &FiniteMvAlgebra) -> bool {
        if !self.contains(algebra.zero()) {
            return false;
        }
        let members = self.members();
        for &b in &members {
            for a in 0..algebra.len() {
                if algebra.leq(a, b) && !self.contains(a) {
                    return false;
                }
            }
            for &c in &members {
                if !self.contains(algebra.oplus(b, c)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn members(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn is_proper(&self, algebra: &FiniteMvAlgebra) -> bool {
        !self.contains(algebra.one())
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        let mut m = self.members.clone();
        m.intersect_with(&other.members);
        Ideal { members: m }
    }

    /// The largest member (an idempotent, for ideals of finite algebras).
    pub fn generator(&self, algebra: &FiniteMvAlgebra) -> usize {
        algebra.join_all(self.members.ones())
    }

    pub fn format(&self, algebra: &FiniteMvAlgebra) -> String {
        let parts: Vec<String> = self
            .members
            .ones()
            .map(|a| algebra.format_element(a))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order of the sorted member lists.
impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.ones().cmp(other.members.ones())
    }
}

/// An ideal together with `is_proper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedIdeal {
    pub ideal: Ideal,
    pub proper: bool,
}

/// Least ideal containing `generators`.
pub fn generate_ideal<I>(algebra: &FiniteMvAlgebra, generators: I) -> GeneratedIdeal
where
    I: IntoIterator<Item = usize>,
{
    let n = algebra.len();
    let mut bits = FixedBitSet::with_capacity(n);
    let mut members = Vec::new();
    let push = |bits: &mut FixedBitSet, members: &mut Vec<usize>, x: usize| {
        if !bits.put(x) {
            members.push(x);
        }
    };
    push(&mut bits, &mut members, algebra.zero());
    for g in generators {
        push(&mut bits, &mut members, g);
    }
    let mut i = 0;
    while i < members.len() {
        let a = members[i];
        for b in 0..n {
            if algebra.leq(b, a) {
                push(&mut bits, &mut members, b);
            }
        }
        for j in 0..=i {
            let s = algebra.oplus(a, members[j]);
            push(&mut bits, &mut members, s);
        }
        i += 1;
    }
    let proper = !bits.contains(algebra.one());
    GeneratedIdeal {
        ideal: Ideal { members: bits },
        proper,
    }
}

/// Every ideal of `algebra`, in canonical order.
///
/// Products of subchains are handled coordinatewise; other carriers are
/// explored by closing `I ∪ {a}` from `{0}` and are capped by
/// `bounds.ideal_carrier`.
pub fn all_ideals(algebra: &FiniteMvAlgebra, bounds: &Bounds) -> Result<Vec<Ideal>> {
    let mut out: Vec<Ideal> = if let Some(factors) = algebra.box_factors() {
        box_ideals(algebra, factors.len())
    } else {
        if algebra.len() > bounds.ideal_carrier {
            return Err(MvError::BoundExceeded {
                what: "ideal enumeration",
                size: algebra.len(),
                bound: bounds.ideal_carrier,
            });
        }
        closure_ideals(algebra)
    };
    out.sort();
    Ok(out)
}

fn box_ideals(algebra: &FiniteMvAlgebra, k: usize) -> Vec<Ideal> {
    // For each set of free coordinates, the elements vanishing elsewhere.
    (0u64..1 << k)
        .map(|free| {
            Ideal::from_indices(
                algebra.len(),
                (0..algebra.len()).filter(|&a| {
                    algebra
                        .element(a)
                        .0
                        .iter()
                        .enumerate()
                        .all(|(c, &v)| v == 0 || free & (1 << c) != 0)
                }),
            )
        })
        .collect()
}

fn closure_ideals(algebra: &FiniteMvAlgebra) -> Vec<Ideal> {
    let mut found: BTreeSet<Ideal> = BTreeSet::new();
    let start = Ideal::zero(algebra);
    let mut queue = vec![start.clone()];
    found.insert(start);
    while let Some(ideal) = queue.pop() {
        for a in 0..algebra.len() {
            if ideal.contains(a) {
                continue;
            }
            let next = generate_ideal(algebra, ideal.members.ones().chain([a])).ideal;
            if found.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    found.into_iter().collect()
}

/// A maximal ideal with, for each non-member `a`, an exponent `n` such that
/// `(a*)ⁿ` is a member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalIdeal {
    pub ideal: Ideal,
    pub certificate: Vec<(usize, u32)>,
}

impl MaximalIdeal {
    /// Builds the power certificate, or `None` if some non-member has none.
    pub fn certify(algebra: &FiniteMvAlgebra, ideal: &Ideal) -> Option<MaximalIdeal> {
        if !ideal.is_proper(algebra) {
            return None;
        }
        let mut certificate = Vec::new();
        for a in 0..algebra.len() {
            if ideal.contains(a) {
                continue;
            }
            let na = algebra.neg(a);
            let mut p = na;
            let mut n = 1;
            while !ideal.contains(p) {
                let next = algebra.odot(p, na);
                if next == p {
                    return None;
                }
                p = next;
                n += 1;
            }
            certificate.push((a, n));
        }
        Some(MaximalIdeal {
            ideal: ideal.clone(),
            certificate,
        })
    }

    /// Re-checks every certificate entry.
    pub fn verify(&self, algebra: &FiniteMvAlgebra) -> bool {
        self.ideal.is_proper(algebra)
            && self.ideal.is_ideal_of(algebra)
            && (0..algebra.len())
                .filter(|&a| !self.ideal.contains(a))
                .all(|a| {
                    self.certificate.iter().any(|&(b, n)| {
                        b == a && self.ideal.contains(algebra.power(algebra.neg(a), n))
                    })
                })
    }
}

/// Maximal ideals in canonical order, selected by the power criterion.
pub fn maximal_ideals(algebra: &FiniteMvAlgebra, bounds: &Bounds) -> Result<Vec<MaximalIdeal>> {
    Ok(all_ideals(algebra, bounds)?
        .iter()
        .filter_map(|i| MaximalIdeal::certify(algebra, i))
        .collect())
}

/// Maximal ideals as the ⊆-maximal proper ideals; an independent route.
pub fn maximal_ideals_by_inclusion(algebra: &FiniteMvAlgebra, bounds: &Bounds) -> Result<Vec<Ideal>> {
    let proper: Vec<Ideal> = all_ideals(algebra, bounds)?
        .into_iter()
        .filter(|i| i.is_proper(algebra))
        .collect();
    Ok(proper
        .iter()
        .filter(|i| !proper.iter().any(|j| j != *i && i.is_subset(j)))
        .cloned()
        .collect())
}

/// Proper ideals with `a ∧ b ∈ P ⇒ a ∈ P or b ∈ P`.
pub fn prime_ideals(algebra: &FiniteMvAlgebra, bounds: &Bounds) -> Result<Vec<Ideal>> {
    Ok(all_ideals(algebra, bounds)?
        .into_iter()
        .filter(|p| {
            p.is_proper(algebra)
                && (0..algebra.len()).all(|a| {
                    (a..algebra.len()).all(|b| {
                        !p.contains(algebra.meet(a, b)) || p.contains(a) || p.contains(b)
                    })
                })
        })
        .collect())
}

/// `Rad A = ⋂ Max A`.
pub fn radical(algebra: &FiniteMvAlgebra, bounds: &Bounds) -> Result<Ideal> {
    let maxes = maximal_ideals(algebra, bounds)?;
    Ok(maxes
        .iter()
        .fold(Ideal::whole(algebra), |acc, m| acc.intersection(&m.ideal)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{MvElement, ProductSignature};

    fn full(orders: &[u32]) -> FiniteMvAlgebra {
        FiniteMvAlgebra::full_product(ProductSignature::from_orders(orders).unwrap())
    }

    fn idx(a: &FiniteMvAlgebra, v: &[u32]) -> usize {
        a.index_of(&MvElement(v.to_vec())).unwrap()
    }

    #[test]
    fn zero_ideal_from_empty_set() {
        let a = full(&[3, 2]);
        let g = generate_ideal(&a, []);
        assert_eq!(g.ideal, Ideal::zero(&a));
        assert!(g.proper);
    }

    #[test]
    fn half_generates_everything_in_l3() {
        let a = full(&[3]);
        let g = generate_ideal(&a, [1]);
        assert_eq!(g.ideal.len(), 3);
        assert!(!g.proper);
    }

    #[test]
    fn generated_ideal_in_l3_squared() {
        let a = full(&[3, 3]);
        let g = generate_ideal(&a, [idx(&a, &[1, 0])]);
        assert!(g.proper);
        let expected: Vec<usize> = [[0, 0], [1, 0], [2, 0]].iter().map(|v| idx(&a, v)).collect();
        assert_eq!(g.ideal.members(), expected);
    }

    #[test]
    fn maximal_ideals_examples() {
        let l3 = full(&[3]);
        let m = maximal_ideals(&l3, &Bounds::default()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].ideal, Ideal::zero(&l3));

        let b = full(&[2, 2]);
        let m = maximal_ideals(&b, &Bounds::default()).unwrap();
        assert_eq!(m.len(), 2);
        // canonical order: {(0,0),(0,1)} before {(0,0),(1,0)}
        assert_eq!(m[0].ideal.members(), vec![idx(&b, &[0, 0]), idx(&b, &[0, 1])]);
        assert_eq!(m[1].ideal.members(), vec![idx(&b, &[0, 0]), idx(&b, &[1, 0])]);

        let p = full(&[3, 2]);
        let m = maximal_ideals(&p, &Bounds::default()).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.iter().all(|mi| mi.verify(&p)));
    }

    #[test]
    fn closure_route_matches_box_route() {
        for orders in [&[3, 2][..], &[2, 2, 2], &[4, 3], &[5]] {
            let a = full(orders);
            let mut closure = closure_ideals(&a);
            closure.sort();
            let boxed = all_ideals(&a, &Bounds::default()).unwrap();
            assert_eq!(closure, boxed, "{orders:?}");
        }
    }

    #[test]
    fn bound_is_enforced_for_non_box_carriers() {
        let sig = ProductSignature::from_orders(&[5, 5, 5]).unwrap();
        let a = FiniteMvAlgebra::generate(
            sig,
            [MvElement(vec![1, 1, 0])],
        )
        .unwrap();
        assert!(a.box_factors().is_none());
        let tight = Bounds::with_ideal_carrier(a.len() - 1);
        assert!(matches!(
            all_ideals(&a, &tight),
            Err(MvError::BoundExceeded { .. })
        ));
        assert!(all_ideals(&a, &Bounds::with_ideal_carrier(a.len())).is_ok());
    }

    #[test]
    fn radical_is_zero() {
        for orders in [&[3][..], &[2], &[3, 4, 2]] {
            let a = full(orders);
            assert_eq!(radical(&a, &Bounds::default()).unwrap(), Ideal::zero(&a));
        }
    }

    #[test]
    fn primes_of_finite_algebras_are_maximal() {
        let a = full(&[2, 4]);
        let primes = prime_ideals(&a, &Bounds::default()).unwrap();
        let maxes: Vec<Ideal> = maximal_ideals(&a, &Bounds::default())
            .unwrap()
            .into_iter()
            .map(|m| m.ideal)
            .collect();
        assert_eq!(primes, maxes);
    }

    #[test]
    fn ideal_validation() {
        let a = full(&[3]);
        assert!(Ideal::new(&a, [0]).is_ok());
        assert!(Ideal::new(&a, [0, 1]).is_err());
        assert!(Ideal::new(&a, [1]).is_err());
    }
}
