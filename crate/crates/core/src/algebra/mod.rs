//! Finite MV-algebras as explicit carriers inside products of chains.
//!
//! Every finite MV-algebra is (isomorphic to) a subalgebra of some
//! `Łₙ₁ × … × Łₙₖ`, so a carrier of [`MvElement`]s together with its
//! [`ProductSignature`] is a complete representation. Elements are addressed
//! by their index in the lexicographically sorted carrier: index `0` is the
//! bottom and the last index is the top.

mod homomorphism;
mod ideal;
mod quotient;

use std::collections::{HashMap, HashSet};

pub use homomorphism::{enumerate_homomorphisms, MvHomomorphism};
pub use ideal::{
    all_ideals, generate_ideal, maximal_ideals, maximal_ideals_by_inclusion, prime_ideals,
    radical, GeneratedIdeal, Ideal, MaximalIdeal,
};
pub use quotient::{
    chain_factorization, embed_max, find_isomorphism, hyper_archimedean, is_liminary,
    is_semisimple, quotient, HatEmbedding, HyperArchimedeanReport, HyperArchimedeanRow,
    LiminaryReport, Quotient,
};

use crate::chain::Chain;
use crate::element::{MvElement, ProductSignature};
use crate::error::{MvError, Result};

/// A finite MV-algebra with precomputed `⊕` and `*` tables.
#[derive(Clone, Debug)]
pub struct FiniteMvAlgebra {
    signature: ProductSignature,
    elements: Vec<MvElement>,
    index: HashMap<MvElement, usize>,
    oplus: Vec<u32>,
    neg: Vec<u32>,
}

impl PartialEq for FiniteMvAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.signature == other.signature && self.elements == other.elements
    }
}

impl Eq for FiniteMvAlgebra {}

impl FiniteMvAlgebra {
    /// Builds an algebra from an explicit carrier, checking closure.
    pub fn from_carrier<I>(signature: ProductSignature, carrier: I) -> Result<Self>
    where
        I: IntoIterator<Item = MvElement>,
    {
        let mut elements: Vec<MvElement> = carrier.into_iter().collect();
        for e in &elements {
            signature.check(e)?;
        }
        elements.sort();
        elements.dedup();
        if elements.len() < 2 {
            return Err(MvError::TrivialAlgebra);
        }
        if elements[0] != signature.zero() {
            return Err(MvError::NotClosed("0"));
        }
        if elements[elements.len() - 1] != signature.one() {
            return Err(MvError::NotClosed("1"));
        }
        let index: HashMap<MvElement, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let n = elements.len();
        let mut oplus = vec![0u32; n * n];
        for i in 0..n {
            for j in i..n {
                let s = signature.oplus(&elements[i], &elements[j]);
                let k = *index.get(&s).ok_or(MvError::NotClosed("⊕"))? as u32;
                oplus[i * n + j] = k;
                oplus[j * n + i] = k;
            }
        }
        let neg = elements
            .iter()
            .map(|e| index.get(&signature.neg(e)).map(|&k| k as u32))
            .collect::<Option<Vec<_>>>()
            .ok_or(MvError::NotClosed("*"))?;
        Ok(FiniteMvAlgebra {
            signature,
            elements,
            index,
            oplus,
            neg,
        })
    }

    /// The full product of the signature's chains.
    pub fn full_product(signature: ProductSignature) -> Self {
        let carrier = signature.all_elements();
        Self::from_carrier(signature, carrier).expect("full products are closed")
    }

    /// The chain `Łₙ` as a one-coordinate algebra.
    pub fn chain(order: u32) -> Result<Self> {
        Ok(Self::full_product(ProductSignature::new(vec![Chain::new(order)?])?))
    }

    /// Least subalgebra containing `generators` (and `0`, `1`).
    pub fn generate<I>(signature: ProductSignature, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = MvElement>,
    {
        let mut elems = vec![signature.zero(), signature.one()];
        let mut seen: HashSet<MvElement> = elems.iter().cloned().collect();
        for g in generators {
            signature.check(&g)?;
            if seen.insert(g.clone()) {
                elems.push(g);
            }
        }
        let mut i = 0;
        while i < elems.len() {
            let a = elems[i].clone();
            let na = signature.neg(&a);
            if seen.insert(na.clone()) {
                elems.push(na);
            }
            for j in 0..=i {
                let s = signature.oplus(&a, &elems[j]);
                if seen.insert(s.clone()) {
                    elems.push(s);
                }
            }
            i += 1;
        }
        Self::from_carrier(signature, elems)
    }

    pub fn signature(&self) -> &ProductSignature {
        &self.signature
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[MvElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &MvElement {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &MvElement) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn oplus(&self, a: usize, b: usize) -> usize {
        self.oplus[a * self.elements.len() + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn odot(&self, a: usize, b: usize) -> usize {
        self.neg(self.oplus(self.neg(a), self.neg(b)))
    }

    pub fn ominus(&self, a: usize, b: usize) -> usize {
        self.odot(a, self.neg(b))
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.oplus(self.ominus(a, b), b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.neg(self.join(self.neg(a), self.neg(b)))
    }

    pub fn distance(&self, a: usize, b: usize) -> usize {
        self.oplus(self.ominus(a, b), self.ominus(b, a))
    }

    /// Componentwise order (equivalently `a ⊖ b = 0`).
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.signature.leq(&self.elements[a], &self.elements[b])
    }

    pub fn multiple(&self, n: u32, a: usize) -> usize {
        (1..n).fold(a, |acc, _| self.oplus(acc, a))
    }

    pub fn power(&self, a: usize, n: u32) -> usize {
        (1..n).fold(a, |acc, _| self.odot(acc, a))
    }

    pub fn is_boolean(&self, a: usize) -> bool {
        self.oplus(a, a) == a
    }

    /// `⊕` over a list; the empty sum is `0`.
    pub fn sum<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(0, |acc, x| self.oplus(acc, x))
    }

    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(0, |acc, x| self.join(acc, x))
    }

    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.one(), |acc, x| self.meet(acc, x))
    }

    /// Whether the carrier is totally ordered.
    pub fn is_chain(&self) -> bool {
        // Lexicographic order extends the lattice order, so consecutive
        // comparability suffices.
        (1..self.len()).all(|i| self.leq(i - 1, i))
    }

    /// Whether the carrier equals the product of its coordinate projections.
    ///
    /// Returns the projections (each a subchain) when it does.
    pub fn box_factors(&self) -> Option<Vec<Vec<u32>>> {
        let k = self.signature.len();
        let mut proj: Vec<Vec<u32>> = vec![Vec::new(); k];
        for e in &self.elements {
            for (c, &v) in e.0.iter().enumerate() {
                proj[c].push(v);
            }
        }
        for p in &mut proj {
            p.sort_unstable();
            p.dedup();
        }
        let size: usize = proj.iter().map(Vec::len).product();
        (size == self.len()).then_some(proj)
    }

    /// The Boolean center `B(A)`: all idempotents.
    pub fn boolean_center(&self) -> FiniteMvAlgebra {
        let carrier: Vec<MvElement> = (0..self.len())
            .filter(|&a| self.is_boolean(a))
            .map(|a| self.elements[a].clone())
            .collect();
        let center = FiniteMvAlgebra::from_carrier(self.signature.clone(), carrier)
            .expect("idempotents form a subalgebra");
        debug_assert!((0..center.len()).all(|a| center.meet(a, center.neg(a)) == 0));
        center
    }

    pub fn is_boolean_algebra(&self) -> bool {
        (0..self.len()).all(|a| self.is_boolean(a))
    }

    pub fn format_element(&self, a: usize) -> String {
        self.signature.format(&self.elements[a])
    }

    /// Indices of `subset` (an algebra over the same signature) inside `self`.
    pub fn embedding_of(&self, subset: &FiniteMvAlgebra) -> Option<Vec<usize>> {
        if subset.signature != self.signature {
            return None;
        }
        subset.elements.iter().map(|e| self.index_of(e)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(orders: &[u32]) -> ProductSignature {
        ProductSignature::from_orders(orders).unwrap()
    }

    #[test]
    fn generate_from_nothing_gives_constants() {
        let a = FiniteMvAlgebra::generate(sig(&[3]), []).unwrap();
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn generate_half_in_l3() {
        let a = FiniteMvAlgebra::generate(sig(&[3]), [MvElement(vec![1])]).unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(a, FiniteMvAlgebra::chain(3).unwrap());
    }

    #[test]
    fn generate_in_product() {
        let a = FiniteMvAlgebra::generate(sig(&[3, 2]), [MvElement(vec![1, 0])]).unwrap();
        let expected: Vec<MvElement> = [[0, 0], [0, 1], [1, 0], [1, 1], [2, 0], [2, 1]]
            .iter()
            .map(|v| MvElement(v.to_vec()))
            .collect();
        assert_eq!(a.elements(), expected.as_slice());
    }

    #[test]
    fn from_carrier_checks_closure() {
        let s = sig(&[4]);
        let bad = [0, 1, 3].map(|k| MvElement(vec![k]));
        assert_eq!(
            FiniteMvAlgebra::from_carrier(s.clone(), bad),
            Err(MvError::NotClosed("⊕"))
        );
        let no_top = [0, 1].map(|k| MvElement(vec![k]));
        assert!(FiniteMvAlgebra::from_carrier(s, no_top).is_err());
    }

    #[test]
    fn boolean_center_examples() {
        let l3 = FiniteMvAlgebra::chain(3).unwrap();
        assert_eq!(l3.boolean_center().len(), 2);
        let b = FiniteMvAlgebra::full_product(sig(&[2, 2, 2]));
        assert_eq!(b.boolean_center(), b);
        let p = FiniteMvAlgebra::full_product(sig(&[3, 2]));
        let center = p.boolean_center();
        assert_eq!(center.len(), 4);
        assert!(center
            .elements()
            .iter()
            .all(|e| e.0[0] != 1));
    }

    #[test]
    fn derived_index_operations_agree_with_coordinates() {
        let a = FiniteMvAlgebra::full_product(sig(&[3, 4]));
        let s = a.signature().clone();
        for i in 0..a.len() {
            for j in 0..a.len() {
                let (x, y) = (a.element(i), a.element(j));
                assert_eq!(a.element(a.odot(i, j)), &s.odot(x, y));
                assert_eq!(a.element(a.join(i, j)), &s.join(x, y));
                assert_eq!(a.element(a.meet(i, j)), &s.meet(x, y));
                assert_eq!(a.element(a.distance(i, j)), &s.distance(x, y));
                assert_eq!(a.leq(i, j), a.ominus(i, j) == 0);
            }
        }
    }

    #[test]
    fn box_detection() {
        let full = FiniteMvAlgebra::full_product(sig(&[3, 2]));
        assert!(full.box_factors().is_some());
        let diag = FiniteMvAlgebra::generate(sig(&[3, 3]), [MvElement(vec![1, 1])]).unwrap();
        assert!(diag.box_factors().is_none());
        assert!(diag.is_chain());
        assert!(!full.is_chain());
    }
}
