//! Fuzzy subsets of a finite universe and the maps they induce along point maps.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::chain::{format_ratio, Chain, ChainValue};
use crate::element::{MvElement, ProductSignature};
use crate::error::{MvError, Result};

/// A finite, nonempty, ordered set of named points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(MvError::EmptyUniverse);
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(MvError::DuplicatePoint(n.clone()));
            }
        }
        Ok(Arc::new(Universe { names, index }))
    }

    /// Points named `{prefix}0 … {prefix}{n-1}`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Arc<Self>> {
        Self::new((0..n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

pub(crate) fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

/// A membership table `X → Łₙ`.
#[derive(Clone, Debug)]
pub struct FuzzySubset {
    universe: Arc<Universe>,
    chain: Chain,
    values: Vec<u32>,
}

impl PartialEq for FuzzySubset {
    fn eq(&self, other: &Self) -> bool {
        self.chain == other.chain
            && self.values == other.values
            && same_universe(&self.universe, &other.universe)
    }
}

impl Eq for FuzzySubset {}

impl Hash for FuzzySubset {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.chain.hash(state);
        self.values.hash(state);
    }
}

impl PartialOrd for FuzzySubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical total order: chain, then values lexicographically.
impl Ord for FuzzySubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.chain
            .cmp(&other.chain)
            .then_with(|| self.values.cmp(&other.values))
            .then_with(|| self.universe.names.cmp(&other.universe.names))
    }
}

impl FuzzySubset {
    pub fn new(universe: Arc<Universe>, chain: Chain, values: Vec<u32>) -> Result<Self> {
        if values.len() != universe.len() {
            return Err(MvError::InvalidArgument(format!(
                "table has {} entries for {} points",
                values.len(),
                universe.len()
            )));
        }
        if let Some(&k) = values.iter().find(|&&k| k > chain.top()) {
            return Err(MvError::OffGrid {
                value: format!("{k}/{}", chain.top()),
                order: chain.order(),
            });
        }
        Ok(FuzzySubset {
            universe,
            chain,
            values,
        })
    }

    pub(crate) fn from_raw(universe: Arc<Universe>, chain: Chain, values: Vec<u32>) -> Self {
        debug_assert_eq!(values.len(), universe.len());
        FuzzySubset {
            universe,
            chain,
            values,
        }
    }

    pub fn constant(universe: Arc<Universe>, value: ChainValue) -> Self {
        let values = vec![value.numerator(); universe.len()];
        FuzzySubset {
            universe,
            chain: value.chain(),
            values,
        }
    }

    pub fn zero(universe: Arc<Universe>, chain: Chain) -> Self {
        Self::constant(universe, chain.zero())
    }

    pub fn one(universe: Arc<Universe>, chain: Chain) -> Self {
        Self::constant(universe, chain.one())
    }

    /// The crisp indicator of a set of point indices.
    pub fn crisp(universe: Arc<Universe>, chain: Chain, members: &[usize]) -> Self {
        let mut values = vec![0; universe.len()];
        for &i in members {
            values[i] = chain.top();
        }
        FuzzySubset {
            universe,
            chain,
            values,
        }
    }

    /// Every table `X → Łₙ`, in canonical order.
    pub fn all(universe: &Arc<Universe>, chain: Chain) -> Vec<FuzzySubset> {
        ProductSignature::power(chain, universe.len())
            .expect("universe is nonempty")
            .all_elements()
            .into_iter()
            .map(|e| FuzzySubset::from_raw(universe.clone(), chain, e.0))
            .collect()
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn chain(&self) -> Chain {
        self.chain
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value_at(&self, point: usize) -> ChainValue {
        self.chain
            .value(self.values[point])
            .expect("table values are on the grid")
    }

    pub fn as_element(&self) -> MvElement {
        MvElement(self.values.clone())
    }

    pub fn is_crisp(&self) -> bool {
        let top = self.chain.top();
        self.values.iter().all(|&k| k == 0 || k == top)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&k| k == 0)
    }

    pub fn is_one(&self) -> bool {
        let top = self.chain.top();
        self.values.iter().all(|&k| k == top)
    }

    /// Indices of points with value 1.
    pub fn full_points(&self) -> Vec<usize> {
        let top = self.chain.top();
        (0..self.values.len())
            .filter(|&i| self.values[i] == top)
            .collect()
    }

    /// The same table on another grid, if every value lies there.
    pub fn to_chain(&self, target: Chain) -> Option<FuzzySubset> {
        if target == self.chain {
            return Some(self.clone());
        }
        let values = self
            .values
            .iter()
            .map(|&k| self.chain.rescale(k, target))
            .collect::<Option<Vec<_>>>()?;
        Some(FuzzySubset {
            universe: self.universe.clone(),
            chain: target,
            values,
        })
    }

    /// Same table over a structurally equal universe object.
    pub fn with_universe(&self, universe: Arc<Universe>) -> Result<FuzzySubset> {
        if !same_universe(&self.universe, &universe) {
            return Err(MvError::UniverseMismatch);
        }
        Ok(FuzzySubset {
            universe,
            chain: self.chain,
            values: self.values.clone(),
        })
    }

    fn compatible(&self, other: &FuzzySubset) -> Result<()> {
        if !same_universe(&self.universe, &other.universe) {
            return Err(MvError::UniverseMismatch);
        }
        if self.chain != other.chain {
            return Err(MvError::ChainMismatch {
                left: self.chain.order(),
                right: other.chain.order(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &FuzzySubset, f: impl Fn(u32, u32) -> u32) -> Result<FuzzySubset> {
        self.compatible(other)?;
        Ok(self.zip_unchecked(other, f))
    }

    pub(crate) fn zip_unchecked(&self, other: &FuzzySubset, f: impl Fn(u32, u32) -> u32) -> FuzzySubset {
        FuzzySubset {
            universe: self.universe.clone(),
            chain: self.chain,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub(crate) fn map_values(&self, f: impl Fn(u32) -> u32) -> FuzzySubset {
        FuzzySubset {
            universe: self.universe.clone(),
            chain: self.chain,
            values: self.values.iter().map(|&a| f(a)).collect(),
        }
    }

    pub fn oplus(&self, other: &FuzzySubset) -> Result<FuzzySubset> {
        let c = self.chain;
        self.zip_with(other, |a, b| c.oplus(a, b))
    }

    pub fn odot(&self, other: &FuzzySubset) -> Result<FuzzySubset> {
        let c = self.chain;
        self.zip_with(other, |a, b| c.odot(a, b))
    }

    pub fn ominus(&self, other: &FuzzySubset) -> Result<FuzzySubset> {
        let c = self.chain;
        self.zip_with(other, |a, b| c.ominus(a, b))
    }

    pub fn distance(&self, other: &FuzzySubset) -> Result<FuzzySubset> {
        let c = self.chain;
        self.zip_with(other, |a, b| c.distance(a, b))
    }

    pub fn join(&self, other: &FuzzySubset) -> Result<FuzzySubset> {
        self.zip_with(other, u32::max)
    }

    pub fn meet(&self, other: &FuzzySubset) -> Result<FuzzySubset> {
        self.zip_with(other, u32::min)
    }

    pub fn neg(&self) -> FuzzySubset {
        let c = self.chain;
        self.map_values(|a| c.neg(a))
    }

    pub fn baaz_delta(&self) -> FuzzySubset {
        let c = self.chain;
        self.map_values(|a| c.delta(a))
    }

    pub fn nat_multiple(&self, n: u32) -> Result<FuzzySubset> {
        if n == 0 {
            return Err(MvError::ZeroMultiple);
        }
        let c = self.chain;
        Ok(self.map_values(|a| c.multiple(n, a)))
    }

    pub fn nat_power(&self, n: u32) -> Result<FuzzySubset> {
        if n == 0 {
            return Err(MvError::ZeroMultiple);
        }
        let c = self.chain;
        Ok(self.map_values(|a| c.power(a, n)))
    }

    /// Pointwise order.
    pub fn leq(&self, other: &FuzzySubset) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// Pointwise equality of the values read as rationals, across grids.
    pub fn same_values(&self, other: &FuzzySubset) -> bool {
        let (p, q) = (u64::from(self.chain.top()), u64::from(other.chain.top()));
        self.values.len() == other.values.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(&a, &b)| u64::from(a) * q == u64::from(b) * p)
    }

    /// Restriction to the points listed in `points`, over `sub`.
    pub fn restrict(&self, sub: &Arc<Universe>, points: &[usize]) -> FuzzySubset {
        FuzzySubset {
            universe: sub.clone(),
            chain: self.chain,
            values: points.iter().map(|&i| self.values[i]).collect(),
        }
    }
}

impl fmt::Display for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.chain.top();
        let parts: Vec<String> = self.values.iter().map(|&k| format_ratio(k, top)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn family_fold(
    universe: &Arc<Universe>,
    chain: Chain,
    family: &[FuzzySubset],
    init: u32,
    f: fn(u32, u32) -> u32,
) -> Result<FuzzySubset> {
    let mut acc = FuzzySubset::constant(universe.clone(), chain.value(init)?);
    for member in family {
        acc = acc.zip_with(member, f)?;
    }
    Ok(acc)
}

/// `⋁ family`; the empty join is the constant `0`.
pub fn family_join(universe: &Arc<Universe>, chain: Chain, family: &[FuzzySubset]) -> Result<FuzzySubset> {
    family_fold(universe, chain, family, 0, u32::max)
}

/// `⋀ family`; the empty meet is the constant `1`.
pub fn family_meet(universe: &Arc<Universe>, chain: Chain, family: &[FuzzySubset]) -> Result<FuzzySubset> {
    family_fold(universe, chain, family, chain.top(), u32::min)
}

/// A total map between finite universes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointMap {
    source: Arc<Universe>,
    target: Arc<Universe>,
    assignment: Vec<usize>,
}

impl PointMap {
    pub fn new(source: Arc<Universe>, target: Arc<Universe>, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.len() {
            return Err(MvError::InvalidArgument(format!(
                "map assigns {} of {} source points",
                assignment.len(),
                source.len()
            )));
        }
        if let Some(&y) = assignment.iter().find(|&&y| y >= target.len()) {
            return Err(MvError::InvalidArgument(format!(
                "image index {y} outside target of size {}",
                target.len()
            )));
        }
        Ok(PointMap {
            source,
            target,
            assignment,
        })
    }

    pub fn identity(universe: Arc<Universe>) -> Self {
        let assignment = (0..universe.len()).collect();
        PointMap {
            source: universe.clone(),
            target: universe,
            assignment,
        }
    }

    pub fn constant(source: Arc<Universe>, target: Arc<Universe>, point: usize) -> Result<Self> {
        let assignment = vec![point; source.len()];
        Self::new(source, target, assignment)
    }

    pub fn source(&self) -> &Arc<Universe> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Universe> {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.len() != self.target.len() {
            return false;
        }
        let mut seen = vec![false; self.target.len()];
        self.assignment
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn inverse(&self) -> Option<PointMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.target.len()];
        for (x, &y) in self.assignment.iter().enumerate() {
            inv[y] = x;
        }
        Some(PointMap {
            source: self.target.clone(),
            target: self.source.clone(),
            assignment: inv,
        })
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &PointMap) -> Result<PointMap> {
        if !same_universe(first.target(), &self.source) {
            return Err(MvError::UniverseMismatch);
        }
        Ok(PointMap {
            source: first.source.clone(),
            target: self.target.clone(),
            assignment: first.assignment.iter().map(|&y| self.assignment[y]).collect(),
        })
    }

    /// MV-preimage `α ↦ α ∘ f`.
    pub fn preimage(&self, alpha: &FuzzySubset) -> Result<FuzzySubset> {
        if !same_universe(alpha.universe(), &self.target) {
            return Err(MvError::UniverseMismatch);
        }
        Ok(FuzzySubset {
            universe: self.source.clone(),
            chain: alpha.chain,
            values: self.assignment.iter().map(|&y| alpha.values[y]).collect(),
        })
    }

    /// Image `f→(α)(y) = ⋁_{f(x)=y} α(x)`, with `0` on empty fibres.
    pub fn image(&self, alpha: &FuzzySubset) -> Result<FuzzySubset> {
        if !same_universe(alpha.universe(), &self.source) {
            return Err(MvError::UniverseMismatch);
        }
        let mut values = vec![0; self.target.len()];
        for (x, &y) in self.assignment.iter().enumerate() {
            values[y] = values[y].max(alpha.values[x]);
        }
        Ok(FuzzySubset {
            universe: self.target.clone(),
            chain: alpha.chain,
            values,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: u32) -> Chain {
        Chain::new(n).unwrap()
    }

    fn table(u: &Arc<Universe>, c: Chain, v: &[u32]) -> FuzzySubset {
        FuzzySubset::new(u.clone(), c, v.to_vec()).unwrap()
    }

    #[test]
    fn universe_validation() {
        assert_eq!(Universe::new(Vec::<String>::new()), Err(MvError::EmptyUniverse));
        assert_eq!(
            Universe::new(["p", "p"]),
            Err(MvError::DuplicatePoint("p".into()))
        );
        let u = Universe::new(["p", "q"]).unwrap();
        assert_eq!(u.position("q"), Some(1));
    }

    #[test]
    fn family_join_and_meet() {
        let u = Universe::new(["p", "q"]).unwrap();
        let c = l(2);
        assert!(family_join(&u, c, &[]).unwrap().is_zero());
        assert!(family_meet(&u, c, &[]).unwrap().is_one());
        let a = table(&u, c, &[1, 0]);
        let b = table(&u, c, &[0, 1]);
        assert_eq!(family_join(&u, c, std::slice::from_ref(&a)).unwrap(), a);
        assert!(a.join(&b).unwrap().is_one());
    }

    #[test]
    fn mixed_operands_rejected() {
        let u = Universe::new(["p", "q"]).unwrap();
        let v = Universe::new(["r", "s"]).unwrap();
        let a = table(&u, l(3), &[1, 0]);
        assert_eq!(
            a.oplus(&table(&v, l(3), &[1, 0])),
            Err(MvError::UniverseMismatch)
        );
        assert!(a.oplus(&table(&u, l(4), &[1, 0])).is_err());
        assert!(FuzzySubset::new(u.clone(), l(3), vec![3, 0]).is_err());
        assert!(FuzzySubset::new(u, l(3), vec![1]).is_err());
    }

    #[test]
    fn preimage_examples() {
        let x = Universe::new(["a", "b", "c"]).unwrap();
        let y = Universe::new(["p", "q"]).unwrap();
        let alpha = table(&y, l(3), &[1, 2]);
        let id = PointMap::identity(y.clone());
        assert_eq!(id.preimage(&alpha).unwrap(), alpha);
        let k = PointMap::constant(x.clone(), y.clone(), 1).unwrap();
        assert_eq!(k.preimage(&alpha).unwrap().values(), &[2, 2, 2]);
        assert!(k.preimage(&FuzzySubset::zero(y.clone(), l(3))).unwrap().is_zero());
        assert_eq!(k.preimage(&table(&x, l(3), &[0, 0, 0])), Err(MvError::UniverseMismatch));
    }

    #[test]
    fn image_examples() {
        let x = Universe::new(["x1", "x2"]).unwrap();
        let z = Universe::new(["z", "w"]).unwrap();
        let f = PointMap::constant(x.clone(), z.clone(), 0).unwrap();
        let alpha = table(&x, l(3), &[1, 2]);
        let img = f.image(&alpha).unwrap();
        assert!(img.value_at(0).is_one());
        assert!(img.value_at(1).is_zero());
        let id = PointMap::identity(x.clone());
        assert_eq!(id.image(&alpha).unwrap(), alpha);
    }

    #[test]
    fn point_map_validation_and_inverse() {
        let x = Universe::new(["a", "b"]).unwrap();
        assert!(PointMap::new(x.clone(), x.clone(), vec![0]).is_err());
        assert!(PointMap::new(x.clone(), x.clone(), vec![0, 2]).is_err());
        let swap = PointMap::new(x.clone(), x.clone(), vec![1, 0]).unwrap();
        assert_eq!(swap.inverse().unwrap(), swap);
        assert_eq!(swap.after(&swap).unwrap(), PointMap::identity(x.clone()));
        let k = PointMap::constant(x.clone(), x, 0).unwrap();
        assert!(k.inverse().is_none());
    }

    #[test]
    fn to_chain_rescales_exactly() {
        let u = Universe::new(["p"]).unwrap();
        let half = table(&u, l(3), &[1]);
        assert_eq!(half.to_chain(l(5)).unwrap().values(), &[2]);
        assert!(half.to_chain(l(4)).is_none());
    }
}
