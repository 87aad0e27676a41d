//! Finite MV-topological spaces.
//!
//! A family of opens is finite, so closure under arbitrary joins amounts to
//! containing `0` (the empty join) and being closed under binary `∨`. Every
//! check in this module relies on that reduction.

mod cover;
mod maps;
mod metric;
mod separation;

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

pub use cover::{
    compactness, extract_additive_subcover, is_additive_covering, is_covering, minimal_coverings,
    CompactnessReport,
};
pub use maps::{
    check_continuous, check_continuous_closed_form, check_continuous_on_skeletons,
    check_continuous_via_base, is_closed_map, is_homeomorphism, is_open_map, ContinuityVerdict,
};
pub use metric::{metric_ball_base, Distance, FuzzyPoint, Metric, MetricBallReport};
pub use separation::{
    crisp_singletons_closed, hausdorff, hausdorff_odot, is_stone_mv_space, is_zero_dimensional,
    PairWitness, SeparationReport, StoneReport,
};

use crate::algebra::FiniteMvAlgebra;
use crate::chain::Chain;
use crate::element::{MvElement, ProductSignature};
use crate::error::{MvError, Result};
use crate::fuzzy::{family_join, same_universe, FuzzySubset, Universe};

/// The binary operations an MV-topology must be closed under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinOp {
    Join,
    Odot,
    Oplus,
    Meet,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Join => "∨",
            BinOp::Odot => "⊙",
            BinOp::Oplus => "⊕",
            BinOp::Meet => "∧",
        }
    }

    /// Pointwise application; operands must already share universe and chain.
    pub fn apply(self, a: &FuzzySubset, b: &FuzzySubset) -> FuzzySubset {
        let c = a.chain();
        match self {
            BinOp::Join => a.zip_unchecked(b, u32::max),
            BinOp::Meet => a.zip_unchecked(b, u32::min),
            BinOp::Oplus => a.zip_unchecked(b, |x, y| c.oplus(x, y)),
            BinOp::Odot => a.zip_unchecked(b, |x, y| c.odot(x, y)),
        }
    }
}

/// The clause of the MV-topology definition that a family violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Clause {
    /// `0, 1 ∈ Ω`
    Constants,
    /// closure under joins
    Joins,
    /// closure under `⊙`
    Odot,
    /// closure under `⊕`
    Oplus,
    /// closure under `∧`
    Meet,
}

impl Clause {
    pub fn label(self) -> &'static str {
        match self {
            Clause::Constants => "i",
            Clause::Joins => "ii",
            Clause::Odot => "iii",
            Clause::Oplus => "iv",
            Clause::Meet => "v",
        }
    }

    fn of(op: BinOp) -> Clause {
        match op {
            BinOp::Join => Clause::Joins,
            BinOp::Odot => Clause::Odot,
            BinOp::Oplus => Clause::Oplus,
            BinOp::Meet => Clause::Meet,
        }
    }
}

/// A counterexample to the MV-topology axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologyViolation {
    pub clause: Clause,
    /// The missing constant for clause (i), otherwise the left operand.
    pub left: FuzzySubset,
    pub right: Option<FuzzySubset>,
    /// The result that is missing from the family.
    pub missing: FuzzySubset,
}

impl fmt::Display for TopologyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.right, self.clause) {
            (None, _) => write!(f, "clause ({}): {} missing", self.clause.label(), self.missing),
            (Some(r), c) => {
                let op = match c {
                    Clause::Joins => "∨",
                    Clause::Odot => "⊙",
                    Clause::Oplus => "⊕",
                    _ => "∧",
                };
                write!(
                    f,
                    "clause ({}): {} {op} {} = {} not in the family",
                    c.label(),
                    self.left,
                    r,
                    self.missing
                )
            }
        }
    }
}

fn check_members(universe: &Arc<Universe>, chain: Chain, family: &[FuzzySubset]) -> Result<()> {
    for m in family {
        if !same_universe(m.universe(), universe) {
            return Err(MvError::UniverseMismatch);
        }
        if m.chain() != chain {
            return Err(MvError::ChainMismatch {
                left: chain.order(),
                right: m.chain().order(),
            });
        }
    }
    Ok(())
}

const TOPOLOGY_OPS: [BinOp; 4] = [BinOp::Join, BinOp::Odot, BinOp::Oplus, BinOp::Meet];

/// First violated clause of the definition, scanning pairs in canonical order.
pub fn check_mv_topology(
    universe: &Arc<Universe>,
    chain: Chain,
    family: &[FuzzySubset],
) -> Result<Option<TopologyViolation>> {
    check_members(universe, chain, family)?;
    let set: BTreeSet<FuzzySubset> = family.iter().cloned().collect();
    Ok(first_violation(universe, chain, &set))
}

fn first_violation(
    universe: &Arc<Universe>,
    chain: Chain,
    set: &BTreeSet<FuzzySubset>,
) -> Option<TopologyViolation> {
    for constant in [
        FuzzySubset::zero(universe.clone(), chain),
        FuzzySubset::one(universe.clone(), chain),
    ] {
        if !set.contains(&constant) {
            return Some(TopologyViolation {
                clause: Clause::Constants,
                left: constant.clone(),
                right: None,
                missing: constant,
            });
        }
    }
    let members: Vec<&FuzzySubset> = set.iter().collect();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i..] {
            for op in TOPOLOGY_OPS {
                let r = op.apply(a, b);
                if !set.contains(&r) {
                    return Some(TopologyViolation {
                        clause: Clause::of(op),
                        left: (*a).clone(),
                        right: Some((*b).clone()),
                        missing: r,
                    });
                }
            }
        }
    }
    None
}

/// Closes `family` under the given operations (semi-naive fixpoint).
pub fn close_under(family: Vec<FuzzySubset>, ops: &[BinOp]) -> Vec<FuzzySubset> {
    let mut seen: HashSet<FuzzySubset> = HashSet::with_capacity(family.len());
    let mut items = Vec::with_capacity(family.len());
    for f in family {
        if seen.insert(f.clone()) {
            items.push(f);
        }
    }
    let mut i = 0;
    while i < items.len() {
        for j in 0..=i {
            for &op in ops {
                let r = op.apply(&items[i], &items[j]);
                if seen.insert(r.clone()) {
                    items.push(r);
                }
            }
        }
        i += 1;
    }
    items.sort();
    items
}

/// An MV-topology `Ω` on a finite universe, all opens on one chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvTopology {
    universe: Arc<Universe>,
    chain: Chain,
    opens: BTreeSet<FuzzySubset>,
}

/// `Ξ = {o* : o ∈ Ω}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFamily {
    pub closeds: BTreeSet<FuzzySubset>,
}

impl ClosedFamily {
    /// Contains `0`, `1` and is closed under `∧`, `⊙`, `⊕`, `∨`.
    pub fn is_closed_family(&self) -> bool {
        let Some(any) = self.closeds.iter().next() else {
            return false;
        };
        let u = any.universe().clone();
        let c = any.chain();
        first_violation(&u, c, &self.closeds).is_none()
    }
}

impl MvTopology {
    /// Validates the axioms; the error names the first violated clause.
    pub fn new<I>(universe: Arc<Universe>, chain: Chain, opens: I) -> Result<Self>
    where
        I: IntoIterator<Item = FuzzySubset>,
    {
        let family: Vec<FuzzySubset> = opens.into_iter().collect();
        if let Some(v) = check_mv_topology(&universe, chain, &family)? {
            return Err(MvError::NotTopology(v.to_string()));
        }
        Ok(MvTopology {
            universe,
            chain,
            opens: family.into_iter().collect(),
        })
    }

    /// `{0, 1}`.
    pub fn indiscrete(universe: Arc<Universe>, chain: Chain) -> Self {
        let opens = [
            FuzzySubset::zero(universe.clone(), chain),
            FuzzySubset::one(universe.clone(), chain),
        ]
        .into_iter()
        .collect();
        MvTopology {
            universe,
            chain,
            opens,
        }
    }

    /// Every crisp subset.
    pub fn discrete(universe: Arc<Universe>, chain: Chain) -> Self {
        let n = universe.len();
        let opens = (0u64..1 << n)
            .map(|mask| {
                let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                FuzzySubset::crisp(universe.clone(), chain, &members)
            })
            .collect();
        MvTopology {
            universe,
            chain,
            opens,
        }
    }

    /// Every table `X → Łₙ`.
    pub fn full(universe: Arc<Universe>, chain: Chain) -> Self {
        let opens = FuzzySubset::all(&universe, chain).into_iter().collect();
        MvTopology {
            universe,
            chain,
            opens,
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn chain(&self) -> Chain {
        self.chain
    }

    pub fn opens(&self) -> &BTreeSet<FuzzySubset> {
        &self.opens
    }

    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opens.is_empty()
    }

    /// Membership after moving `alpha` onto this space's grid.
    pub fn is_open(&self, alpha: &FuzzySubset) -> bool {
        same_universe(alpha.universe(), &self.universe)
            && alpha
                .to_chain(self.chain)
                .is_some_and(|a| self.opens.contains(&a))
    }

    pub fn is_closed(&self, alpha: &FuzzySubset) -> bool {
        self.is_open(&alpha.neg())
    }

    pub fn is_clopen(&self, alpha: &FuzzySubset) -> bool {
        self.is_open(alpha) && self.is_closed(alpha)
    }

    pub fn is_crisp(&self) -> bool {
        self.opens.iter().all(FuzzySubset::is_crisp)
    }

    pub fn closed_sets(&self) -> ClosedFamily {
        ClosedFamily {
            closeds: self.opens.iter().map(FuzzySubset::neg).collect(),
        }
    }

    /// `Clop τ = Ω ∩ Ξ`, in canonical order.
    pub fn clopens(&self) -> Vec<FuzzySubset> {
        self.opens
            .iter()
            .filter(|o| self.opens.contains(&o.neg()))
            .cloned()
            .collect()
    }

    /// `Clop τ` as an algebra over `Łₙ^X`; construction certifies closure
    /// under `⊕` and `*`.
    pub fn clopen_algebra(&self) -> Result<FiniteMvAlgebra> {
        let sig = ProductSignature::power(self.chain, self.universe.len())?;
        FiniteMvAlgebra::from_carrier(sig, self.clopens().iter().map(FuzzySubset::as_element))
    }

    /// The table of an element of [`clopen_algebra`](Self::clopen_algebra).
    pub fn table_of(&self, element: &MvElement) -> Result<FuzzySubset> {
        FuzzySubset::new(self.universe.clone(), self.chain, element.0.clone())
    }

    /// The crisp opens, as a topology on `Ł₂`.
    ///
    /// Computed both as `Ω ∩ {0,1}^X` and as `{Δ∘α : α ∈ Ω}`; a mismatch is an
    /// internal error.
    pub fn skeleton(&self) -> Result<MvTopology> {
        let crisp: BTreeSet<FuzzySubset> = self.opens.iter().filter(|o| o.is_crisp()).cloned().collect();
        let deltas: BTreeSet<FuzzySubset> = self.opens.iter().map(FuzzySubset::baaz_delta).collect();
        if crisp != deltas {
            return Err(MvError::Internal(
                "crisp opens differ from Baaz-delta images".into(),
            ));
        }
        let opens: Vec<FuzzySubset> = crisp
            .iter()
            .map(|o| o.to_chain(Chain::BOOLEAN).expect("crisp tables live on L2"))
            .collect();
        MvTopology::new(self.universe.clone(), Chain::BOOLEAN, opens)
            .map_err(|e| MvError::Internal(format!("skeleton: {e}")))
    }

    /// `Ω_Y = {o↾Y : o ∈ Ω}` on the listed points.
    pub fn subspace(&self, points: &[usize]) -> Result<MvTopology> {
        if points.is_empty() {
            return Err(MvError::EmptyUniverse);
        }
        if let Some(&p) = points.iter().find(|&&p| p >= self.universe.len()) {
            return Err(MvError::InvalidArgument(format!("point index {p} out of range")));
        }
        let sub = Universe::new(points.iter().map(|&p| self.universe.name(p).to_string()))?;
        let opens: Vec<FuzzySubset> = self.opens.iter().map(|o| o.restrict(&sub, points)).collect();
        MvTopology::new(sub, self.chain, opens)
    }

    /// The same opens re-read on a finer grid.
    pub fn on_chain(&self, target: Chain) -> Result<MvTopology> {
        let opens = self
            .opens
            .iter()
            .map(|o| o.to_chain(target))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| MvError::InvalidArgument(format!("{} does not refine {}", target, self.chain)))?;
        MvTopology::new(self.universe.clone(), target, opens)
    }
}

/// Checks `base` (covering, closed under `⊕`, `⊙`, `∧`) and returns the
/// topology of all joins of its subfamilies.
pub fn generate_from_base(
    universe: &Arc<Universe>,
    chain: Chain,
    base: &[FuzzySubset],
) -> Result<MvTopology> {
    check_members(universe, chain, base)?;
    let join = family_join(universe, chain, base)?;
    if let Some(p) = (0..universe.len()).find(|&p| join.values()[p] != chain.top()) {
        return Err(MvError::NotCovering(universe.name(p).to_string()));
    }
    let set: BTreeSet<FuzzySubset> = base.iter().cloned().collect();
    let members: Vec<&FuzzySubset> = set.iter().collect();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i..] {
            for op in [BinOp::Oplus, BinOp::Odot, BinOp::Meet] {
                if !set.contains(&op.apply(a, b)) {
                    return Err(MvError::BaseNotClosed {
                        op: op.symbol(),
                        left: a.to_string(),
                        right: b.to_string(),
                    });
                }
            }
        }
    }
    let mut family: Vec<FuzzySubset> = set.into_iter().collect();
    family.push(FuzzySubset::zero(universe.clone(), chain));
    let opens = close_under(family, &[BinOp::Join]);
    MvTopology::new(universe.clone(), chain, opens)
        .map_err(|e| MvError::Internal(format!("generated family: {e}")))
}
