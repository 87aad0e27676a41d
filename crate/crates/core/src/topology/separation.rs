//! Hausdorff separation, zero-dimensionality and Stone MV-spaces.

use super::{compactness, MvTopology};
use crate::bounds::Bounds;
use crate::error::{MvError, Result};
use crate::fuzzy::{family_join, FuzzySubset};

/// Separation data for one unordered pair of points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub x: usize,
    pub y: usize,
    /// `(o_x, o_y)` with `o_x(x) = o_y(y) = 1`, first in canonical order.
    pub witness: Option<(FuzzySubset, FuzzySubset)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationReport {
    pub pairs: Vec<PairWitness>,
    pub holds: bool,
}

impl SeparationReport {
    pub fn first_failure(&self) -> Option<(usize, usize)> {
        self.pairs
            .iter()
            .find(|p| p.witness.is_none())
            .map(|p| (p.x, p.y))
    }
}

fn separate(tau: &MvTopology, disjoint: impl Fn(&FuzzySubset, &FuzzySubset) -> bool) -> SeparationReport {
    let n = tau.universe().len();
    let top = tau.chain().top();
    let full_at: Vec<Vec<&FuzzySubset>> = (0..n)
        .map(|x| tau.opens().iter().filter(|o| o.values()[x] == top).collect())
        .collect();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let witness = full_at[x].iter().find_map(|ox| {
                full_at[y]
                    .iter()
                    .find(|oy| disjoint(ox, oy))
                    .map(|oy| ((*ox).clone(), (*oy).clone()))
            });
            pairs.push(PairWitness { x, y, witness });
        }
    }
    let holds = pairs.iter().all(|p| p.witness.is_some());
    SeparationReport { pairs, holds }
}

/// Separation by opens with `o_x ∧ o_y = 0`.
pub fn hausdorff(tau: &MvTopology) -> SeparationReport {
    separate(tau, |a, b| a.values().iter().zip(b.values()).all(|(&p, &q)| p.min(q) == 0))
}

/// Separation by opens with `o_x ⊙ o_y = 0`.
pub fn hausdorff_odot(tau: &MvTopology) -> SeparationReport {
    let c = tau.chain();
    separate(tau, |a, b| a.values().iter().zip(b.values()).all(|(&p, &q)| c.odot(p, q) == 0))
}

/// Points whose crisp singleton is not closed.
pub fn crisp_singletons_closed(tau: &MvTopology) -> Vec<usize> {
    (0..tau.universe().len())
        .filter(|&x| !tau.is_closed(&FuzzySubset::crisp(tau.universe().clone(), tau.chain(), &[x])))
        .collect()
}

/// The first open that is not the join of the clopens below it, if any.
pub fn is_zero_dimensional(tau: &MvTopology) -> Result<Option<FuzzySubset>> {
    let clopens = tau.clopens();
    for o in tau.opens() {
        let below: Vec<FuzzySubset> = clopens.iter().filter(|c| c.leq(o)).cloned().collect();
        if family_join(tau.universe(), tau.chain(), &below)? != *o {
            return Ok(Some(o.clone()));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoneReport {
    pub compact: bool,
    pub strongly_compact: bool,
    pub hausdorff: bool,
    pub unseparated: Option<(usize, usize)>,
    pub zero_dimensional: bool,
    pub not_clopen_generated: Option<FuzzySubset>,
    pub stone: bool,
}

/// Compact, Hausdorff and zero-dimensional.
///
/// Also cross-checks the `∧` and `⊙` forms of separation and, on Hausdorff
/// spaces, that crisp singletons are closed; disagreement is an internal error.
pub fn is_stone_mv_space(tau: &MvTopology, bounds: &Bounds) -> Result<StoneReport> {
    let comp = compactness(tau, bounds)?;
    let sep = hausdorff(tau);
    let sep_odot = hausdorff_odot(tau);
    if sep.holds != sep_odot.holds {
        return Err(MvError::Internal("∧- and ⊙-separation disagree".into()));
    }
    if sep.holds && !crisp_singletons_closed(tau).is_empty() {
        return Err(MvError::Internal(
            "Hausdorff space with a non-closed crisp singleton".into(),
        ));
    }
    let not_clopen_generated = is_zero_dimensional(tau)?;
    let zero_dimensional = not_clopen_generated.is_none();
    Ok(StoneReport {
        compact: comp.compact,
        strongly_compact: comp.strongly_compact,
        hausdorff: sep.holds,
        unseparated: sep.first_failure(),
        zero_dimensional,
        not_clopen_generated,
        stone: comp.compact && sep.holds && zero_dimensional,
    })
}
