//! Continuous, open and closed maps between finite MV-spaces.
//!
//! Domain and codomain may use different grids; a table counts as open when
//! it lies on the space's grid and belongs to `Ω` there.

use super::MvTopology;
use crate::error::{MvError, Result};
use crate::fuzzy::{same_universe, FuzzySubset, PointMap};

/// A verdict plus the first codomain table that breaks it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuityVerdict {
    pub holds: bool,
    pub witness: Option<FuzzySubset>,
}

impl ContinuityVerdict {
    fn from_witness(witness: Option<FuzzySubset>) -> Self {
        ContinuityVerdict {
            holds: witness.is_none(),
            witness,
        }
    }
}

fn check_ends(f: &PointMap, tau: &MvTopology, sigma: &MvTopology) -> Result<()> {
    if !same_universe(f.source(), tau.universe()) || !same_universe(f.target(), sigma.universe()) {
        return Err(MvError::UniverseMismatch);
    }
    Ok(())
}

fn first_bad_preimage<'a, I>(f: &PointMap, family: I, ok: impl Fn(&FuzzySubset) -> bool) -> Result<Option<FuzzySubset>>
where
    I: IntoIterator<Item = &'a FuzzySubset>,
{
    for o in family {
        if !ok(&f.preimage(o)?) {
            return Ok(Some(o.clone()));
        }
    }
    Ok(None)
}

/// `f⇐[Ω_Y] ⊆ Ω_X`.
pub fn check_continuous(f: &PointMap, tau: &MvTopology, sigma: &MvTopology) -> Result<ContinuityVerdict> {
    check_ends(f, tau, sigma)?;
    first_bad_preimage(f, sigma.opens(), |p| tau.is_open(p)).map(ContinuityVerdict::from_witness)
}

/// `f⇐[Θ] ⊆ Ω_X` for a base `Θ` of the codomain.
pub fn check_continuous_via_base(f: &PointMap, tau: &MvTopology, base: &[FuzzySubset]) -> Result<ContinuityVerdict> {
    if !same_universe(f.source(), tau.universe()) {
        return Err(MvError::UniverseMismatch);
    }
    first_bad_preimage(f, base, |p| tau.is_open(p)).map(ContinuityVerdict::from_witness)
}

/// `f⇐[Ξ_Y] ⊆ Ξ_X`.
pub fn check_continuous_closed_form(
    f: &PointMap,
    tau: &MvTopology,
    sigma: &MvTopology,
) -> Result<ContinuityVerdict> {
    check_ends(f, tau, sigma)?;
    let closeds = sigma.closed_sets().closeds;
    first_bad_preimage(f, &closeds, |p| tau.is_closed(p)).map(ContinuityVerdict::from_witness)
}

/// Continuity between the skeleton spaces.
pub fn check_continuous_on_skeletons(
    f: &PointMap,
    tau: &MvTopology,
    sigma: &MvTopology,
) -> Result<ContinuityVerdict> {
    check_continuous(f, &tau.skeleton()?, &sigma.skeleton()?)
}

/// `f→(o) ∈ Ω_Y` for every `o ∈ Ω_X`.
pub fn is_open_map(f: &PointMap, tau: &MvTopology, sigma: &MvTopology) -> Result<ContinuityVerdict> {
    check_ends(f, tau, sigma)?;
    for o in tau.opens() {
        if !sigma.is_open(&f.image(o)?) {
            return Ok(ContinuityVerdict::from_witness(Some(o.clone())));
        }
    }
    Ok(ContinuityVerdict::from_witness(None))
}

/// `f→(c) ∈ Ξ_Y` for every `c ∈ Ξ_X`.
pub fn is_closed_map(f: &PointMap, tau: &MvTopology, sigma: &MvTopology) -> Result<ContinuityVerdict> {
    check_ends(f, tau, sigma)?;
    for c in &tau.closed_sets().closeds {
        if !sigma.is_closed(&f.image(c)?) {
            return Ok(ContinuityVerdict::from_witness(Some(c.clone())));
        }
    }
    Ok(ContinuityVerdict::from_witness(None))
}

/// Bijective with both directions continuous.
pub fn is_homeomorphism(f: &PointMap, tau: &MvTopology, sigma: &MvTopology) -> Result<bool> {
    let Some(inv) = f.inverse() else {
        return Ok(false);
    };
    Ok(check_continuous(f, tau, sigma)?.holds && check_continuous(&inv, sigma, tau)?.holds)
}
