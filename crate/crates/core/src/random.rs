//! Seeded random topologies for property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain::Chain;
use crate::error::Result;
use crate::fuzzy::{FuzzySubset, Universe};
use crate::topology::{close_under, generate_from_base, BinOp, MvTopology};

pub const DEFAULT_SEED: u64 = 0x5eed;

/// Shape limits for [`random_topology`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomShape {
    pub max_points: usize,
    pub max_chain_order: u32,
    pub max_seeds: usize,
}

impl Default for RandomShape {
    fn default() -> Self {
        RandomShape {
            max_points: 3,
            max_chain_order: 4,
            max_seeds: 4,
        }
    }
}

/// A topology generated by a few random tables: the seeds plus `1` are
/// closed under `⊕`, `⊙`, `∧` and then under joins.
pub fn random_topology(rng: &mut ChaCha8Rng, shape: RandomShape) -> Result<MvTopology> {
    let points = rng.gen_range(1..=shape.max_points);
    let chain = Chain::new(rng.gen_range(2..=shape.max_chain_order))?;
    let universe = Universe::numbered("x", points)?;
    let mut seeds = vec![FuzzySubset::one(universe.clone(), chain)];
    for _ in 0..rng.gen_range(0..=shape.max_seeds) {
        let values = (0..points).map(|_| rng.gen_range(0..=chain.top())).collect();
        seeds.push(FuzzySubset::new(universe.clone(), chain, values)?);
    }
    let base = close_under(seeds, &[BinOp::Oplus, BinOp::Odot, BinOp::Meet]);
    generate_from_base(&universe, chain, &base)
}

/// `count` topologies from one seed; the same seed gives the same list.
pub fn random_topologies(seed: u64, count: usize, shape: RandomShape) -> Result<Vec<MvTopology>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_topology(&mut rng, shape)).collect()
}
