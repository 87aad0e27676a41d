//! MV-topologies induced by a metric through fuzzy open balls.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_rational::Ratio;

use super::{check_mv_topology, close_under, generate_from_base, BinOp, MvTopology, TopologyViolation};
use crate::chain::{Chain, ChainValue};
use crate::error::{MvError, Result};
use crate::fuzzy::{FuzzySubset, Universe};

pub type Distance = Ratio<u64>;

/// A metric on a finite universe with exact rational distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    universe: Arc<Universe>,
    table: Vec<Vec<Distance>>,
}

impl Metric {
    /// Checks zero diagonal, positivity, symmetry and the triangle inequality.
    pub fn new(universe: Arc<Universe>, table: Vec<Vec<Distance>>) -> Result<Self> {
        let n = universe.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(MvError::InvalidMetric(format!("table must be {n}×{n}")));
        }
        let name = |i: usize| universe.name(i).to_string();
        for i in 0..n {
            if table[i][i] != Distance::from_integer(0) {
                return Err(MvError::InvalidMetric(format!("d({0}, {0}) ≠ 0", name(i))));
            }
            for j in 0..n {
                if i != j && table[i][j] == Distance::from_integer(0) {
                    return Err(MvError::InvalidMetric(format!("d({}, {}) = 0", name(i), name(j))));
                }
                if table[i][j] != table[j][i] {
                    return Err(MvError::InvalidMetric(format!("d({}, {}) is not symmetric", name(i), name(j))));
                }
                for k in 0..n {
                    if table[i][k] > table[i][j] + table[j][k] {
                        return Err(MvError::InvalidMetric(format!(
                            "triangle inequality fails at ({}, {}, {})",
                            name(i),
                            name(j),
                            name(k)
                        )));
                    }
                }
            }
        }
        Ok(Metric { universe, table })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn distance(&self, x: usize, y: usize) -> Distance {
        self.table[x][y]
    }
}

/// A fuzzy subset with one-point support and a positive value there.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzyPoint {
    pub support: usize,
    pub value: ChainValue,
}

impl FuzzyPoint {
    pub fn new(support: usize, value: ChainValue) -> Result<Self> {
        if value.is_zero() {
            return Err(MvError::InvalidArgument("fuzzy point value must be positive".into()));
        }
        Ok(FuzzyPoint { support, value })
    }

    /// `β_r(α)(y) = α(x)` when `d(x, y) < r`, else `0`.
    pub fn open_ball(&self, metric: &Metric, radius: Distance) -> FuzzySubset {
        self.ball(metric, |d| d < radius)
    }

    /// `β_r[α](y) = α(x)` when `d(x, y) ≤ r`, else `0`.
    pub fn closed_ball(&self, metric: &Metric, radius: Distance) -> FuzzySubset {
        self.ball(metric, |d| d <= radius)
    }

    fn ball(&self, metric: &Metric, inside: impl Fn(Distance) -> bool) -> FuzzySubset {
        let values = (0..metric.universe.len())
            .map(|y| {
                if inside(metric.distance(self.support, y)) {
                    self.value.numerator()
                } else {
                    0
                }
            })
            .collect();
        FuzzySubset::new(metric.universe.clone(), self.value.chain(), values)
            .expect("ball values are on the grid")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricBallReport {
    /// All open balls, canonical order.
    pub balls: Vec<FuzzySubset>,
    /// Balls plus `1` if needed, closed under `⊕`, `⊙`, `∧`.
    pub base: Vec<FuzzySubset>,
    pub topology: MvTopology,
    /// Joins of balls only.
    pub literal: Vec<FuzzySubset>,
    pub literal_violation: Option<TopologyViolation>,
    /// The two constructions give the same family.
    pub agree: bool,
}

/// Open balls for every fuzzy point and radius, and the topologies they give.
///
/// Raw balls need not be closed under `⊕`, so the base is closed under the
/// three operations before generation. The family of plain joins of balls
/// is computed alongside and checked against the axioms.
pub fn metric_ball_base(metric: &Metric, chain: Chain, radii: &[Distance]) -> Result<MetricBallReport> {
    if radii.is_empty() {
        return Err(MvError::InvalidArgument("at least one radius is required".into()));
    }
    if radii.iter().any(|r| *r <= Distance::from_integer(0)) {
        return Err(MvError::InvalidArgument("radii must be positive".into()));
    }
    let u = metric.universe.clone();
    let mut balls: BTreeSet<FuzzySubset> = BTreeSet::new();
    for x in 0..u.len() {
        for k in 1..=chain.top() {
            let point = FuzzyPoint::new(x, chain.value(k)?)?;
            for &r in radii {
                balls.insert(point.open_ball(metric, r));
            }
        }
    }
    let balls: Vec<FuzzySubset> = balls.into_iter().collect();
    let mut seed = balls.clone();
    seed.push(FuzzySubset::one(u.clone(), chain));
    let base = close_under(seed, &[BinOp::Oplus, BinOp::Odot, BinOp::Meet]);
    let topology = generate_from_base(&u, chain, &base)?;

    let mut joins = balls.clone();
    joins.push(FuzzySubset::zero(u.clone(), chain));
    let literal = close_under(joins, &[BinOp::Join]);
    let literal_violation = check_mv_topology(&u, chain, &literal)?;
    let agree = literal.iter().eq(topology.opens().iter());
    Ok(MetricBallReport {
        balls,
        base,
        topology,
        literal,
        literal_violation,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line() -> Metric {
        let u = Universe::new(["a", "b", "c"]).unwrap();
        let d = |n: u64| Distance::from_integer(n);
        Metric::new(u, vec![vec![d(0), d(1), d(2)], vec![d(1), d(0), d(1)], vec![d(2), d(1), d(0)]]).unwrap()
    }

    #[test]
    fn rejects_bad_metrics() {
        let u = Universe::new(["a", "b", "c"]).unwrap();
        let d = |n: u64| Distance::from_integer(n);
        let bad = vec![vec![d(0), d(1), d(5)], vec![d(1), d(0), d(1)], vec![d(5), d(1), d(0)]];
        assert!(matches!(Metric::new(u, bad), Err(MvError::InvalidMetric(_))));
    }

    #[test]
    fn ball_examples() {
        let m = line();
        let c = Chain::new(3).unwrap();
        let one = FuzzyPoint::new(0, c.one()).unwrap();
        assert!(one.open_ball(&m, Distance::from_integer(3)).is_one());
        let half = FuzzyPoint::new(1, c.value(1).unwrap()).unwrap();
        let small = half.open_ball(&m, Distance::new(1, 2));
        assert_eq!(small.values(), &[0, 1, 0]);
        // d(b, a) = 1 ≥ 1 keeps a outside the open ball of radius 1.
        assert_eq!(half.open_ball(&m, Distance::from_integer(1)).values(), &[0, 1, 0]);
        assert_eq!(half.closed_ball(&m, Distance::from_integer(1)).values(), &[1, 1, 1]);
    }

    #[test]
    fn generated_topology_is_valid() {
        let m = line();
        let c = Chain::new(3).unwrap();
        let r = metric_ball_base(&m, c, &[Distance::new(1, 2), Distance::from_integer(2)]).unwrap();
        let fam: Vec<_> = r.topology.opens().iter().cloned().collect();
        assert_eq!(check_mv_topology(m.universe(), c, &fam).unwrap(), None);
        assert_eq!(r.agree, r.literal_violation.is_none() && r.literal.len() == r.topology.len());
    }
}
