//! Finite Łukasiewicz chains `Łₙ = {0, 1/(n-1), …, 1}` with exact arithmetic.
//!
//! A value `k/(n-1)` is stored as its numerator `k`; every operation is
//! integer arithmetic on numerators. [`Chain`] exposes the raw numerator
//! operations used by the table-driven kernels, and [`ChainValue`] is the
//! checked, self-describing value type.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{MvError, Result};

/// The chain `Łₙ`, identified by its number of elements `n ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    order: u32,
}

impl Chain {
    /// The two-element chain `{0, 1}`.
    pub const BOOLEAN: Chain = Chain { order: 2 };

    pub fn new(order: u32) -> Result<Self> {
        if order < 2 {
            return Err(MvError::InvalidChainOrder(order));
        }
        Ok(Chain { order })
    }

    pub fn order(self) -> u32 {
        self.order
    }

    /// Numerator of the top element, i.e. the common denominator `n − 1`.
    pub fn top(self) -> u32 {
        self.order - 1
    }

    pub fn value(self, numerator: u32) -> Result<ChainValue> {
        if numerator > self.top() {
            return Err(MvError::OffGrid {
                value: format!("{numerator}/{}", self.top()),
                order: self.order,
            });
        }
        Ok(ChainValue {
            numerator,
            chain: self,
        })
    }

    /// The grid point equal to the rational `p/q`, if there is one.
    pub fn value_of_ratio(self, p: u64, q: u64) -> Result<ChainValue> {
        let off = || MvError::OffGrid {
            value: format!("{p}/{q}"),
            order: self.order,
        };
        if q == 0 || p > q {
            return Err(off());
        }
        let scaled = p * u64::from(self.top());
        if !scaled.is_multiple_of(q) {
            return Err(off());
        }
        self.value((scaled / q) as u32)
    }

    pub fn zero(self) -> ChainValue {
        ChainValue {
            numerator: 0,
            chain: self,
        }
    }

    pub fn one(self) -> ChainValue {
        ChainValue {
            numerator: self.top(),
            chain: self,
        }
    }

    pub fn values(self) -> impl Iterator<Item = ChainValue> {
        (0..self.order).map(move |numerator| ChainValue {
            numerator,
            chain: self,
        })
    }

    /// Whether `self` is a subchain of `other`, i.e. `(n−1) | (m−1)`.
    pub fn embeds_into(self, other: Chain) -> bool {
        other.top().is_multiple_of(self.top())
    }

    /// The smallest chain containing both `self` and `other`.
    pub fn common(self, other: Chain) -> Chain {
        Chain {
            order: self.top().lcm(&other.top()) + 1,
        }
    }

    /// The smallest chain containing every chain in the iterator (`Ł₂` if empty).
    pub fn common_of<I: IntoIterator<Item = Chain>>(chains: I) -> Chain {
        chains.into_iter().fold(Chain::BOOLEAN, Chain::common)
    }

    /// Re-expresses numerator `k` of `self` on the grid of `target`.
    pub fn rescale(self, k: u32, target: Chain) -> Option<u32> {
        let scaled = u64::from(k) * u64::from(target.top());
        if scaled % u64::from(self.top()) == 0 {
            Some((scaled / u64::from(self.top())) as u32)
        } else {
            None
        }
    }

    // Raw numerator operations. Callers guarantee operands are on this grid.

    pub fn oplus(self, a: u32, b: u32) -> u32 {
        (a + b).min(self.top())
    }

    pub fn odot(self, a: u32, b: u32) -> u32 {
        (a + b).saturating_sub(self.top())
    }

    pub fn neg(self, a: u32) -> u32 {
        self.top() - a
    }

    pub fn ominus(self, a: u32, b: u32) -> u32 {
        a.saturating_sub(b)
    }

    pub fn distance(self, a: u32, b: u32) -> u32 {
        a.abs_diff(b)
    }

    pub fn delta(self, a: u32) -> u32 {
        if a == self.top() {
            self.top()
        } else {
            0
        }
    }

    pub fn multiple(self, n: u32, a: u32) -> u32 {
        (u64::from(n) * u64::from(a)).min(u64::from(self.top())) as u32
    }

    pub fn power(self, a: u32, n: u32) -> u32 {
        // aⁿ = max(0, n·a − (n−1)·top)
        let pos = u64::from(n) * u64::from(a);
        let neg = u64::from(n - 1) * u64::from(self.top());
        pos.saturating_sub(neg) as u32
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.order)
    }
}

/// Writes `k/den` in lowest terms (`0`, `1`, `1/2`, …).
pub fn format_ratio(k: u32, den: u32) -> String {
    if k == 0 {
        return "0".into();
    }
    if k == den {
        return "1".into();
    }
    let g = k.gcd(&den);
    format!("{}/{}", k / g, den / g)
}

/// A point `k/(n−1)` of a chain `Łₙ`.
///
/// Equality and hashing are structural (numerator and chain); use
/// [`ChainValue::value_eq`] or [`ChainValue::value_cmp`] to compare values
/// living on different chains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChainValue {
    numerator: u32,
    chain: Chain,
}

impl ChainValue {
    pub fn numerator(self) -> u32 {
        self.numerator
    }

    pub fn chain(self) -> Chain {
        self.chain
    }

    pub fn is_zero(self) -> bool {
        self.numerator == 0
    }

    pub fn is_one(self) -> bool {
        self.numerator == self.chain.top()
    }

    fn same_chain(self, other: ChainValue) -> Result<Chain> {
        if self.chain != other.chain {
            return Err(MvError::ChainMismatch {
                left: self.chain.order,
                right: other.chain.order,
            });
        }
        Ok(self.chain)
    }

    fn with(self, numerator: u32) -> ChainValue {
        ChainValue {
            numerator,
            chain: self.chain,
        }
    }

    pub fn oplus(self, other: ChainValue) -> Result<ChainValue> {
        let c = self.same_chain(other)?;
        Ok(self.with(c.oplus(self.numerator, other.numerator)))
    }

    pub fn odot(self, other: ChainValue) -> Result<ChainValue> {
        let c = self.same_chain(other)?;
        Ok(self.with(c.odot(self.numerator, other.numerator)))
    }

    pub fn neg(self) -> ChainValue {
        self.with(self.chain.neg(self.numerator))
    }

    pub fn ominus(self, other: ChainValue) -> Result<ChainValue> {
        let c = self.same_chain(other)?;
        Ok(self.with(c.ominus(self.numerator, other.numerator)))
    }

    pub fn join(self, other: ChainValue) -> Result<ChainValue> {
        self.same_chain(other)?;
        Ok(self.with(self.numerator.max(other.numerator)))
    }

    pub fn meet(self, other: ChainValue) -> Result<ChainValue> {
        self.same_chain(other)?;
        Ok(self.with(self.numerator.min(other.numerator)))
    }

    pub fn distance(self, other: ChainValue) -> Result<ChainValue> {
        let c = self.same_chain(other)?;
        Ok(self.with(c.distance(self.numerator, other.numerator)))
    }

    /// Baaz delta: `1` on `1`, `0` elsewhere.
    pub fn baaz_delta(self) -> ChainValue {
        self.with(self.chain.delta(self.numerator))
    }

    /// `n·x = x ⊕ … ⊕ x`.
    pub fn nat_multiple(self, n: u32) -> Result<ChainValue> {
        if n == 0 {
            return Err(MvError::ZeroMultiple);
        }
        Ok(self.with(self.chain.multiple(n, self.numerator)))
    }

    /// `xⁿ = x ⊙ … ⊙ x`.
    pub fn nat_power(self, n: u32) -> Result<ChainValue> {
        if n == 0 {
            return Err(MvError::ZeroMultiple);
        }
        Ok(self.with(self.chain.power(self.numerator, n)))
    }

    /// The same rational on another grid, if it lies there.
    pub fn embed(self, target: Chain) -> Option<ChainValue> {
        self.chain
            .rescale(self.numerator, target)
            .map(|numerator| ChainValue {
                numerator,
                chain: target,
            })
    }

    /// Exact comparison of the rationals, across chains.
    pub fn value_cmp(self, other: ChainValue) -> Ordering {
        let l = u64::from(self.numerator) * u64::from(other.chain.top());
        let r = u64::from(other.numerator) * u64::from(self.chain.top());
        l.cmp(&r)
    }

    pub fn value_eq(self, other: ChainValue) -> bool {
        self.value_cmp(other) == Ordering::Equal
    }
}

impl fmt::Display for ChainValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_ratio(self.numerator, self.chain.top()))
    }
}
