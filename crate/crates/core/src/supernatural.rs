//! Supernatural numbers with finite support, and the multiset of quotient
//! chains of a finite MV-algebra.
//!
//! A supernatural number assigns each prime an exponent in `ω ∪ {ω}`.
//! Only finitely many primes may carry a nonzero exponent here, so a
//! product over every prime is not representable.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{chain_factorization, FiniteMvAlgebra};
use crate::bounds::Bounds;
use crate::error::{MvError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exponent {
    Finite(u32),
    Omega,
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Exponent::Finite(a), Exponent::Finite(b)) => a.cmp(b),
            (Exponent::Finite(_), Exponent::Omega) => Ordering::Less,
            (Exponent::Omega, Exponent::Finite(_)) => Ordering::Greater,
            (Exponent::Omega, Exponent::Omega) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(e) => write!(f, "{e}"),
            Exponent::Omega => f.write_str("omega"),
        }
    }
}

/// Exponents keyed by prime; absent primes have exponent `0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Supernatural {
    exponents: BTreeMap<u64, Exponent>,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl Supernatural {
    /// The supernatural `1`.
    pub fn one() -> Self {
        Supernatural::default()
    }

    /// Builds from `(prime, exponent)` pairs; zero exponents are dropped.
    pub fn new<I: IntoIterator<Item = (u64, Exponent)>>(pairs: I) -> Result<Self> {
        let mut exponents = BTreeMap::new();
        for (p, e) in pairs {
            if !is_prime(p) {
                return Err(MvError::InvalidArgument(format!("{p} is not prime")));
            }
            if exponents.contains_key(&p) {
                return Err(MvError::InvalidArgument(format!("prime {p} listed twice")));
            }
            if e != Exponent::Finite(0) {
                exponents.insert(p, e);
            }
        }
        Ok(Supernatural { exponents })
    }

    /// Prime factorization of `n ≥ 1`.
    pub fn from_natural(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(MvError::InvalidArgument("0 is not a supernatural number".into()));
        }
        let mut exponents = BTreeMap::new();
        let mut m = n;
        let mut p = 2u64;
        while p * p <= m {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            if e > 0 {
                exponents.insert(p, Exponent::Finite(e));
            }
            p += 1;
        }
        if m > 1 {
            exponents.insert(m, Exponent::Finite(1));
        }
        Ok(Supernatural { exponents })
    }

    pub fn exponent(&self, p: u64) -> Exponent {
        self.exponents.get(&p).copied().unwrap_or(Exponent::Finite(0))
    }

    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.exponents.keys().copied()
    }

    /// The ordinary natural number, when every exponent is finite.
    pub fn to_natural(&self) -> Option<u64> {
        self.exponents.iter().try_fold(1u64, |acc, (&p, &e)| match e {
            Exponent::Finite(k) => acc.checked_mul(p.checked_pow(k)?),
            Exponent::Omega => None,
        })
    }

    /// `ν(p) ≤ μ(p)` for every prime.
    pub fn leq(&self, other: &Supernatural) -> bool {
        self.exponents.iter().all(|(&p, &e)| e <= other.exponent(p))
    }

    /// `ν ≤ μ` and `ν ≠ μ`.
    pub fn lt(&self, other: &Supernatural) -> bool {
        self.leq(other) && self != other
    }

    /// Pointwise maximum: the least common multiple.
    pub fn join(&self, other: &Supernatural) -> Supernatural {
        let mut exponents = self.exponents.clone();
        for (&p, &e) in &other.exponents {
            let slot = exponents.entry(p).or_insert(e);
            *slot = (*slot).max(e);
        }
        Supernatural { exponents }
    }

    /// Pointwise minimum: the greatest common divisor.
    pub fn meet(&self, other: &Supernatural) -> Supernatural {
        let exponents = self
            .exponents
            .iter()
            .filter_map(|(&p, &e)| {
                let m = e.min(other.exponent(p));
                (m != Exponent::Finite(0)).then_some((p, m))
            })
            .collect();
        Supernatural { exponents }
    }

    /// Membership in `U_n = {ν : ν > n}`.
    pub fn in_basic_open(&self, n: u64) -> Result<bool> {
        Ok(Supernatural::from_natural(n)?.lt(self))
    }
}

impl fmt::Display for Supernatural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(p, e)| match e {
                Exponent::Finite(1) => p.to_string(),
                _ => format!("{p}^{e}"),
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

impl FromStr for Supernatural {
    type Err = MvError;

    /// Accepts the display form, e.g. `2^omega*3*5^2`, or a plain natural.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || MvError::InvalidArgument(format!("cannot read supernatural `{s}`"));
        let t = s.trim();
        if t == "1" {
            return Ok(Supernatural::one());
        }
        if !t.contains(['*', '^']) {
            return Supernatural::from_natural(t.parse().map_err(|_| bad())?);
        }
        let mut pairs = Vec::new();
        for factor in t.split('*') {
            let (p, e) = match factor.trim().split_once('^') {
                Some((p, e)) => (p.trim(), e.trim()),
                None => (factor.trim(), "1"),
            };
            let p: u64 = p.parse().map_err(|_| bad())?;
            let e = match e {
                "omega" | "ω" | "w" => Exponent::Omega,
                k => Exponent::Finite(k.parse().map_err(|_| bad())?),
            };
            pairs.push((p, e));
        }
        Supernatural::new(pairs)
    }
}

/// A finite multiset of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FiniteMultiset {
    counts: BTreeMap<u32, usize>,
}

impl FiniteMultiset {
    pub fn from_items<I: IntoIterator<Item = u32>>(items: I) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for x in items {
            if x == 0 {
                return Err(MvError::InvalidArgument("multiset labels must be positive".into()));
            }
            *counts.entry(x).or_insert(0) += 1;
        }
        Ok(FiniteMultiset { counts })
    }

    pub fn counts(&self) -> &BTreeMap<u32, usize> {
        &self.counts
    }

    pub fn multiplicity(&self, x: u32) -> usize {
        self.counts.get(&x).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

impl fmt::Display for FiniteMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `{|A/M| − 1 : M ∈ Max A}`.
pub fn multiset_of(algebra: &FiniteMvAlgebra, bounds: &Bounds) -> Result<FiniteMultiset> {
    let orders = chain_factorization(algebra, bounds)?;
    FiniteMultiset::from_items(orders.into_iter().map(|k| k - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::ProductSignature;

    fn sn(s: &str) -> Supernatural {
        s.parse().unwrap()
    }

    #[test]
    fn factorization() {
        assert_eq!(Supernatural::from_natural(12).unwrap().to_string(), "2^2*3");
        assert_eq!(Supernatural::from_natural(1).unwrap(), Supernatural::one());
        assert_eq!(Supernatural::from_natural(97).unwrap().to_string(), "97");
        assert!(Supernatural::from_natural(0).is_err());
        assert_eq!(sn("360").to_natural(), Some(360));
    }

    #[test]
    fn lattice_examples() {
        let a = sn("2^omega*3");
        let b = sn("2^2*3*5");
        assert_eq!(a.join(&b), sn("2^omega*3*5"));
        assert_eq!(a.meet(&b), sn("2^2*3"));
        assert!(a.leq(&a));
    }

    #[test]
    fn basic_opens() {
        assert!(sn("12").in_basic_open(6).unwrap());
        assert!(!sn("12").in_basic_open(12).unwrap());
        assert!(sn("2^omega").in_basic_open(8).unwrap());
        assert!(!sn("2^omega").in_basic_open(3).unwrap());
    }

    #[test]
    fn parse_rejects_nonsense() {
        assert!("4^2".parse::<Supernatural>().is_err());
        assert!("2*2".parse::<Supernatural>().is_err());
        assert!("x".parse::<Supernatural>().is_err());
    }

    #[test]
    fn multisets() {
        let b = Bounds::default();
        let l3 = FiniteMvAlgebra::chain(3).unwrap();
        assert_eq!(multiset_of(&l3, &b).unwrap().to_string(), "{2:1}");
        let boole = FiniteMvAlgebra::full_product(ProductSignature::from_orders(&[2, 2, 2]).unwrap());
        assert_eq!(multiset_of(&boole, &b).unwrap().to_string(), "{1:3}");
        let mixed = FiniteMvAlgebra::full_product(ProductSignature::from_orders(&[2, 3, 3]).unwrap());
        assert_eq!(multiset_of(&mixed, &b).unwrap().to_string(), "{1:1, 2:2}");
    }
}
