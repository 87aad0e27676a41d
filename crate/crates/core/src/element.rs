//! Elements of finite products of chains `Łₙ₁ × … × Łₙₖ`.

use std::fmt;

use crate::chain::{format_ratio, Chain};
use crate::error::{MvError, Result};

/// The factor chains of a product, in coordinate order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductSignature {
    factors: Vec<Chain>,
}

/// A tuple of numerators, one per signature coordinate.
///
/// Ordered lexicographically; for a fixed signature this order extends the
/// componentwise lattice order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MvElement(pub Vec<u32>);

impl MvElement {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }
}

impl ProductSignature {
    pub fn new(factors: Vec<Chain>) -> Result<Self> {
        if factors.is_empty() {
            return Err(MvError::SignatureMismatch(
                "a product signature needs at least one factor".into(),
            ));
        }
        Ok(ProductSignature { factors })
    }

    pub fn from_orders(orders: &[u32]) -> Result<Self> {
        let factors = orders
            .iter()
            .map(|&o| Chain::new(o))
            .collect::<Result<Vec<_>>>()?;
        Self::new(factors)
    }

    /// `Łₙ^k`.
    pub fn power(chain: Chain, k: usize) -> Result<Self> {
        Self::new(vec![chain; k])
    }

    pub fn factors(&self) -> &[Chain] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of elements of the full product.
    pub fn size(&self) -> usize {
        self.factors.iter().map(|c| c.order() as usize).product()
    }

    pub fn check(&self, e: &MvElement) -> Result<()> {
        if e.0.len() != self.factors.len() {
            return Err(MvError::SignatureMismatch(format!(
                "element has {} coordinates, signature has {}",
                e.0.len(),
                self.factors.len()
            )));
        }
        for (i, (&k, c)) in e.0.iter().zip(&self.factors).enumerate() {
            if k > c.top() {
                return Err(MvError::SignatureMismatch(format!(
                    "coordinate {i} value {k} exceeds {}",
                    c.top()
                )));
            }
        }
        Ok(())
    }

    pub fn zero(&self) -> MvElement {
        MvElement(vec![0; self.factors.len()])
    }

    pub fn one(&self) -> MvElement {
        MvElement(self.factors.iter().map(|c| c.top()).collect())
    }

    fn zip_with(&self, a: &MvElement, b: &MvElement, f: impl Fn(Chain, u32, u32) -> u32) -> MvElement {
        MvElement(
            self.factors
                .iter()
                .zip(a.0.iter().zip(&b.0))
                .map(|(&c, (&x, &y))| f(c, x, y))
                .collect(),
        )
    }

    pub fn oplus(&self, a: &MvElement, b: &MvElement) -> MvElement {
        self.zip_with(a, b, Chain::oplus)
    }

    pub fn odot(&self, a: &MvElement, b: &MvElement) -> MvElement {
        self.zip_with(a, b, Chain::odot)
    }

    pub fn ominus(&self, a: &MvElement, b: &MvElement) -> MvElement {
        self.zip_with(a, b, Chain::ominus)
    }

    pub fn join(&self, a: &MvElement, b: &MvElement) -> MvElement {
        self.zip_with(a, b, |_, x, y| x.max(y))
    }

    pub fn meet(&self, a: &MvElement, b: &MvElement) -> MvElement {
        self.zip_with(a, b, |_, x, y| x.min(y))
    }

    pub fn distance(&self, a: &MvElement, b: &MvElement) -> MvElement {
        self.zip_with(a, b, Chain::distance)
    }

    pub fn neg(&self, a: &MvElement) -> MvElement {
        MvElement(
            self.factors
                .iter()
                .zip(&a.0)
                .map(|(&c, &x)| c.neg(x))
                .collect(),
        )
    }

    pub fn leq(&self, a: &MvElement, b: &MvElement) -> bool {
        a.0.iter().zip(&b.0).all(|(x, y)| x <= y)
    }

    /// Every element of the full product, in lexicographic order.
    pub fn all_elements(&self) -> Vec<MvElement> {
        let mut out = vec![MvElement(Vec::with_capacity(self.len()))];
        for c in &self.factors {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..c.order()).map(move |k| {
                        let mut next = e.0.clone();
                        next.push(k);
                        MvElement(next)
                    })
                })
                .collect();
        }
        out
    }

    pub fn format(&self, e: &MvElement) -> String {
        let parts: Vec<String> = e
            .0
            .iter()
            .zip(&self.factors)
            .map(|(&k, c)| format_ratio(k, c.top()))
            .collect();
        if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            format!("({})", parts.join(", "))
        }
    }
}

impl fmt::Display for ProductSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" x "))
    }
}
