use std::sync::Arc;

use super::{FiniteMvAlgebra, Ideal};
use crate::bounds::Bounds;
use crate::error::{MvError, Result};

/// A map between finite MV-algebras, verified to preserve `0`, `⊕` and `*`.
#[derive(Clone, Debug)]
pub struct MvHomomorphism {
    domain: Arc<FiniteMvAlgebra>,
    codomain: Arc<FiniteMvAlgebra>,
    table: Vec<usize>,
}

impl MvHomomorphism {
    /// Checks the table exhaustively before accepting it.
    pub fn new(
        domain: Arc<FiniteMvAlgebra>,
        codomain: Arc<FiniteMvAlgebra>,
        table: Vec<usize>,
    ) -> Result<Self> {
        if table.len() != domain.len() {
            return Err(MvError::NotHomomorphism(format!(
                "table has {} entries for {} elements",
                table.len(),
                domain.len()
            )));
        }
        if let Some(&t) = table.iter().find(|&&t| t >= codomain.len()) {
            return Err(MvError::NotHomomorphism(format!("image index {t} out of range")));
        }
        if table[domain.zero()] != codomain.zero() {
            return Err(MvError::NotHomomorphism("0 is not preserved".into()));
        }
        for a in 0..domain.len() {
            if table[domain.neg(a)] != codomain.neg(table[a]) {
                return Err(MvError::NotHomomorphism(format!(
                    "* fails at {}",
                    domain.format_element(a)
                )));
            }
            for b in a..domain.len() {
                if table[domain.oplus(a, b)] != codomain.oplus(table[a], table[b]) {
                    return Err(MvError::NotHomomorphism(format!(
                        "⊕ fails at ({}, {})",
                        domain.format_element(a),
                        domain.format_element(b)
                    )));
                }
            }
        }
        Ok(MvHomomorphism {
            domain,
            codomain,
            table,
        })
    }

    pub fn identity(algebra: Arc<FiniteMvAlgebra>) -> Self {
        let table = (0..algebra.len()).collect();
        MvHomomorphism {
            domain: algebra.clone(),
            codomain: algebra,
            table,
        }
    }

    pub fn domain(&self) -> &Arc<FiniteMvAlgebra> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteMvAlgebra> {
        &self.codomain
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, a: usize) -> usize {
        self.table[a]
    }

    pub fn is_bijective(&self) -> bool {
        if self.domain.len() != self.codomain.len() {
            return false;
        }
        let mut seen = vec![false; self.codomain.len()];
        self.table
            .iter()
            .all(|&t| !std::mem::replace(&mut seen[t], true))
    }

    pub fn inverse(&self) -> Option<MvHomomorphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.table.len()];
        for (a, &b) in self.table.iter().enumerate() {
            inv[b] = a;
        }
        Some(MvHomomorphism {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            table: inv,
        })
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &MvHomomorphism) -> Result<MvHomomorphism> {
        if *first.codomain != *self.domain {
            return Err(MvError::NotHomomorphism("composition of mismatched algebras".into()));
        }
        Ok(MvHomomorphism {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            table: first.table.iter().map(|&b| self.table[b]).collect(),
        })
    }

    /// `h⁻¹[I]` for an ideal of the codomain.
    pub fn preimage_ideal(&self, ideal: &Ideal) -> Ideal {
        Ideal::from_indices(
            self.domain.len(),
            (0..self.domain.len()).filter(|&a| ideal.contains(self.table[a])),
        )
    }

    pub fn kernel(&self) -> Ideal {
        Ideal::from_indices(
            self.domain.len(),
            (0..self.domain.len()).filter(|&a| self.table[a] == self.codomain.zero()),
        )
    }
}

/// All homomorphisms `A → B`, by backtracking over the carrier of `A`.
pub fn enumerate_homomorphisms(
    domain: &Arc<FiniteMvAlgebra>,
    codomain: &Arc<FiniteMvAlgebra>,
    bounds: &Bounds,
) -> Result<Vec<MvHomomorphism>> {
    let n = domain.len();
    let mut table: Vec<Option<usize>> = vec![None; n];
    table[domain.zero()] = Some(codomain.zero());
    table[domain.one()] = Some(codomain.one());
    let mut out = Vec::new();
    let mut nodes = 0usize;

    // Pairs (y, z), y ≤ z, with y ⊕ z = s, indexed by s.
    let mut sums_to: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for y in 0..n {
        for z in y..n {
            sums_to[domain.oplus(y, z)].push((y, z));
        }
    }

    // Checks every constraint that mentions x and is fully assigned.
    fn consistent(
        a: &FiniteMvAlgebra,
        b: &FiniteMvAlgebra,
        sums_to: &[Vec<(usize, usize)>],
        t: &[Option<usize>],
        x: usize,
    ) -> bool {
        let tx = t[x].unwrap();
        if let Some(tn) = t[a.neg(x)] {
            if tn != b.neg(tx) {
                return false;
            }
        }
        for y in 0..a.len() {
            if let Some(ty) = t[y] {
                if let Some(ts) = t[a.oplus(x, y)] {
                    if ts != b.oplus(tx, ty) {
                        return false;
                    }
                }
            }
        }
        sums_to[x].iter().all(|&(y, z)| match (t[y], t[z]) {
            (Some(ty), Some(tz)) => b.oplus(ty, tz) == tx,
            _ => true,
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        a: &FiniteMvAlgebra,
        b: &FiniteMvAlgebra,
        sums_to: &[Vec<(usize, usize)>],
        t: &mut Vec<Option<usize>>,
        next: usize,
        nodes: &mut usize,
        limit: usize,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        *nodes += 1;
        if *nodes > limit {
            return Err(MvError::BoundExceeded {
                what: "homomorphism search",
                size: *nodes,
                bound: limit,
            });
        }
        let Some(x) = (next..a.len()).find(|&x| t[x].is_none()) else {
            out.push(t.iter().map(|v| v.unwrap()).collect());
            return Ok(());
        };
        for y in 0..b.len() {
            t[x] = Some(y);
            if consistent(a, b, sums_to, t, x) {
                search(a, b, sums_to, t, x + 1, nodes, limit, out)?;
            }
        }
        t[x] = None;
        Ok(())
    }

    let mut tables = Vec::new();
    search(
        domain,
        codomain,
        &sums_to,
        &mut table,
        0,
        &mut nodes,
        bounds.homomorphism_search,
        &mut tables,
    )?;
    for t in tables {
        out.push(MvHomomorphism::new(domain.clone(), codomain.clone(), t)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::ProductSignature;

    fn full(orders: &[u32]) -> Arc<FiniteMvAlgebra> {
        Arc::new(FiniteMvAlgebra::full_product(
            ProductSignature::from_orders(orders).unwrap(),
        ))
    }

    #[test]
    fn identity_is_verified() {
        let a = full(&[3, 2]);
        let id = MvHomomorphism::identity(a.clone());
        assert!(MvHomomorphism::new(a.clone(), a, id.table().to_vec()).is_ok());
    }

    #[test]
    fn rejects_non_homomorphisms() {
        let a = full(&[3]);
        // swap 0 and 1
        assert!(MvHomomorphism::new(a.clone(), a.clone(), vec![2, 1, 0]).is_err());
        // constant 0 fails at *
        assert!(MvHomomorphism::new(a.clone(), a, vec![0, 0, 0]).is_err());
    }

    #[test]
    fn homomorphism_counts() {
        // Ł₃ → Ł₂: none (1/2 has no image with x* = x).
        let l3 = full(&[3]);
        let l2 = full(&[2]);
        assert!(enumerate_homomorphisms(&l3, &l2, &Bounds::default())
            .unwrap()
            .is_empty());
        // Ł₂ × Ł₂ → Ł₂: the two projections.
        let b2 = full(&[2, 2]);
        assert_eq!(
            enumerate_homomorphisms(&b2, &l2, &Bounds::default())
                .unwrap()
                .len(),
            2
        );
        // Ł₃ → Ł₅: the unique embedding.
        let l5 = full(&[5]);
        let homs = enumerate_homomorphisms(&l3, &l5, &Bounds::default()).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].table(), &[0, 2, 4]);
    }

    #[test]
    fn composition_and_inverse() {
        let a = full(&[2, 3]);
        let b = full(&[3, 2]);
        let swap = MvHomomorphism::new(a.clone(), b.clone(), {
            (0..a.len())
                .map(|i| {
                    let e = a.element(i);
                    b.index_of(&crate::element::MvElement(vec![e.0[1], e.0[0]]))
                        .unwrap()
                })
                .collect()
        })
        .unwrap();
        let inv = swap.inverse().unwrap();
        let round = inv.after(&swap).unwrap();
        assert_eq!(round.table(), MvHomomorphism::identity(a).table());
        assert!(swap.kernel().len() == 1);
    }
}
