//! Boolean algebras with ideal sequences, their relational presentation and
//! their duals: Stone spaces with sequences of open sets.
//!
//! A finite Boolean algebra is the powerset of its `k` atoms, stored as
//! bitmasks. Its dual is computed with the general engine of
//! [`duality`](crate::duality) on `Ł₂^k`, so the classical leg of the
//! duality is the crisp special case of the MV one.
//!
//! For `n = 2` there is a single ideal `J₁` and both conditions are
//! vacuous, so such an object is a Boolean algebra with one unconstrained
//! ideal.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{FiniteMvAlgebra, Ideal, MvHomomorphism};
use crate::bounds::Bounds;
use crate::chain::Chain;
use crate::duality::{dualize_hom, max_space, unit_iso_algebra, unit_iso_space, DualSpace};
use crate::element::{MvElement, ProductSignature};
use crate::error::{MvError, Result};
use crate::fuzzy::{FuzzySubset, PointMap, Universe};
use crate::topology::{check_continuous, MvTopology};

/// The powerset algebra `2^k`, elements as bitmasks over the atoms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiniteBooleanAlgebra {
    atoms: u32,
}

impl FiniteBooleanAlgebra {
    pub const MAX_ATOMS: u32 = 16;

    pub fn new(atoms: u32) -> Result<Self> {
        if atoms == 0 || atoms > Self::MAX_ATOMS {
            return Err(MvError::InvalidArgument(format!(
                "atom count must be in 1..={}, got {atoms}",
                Self::MAX_ATOMS
            )));
        }
        Ok(FiniteBooleanAlgebra { atoms })
    }

    pub fn atoms(self) -> u32 {
        self.atoms
    }

    pub fn size(self) -> usize {
        1 << self.atoms
    }

    pub fn top(self) -> u32 {
        ((1u64 << self.atoms) - 1) as u32
    }

    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..=self.top()
    }

    pub fn contains(self, a: u32) -> bool {
        a & !self.top() == 0
    }

    pub fn neg(self, a: u32) -> u32 {
        !a & self.top()
    }

    pub fn leq(self, a: u32, b: u32) -> bool {
        a & !b == 0
    }

    /// `a` as a tuple in `Ł₂^k`, atom `i` at coordinate `i`.
    pub fn to_element(self, a: u32) -> MvElement {
        MvElement((0..self.atoms).map(|i| (a >> i) & 1).collect())
    }

    pub fn from_element(self, e: &MvElement) -> u32 {
        e.0.iter().enumerate().fold(0, |m, (i, &b)| m | (b << i))
    }

    /// The same algebra as the full product `Ł₂^k`.
    pub fn as_mv_algebra(self) -> FiniteMvAlgebra {
        FiniteMvAlgebra::full_product(
            ProductSignature::power(Chain::BOOLEAN, self.atoms as usize).expect("k ≥ 1"),
        )
    }

    /// Element names: `0`, `1`, atoms `a`, `b`, … and joins like `a+c`.
    pub fn format(self, a: u32) -> String {
        if a == 0 {
            return "0".into();
        }
        if a == self.top() {
            return "1".into();
        }
        let names: Vec<String> = (0..self.atoms)
            .filter(|i| a & (1 << i) != 0)
            .map(atom_name)
            .collect();
        names.join("+")
    }

    /// Parses the names produced by [`format`](Self::format).
    pub fn parse(self, text: &str) -> Result<u32> {
        let t = text.trim();
        match t {
            "0" => return Ok(0),
            "1" => return Ok(self.top()),
            _ => {}
        }
        let mut mask = 0;
        for part in t.split('+') {
            let p = part.trim();
            let i = (0..self.atoms)
                .find(|&i| atom_name(i) == p)
                .ok_or_else(|| MvError::InvalidArgument(format!("unknown element `{p}`")))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }
}

fn atom_name(i: u32) -> String {
    char::from(b'a' + i as u8).to_string()
}

/// An ideal of a finite Boolean algebra; always principal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolIdeal {
    members: Vec<u32>,
}

impl BoolIdeal {
    /// Validates `0 ∈ I`, downward closure and closure under `∨`.
    pub fn new(algebra: FiniteBooleanAlgebra, members: &[u32]) -> Result<Self> {
        let mut m = members.to_vec();
        m.sort_unstable();
        m.dedup();
        if let Some(&x) = m.iter().find(|&&x| !algebra.contains(x)) {
            return Err(MvError::InvalidArgument(format!("{x} is not an element")));
        }
        let set: BTreeSet<u32> = m.iter().copied().collect();
        let ok = set.contains(&0)
            && m.iter().all(|&x| {
                algebra.elements().all(|y| !algebra.leq(y, x) || set.contains(&y))
                    && m.iter().all(|&z| set.contains(&(x | z)))
            });
        if !ok {
            return Err(MvError::InvalidArgument("set is not an ideal".into()));
        }
        Ok(BoolIdeal { members: m })
    }

    /// `I_a = {x : x ≤ a}`.
    pub fn principal(algebra: FiniteBooleanAlgebra, a: u32) -> Self {
        BoolIdeal {
            members: algebra.elements().filter(|&x| algebra.leq(x, a)).collect(),
        }
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, a: u32) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn generator(&self) -> u32 {
        self.members.iter().fold(0, |m, &x| m | x)
    }

    pub fn is_subset(&self, other: &BoolIdeal) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &BoolIdeal) -> BoolIdeal {
        BoolIdeal {
            members: self.members.iter().copied().filter(|&x| other.contains(x)).collect(),
        }
    }

    pub fn format(&self, algebra: FiniteBooleanAlgebra) -> String {
        let parts: Vec<String> = self.members.iter().map(|&x| algebra.format(x)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// Every ideal of `algebra`, one per generator.
pub fn all_bool_ideals(algebra: FiniteBooleanAlgebra) -> Vec<BoolIdeal> {
    algebra.elements().map(|a| BoolIdeal::principal(algebra, a)).collect()
}

fn sequence_violation<T>(
    n: u32,
    items: &[T],
    eq: impl Fn(&T, &T) -> bool,
    meet_below: impl Fn(&T, &T, &T) -> bool,
) -> Option<String> {
    if items.len() + 1 != n as usize {
        return Some(format!("expected {} members for n = {n}, got {}", n - 1, items.len()));
    }
    let at = |i: u32| &items[(i - 1) as usize];
    for i in 1..n {
        if !eq(at(i), at(n - i)) {
            return Some(format!("condition (i) fails: index {i} differs from index {}", n - i));
        }
    }
    for i in 2..n {
        for h in 1..i {
            if !meet_below(at(h), at(i - h), at(i)) {
                return Some(format!("condition (ii) fails at i = {i}, h = {h}"));
            }
        }
    }
    None
}

/// A Boolean algebra with ideals `J₁ … J_{n−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleNObject {
    algebra: FiniteBooleanAlgebra,
    n: u32,
    ideals: Vec<BoolIdeal>,
}

impl BooleNObject {
    /// Checks `Jᵢ = J_{n−i}` and `J_h ∩ J_{i−h} ⊆ Jᵢ`.
    pub fn new(algebra: FiniteBooleanAlgebra, n: u32, ideals: Vec<BoolIdeal>) -> Result<Self> {
        if n < 2 {
            return Err(MvError::InvalidBooleN(format!("n must be at least 2, got {n}")));
        }
        if let Some(msg) = sequence_violation(n, &ideals, |a, b| a == b, |a, b, c| a.intersection(b).is_subset(c)) {
            return Err(MvError::InvalidBooleN(msg));
        }
        Ok(BooleNObject { algebra, n, ideals })
    }

    pub fn algebra(&self) -> FiniteBooleanAlgebra {
        self.algebra
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `J_i` for `1 ≤ i ≤ n − 1`.
    pub fn ideal(&self, i: u32) -> &BoolIdeal {
        &self.ideals[(i - 1) as usize]
    }

    pub fn ideals(&self) -> &[BoolIdeal] {
        &self.ideals
    }

    pub fn generators(&self) -> Vec<u32> {
        self.ideals.iter().map(BoolIdeal::generator).collect()
    }
}

impl fmt::Display for BooleNObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ideals.iter().map(|i| i.format(self.algebra)).collect();
        write!(f, "2^{} n={} [{}]", self.algebra.atoms, self.n, parts.join(", "))
    }
}

/// Every Boole_n object on `2^k`, via generator sequences `a₁ … a_{n−1}`
/// with `aᵢ = a_{n−i}` and `a_h ∧ a_{i−h} ≤ aᵢ`.
pub fn enumerate_boole_n(algebra: FiniteBooleanAlgebra, n: u32) -> Vec<BooleNObject> {
    let len = (n - 1) as usize;
    let size = algebra.size();
    let mut out = Vec::new();
    let mut seq = vec![0u32; len];
    let total = size.pow(len as u32);
    for mut code in 0..total {
        for s in seq.iter_mut() {
            *s = (code % size) as u32;
            code /= size;
        }
        let ok = sequence_violation(n, &seq, |a, b| a == b, |a, b, c| algebra.leq(a & b, *c)).is_none();
        if ok {
            let ideals = seq.iter().map(|&a| BoolIdeal::principal(algebra, a)).collect();
            out.push(BooleNObject {
                algebra,
                n,
                ideals,
            });
        }
    }
    out
}

/// An `n`-ary relation on a Boolean algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BRnObject {
    algebra: FiniteBooleanAlgebra,
    n: u32,
    relation: BTreeSet<Vec<u32>>,
}

/// `cᵢ = aᵢ ∨ bᵢ ∨ ⋁_{h+k=i−1} (a_h ∧ b_k)`.
pub fn join_composite(a: &[u32], b: &[u32]) -> Vec<u32> {
    (0..a.len())
        .map(|i| {
            let mut c = a[i] | b[i];
            if i >= 1 {
                for h in 0..i {
                    c |= a[h] & b[i - 1 - h];
                }
            }
            c
        })
        .collect()
}

fn is_monotone(algebra: FiniteBooleanAlgebra, t: &[u32]) -> bool {
    t.windows(2).all(|w| algebra.leq(w[1], w[0]))
}

impl BRnObject {
    /// Checks monotonicity, star reversal, the diagonal and join closure.
    pub fn new(algebra: FiniteBooleanAlgebra, n: u32, relation: BTreeSet<Vec<u32>>) -> Result<Self> {
        let r = BRnObject { algebra, n, relation };
        match r.axiom_violation() {
            Some(msg) => Err(MvError::InvalidRelation(msg)),
            None => Ok(r),
        }
    }

    pub fn algebra(&self) -> FiniteBooleanAlgebra {
        self.algebra
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn relation(&self) -> &BTreeSet<Vec<u32>> {
        &self.relation
    }

    fn format_tuple(&self, t: &[u32]) -> String {
        let parts: Vec<String> = t.iter().map(|&x| self.algebra.format(x)).collect();
        format!("({})", parts.join(", "))
    }

    /// The first axiom that fails, described with its witness tuple.
    pub fn axiom_violation(&self) -> Option<String> {
        let alg = self.algebra;
        for t in &self.relation {
            if t.len() != self.n as usize || t.iter().any(|&x| !alg.contains(x)) {
                return Some(format!("malformed tuple {t:?}"));
            }
            if !is_monotone(alg, t) {
                return Some(format!("tuple {} is not decreasing", self.format_tuple(t)));
            }
            let rev: Vec<u32> = t.iter().rev().map(|&x| alg.neg(x)).collect();
            if !self.relation.contains(&rev) {
                return Some(format!(
                    "star reversal of {} missing: {}",
                    self.format_tuple(t),
                    self.format_tuple(&rev)
                ));
            }
        }
        for a in alg.elements() {
            let diag = vec![a; self.n as usize];
            if !self.relation.contains(&diag) {
                return Some(format!("diagonal tuple {} missing", self.format_tuple(&diag)));
            }
        }
        for a in &self.relation {
            for b in &self.relation {
                let c = join_composite(a, b);
                if !self.relation.contains(&c) {
                    return Some(format!(
                        "join of {} and {} missing: {}",
                        self.format_tuple(a),
                        self.format_tuple(b),
                        self.format_tuple(&c)
                    ));
                }
            }
        }
        None
    }
}

/// `Jᵢ(R) = {a_{i−1} ∧ aᵢ* : (a₀, …, a_{n−1}) ∈ R}`.
pub fn ideals_from_relation(r: &BRnObject) -> Result<BooleNObject> {
    let alg = r.algebra;
    let ideals = (1..r.n as usize)
        .map(|i| {
            let members: Vec<u32> = r.relation.iter().map(|t| t[i - 1] & alg.neg(t[i])).collect();
            BoolIdeal::new(alg, &members)
                .map_err(|_| MvError::InvalidRelation(format!("J{i} of the relation is not an ideal")))
        })
        .collect::<Result<Vec<_>>>()?;
    BooleNObject::new(alg, r.n, ideals)
}

/// `R_J`: decreasing tuples with `a_{i−1} ∧ aᵢ* ∈ Jᵢ`.
pub fn relation_from_ideals(bn: &BooleNObject) -> Result<BRnObject> {
    let alg = bn.algebra;
    let n = bn.n as usize;
    let mut out = BTreeSet::new();
    let mut tuple = Vec::with_capacity(n);
    fn extend(
        alg: FiniteBooleanAlgebra,
        bn: &BooleNObject,
        n: usize,
        tuple: &mut Vec<u32>,
        out: &mut BTreeSet<Vec<u32>>,
    ) {
        if tuple.len() == n {
            out.insert(tuple.clone());
            return;
        }
        let i = tuple.len();
        for x in alg.elements() {
            if i > 0 {
                let prev = tuple[i - 1];
                if !alg.leq(x, prev) || !bn.ideal(i as u32).contains(prev & alg.neg(x)) {
                    continue;
                }
            }
            tuple.push(x);
            extend(alg, bn, n, tuple, out);
            tuple.pop();
        }
    }
    extend(alg, bn, n, &mut tuple, &mut out);
    BRnObject::new(alg, bn.n, out).map_err(|e| MvError::Internal(format!("R_J: {e}")))
}

/// Outcome of a roundtrip, with the first discrepancy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Roundtrip {
    pub holds: bool,
    pub counterexample: Option<String>,
}

impl Roundtrip {
    fn ok() -> Self {
        Roundtrip {
            holds: true,
            counterexample: None,
        }
    }

    fn fail(msg: String) -> Self {
        Roundtrip {
            holds: false,
            counterexample: Some(msg),
        }
    }
}

/// The tuple `(1, …, 1, a*, …, a*)` with the last `1` at position `i − 1`.
pub fn witness_tuple(algebra: FiniteBooleanAlgebra, n: u32, i: u32, a: u32) -> Vec<u32> {
    (0..n)
        .map(|p| if p < i { algebra.top() } else { algebra.neg(a) })
        .collect()
}

/// `Jᵢ(R_J) = Jᵢ`, plus membership of every witness tuple.
pub fn roundtrip_j(bn: &BooleNObject) -> Result<Roundtrip> {
    let r = relation_from_ideals(bn)?;
    for i in 1..bn.n {
        for &a in bn.ideal(i).members() {
            let w = witness_tuple(bn.algebra, bn.n, i, a);
            if !r.relation.contains(&w) {
                return Ok(Roundtrip::fail(format!("witness {} not in R_J", r.format_tuple(&w))));
            }
        }
    }
    let back = ideals_from_relation(&r)?;
    for i in 1..bn.n {
        if back.ideal(i) != bn.ideal(i) {
            return Ok(Roundtrip::fail(format!(
                "J{i}: {} became {}",
                bn.ideal(i).format(bn.algebra),
                back.ideal(i).format(bn.algebra)
            )));
        }
    }
    Ok(Roundtrip::ok())
}

/// `R_{J(R)} = R`.
pub fn roundtrip_r(r: &BRnObject) -> Result<Roundtrip> {
    let back = relation_from_ideals(&ideals_from_relation(r)?)?;
    if let Some(t) = back.relation.symmetric_difference(&r.relation).next() {
        return Ok(Roundtrip::fail(format!("tuple {} differs", r.format_tuple(t))));
    }
    Ok(Roundtrip::ok())
}

/// A Boolean homomorphism `2^k → 2^m` given by its full table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoolHom {
    pub domain: FiniteBooleanAlgebra,
    pub codomain: FiniteBooleanAlgebra,
    pub table: Vec<u32>,
}

impl BoolHom {
    /// Checks preservation of `0`, `∨` and complement.
    pub fn new(domain: FiniteBooleanAlgebra, codomain: FiniteBooleanAlgebra, table: Vec<u32>) -> Result<Self> {
        if table.len() != domain.size() || table.iter().any(|&y| !codomain.contains(y)) {
            return Err(MvError::NotHomomorphism("table does not fit the algebras".into()));
        }
        if table[0] != 0 {
            return Err(MvError::NotHomomorphism("0 is not preserved".into()));
        }
        for a in domain.elements() {
            if table[domain.neg(a) as usize] != codomain.neg(table[a as usize]) {
                return Err(MvError::NotHomomorphism(format!("complement fails at {}", domain.format(a))));
            }
            for b in domain.elements() {
                if table[(a | b) as usize] != table[a as usize] | table[b as usize] {
                    return Err(MvError::NotHomomorphism(format!(
                        "join fails at ({}, {})",
                        domain.format(a),
                        domain.format(b)
                    )));
                }
            }
        }
        Ok(BoolHom { domain, codomain, table })
    }

    pub fn identity(algebra: FiniteBooleanAlgebra) -> Self {
        BoolHom {
            domain: algebra,
            codomain: algebra,
            table: algebra.elements().collect(),
        }
    }

    /// Determined by the images of the atoms.
    pub fn from_atom_images(domain: FiniteBooleanAlgebra, codomain: FiniteBooleanAlgebra, atoms: &[u32]) -> Result<Self> {
        if atoms.len() != domain.atoms as usize {
            return Err(MvError::NotHomomorphism("one image per atom is required".into()));
        }
        let table = domain
            .elements()
            .map(|a| (0..domain.atoms).filter(|i| a & (1 << i) != 0).fold(0, |m, i| m | atoms[i as usize]))
            .collect();
        Self::new(domain, codomain, table)
    }

    pub fn apply(&self, a: u32) -> u32 {
        self.table[a as usize]
    }

    /// Every homomorphism `2^k → 2^m`: each target atom lies under exactly
    /// one source atom.
    pub fn enumerate(domain: FiniteBooleanAlgebra, codomain: FiniteBooleanAlgebra) -> Vec<BoolHom> {
        let k = domain.atoms as usize;
        let m = codomain.atoms;
        let total = k.pow(m);
        (0..total)
            .filter_map(|mut code| {
                let mut atoms = vec![0u32; k];
                for j in 0..m {
                    atoms[code % k] |= 1 << j;
                    code /= k;
                }
                BoolHom::from_atom_images(domain, codomain, &atoms).ok()
            })
            .collect()
    }

    fn as_mv(&self, source: &Arc<FiniteMvAlgebra>, target: &Arc<FiniteMvAlgebra>) -> Result<MvHomomorphism> {
        let table = source
            .elements()
            .iter()
            .map(|e| {
                let image = self.codomain.to_element(self.apply(self.domain.from_element(e)));
                target.index_of(&image).expect("full product")
            })
            .collect();
        MvHomomorphism::new(source.clone(), target.clone(), table)
    }
}

/// `f[Jᵢ] ⊆ J′ᵢ`; the failure names the index and element.
pub fn check_morphism_boole_n(f: &BoolHom, from: &BooleNObject, to: &BooleNObject) -> Result<Roundtrip> {
    if f.domain != from.algebra || f.codomain != to.algebra || from.n != to.n {
        return Err(MvError::InvalidArgument("morphism does not match the objects".into()));
    }
    for i in 1..from.n {
        for &a in from.ideal(i).members() {
            if !to.ideal(i).contains(f.apply(a)) {
                return Ok(Roundtrip::fail(format!(
                    "J{i}: {} ↦ {}",
                    from.algebra.format(a),
                    to.algebra.format(f.apply(a))
                )));
            }
        }
    }
    Ok(Roundtrip::ok())
}

/// `(a₀, …) ∈ R ⇒ (f(a₀), …) ∈ R′`.
pub fn check_morphism_brn(f: &BoolHom, from: &BRnObject, to: &BRnObject) -> Result<Roundtrip> {
    if f.domain != from.algebra || f.codomain != to.algebra || from.n != to.n {
        return Err(MvError::InvalidArgument("morphism does not match the relations".into()));
    }
    for t in &from.relation {
        let image: Vec<u32> = t.iter().map(|&x| f.apply(x)).collect();
        if !to.relation.contains(&image) {
            return Ok(Roundtrip::fail(format!("{} ↦ {}", from.format_tuple(t), to.format_tuple(&image))));
        }
    }
    Ok(Roundtrip::ok())
}

/// A finite Stone space (discrete, crisp) with opens `o₁ … o_{n−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoneNObject {
    space: MvTopology,
    n: u32,
    opens: Vec<FuzzySubset>,
}

impl StoneNObject {
    /// Checks that the space is crisp and discrete, the `oᵢ` are open, and
    /// `oᵢ = o_{n−i}`, `o_h ∩ o_{i−h} ⊆ oᵢ`.
    pub fn new(space: MvTopology, n: u32, opens: Vec<FuzzySubset>) -> Result<Self> {
        if n < 2 {
            return Err(MvError::InvalidStoneN(format!("n must be at least 2, got {n}")));
        }
        if space.chain() != Chain::BOOLEAN || space != MvTopology::discrete(space.universe().clone(), Chain::BOOLEAN) {
            return Err(MvError::InvalidStoneN("space must be a finite discrete crisp space".into()));
        }
        if let Some(o) = opens.iter().find(|o| !space.is_open(o)) {
            return Err(MvError::InvalidStoneN(format!("{o} is not an open of the space")));
        }
        if let Some(msg) = sequence_violation(n, &opens, |a, b| a == b, |a, b, c| a.meet(b).is_ok_and(|m| m.leq(c))) {
            return Err(MvError::InvalidStoneN(msg));
        }
        Ok(StoneNObject { space, n, opens })
    }

    pub fn space(&self) -> &MvTopology {
        &self.space
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `o_i` for `1 ≤ i ≤ n − 1`.
    pub fn open(&self, i: u32) -> &FuzzySubset {
        &self.opens[(i - 1) as usize]
    }

    pub fn opens(&self) -> &[FuzzySubset] {
        &self.opens
    }
}

/// `g` continuous and `g⁻¹[o′ᵢ] ⊆ oᵢ`.
pub fn check_morphism_stone_n(g: &PointMap, from: &StoneNObject, to: &StoneNObject) -> Result<Roundtrip> {
    if from.n != to.n {
        return Err(MvError::InvalidArgument("objects have different n".into()));
    }
    if !check_continuous(g, &from.space, &to.space)?.holds {
        return Err(MvError::NotContinuous);
    }
    for i in 1..from.n {
        let pre = g.preimage(to.open(i))?;
        if !pre.leq(from.open(i)) {
            return Ok(Roundtrip::fail(format!("o{i}: preimage {pre} not below {}", from.open(i))));
        }
    }
    Ok(Roundtrip::ok())
}

/// The classical dual of a finite Boolean algebra through the MV engine.
#[derive(Clone, Debug)]
pub struct BooleanDual {
    pub algebra: FiniteBooleanAlgebra,
    pub mv: Arc<FiniteMvAlgebra>,
    pub dual: DualSpace,
}

impl BooleanDual {
    pub fn new(algebra: FiniteBooleanAlgebra, bounds: &Bounds) -> Result<Self> {
        let mv = Arc::new(algebra.as_mv_algebra());
        let dual = max_space(&mv, bounds)?;
        Ok(BooleanDual { algebra, mv, dual })
    }

    fn index(&self, a: u32) -> usize {
        self.mv.index_of(&self.algebra.to_element(a)).expect("full product")
    }

    pub fn hat(&self, a: u32) -> &FuzzySubset {
        self.dual.hat_of(self.index(a))
    }

    /// `o_I = ⋁_{a ∈ I} â`.
    pub fn ideal_to_open(&self, ideal: &BoolIdeal) -> FuzzySubset {
        let zero = FuzzySubset::zero(self.dual.universe().clone(), self.dual.hat.chain);
        ideal
            .members()
            .iter()
            .fold(zero, |acc, &a| acc.join(self.hat(a)).expect("hats share a grid"))
    }

    /// `I_o = {a : â ≤ o}`.
    pub fn open_to_ideal(&self, open: &FuzzySubset) -> Result<BoolIdeal> {
        let members: Vec<u32> = self.algebra.elements().filter(|&a| self.hat(a).leq(open)).collect();
        BoolIdeal::new(self.algebra, &members)
    }
}

/// `Maxₙ`: the dual space with opens `o_{Jᵢ}`.
pub fn max_n(bn: &BooleNObject, bounds: &Bounds) -> Result<(BooleanDual, StoneNObject)> {
    let bd = BooleanDual::new(bn.algebra, bounds)?;
    let opens = bn.ideals.iter().map(|j| bd.ideal_to_open(j)).collect();
    let sn = StoneNObject::new(bd.dual.space.clone(), bn.n, opens)?;
    Ok((bd, sn))
}

/// `Clopₙ`: the clopen algebra (atoms = points) with ideals `I_{oᵢ}`.
pub fn clop_n(sn: &StoneNObject) -> Result<BooleNObject> {
    let points = sn.space.universe().len() as u32;
    let alg = FiniteBooleanAlgebra::new(points)?;
    let mask = |o: &FuzzySubset| -> u32 { o.full_points().iter().fold(0, |m, &p| m | (1 << p)) };
    let ideals = sn.opens.iter().map(|o| BoolIdeal::principal(alg, mask(o))).collect();
    BooleNObject::new(alg, sn.n, ideals)
}

/// Certified isomorphisms for both composites of the duality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoneNRoundtrip {
    /// `Bn ≅ Clopₙ Maxₙ Bn` as a Boolean isomorphism matching the ideals.
    pub algebra_side: Roundtrip,
    /// `Sn ≅ Maxₙ Clopₙ Sn` as a homeomorphism matching the opens.
    pub space_side: Roundtrip,
    pub algebra_iso: Vec<u32>,
    pub space_iso: Vec<usize>,
}

pub fn stone_n_roundtrip(bn: &BooleNObject, bounds: &Bounds) -> Result<StoneNRoundtrip> {
    let (_, sn) = max_n(bn, bounds)?;
    let back = clop_n(&sn)?;

    // a ↦ â read as a mask over the points of Max B.
    let unit = unit_iso_algebra(&Arc::new(bn.algebra.as_mv_algebra()), bounds)?;
    let alg = bn.algebra;
    let iso: Vec<u32> = alg
        .elements()
        .map(|a| {
            let idx = unit.dual.algebra.index_of(&alg.to_element(a)).expect("full product");
            let hat = unit.dual.hat_of(idx);
            hat.full_points().iter().fold(0, |m, &p| m | (1 << p))
        })
        .collect();
    let algebra_side = match BoolHom::new(alg, back.algebra, iso.clone()) {
        Err(e) => Roundtrip::fail(e.to_string()),
        Ok(f) => {
            let forward = check_morphism_boole_n(&f, bn, &back)?;
            let mut inverse = vec![0u32; alg.size()];
            for a in alg.elements() {
                inverse[f.apply(a) as usize] = a;
            }
            let bijective = alg.elements().all(|a| inverse[f.apply(a) as usize] == a)
                && iso.iter().copied().collect::<BTreeSet<_>>().len() == alg.size();
            let backward = BoolHom::new(back.algebra, alg, inverse)
                .map(|g| check_morphism_boole_n(&g, &back, bn))
                .unwrap_or_else(|e| Ok(Roundtrip::fail(e.to_string())))?;
            if !bijective {
                Roundtrip::fail("unit map is not bijective".into())
            } else if !forward.holds {
                forward
            } else {
                backward
            }
        }
    };

    let space_side_unit = unit_iso_space(&sn.space, bounds)?;
    let (_, sn2) = max_n(&back, bounds)?;
    let g = &space_side_unit.map;
    let mut space_side = Roundtrip::ok();
    // The unit's dual is Max of the clopen algebra on the same atom order as `back`.
    for i in 1..bn.n {
        let pulled = g.preimage(sn2.open(i))?;
        if !pulled.same_values(sn.open(i)) {
            space_side = Roundtrip::fail(format!("o{i}: {} pulled back to {pulled}", sn.open(i)));
            break;
        }
    }
    Ok(StoneNRoundtrip {
        algebra_side,
        space_side,
        algebra_iso: iso,
        space_iso: g.assignment().to_vec(),
    })
}

/// `Maxₙ f : Maxₙ Bn′ → Maxₙ Bn` for a Boole_n morphism `f : Bn → Bn′`,
/// checked to be a Stone_n morphism.
pub fn max_n_morphism(f: &BoolHom, from: &BooleNObject, to: &BooleNObject, bounds: &Bounds) -> Result<(PointMap, Roundtrip)> {
    let (bd_from, sn_from) = max_n(from, bounds)?;
    let (bd_to, sn_to) = max_n(to, bounds)?;
    let h = f.as_mv(&bd_from.mv, &bd_to.mv)?;
    let g = dualize_hom(&h, &bd_from.dual, &bd_to.dual)?;
    let verdict = check_morphism_stone_n(&g, &sn_to, &sn_from)?;
    Ok((g, verdict))
}

/// Stone_n data read off the dual of an algebra whose quotients embed in
/// `Ł_{n+1}`: `oᵢ` holds the points where the value `i/n` is attained.
pub fn stone_n_of_algebra(algebra: &Arc<FiniteMvAlgebra>, n: u32, bounds: &Bounds) -> Result<StoneNObject> {
    let dual = max_space(algebra, bounds)?;
    let top = n;
    if let Some(&k) = dual.hat.quotient_orders.iter().find(|&&k| !top.is_multiple_of(k - 1)) {
        return Err(MvError::InvalidArgument(format!("quotient L{k} does not embed in L{}", n + 1)));
    }
    let u = dual.universe().clone();
    let opens = (1..n)
        .map(|i| {
            let pts: Vec<usize> = (0..u.len())
                .filter(|&p| (dual.hat.quotient_orders[p] - 1) * i % top == 0)
                .collect();
            FuzzySubset::crisp(u.clone(), Chain::BOOLEAN, &pts)
        })
        .collect();
    StoneNObject::new(MvTopology::discrete(u, Chain::BOOLEAN), n, opens)
}

/// The maximal ideal of `2^k` missing exactly atom `i`, as an MV ideal.
pub fn atom_point(bd: &BooleanDual, atom: u32) -> Option<usize> {
    let members: Vec<usize> = bd
        .algebra
        .elements()
        .filter(|&a| a & (1 << atom) == 0)
        .map(|a| bd.index(a))
        .collect();
    let ideal = Ideal::new(&bd.mv, members).ok()?;
    bd.dual.point_of(&ideal)
}

/// Names `p0 … p{k-1}` for a discrete space on `k` points.
pub fn discrete_stone_space(points: usize) -> Result<MvTopology> {
    Ok(MvTopology::discrete(Universe::numbered("p", points)?, Chain::BOOLEAN))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(k: u32) -> FiniteBooleanAlgebra {
        FiniteBooleanAlgebra::new(k).unwrap()
    }

    // 2² with a = atom 0, a* = atom 1.
    const A: u32 = 0b01;
    const A_STAR: u32 = 0b10;

    fn worked() -> BooleNObject {
        let alg = b(2);
        let j = BoolIdeal::principal(alg, A);
        BooleNObject::new(alg, 3, vec![j.clone(), j]).unwrap()
    }

    #[test]
    fn worked_relation() {
        let r = relation_from_ideals(&worked()).unwrap();
        assert!(r.relation().contains(&vec![0b11, A_STAR, A_STAR]));
        assert!(!r.relation().contains(&vec![0b11, A, 0]));
        let back = ideals_from_relation(&r).unwrap();
        assert_eq!(back, worked());
        assert!(roundtrip_j(&worked()).unwrap().holds);
        assert!(roundtrip_r(&r).unwrap().holds);
    }

    #[test]
    fn extreme_ideals() {
        let alg = b(2);
        let zero = BooleNObject::new(alg, 3, vec![BoolIdeal::principal(alg, 0); 2]).unwrap();
        let r = relation_from_ideals(&zero).unwrap();
        assert!(r.relation().iter().all(|t| t.iter().all(|&x| x == t[0])));
        assert_eq!(r.relation().len(), 4);
        let whole = BooleNObject::new(alg, 3, vec![BoolIdeal::principal(alg, 3); 2]).unwrap();
        let r = relation_from_ideals(&whole).unwrap();
        // decreasing triples over a 4-element Boolean lattice: 3 per atom squared
        assert_eq!(r.relation().len(), 16);
    }

    #[test]
    fn definition_conditions_are_enforced() {
        let alg = b(2);
        let err = BooleNObject::new(alg, 3, vec![BoolIdeal::principal(alg, A), BoolIdeal::principal(alg, 0)]);
        assert!(matches!(err, Err(MvError::InvalidBooleN(_))));
        // n = 4: J₁ ∩ J₁ ⊆ J₂ fails with J₁ = I_a, J₂ = {0}.
        let bad = BooleNObject::new(
            alg,
            4,
            vec![BoolIdeal::principal(alg, A), BoolIdeal::principal(alg, 0), BoolIdeal::principal(alg, A)],
        );
        assert!(matches!(bad, Err(MvError::InvalidBooleN(_))));
    }

    #[test]
    fn non_rj_relation_rejected() {
        let alg = b(1);
        let mut rel: BTreeSet<Vec<u32>> = [vec![0, 0], vec![1, 1]].into_iter().collect();
        rel.insert(vec![1, 0]);
        assert!(BRnObject::new(alg, 2, rel.clone()).is_ok());
        rel.insert(vec![0, 1]);
        assert!(matches!(BRnObject::new(alg, 2, rel), Err(MvError::InvalidRelation(_))));
    }

    #[test]
    fn morphisms() {
        let alg = b(2);
        let bn = worked();
        let id = BoolHom::identity(alg);
        assert!(check_morphism_boole_n(&id, &bn, &bn).unwrap().holds);
        let zero = BooleNObject::new(alg, 3, vec![BoolIdeal::principal(alg, 0); 2]).unwrap();
        let v = check_morphism_boole_n(&id, &bn, &zero).unwrap();
        assert!(!v.holds);
        assert_eq!(v.counterexample.as_deref(), Some("J1: a ↦ a"));
        let r = relation_from_ideals(&bn).unwrap();
        let rz = relation_from_ideals(&zero).unwrap();
        assert!(!check_morphism_brn(&id, &r, &rz).unwrap().holds);
        assert!(check_morphism_brn(&id, &rz, &r).unwrap().holds);
    }

    #[test]
    fn worked_dual() {
        let bounds = Bounds::default();
        let (bd, sn) = max_n(&worked(), &bounds).unwrap();
        assert_eq!(sn.space().universe().len(), 2);
        let p = atom_point(&bd, 0).unwrap();
        assert_eq!(sn.open(1).full_points(), vec![p]);
        assert_eq!(sn.open(1), sn.open(2));
        let rt = stone_n_roundtrip(&worked(), &bounds).unwrap();
        assert!(rt.algebra_side.holds && rt.space_side.holds, "{rt:?}");
    }

    #[test]
    fn zero_ideals_give_empty_opens() {
        let alg = b(3);
        let zero = BooleNObject::new(alg, 4, vec![BoolIdeal::principal(alg, 0); 3]).unwrap();
        let (_, sn) = max_n(&zero, &Bounds::default()).unwrap();
        assert!(sn.opens().iter().all(FuzzySubset::is_zero));
    }

    #[test]
    fn principal_ideal_opens() {
        let bd = BooleanDual::new(b(3), &Bounds::default()).unwrap();
        let a = 0b101;
        let o = bd.ideal_to_open(&BoolIdeal::principal(bd.algebra, a));
        let expected: BTreeSet<usize> = [0, 2].iter().map(|&i| atom_point(&bd, i).unwrap()).collect();
        assert_eq!(o.full_points().into_iter().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn homomorphism_enumeration() {
        // 2¹ → 2²: one map. 2² → 2¹: two maps.
        assert_eq!(BoolHom::enumerate(b(1), b(2)).len(), 1);
        assert_eq!(BoolHom::enumerate(b(2), b(1)).len(), 2);
        assert_eq!(BoolHom::enumerate(b(2), b(2)).len(), 4);
    }

    #[test]
    fn formatting_roundtrips() {
        let alg = b(3);
        for a in alg.elements() {
            assert_eq!(alg.parse(&alg.format(a)).unwrap(), a);
        }
    }

    #[test]
    fn algebra_levels() {
        let a = Arc::new(FiniteMvAlgebra::full_product(ProductSignature::from_orders(&[2, 3]).unwrap()));
        let sn = stone_n_of_algebra(&a, 2, &Bounds::default()).unwrap();
        // Only the Ł₃ point carries the value 1/2.
        assert_eq!(sn.open(1).full_points().len(), 1);
        assert_eq!(stone_n_of_algebra(&a, 4, &Bounds::default()).unwrap().open(2), sn.open(1));
        assert!(stone_n_of_algebra(&a, 3, &Bounds::default()).is_err());
    }
}
