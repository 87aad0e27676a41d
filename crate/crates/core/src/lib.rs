//! Exact finite MV-algebras, MV-topological spaces and the Stone-type
//! duality between them.
//!
//! All values live on finite Łukasiewicz grids and every computation is
//! integer arithmetic on numerators, so equalities in roundtrip checks are
//! exact. Module map:
//!
//! - [`chain`], [`element`], [`fuzzy`]: chain values, product elements and
//!   fuzzy subsets with the preimage/image maps of point maps.
//! - [`algebra`]: finite MV-algebras, ideals, quotients, the hat embedding.
//! - [`topology`]: MV-topologies, bases, coverings, compactness, separation.
//! - [`duality`]: the `Clop`/`Max` functors, unit isomorphisms, cuts.
//! - [`stone_n`]: Boolean algebras with ideal sequences, `n`-ary relations
//!   and Stone spaces with open sequences.
//! - [`supernatural`]: supernatural numbers and finite multisets.
//! - [`corpus`], [`random`]: fixed test corpora and seeded random
//!   topologies.

pub mod algebra;
pub mod bounds;
pub mod chain;
pub mod corpus;
pub mod element;
pub mod error;
pub mod fuzzy;
pub mod random;
pub mod duality;
pub mod stone_n;
pub mod supernatural;
pub mod topology;

pub use algebra::{FiniteMvAlgebra, Ideal, MaximalIdeal, MvHomomorphism};
pub use bounds::Bounds;
pub use chain::{Chain, ChainValue};
pub use element::{MvElement, ProductSignature};
pub use error::{MvError, Result};
pub use fuzzy::{FuzzySubset, PointMap, Universe};
