/// Enumeration caps shared by the exhaustive routines.
///
/// Exceeding a cap yields [`MvError::BoundExceeded`](crate::MvError::BoundExceeded)
/// instead of a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest carrier for closure-based ideal enumeration. Box-shaped
    /// algebras (products of subchains) bypass this cap.
    pub ideal_carrier: usize,
    /// Largest carrier for which every subset is tried as a cut.
    pub cut_exhaustive: usize,
    /// Largest number of candidate coverings examined by the compactness check.
    pub coverings: usize,
    /// Largest number of multiplicity vectors tried by the additive-subcover fallback.
    pub subcover_search: usize,
    /// Largest number of search nodes in homomorphism enumeration.
    pub homomorphism_search: usize,
}

impl Bounds {
    pub const DEFAULT_IDEAL_CARRIER: usize = 64;

    /// Same defaults, with the ideal-enumeration cap replaced.
    pub fn with_ideal_carrier(bound: usize) -> Self {
        Bounds {
            ideal_carrier: bound,
            ..Bounds::default()
        }
    }

    /// Same defaults, with every search cap (coverings, subcovers,
    /// homomorphism nodes) set to `cap`.
    pub fn with_search_cap(cap: usize) -> Self {
        Bounds {
            coverings: cap,
            subcover_search: cap,
            homomorphism_search: cap,
            ..Bounds::default()
        }
    }
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            ideal_carrier: Self::DEFAULT_IDEAL_CARRIER,
            cut_exhaustive: 20,
            coverings: 1 << 20,
            subcover_search: 1 << 16,
            homomorphism_search: 1 << 22,
        }
    }
}
