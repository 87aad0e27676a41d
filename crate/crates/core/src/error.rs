use thiserror::Error;

/// Errors raised by the algebra, topology and duality kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MvError {
    #[error("chain order must be at least 2, got {0}")]
    InvalidChainOrder(u32),
    #[error("value {value} is not on the grid of L{order}")]
    OffGrid { value: String, order: u32 },
    #[error("chain mismatch: L{left} vs L{right}")]
    ChainMismatch { left: u32, right: u32 },
    #[error("operands live over different universes")]
    UniverseMismatch,
    #[error("universe must be nonempty")]
    EmptyUniverse,
    #[error("duplicate point name `{0}`")]
    DuplicatePoint(String),
    #[error("multiplier or exponent must be positive")]
    ZeroMultiple,
    #[error("element does not match signature: {0}")]
    SignatureMismatch(String),
    #[error("an MV-algebra needs at least two elements")]
    TrivialAlgebra,
    #[error("carrier is not closed under {0}")]
    NotClosed(&'static str),
    #[error("ideal is not proper")]
    ImproperIdeal,
    #[error("{what}: size {size} exceeds enumeration bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("family is not a covering: point `{0}` is uncovered")]
    NotCovering(String),
    #[error("base is not closed under {op}: ({left}, {right})")]
    BaseNotClosed {
        op: &'static str,
        left: String,
        right: String,
    },
    #[error("invalid metric: {0}")]
    InvalidMetric(String),
    #[error("not an MV-topology: {0}")]
    NotTopology(String),
    #[error("not a Stone MV-space: {0}")]
    NotStone(String),
    #[error("map is not continuous")]
    NotContinuous,
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("invalid Boole_n object: {0}")]
    InvalidBooleN(String),
    #[error("invalid BR_n relation: {0}")]
    InvalidRelation(String),
    #[error("invalid Stone_n object: {0}")]
    InvalidStoneN(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl MvError {
    /// True for errors caused by an enumeration cap rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, MvError::BoundExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, MvError>;
