use thiserror::Error;

/// Errors raised by ring construction, counting, structure and oracle code.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid local ring parameters: {0}")]
    InvalidParameter(&'static str),
    #[error("local ring of size {base}^{exponent} does not fit in 63 bits")]
    TooLarge { base: u64, exponent: u64 },
    #[error("a ring needs at least one local component")]
    NoComponents,
    #[error("element has {found} coordinates, ring has {expected} components")]
    ArityMismatch { expected: usize, found: usize },
    #[error("coordinate {value} out of range for component {component} (size {size})")]
    CoordinateOutOfRange { component: usize, value: u64, size: u64 },
    #[error("component index {0} out of range")]
    ComponentIndex(usize),
    #[error("ring of size {size} exceeds the enumeration cap {cap}")]
    CapExceeded { size: u128, cap: u64 },
    #[error("k must be at least {min}, got {k}")]
    KTooSmall { k: u32, min: u32 },
    #[error("residue field has {0} elements; exceptional units need q > 2")]
    ResidueFieldTooSmall(u64),
    #[error("ring has a residue field of size 2, so it has no exceptional units")]
    NoExceptionalUnits,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("internal invariant violated: {0}")]
    Invariant(&'static str),
    #[error("field size {0} outside the supported range 2..=64")]
    FieldSizeOutOfRange(u64),
    #[error("character sum rounding residual {residual:e} exceeds tolerance")]
    RoundingResidual { residual: f64 },
    #[error("zero has no discrete logarithm")]
    ZeroArgument,
}

pub type Result<T> = core::result::Result<T, Error>;
