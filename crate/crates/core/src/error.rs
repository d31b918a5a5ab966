use thiserror::Error;

use crate::algebra::RingDescriptor;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: expected {expected}, found {found}")]
    DescriptorMismatch {
        expected: RingDescriptor,
        found: RingDescriptor,
    },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("at least one root is required")]
    EmptyRoots,
    #[error("the two prescribed roots coincide")]
    EqualRoots,
    #[error("degree must be at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("expected a matrix ring, got {0}")]
    NotMatrixRing(RingDescriptor),
    #[error("ring {0} is not a finite matrix ring over a prime field")]
    NotFinite(RingDescriptor),
    #[error("search space of {size} exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: u64 },
    #[error("coefficients do not satisfy the difference equation: a0 computed from the two roots disagrees")]
    InconsistentConstantTerm,
    #[error("supplied a1 does not satisfy a1*(x1 - x2) = x2^2 - x1^2")]
    InvalidOverride,
    #[error("decode error: {0}")]
    Decode(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
