use thiserror::Error;

use crate::simplicial::ManifoldDefect;

/// Broad classes of failure, used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input: bad files, bad arguments, unknown names.
    Input,
    /// Well-formed input that violates a mathematical precondition.
    Precondition,
    /// An internal consistency check failed.
    Internal,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed facet {facet:?}: {reason}")]
    MalformedFacet { facet: Vec<u32>, reason: String },
    #[error("invalid closed 3-manifold: {0}")]
    NotAManifold(#[from] ManifoldDefect),
    #[error("not orientable: no consistent orientation of the tetrahedra exists")]
    NotOrientable,
    #[error("not a closed surface: {0}")]
    NotClosedSurface(String),
    #[error("involution has {got} entries but the complex has {expected} vertices")]
    InvolutionLength { expected: usize, got: usize },
    #[error("not an involution: {0}")]
    NotAnInvolution(String),
    #[error("not simplicial: image of simplex {simplex:?} is {image:?}, which is not a simplex")]
    NotSimplicial { simplex: Vec<u32>, image: Vec<u32> },
    #[error("fixed-point set not isolated: simplex {0:?} is fixed pointwise")]
    FixedSetNotIsolated(Vec<u32>),
    #[error("orientation-preserving involution: {0}")]
    OrientationPreserving(String),
    #[error("regularization failed after {subdivisions} subdivisions: {reason}")]
    RegularizationFailed { subdivisions: usize, reason: String },
    #[error("manifold is not regularized")]
    NotRegularized,
    #[error("boundary anomaly: component {component} is {found}, expected a projective plane")]
    BoundaryAnomaly { component: usize, found: String },
    #[error("self-duality violation: extracted code of length {length} has dimension {dimension} and is not self-dual")]
    SelfDualityViolation { length: usize, dimension: usize },
    #[error("vector outside ambient space")]
    VectorOutsideSpace,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("enumeration limit: dimension {dimension} exceeds {limit}")]
    EnumerationLimit { dimension: usize, limit: usize },
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("no self-dual codes in odd length {0}")]
    OddLength(usize),
    #[error("unsupported length {length}: {reason}")]
    UnsupportedLength { length: usize, reason: String },
    #[error("unknown code name {0:?}")]
    UnknownCode(String),
    #[error("malformed codeword {0:?}")]
    MalformedWord(String),
    #[error("invalid grid resolution {0}: must be even and at least 4")]
    GridResolution(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::MalformedFacet { .. }
            | Error::InvolutionLength { .. }
            | Error::UnknownCode(_)
            | Error::MalformedWord(_)
            | Error::GridResolution(_)
            | Error::Parse(_)
            | Error::Io { .. }
            | Error::LengthMismatch(..)
            | Error::DimensionMismatch(_) => ErrorClass::Input,
            Error::SelfDualityViolation { .. } | Error::Internal(_) => ErrorClass::Internal,
            _ => ErrorClass::Precondition,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
