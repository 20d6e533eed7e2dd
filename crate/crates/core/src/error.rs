use thiserror::Error;

/// Errors raised by the geometric and stability pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ZeroVector: cannot normalize the zero vector")]
    ZeroVector,
    #[error("DimTooLarge: ambient dimension {dim} exceeds the guard {limit} (set KDELTA_MAX_DIM to override)")]
    DimTooLarge { dim: usize, limit: usize },
    #[error("DimMismatch: expected dimension {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("Unbounded: polyhedron has a recession direction")]
    Unbounded,
    #[error("EmptyPolytope: the halfspaces have no common point")]
    EmptyPolytope,
    #[error("DegenerateSimplex: simplex vertices are affinely dependent")]
    DegenerateSimplex,
    #[error("NonPositiveMass: density integrates to {mass} over the polytope")]
    NonPositiveMass { mass: String },
    #[error("UnboundedPolytope: rays do not span the space positively")]
    UnboundedPolytope,
    #[error("NonPositiveScale: polarization scale must be positive, got {0}")]
    NonPositiveScale(String),
    #[error("BadLeviSubset: root {0} of the Levi subset is not a positive root")]
    BadLeviSubset(String),
    #[error("NotInValuationCone: vector {0} is not in the valuation cone")]
    NotInValuationCone(String),
    #[error("ProjectionSolveFailed: no preimage of {0} under the projection")]
    ProjectionSolveFailed(String),
    #[error("InconsistentData: {0}")]
    InconsistentData(String),
    #[error("NotHorospherical: valuation cone is a proper subset of the ambient space")]
    NotHorospherical,
    #[error("NotLogFano: log degree {0} is not positive")]
    NotLogFano(String),
    #[error("BadSignature: {0}")]
    BadSignature(String),
    #[error("InvalidData: {0}")]
    InvalidData(String),
    #[error("Parse: {0}")]
    Parse(String),
}

impl Error {
    /// True for failures that indicate mathematically inconsistent input
    /// which passed validation, as opposed to malformed input.
    pub fn is_inconsistency(&self) -> bool {
        matches!(
            self,
            Error::InconsistentData(_) | Error::ProjectionSolveFailed(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
