use thiserror::Error;

use crate::exact::Integer;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // exact arithmetic
    #[error("the zero vector has no primitive direction")]
    ZeroVector,
    #[error("matrix is not square ({rows} rows, row of length {cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vectors are not parallel")]
    NotParallel,

    // polytopes
    #[error("empty polytope")]
    Empty,
    #[error("point set is not full-dimensional")]
    NotFullDimensional,
    #[error("halfspace intersection is unbounded")]
    Unbounded,
    #[error("direction is orthogonal to an edge")]
    NonGenericDirection,
    #[error("polytope is not simple")]
    NotSimple,
    #[error("origin is not in the interior")]
    OriginNotInterior,

    // reflexive / Delzant
    #[error("polytope is not Delzant")]
    NotDelzant,
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("weight matching failed on edge ({0}, {1})")]
    MatchingFailed(usize, usize),
    #[error("edge ({0}, {1}) does not have lattice endpoints")]
    NonLatticeEdge(usize, usize),
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("no lattice translate of {0} times the polytope is reflexive")]
    NotGorensteinOfIndex(Integer),
    #[error("vertex cones are inconsistent: {0}")]
    InconsistentCones(String),
    #[error("malformed vector: {0}")]
    MalformedVector(String),

    // bounds
    #[error("admissible set is not provably finite for n={n}, k0={k0}; supply a cap")]
    UnboundedSearch { n: usize, k0: usize },
    #[error("coefficient sum S is non-negative for n={n}, k0={k0}")]
    NonNegativeS { n: usize, k0: usize },

    // GKM graphs
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("no single Gorenstein index fits every vertex")]
    Inconsistent,
    #[error("Gorenstein index is not positive")]
    NonPositive,
    #[error("h-vector depends on the chosen direction")]
    DirectionDependent,
    #[error("graph is neither reflexive nor Gorenstein")]
    NotGorenstein,

    // root systems
    #[error("unsupported root system {0}")]
    UnsupportedType(String),
    #[error("vector is not a root")]
    NotARoot,
    #[error("base point is degenerate: {0}")]
    DegenerateBasePoint(String),

    // I/O
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
