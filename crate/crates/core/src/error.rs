use thiserror::Error;

/// Structural errors raised while building, loading, or combining complexes.
///
/// Geometric defects of an otherwise well-formed complex (missing faces,
/// degenerate simplices, improper overlaps) are not errors; they are reported
/// by [`crate::validate_complex`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("simplex {simplex} references unknown vertex `{vertex}`")]
    UnknownVertex { simplex: String, vertex: String },

    #[error("expected ambient dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("simplex {0} repeats a vertex")]
    RepeatedVertex(String),

    #[error("a simplex needs at least one vertex")]
    EmptySimplex,

    #[error("vertex `{0}` is given two different positions")]
    LabelConflict(String),

    #[error("`{0}` is not a rational number")]
    ParseRational(String),

    #[error("malformed complex file: {0}")]
    Format(String),

    #[error("simplex {0} is not part of the complex")]
    NotInComplex(String),

    #[error("selection is not face-closed: {face} is missing (face of {simplex})")]
    NotFaceClosed { simplex: String, face: String },

    #[error("vertices of {0} are affinely dependent")]
    Degenerate(String),

    #[error("incompatible union: {first} and {second} meet outside a common face")]
    IncompatibleUnion { first: String, second: String },

    #[error("cone apex is affinely dependent on {0}")]
    ConeDegenerate(String),

    #[error("apex chosen for {0} is not in its relative interior")]
    ApexNotInterior(String),

    #[error("not a subdivision: {0}")]
    NotASubdivision(String),

    #[error("witness has no carrier for {0}")]
    MissingWitness(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("contraction bound violated: {0}")]
    BoundViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
