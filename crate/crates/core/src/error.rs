use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("pair ({alpha},{beta}) is not coprime")]
    NonCoprime { alpha: i64, beta: i64 },

    #[error("multiplicity alpha must be positive, got {0}")]
    NonPositiveAlpha(i64),

    #[error("genus must be non-negative, got {0}")]
    NegativeGenus(i64),

    #[error("Euler number is zero; not Besse data")]
    ZeroEuler,

    #[error("Euler number {0} is not positive")]
    NonPositiveEuler(String),

    #[error("orbifold Euler characteristic is zero (degenerate)")]
    DegenerateChi,

    #[error("first Chern class is not trivial")]
    NonTrivialChern,

    #[error("invalid orbit: {0}")]
    InvalidOrbit(String),

    #[error("invalid ADE type: {0}")]
    InvalidAde(String),

    #[error("ellipsoid weights ({0},{1}) must be positive and coprime")]
    EllipsoidWeights(i64, i64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("E1 page is not lacunary; symplectic homology is not determined by E1 alone")]
    NonLacunary,

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
