use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("lattice is not contained in the ambient lattice")]
    NotASublattice,
    #[error("map is not well defined: {0}")]
    IllDefinedMap(String),
    #[error("candidate maps cannot be enumerated")]
    NotEnumerable,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("ground set too large: {0} elements (limit {1})")]
    GroundTooLarge(usize, usize),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("layer data missing")]
    MissingLayers,
    #[error("axiom {axiom} fails: {witness}")]
    AxiomViolation { axiom: String, witness: String },
}

pub type Result<T> = std::result::Result<T, Error>;
