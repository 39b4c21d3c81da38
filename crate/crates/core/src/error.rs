use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("not invertible over Laurent ring")]
    NotInvertible,

    #[error("cannot specialize at t = 0 (t^-1 undefined)")]
    ZeroSpecialization,

    #[error("δ defined on Torelli group only")]
    NotTorelli,

    #[error("coefficient of h^{degree} is nonzero; word is not in F_{requested}")]
    BelowDegree { degree: usize, requested: usize },

    #[error("degree must be at least {min}, got {got}")]
    InvalidDegree { min: usize, got: usize },

    #[error("vector is not a weight vector")]
    NotWeightVector,

    #[error("vector is not highest weight: {root} does not annihilate it")]
    NotHighestWeight { root: String },

    #[error("span is not closed under the sp(4) action")]
    NotSubmodule,

    #[error("Cartan action is not semisimple on the given span")]
    NonSemisimple,

    #[error("unexpected constituent: {0}")]
    UnexpectedConstituent(String),

    #[error("lattice is not contained in the ambient lattice")]
    NotSublattice,

    #[error("not a degree-0-trivial element: {0}")]
    NotUnipotent(String),

    #[error("no stabilization within {cap} iterations: {diagnostics}")]
    IterationCap { cap: usize, diagnostics: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
