use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series cutoffs differ: {left:?} vs {right:?}")]
    CutoffMismatch { left: Vec<u32>, right: Vec<u32> },

    #[error("geometric factor needs a nonzero exponent vector")]
    DegenerateGeometric,

    #[error("column heights {0:?} are not unimodal")]
    NotUnimodal(Vec<u32>),

    #[error("invalid pyramid: {0}")]
    InvalidPyramid(String),

    #[error("invalid shift matrix: {0}")]
    InvalidShiftMatrix(String),

    #[error("invalid Young diagram: {0}")]
    InvalidDiagram(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("framing vector {0:?} is not weakly increasing")]
    NonMonotoneFraming(Vec<u32>),

    #[error("stratum data inconsistent: {0}")]
    InvalidStratum(String),

    #[error("more than one fixed point with empty repelling cell for v = {0:?}")]
    MultipleBasePoints(Vec<u32>),

    #[error("invalid spectral data: {0}")]
    InvalidSpectralData(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutations have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),

    #[error("l-weight is not l-dominant: {0}")]
    NotDominant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
