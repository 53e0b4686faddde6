use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("exponent length mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("monomial of degree {degree} does not fit in degree {target}")]
    DegreeOverflow { degree: u32, target: u32 },
    #[error("invalid monomial basis: {0}")]
    InvalidBasis(String),
    #[error("missing border coefficient {0}")]
    IncompleteCoefficients(String),
    #[error("multiplication matrices do not commute")]
    NotCommuting,
    #[error("expected rank {expected}, found {found}")]
    Codimension { expected: usize, found: usize },
    #[error("expected degree {expected}, found degree {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("point does not satisfy the Plücker relations")]
    NotGrassmannianPoint,
    #[error("evaluation matrix is singular")]
    SingularEvaluation,
    #[error("degenerate point configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("degree {d} is smaller than the length {mu}")]
    DegreeBelowLength { d: u32, mu: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
