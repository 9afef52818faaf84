use thiserror::Error;

/// Errors raised by the algebra kernels.
///
/// Verification failures are never errors: they are recorded in reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {target} is not a multiple of {from}")]
    BadEmbedding { from: u32, target: u32 },
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("polynomial is not homogeneous (degrees {0} and {1})")]
    NotHomogeneous(u32, u32),
    #[error("missing value for parameter `{0}`")]
    MissingParameter(String),
    #[error("polynomial has symbolic parameters where a numeric one is required")]
    NotNumeric,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("element order exceeds cap {0}")]
    OrderExceedsCap(usize),
    #[error("group closure exceeds cap {0}")]
    CapExceeded(usize),
    #[error("matrix is not monomial with root-of-unity entries")]
    NotMonomial,
    #[error("diag(1, E(m)^a, E(m)^b) with (m, a, b) = ({m}, {a}, {b}) does not have projective order m")]
    BadType { m: u32, a: u32, b: u32 },
    #[error("degree must be at least {min}, got {got}")]
    DegreeTooSmall { min: u32, got: u32 },
    #[error("unknown generator `{0}` in relation word")]
    UnknownGenerator(String),
    #[error("no reference group for label {0}")]
    NoReference(String),
    #[error("invalid label `{0}`")]
    BadLabel(String),
}

pub type Result<T> = std::result::Result<T, Error>;
