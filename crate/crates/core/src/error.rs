use thiserror::Error;

/// Errors raised by the algebra kernel, the builders and the solvers.
///
/// `DivisionNotExact` and `InternalNonMonic` indicate a broken algebraic
/// invariant rather than bad input; the CLI maps them to exit status 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact")]
    DivisionNotExact,
    #[error("division by zero")]
    DivisionByZero,
    #[error("leading coefficient must be nonzero")]
    ZeroLeadingCoefficient,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("companion matrix needs a polynomial of degree at least 1")]
    ZeroOrConstantPolynomial,
    #[error("bezout matrix needs at least one non-constant polynomial")]
    BothConstant,
    #[error("bad dimensions: {0}")]
    BadDimensions(String),
    #[error("index tuples have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("|delta| = {sum} exceeds deg F0 = {d0}")]
    DeltaTooLarge { sum: usize, d0: usize },
    #[error("delta0 = {0} is negative; the Sylvester matrix is undefined")]
    NegativeDelta0(i64),
    #[error("deg F{index} = {degree} exceeds deg F0 = {d0}; bezout construction undefined")]
    DegreeTooHigh {
        index: usize,
        degree: usize,
        d0: usize,
    },
    #[error("roots must be pairwise distinct")]
    RepeatedRoots,
    #[error("input polynomial must have degree at least 1")]
    ConstantInput,
    #[error("polynomial F{0} is zero")]
    ZeroPolynomial(usize),
    #[error("a tuple needs F0 and at least one more polynomial")]
    TupleTooShort,
    #[error("gcd candidate is not monic after normalisation")]
    InternalNonMonic,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    /// True when the error signals a violated invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::DivisionNotExact | Error::InternalNonMonic | Error::Inconsistent(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
