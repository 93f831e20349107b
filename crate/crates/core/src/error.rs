use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("the generator 1 is not allowed (the ideal would be the whole ring)")]
    UnitGenerator,
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("exponent overflow while raising to the power {0}")]
    ExponentOverflow(u32),
    #[error("{t} generators exceed the subset-lattice cap of {cap}")]
    LatticeTooLarge { t: usize, cap: usize },
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("Taylor resolution is not minimal: lcm of subset {subset:?} is unchanged after removing generator {removed}")]
    NotTaylorMinimal { subset: Vec<usize>, removed: usize },
    #[error("empty subset")]
    EmptySubset,
    #[error("generator {index} has degree {degree}, expected a quadratic monomial")]
    NotQuadratic { index: usize, degree: u32 },
    #[error("generators {component:?} are connected but share no common variable")]
    NoCommonVariable { component: Vec<usize> },
    #[error("denominator has zero constant term")]
    SingularDenominator,
    #[error("power series coefficient {index} is not integral")]
    NonIntegralExpansion { index: usize },
    #[error("internal degree {requested} exceeds the bound {bound}")]
    DegreeCapExceeded { requested: u32, bound: u32 },
    #[error("linear algebra block of {rows} x {cols} exceeds the size guard")]
    MatrixTooLarge { rows: usize, cols: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no closed-form Poincaré series applies: {0}")]
    NoFormulaRoute(String),
}

pub type Result<T> = std::result::Result<T, Error>;
