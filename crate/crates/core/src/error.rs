use thiserror::Error;

/// Every failure the library can report. Each variant maps to a stable
/// error code (see [`Error::code`]) that the CLI prints alongside the message.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0:?} is not an irreducible monic polynomial of degree {1}")]
    ReducibleModulus(Vec<u32>, u32),
    #[error("division by zero")]
    DivZero,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("generator {0} is singular")]
    SingularGenerator(usize),
    #[error("group order exceeds the limit of {0}")]
    OrderExceeded(usize),
    #[error("group algebra is not semisimple: |G| = {order} is divisible by p = {p}")]
    NotSemisimple { order: usize, p: u32 },
    #[error("algebra element is not central")]
    NotCentral,
    #[error("algebra element is not idempotent")]
    NotIdempotent,
    #[error("module is zero")]
    ZeroModule,
    #[error("{num} is not divisible by {den}")]
    NotDivisible { num: usize, den: usize },
    #[error("component has {size} vectors, above the scan cap of {cap}; supply idempotents or reduce the instance")]
    ComponentTooLarge { size: u128, cap: u128 },
    #[error("closed form requires multiplicity 1 in the group algebra")]
    MultNotOne,
    #[error("k = {k} exceeds the multiplicity {n}")]
    KTooLarge { k: usize, n: usize },
    #[error("inexact division in Gaussian binomial (corrupted table)")]
    InexactDivision,
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
    #[error("no group translate of the generator survives the idempotent")]
    NoTranslate,
    #[error("instance too large: {size} exceeds cap {cap}")]
    TooLarge { size: u128, cap: u128 },
    #[error("matrix is not monomial")]
    NotMonomial,
    #[error("|G| = {order} does not divide n = {n}")]
    BadT { order: usize, n: usize },
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("input error at {location}: {message}")]
    Input { location: String, message: String },
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "E_NOT_PRIME",
            Error::ReducibleModulus(..) => "E_REDUCIBLE_MODULUS",
            Error::DivZero => "E_DIV_ZERO",
            Error::DimMismatch { .. } => "E_DIM_MISMATCH",
            Error::SingularGenerator(_) => "E_SINGULAR_GENERATOR",
            Error::OrderExceeded(_) => "E_ORDER_EXCEEDED",
            Error::NotSemisimple { .. } => "E_NOT_SEMISIMPLE",
            Error::NotCentral => "E_NOT_CENTRAL",
            Error::NotIdempotent => "E_NOT_IDEMPOTENT",
            Error::ZeroModule => "E_ZERO_MODULE",
            Error::NotDivisible { .. } => "E_NOT_DIVISIBLE",
            Error::ComponentTooLarge { .. } => "E_COMPONENT_TOO_LARGE",
            Error::MultNotOne => "E_MULT_NOT_ONE",
            Error::KTooLarge { .. } => "E_K_TOO_LARGE",
            Error::InexactDivision => "E_INEXACT_DIVISION",
            Error::InconsistentInput(_) => "E_INCONSISTENT_INPUT",
            Error::NoTranslate => "E_NO_TRANSLATE",
            Error::TooLarge { .. } => "E_TOO_LARGE",
            Error::NotMonomial => "E_NOT_MONOMIAL",
            Error::BadT { .. } => "E_BAD_T",
            Error::BudgetExceeded(_) => "E_BUDGET_EXCEEDED",
            Error::Input { .. } => "E_INPUT",
        }
    }

    /// True for failures caused by a resource cap rather than by bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::OrderExceeded(_)
                | Error::ComponentTooLarge { .. }
                | Error::TooLarge { .. }
                | Error::BudgetExceeded(_)
        )
    }

    pub(crate) fn input(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Input { location: location.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
