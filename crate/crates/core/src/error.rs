use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {modulus:#x} does not yield an element of order {n}")]
    NonPrimitiveModulus { modulus: u32, n: u32 },
    #[error("m = {0} is outside the supported table range 1..=8")]
    UnsupportedSize(u32),
    #[error("modulus {modulus:#x} does not have degree {expected}")]
    BadModulusDegree { modulus: u32, expected: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomials over different base fields")]
    FieldMismatch,
    #[error("{value} is not coprime to {modulus}")]
    NonCoprime { value: u64, modulus: u64 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(&'static str),
    #[error("m = {m} is not covered: {reason}")]
    InapplicableM { m: u32, reason: &'static str },
    #[error("defining set is not closed: {member} * q is missing")]
    NotClosed { member: u64 },
    #[error("residue {residue} is outside [0, {n})")]
    OutOfRange { residue: u64, n: u64 },
    #[error("coefficient alpha^{exponent} does not lie in the embedded GF(4)")]
    NotInSubfield { exponent: u32 },
    #[error("0 already lies in the defining set")]
    AlreadyEven,
    #[error("enumeration of q^{k} words (q = {q}) exceeds the budget of {budget}")]
    BudgetExceeded { q: u32, k: usize, budget: u64 },
    #[error("MacWilliams transform produced a non-integral count at weight {weight}")]
    NonIntegralResult { weight: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("context is for m = {ctx}, requested m = {requested}")]
    ContextMismatch { ctx: u32, requested: u32 },
    #[error("operation needs a code over GF({expected})")]
    WrongAlphabet { expected: u32 },
    #[error("invalid symbol {0:?}")]
    InvalidSymbol(char),
}
