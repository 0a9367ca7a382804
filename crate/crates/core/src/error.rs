use thiserror::Error;

/// Errors raised by the domain operations.
///
/// The display strings are part of the command-line contract: the CLI prints
/// them verbatim, so keep them short and stable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-invertible matrix")]
    NonInvertibleMatrix,

    #[error("resultant of zero form undefined")]
    ZeroFormResultant,

    #[error("bad characteristic: {0}")]
    BadCharacteristic(String),

    #[error("invalid branch degrees: {0}")]
    InvalidBranchDegrees(String),

    #[error("degenerates to uniform cover; use picard_uniform")]
    DegenerateTriple,

    #[error("d1 even and d2 odd: swap the branch degrees (the stacks for (d1, d2) and (d2, d1) are canonically isomorphic)")]
    SwapRequired,

    #[error("non-integral class")]
    NonIntegralClass,

    #[error("class not Γ-invariant")]
    NotGammaInvariant,

    #[error("no closed-form isomorphism given for d = {d} and n + 1 = {m}")]
    NoClosedFormIsomorphism { d: u32, m: u32 },

    #[error("no discriminant locus (rd = 1)")]
    NoDiscriminantLocus,

    #[error("enumeration budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid form: {0}")]
    InvalidForm(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
