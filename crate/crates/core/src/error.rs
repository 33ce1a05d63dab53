//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("unrecognized field spec `{0}` (expected `fp:<prime>` or `q`)")]
    BadFieldSpec(String),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("operation requires an amenable group; free groups carry no box Folner sequence")]
    NonAmenableGroup,
    #[error("tile shape must be non-empty")]
    EmptyTile,
    #[error("set is not contained in the tiling window")]
    WindowNotContained,

    #[error("polynomial parse error at offset {offset}: {message}")]
    PolyParse { offset: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("ambient variable lists disagree: {0}")]
    AmbientMismatch(String),

    #[error("pattern support does not cover the translated memory set at {0}")]
    InsufficientSupport(String),
    #[error("pattern support mismatch: expected {expected}, got {got}")]
    SupportMismatch { expected: String, got: String },
    #[error("local rule arity {arity} does not match memory size {memory}")]
    RuleArity { arity: usize, memory: usize },
    #[error("rule table is not total on the memory tuple space")]
    TableNotTotal,
    #[error("alphabet value {0} is invalid for this alphabet")]
    BadValue(String),
    #[error("alphabet is not sampleable: {0}")]
    NonSampleableAlphabet(String),
    #[error("alphabet is not finite: {0}")]
    AlphabetNotFinite(String),

    #[error("variety ideal is the unit ideal; the variety is empty")]
    EmptyVariety,
    #[error("basepoint does not lie on the variety")]
    BasepointOffVariety,
    #[error("target value does not lie on the variety at site {0}")]
    TargetOffVariety(String),
    #[error("no basepoint available and no samples requested")]
    MissingBasepoint,
    #[error("per-tile constraint dimension {given} exceeds the allowed maximum {max}")]
    ConstraintDimensionTooLarge { given: usize, max: usize },
    #[error("candidate subset ideal cuts out the whole window space")]
    CandidateNotProper,
    #[error("candidate subset ideal does not contain the window product ideal")]
    CandidateMissingWindowIdeal,
    #[error("rule is not algebraic (polynomial components required)")]
    NonAlgebraicRule,
    #[error("rule is not linear")]
    NonLinearRule,
    #[error("supplied configuration is not a kernel configuration: {0}")]
    KernelConfigInvalid(String),
    #[error("enumeration space too large: {0}")]
    EnumerationTooLarge(String),
    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
