use thiserror::Error;

/// Errors raised by the exact-arithmetic engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic value {0} is not rational")]
    NotRational(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("intersection form is not symmetric")]
    NotSymmetric,
    #[error(
        "intersection form has signature ({positive}, {negative}) with {null} null directions, \
         expected (1, {expected_negative})"
    )]
    BadSignature {
        positive: usize,
        negative: usize,
        null: usize,
        expected_negative: usize,
    },
    #[error("polarization has H·H = {0}, expected a positive value")]
    NotAmpleSquare(String),
    #[error("unknown divisor `{0}`")]
    UnknownDivisor(String),
    #[error("branch component `{0}` listed twice")]
    DuplicateComponent(String),
    #[error("crossing number {value} between `{first}` and `{second}` is not a nonnegative integer")]
    NegativeCrossing {
        first: String,
        second: String,
        value: String,
    },
    #[error("root order must be at least 1")]
    InvalidRootOrder,
    #[error("stacky coefficient {value} along `{component}` is not an integer")]
    NonIntegralTwist { component: String, value: String },
    #[error("sheaves are defined over different root stacks")]
    ModelMismatch,
    #[error("characteristic {p} divides the root order {r}")]
    WildCharacteristic { p: u64, r: u32 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("weight {weight} is not a multiple of 1/{r}")]
    WeightDenominatorMismatch { weight: String, r: u32 },
    #[error("invalid parabolic weights: {0}")]
    InvalidWeights(String),
    #[error("inconsistent sector data: {0}")]
    InconsistentSectorData(String),
    #[error("surface model has no Euler number")]
    MissingEulerNumber,
    #[error("generating sheaf violates Condition ⋆")]
    ConditionStarViolated,
    #[error("sheaf is not generating: {0}")]
    NotGenerating(String),
    #[error("slope term list is empty")]
    EmptySlopeTerms,
    #[error("missing field `{0}`")]
    MissingField(&'static str),
    #[error("rank must be at least 2")]
    RankOne,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("missing geometry: {0}")]
    MissingGeometry(String),
    #[error("internal identity failed: {0}")]
    IdentityFailure(String),
    #[error("value {0} does not fit the scalar type")]
    Overflow(String),
}

impl Error {
    /// Variant name, stable across releases; used as the error code in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotRational { .. } => "NotRational",
            Error::DivisionByZero => "DivisionByZero",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotSymmetric => "NotSymmetric",
            Error::BadSignature { .. } => "BadSignature",
            Error::NotAmpleSquare { .. } => "NotAmpleSquare",
            Error::UnknownDivisor { .. } => "UnknownDivisor",
            Error::DuplicateComponent { .. } => "DuplicateComponent",
            Error::NegativeCrossing { .. } => "NegativeCrossing",
            Error::InvalidRootOrder => "InvalidRootOrder",
            Error::NonIntegralTwist { .. } => "NonIntegralTwist",
            Error::ModelMismatch => "ModelMismatch",
            Error::WildCharacteristic { .. } => "WildCharacteristic",
            Error::NotPrime { .. } => "NotPrime",
            Error::WeightDenominatorMismatch { .. } => "WeightDenominatorMismatch",
            Error::InvalidWeights { .. } => "InvalidWeights",
            Error::InconsistentSectorData { .. } => "InconsistentSectorData",
            Error::MissingEulerNumber => "MissingEulerNumber",
            Error::ConditionStarViolated => "ConditionStarViolated",
            Error::NotGenerating { .. } => "NotGenerating",
            Error::EmptySlopeTerms => "EmptySlopeTerms",
            Error::MissingField { .. } => "MissingField",
            Error::RankOne => "RankOne",
            Error::InvalidPolygon { .. } => "InvalidPolygon",
            Error::InvalidArgument { .. } => "InvalidArgument",
            Error::MissingGeometry { .. } => "MissingGeometry",
            Error::IdentityFailure { .. } => "IdentityFailure",
            Error::Overflow { .. } => "Overflow",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
