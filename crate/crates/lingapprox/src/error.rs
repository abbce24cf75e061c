use thiserror::Error;

/// Errors shared across the whole engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sets live on different universes: '{left}' vs '{right}'")]
    UniverseMismatch { left: String, right: String },

    #[error("{op} takes {expected} operand(s)")]
    ArityError { op: &'static str, expected: usize },

    #[error("alpha level {0} outside (0, 1]")]
    InvalidAlpha(f64),

    #[error("reference set is empty at every usable alpha level")]
    EmptyReference,

    #[error("universe '{0}': {1}")]
    InvalidUniverse(String, String),

    #[error("membership {value} at index {index} outside [0, 1]")]
    MembershipOutOfRange { index: usize, value: f64 },

    #[error("membership vector has length {got}, universe '{universe}' has {expected} points")]
    LengthMismatch {
        universe: String,
        got: usize,
        expected: usize,
    },

    #[error("shape of '{0}' has no support on the universe")]
    ShapeOutOfRange(String),

    #[error("shape parameters of '{0}' must be nondecreasing")]
    ShapeNotOrdered(String),

    #[error("unknown modifier '{0}'")]
    UnknownModifier(String),

    #[error("duplicate name '{0}' in vocabulary")]
    DuplicateName(String),

    #[error("name '{0}' collides with a reserved token")]
    ReservedName(String),

    #[error("unknown token '{0}'")]
    UnknownToken(String),

    #[error("unexpected token '{0}'")]
    UnexpectedToken(String),

    #[error("empty label expression")]
    EmptyExpression,

    #[error("modifier '{0}' is not followed by a term")]
    DanglingModifier(String),

    #[error("unbalanced parentheses")]
    UnbalancedParens,

    #[error("label expression exceeds depth limit {0}")]
    DepthExceeded(usize),

    #[error("unknown name '{0}'")]
    UnknownName(String),

    #[error("fuzzy set is empty (all memberships zero)")]
    EmptyFuzzySet,

    #[error("vocabulary has no terms")]
    VocabularyEmpty,

    #[error("quantifier set is empty")]
    EmptyQuantifierSet,

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
