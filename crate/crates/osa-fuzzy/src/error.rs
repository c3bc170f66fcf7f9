use thiserror::Error;

/// Crate-wide error type. Construction-time validation is strict so that
/// evaluation paths stay total.
#[derive(Debug, Error)]
pub enum Error {
    #[error("breakpoints must be finite and non-decreasing: {0:?}")]
    InvalidBreakpoints(Vec<f64>),

    #[error("empty fuzzy set: membership function has zero area")]
    EmptyFuzzySet,

    #[error("centroid resolution must be at least 2 sample points, got {0}")]
    InvalidResolution(usize),

    #[error("universe [{lo}, {hi}] is not a proper interval")]
    InvalidUniverse { lo: f64, hi: f64 },

    #[error("variable `{variable}`: duplicate label `{label}`")]
    DuplicateLabel { variable: String, label: String },

    #[error("variable `{variable}`: label `{label}` support exceeds universe")]
    SupportOutsideUniverse { variable: String, label: String },

    #[error("expected {expected} rules, found {found}")]
    RuleCount { expected: usize, found: usize },

    #[error("rules {first} and {second} share the same antecedent combination")]
    DuplicateCombination { first: usize, second: usize },

    #[error("rule {rule}: unknown label `{label}` for variable `{variable}`")]
    UnknownLabel {
        rule: usize,
        variable: String,
        label: String,
    },

    #[error("rule {rule}: centroid {value} outside output universe [{lo}, {hi}]")]
    CentroidOutOfRange {
        rule: usize,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("rule {rule}: weights vector has {found} entries, output has {expected} labels")]
    WeightCount {
        rule: usize,
        expected: usize,
        found: usize,
    },

    #[error("label weights must be non-negative and not all zero")]
    AllZeroWeights,

    #[error("rule {rule}: stored centroid {stored} disagrees with weighted average {computed}")]
    InconsistentCentroid {
        rule: usize,
        stored: f64,
        computed: f64,
    },

    #[error("no rule fired for the given inputs; total firing strength is zero")]
    ZeroFiring,

    #[error("input `{0}` is not finite")]
    NonFiniteInput(String),

    #[error("scenario: {0}")]
    InvalidScenario(String),

    #[error("all secondary users are coincident with the primary user; distance normalization is undefined")]
    DegenerateDistances,

    #[error("config parse error: {0}")]
    ConfigParse(String),

    #[error("simulation duration must be positive, got {0}")]
    ZeroDuration(f64),

    #[error("invalid traffic configuration: {0}")]
    InvalidTrafficConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
