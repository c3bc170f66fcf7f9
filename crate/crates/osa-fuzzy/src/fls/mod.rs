//! Domain-neutral single-output fuzzy inference: membership evaluation,
//! centroid computation, product t-norm rule firing, and center-of-sets
//! defuzzification.

mod config;
mod membership;
mod rule;
mod variable;

pub use config::{
    canonical_rulebase, LabelConfig, RuleBaseConfig, RuleConfig, VariableConfig,
    CANONICAL_RULEBASE_TOML,
};
pub use membership::MembershipFunction;
pub use rule::{
    rule_consequent_centroid, Rule, RuleBase, DEFAULT_CENTROID_RESOLUTION, INPUT_COUNT,
};
pub use variable::FuzzyVariable;
