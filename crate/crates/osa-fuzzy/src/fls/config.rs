//! TOML schema for rule bases: variable universes, label breakpoints, and
//! the rule table (antecedent label names, consequent name, centroid,
//! optional per-label weights).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fls::{FuzzyVariable, MembershipFunction, Rule, RuleBase, INPUT_COUNT};
use crate::Real;

pub const CANONICAL_RULEBASE_TOML: &str = include_str!("../../data/rulebase.toml");

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RuleBaseConfig {
    pub input: Vec<VariableConfig>,
    pub output: VariableConfig,
    pub rule: Vec<RuleConfig>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VariableConfig {
    pub name: String,
    pub universe: [f64; 2],
    pub label: Vec<LabelConfig>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabelConfig {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trapezoid: Option<[f64; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangle: Option<[f64; 3]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RuleConfig {
    pub antecedents: Vec<String>,
    pub consequent: String,
    pub centroid: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<f64>>,
}

impl RuleBaseConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::ConfigParse(e.to_string()))
    }

    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string_pretty(self).map_err(|e| Error::ConfigParse(e.to_string()))
    }

    pub fn build<F: Real>(&self) -> Result<RuleBase<F>> {
        if self.input.len() != INPUT_COUNT {
            return Err(Error::ConfigParse(format!(
                "expected {INPUT_COUNT} input variables, found {}",
                self.input.len()
            )));
        }
        let mut inputs = Vec::with_capacity(INPUT_COUNT);
        for v in &self.input {
            inputs.push(build_variable::<F>(v)?);
        }
        let inputs: [FuzzyVariable<F>; INPUT_COUNT] = inputs
            .try_into()
            .unwrap_or_else(|_| unreachable!("length checked above"));
        let output = build_variable::<F>(&self.output)?;

        let mut rules = Vec::with_capacity(self.rule.len());
        for (i, rc) in self.rule.iter().enumerate() {
            if rc.antecedents.len() != INPUT_COUNT {
                return Err(Error::ConfigParse(format!(
                    "rule {}: expected {INPUT_COUNT} antecedent labels, found {}",
                    i + 1,
                    rc.antecedents.len()
                )));
            }
            let mut antecedents = [0usize; INPUT_COUNT];
            for (k, name) in rc.antecedents.iter().enumerate() {
                antecedents[k] =
                    inputs[k]
                        .label_index(name)
                        .ok_or_else(|| Error::UnknownLabel {
                            rule: i + 1,
                            variable: inputs[k].name().to_string(),
                            label: name.clone(),
                        })?;
            }
            let consequent = output
                .label_index(&rc.consequent)
                .ok_or_else(|| Error::UnknownLabel {
                    rule: i + 1,
                    variable: output.name().to_string(),
                    label: rc.consequent.clone(),
                })?;
            rules.push(Rule {
                antecedents,
                consequent,
                centroid: real_from(rc.centroid)?,
                label_weights: rc
                    .weights
                    .as_ref()
                    .map(|w| w.iter().map(|x| real_from(*x)).collect::<Result<Vec<F>>>())
                    .transpose()?,
            });
        }
        RuleBase::new(inputs, output, rules)
    }

    /// Inverse of `build`: a config document that re-parses to an equal
    /// rule base.
    pub fn from_rulebase<F: Real>(rb: &RuleBase<F>) -> Self {
        let var_config = |v: &FuzzyVariable<F>| VariableConfig {
            name: v.name().to_string(),
            universe: [
                v.universe().0.to_f64().unwrap(),
                v.universe().1.to_f64().unwrap(),
            ],
            label: v
                .labels()
                .iter()
                .map(|(name, mf)| {
                    let (trapezoid, triangle) = match *mf {
                        MembershipFunction::Trapezoid { a, b, c, d } => (
                            Some([
                                a.to_f64().unwrap(),
                                b.to_f64().unwrap(),
                                c.to_f64().unwrap(),
                                d.to_f64().unwrap(),
                            ]),
                            None,
                        ),
                        MembershipFunction::Triangle { a, b, c } => (
                            None,
                            Some([a.to_f64().unwrap(), b.to_f64().unwrap(), c.to_f64().unwrap()]),
                        ),
                    };
                    LabelConfig {
                        name: name.clone(),
                        trapezoid,
                        triangle,
                    }
                })
                .collect(),
        };
        RuleBaseConfig {
            input: rb.inputs().iter().map(var_config).collect(),
            output: var_config(rb.output()),
            rule: rb
                .rules()
                .iter()
                .map(|r| RuleConfig {
                    antecedents: r
                        .antecedents
                        .iter()
                        .enumerate()
                        .map(|(k, &a)| rb.inputs()[k].labels()[a].0.clone())
                        .collect(),
                    consequent: rb.output().labels()[r.consequent].0.clone(),
                    centroid: r.centroid.to_f64().unwrap(),
                    weights: r
                        .label_weights
                        .as_ref()
                        .map(|w| w.iter().map(|x| x.to_f64().unwrap()).collect()),
                })
                .collect(),
        }
    }
}

fn build_variable<F: Real>(v: &VariableConfig) -> Result<FuzzyVariable<F>> {
    let mut labels = Vec::with_capacity(v.label.len());
    for l in &v.label {
        let mf = match (&l.trapezoid, &l.triangle) {
            (Some([a, b, c, d]), None) => MembershipFunction::trapezoid(
                real_from(*a)?,
                real_from(*b)?,
                real_from(*c)?,
                real_from(*d)?,
            )?,
            (None, Some([a, b, c])) => {
                MembershipFunction::triangle(real_from(*a)?, real_from(*b)?, real_from(*c)?)?
            }
            _ => {
                return Err(Error::ConfigParse(format!(
                    "label `{}` of `{}` must set exactly one of `trapezoid` or `triangle`",
                    l.name, v.name
                )))
            }
        };
        labels.push((l.name.clone(), mf));
    }
    FuzzyVariable::new(
        v.name.clone(),
        (real_from(v.universe[0])?, real_from(v.universe[1])?),
        labels,
    )
}

fn real_from<F: Real>(x: f64) -> Result<F> {
    F::from_f64(x).ok_or_else(|| Error::ConfigParse(format!("value {x} not representable")))
}

/// The bundled rule base: published rule table and centroids over the
/// default uniform Ruspini partitions.
pub fn canonical_rulebase<F: Real>() -> Result<RuleBase<F>> {
    RuleBaseConfig::from_toml_str(CANONICAL_RULEBASE_TOML)?.build()
}
