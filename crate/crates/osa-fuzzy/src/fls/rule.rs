use crate::error::{Error, Result};
use crate::fls::FuzzyVariable;
use crate::Real;

pub const INPUT_COUNT: usize = 3;

/// Default sample count for consequent-set centroid computation.
pub const DEFAULT_CENTROID_RESOLUTION: usize = 1001;

/// One IF-THEN rule: an antecedent label per input variable, a consequent
/// label, and the numeric consequent centroid used by center-of-sets
/// defuzzification. `label_weights`, when present, are the per-output-label
/// response counts whose weighted average must reproduce the centroid.
#[derive(Debug, Clone, PartialEq)]
pub struct Rule<F: Real> {
    pub antecedents: [usize; INPUT_COUNT],
    pub consequent: usize,
    pub centroid: F,
    pub label_weights: Option<Vec<F>>,
}

/// Weighted average of output-label centroids: sum(w_i * c_i) / sum(w_i).
pub fn rule_consequent_centroid<F: Real>(weights: &[F], centroids: &[F]) -> Result<F> {
    assert_eq!(weights.len(), centroids.len());
    if weights.iter().any(|w| *w < F::zero()) {
        return Err(Error::AllZeroWeights);
    }
    let total = weights.iter().fold(F::zero(), |acc, w| acc + *w);
    if total <= F::zero() {
        return Err(Error::AllZeroWeights);
    }
    let num = weights
        .iter()
        .zip(centroids)
        .fold(F::zero(), |acc, (w, c)| acc + *w * *c);
    Ok(num / total)
}

/// A complete single-output rule base: three input variables, one output
/// variable, and one rule per antecedent-label combination.
#[derive(Debug, Clone, PartialEq)]
pub struct RuleBase<F: Real> {
    inputs: [FuzzyVariable<F>; INPUT_COUNT],
    output: FuzzyVariable<F>,
    rules: Vec<Rule<F>>,
}

impl<F: Real> RuleBase<F> {
    pub fn new(
        inputs: [FuzzyVariable<F>; INPUT_COUNT],
        output: FuzzyVariable<F>,
        rules: Vec<Rule<F>>,
    ) -> Result<Self> {
        let expected: usize = inputs.iter().map(|v| v.label_count()).product();
        if rules.len() != expected {
            return Err(Error::RuleCount {
                expected,
                found: rules.len(),
            });
        }
        // every combination exactly once
        for (i, rule) in rules.iter().enumerate() {
            for (k, &a) in rule.antecedents.iter().enumerate() {
                assert!(a < inputs[k].label_count(), "rule {i}: antecedent index out of range");
            }
            assert!(rule.consequent < output.label_count(), "rule {i}: consequent index out of range");
            if let Some(j) = rules[..i]
                .iter()
                .position(|r| r.antecedents == rule.antecedents)
            {
                return Err(Error::DuplicateCombination {
                    first: j + 1,
                    second: i + 1,
                });
            }
        }
        let (lo, hi) = output.universe();
        let tol = F::from_f64(1e-9).unwrap();
        let mut output_centroids: Option<Vec<F>> = None;
        for (i, rule) in rules.iter().enumerate() {
            if rule.centroid < lo || rule.centroid > hi {
                return Err(Error::CentroidOutOfRange {
                    rule: i + 1,
                    value: rule.centroid.to_f64().unwrap_or(f64::NAN),
                    lo: lo.to_f64().unwrap(),
                    hi: hi.to_f64().unwrap(),
                });
            }
            if let Some(weights) = &rule.label_weights {
                if weights.len() != output.label_count() {
                    return Err(Error::WeightCount {
                        rule: i + 1,
                        expected: output.label_count(),
                        found: weights.len(),
                    });
                }
                let centroids = match &output_centroids {
                    Some(c) => c,
                    None => {
                        let c: Result<Vec<F>> = output
                            .labels()
                            .iter()
                            .map(|(_, mf)| mf.centroid(DEFAULT_CENTROID_RESOLUTION))
                            .collect();
                        output_centroids = Some(c?);
                        output_centroids.as_ref().unwrap()
                    }
                };
                let avg = rule_consequent_centroid(weights, centroids)?;
                if (avg - rule.centroid).abs() > tol {
                    return Err(Error::InconsistentCentroid {
                        rule: i + 1,
                        stored: rule.centroid.to_f64().unwrap_or(f64::NAN),
                        computed: avg.to_f64().unwrap_or(f64::NAN),
                    });
                }
            }
        }
        Ok(Self { inputs, output, rules })
    }

    pub fn inputs(&self) -> &[FuzzyVariable<F>; INPUT_COUNT] {
        &self.inputs
    }

    pub fn output(&self) -> &FuzzyVariable<F> {
        &self.output
    }

    pub fn rules(&self) -> &[Rule<F>] {
        &self.rules
    }

    /// Clamp each input to its variable's universe.
    pub fn clamp_inputs(&self, inputs: [F; INPUT_COUNT]) -> [F; INPUT_COUNT] {
        let mut out = inputs;
        for (k, x) in out.iter_mut().enumerate() {
            *x = self.inputs[k].clamp(*x);
        }
        out
    }

    /// Product t-norm over the rule's antecedent degrees. Out-of-universe
    /// inputs are clamped to the boundary.
    pub fn firing_strength(&self, rule: &Rule<F>, inputs: [F; INPUT_COUNT]) -> F {
        let inputs = self.clamp_inputs(inputs);
        rule.antecedents
            .iter()
            .enumerate()
            .fold(F::one(), |acc, (k, &label)| {
                acc * self.inputs[k].membership(label, inputs[k])
            })
    }

    /// Input point at which the rule's three antecedent labels all have
    /// degree 1.
    pub fn prototype_point(&self, rule: &Rule<F>) -> [F; INPUT_COUNT] {
        let mut point = [F::zero(); INPUT_COUNT];
        for (k, &label) in rule.antecedents.iter().enumerate() {
            point[k] = self.inputs[k].prototype(label);
        }
        point
    }

    /// Center-of-sets inference: the firing-strength-weighted average of the
    /// rules' consequent centroids.
    pub fn infer(&self, inputs: [F; INPUT_COUNT]) -> Result<F> {
        for (k, x) in inputs.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::NonFiniteInput(self.inputs[k].name().to_string()));
            }
        }
        let inputs = self.clamp_inputs(inputs);
        let mut num = F::zero();
        let mut den = F::zero();
        for rule in &self.rules {
            let fire = self.firing_strength(rule, inputs);
            num = num + fire * rule.centroid;
            den = den + fire;
        }
        if den <= F::zero() {
            return Err(Error::ZeroFiring);
        }
        Ok(num / den)
    }
}
