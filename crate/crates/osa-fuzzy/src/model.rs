//! The cognitive-radio domain layer: users and positions, distance
//! normalization, per-user possibility scores, and maximum-possibility
//! user selection.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fls::RuleBase;
use crate::Real;

pub const MOBILITY_MAX: f64 = 10.0;
pub const UTILIZATION_MAX: f64 = 100.0;
pub const NORMALIZED_DISTANCE_MAX: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimaryUser<F: Real> {
    pub x: F,
    pub y: F,
}

/// How a secondary user's distance to the primary is obtained: from a
/// position in the scenario area, or given directly as an already
/// normalized value on [0,10] (clamped if above).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Placement<F: Real> {
    Position { x: F, y: F },
    NormalizedDistance(F),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SecondaryUser<F: Real> {
    pub id: String,
    pub placement: Placement<F>,
    /// Degree of mobility on [0,10].
    pub mobility: F,
    /// Spectrum-utilization efficiency on [0,100].
    pub utilization: F,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario<F: Real> {
    /// Side length of the square area, in meters.
    pub area: F,
    pub primary: PrimaryUser<F>,
    pub secondaries: Vec<SecondaryUser<F>>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct UserOutcome<F: Real> {
    pub id: String,
    /// Raw distance to the primary user, meters (or the given value when
    /// distances are pre-normalized).
    pub raw_distance: F,
    /// Distance scaled to [0,10].
    pub normalized_distance: F,
    pub possibility: F,
}

/// Per-user evaluation plus the argmax choice.
#[derive(Debug, Clone, PartialEq)]
pub struct AccessDecision<F: Real> {
    pub per_user: Vec<UserOutcome<F>>,
    pub chosen: String,
}

pub fn euclidean_distance<F: Real>(su_x: F, su_y: F, pu: &PrimaryUser<F>) -> F {
    let dx = su_x - pu.x;
    let dy = su_y - pu.y;
    (dx * dx + dy * dy).sqrt()
}

/// Scale raw distances to [0,10] by the maximum: the farthest user maps to
/// exactly 10.
pub fn normalize_distances<F: Real>(raw: &[F]) -> Result<Vec<F>> {
    let max = raw.iter().cloned().fold(F::zero(), F::max);
    if max <= F::zero() {
        return Err(Error::DegenerateDistances);
    }
    let scale = F::from_f64(NORMALIZED_DISTANCE_MAX).unwrap();
    Ok(raw.iter().map(|d| *d / max * scale).collect())
}

/// Possibility that the user is granted access, from the canonical input
/// ordering (utilization, mobility, normalized distance).
pub fn possibility<F: Real>(
    utilization: F,
    mobility: F,
    normalized_distance: F,
    rulebase: &RuleBase<F>,
) -> Result<F> {
    rulebase.infer([utilization, mobility, normalized_distance])
}

impl<F: Real> Scenario<F> {
    pub fn validate(&self) -> Result<()> {
        if self.secondaries.is_empty() {
            return Err(Error::InvalidScenario("no secondary users".into()));
        }
        if !(self.area > F::zero()) {
            return Err(Error::InvalidScenario("area must be positive".into()));
        }
        let inside = |v: F| v >= F::zero() && v <= self.area;
        if !inside(self.primary.x) || !inside(self.primary.y) {
            return Err(Error::InvalidScenario(
                "primary user outside the area".into(),
            ));
        }
        let mob_max = F::from_f64(MOBILITY_MAX).unwrap();
        let util_max = F::from_f64(UTILIZATION_MAX).unwrap();
        let mut prenormalized = None;
        for (i, su) in self.secondaries.iter().enumerate() {
            if self.secondaries[..i].iter().any(|o| o.id == su.id) {
                return Err(Error::InvalidScenario(format!(
                    "duplicate secondary id `{}`",
                    su.id
                )));
            }
            if su.mobility < F::zero() || su.mobility > mob_max {
                return Err(Error::InvalidScenario(format!(
                    "`{}`: mobility outside [0,{MOBILITY_MAX}]",
                    su.id
                )));
            }
            if su.utilization < F::zero() || su.utilization > util_max {
                return Err(Error::InvalidScenario(format!(
                    "`{}`: utilization outside [0,{UTILIZATION_MAX}]",
                    su.id
                )));
            }
            let is_pre = match su.placement {
                Placement::Position { x, y } => {
                    if !inside(x) || !inside(y) {
                        return Err(Error::InvalidScenario(format!(
                            "`{}`: position outside the area",
                            su.id
                        )));
                    }
                    false
                }
                Placement::NormalizedDistance(d) => {
                    if !d.is_finite() || d < F::zero() {
                        return Err(Error::InvalidScenario(format!(
                            "`{}`: invalid distance",
                            su.id
                        )));
                    }
                    true
                }
            };
            match prenormalized {
                None => prenormalized = Some(is_pre),
                Some(p) if p != is_pre => {
                    return Err(Error::InvalidScenario(
                        "cannot mix positioned and pre-normalized users".into(),
                    ))
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// Raw distance of every secondary user to the primary, in file order.
    pub fn raw_distances(&self) -> Vec<F> {
        self.secondaries
            .iter()
            .map(|su| match su.placement {
                Placement::Position { x, y } => euclidean_distance(x, y, &self.primary),
                Placement::NormalizedDistance(d) => d,
            })
            .collect()
    }

    fn uses_prenormalized_distances(&self) -> bool {
        matches!(
            self.secondaries.first().map(|s| &s.placement),
            Some(Placement::NormalizedDistance(_))
        )
    }
}

/// Evaluate every secondary user through the rule base and pick the one
/// with the highest possibility. Ties break to the lowest id.
pub fn select_user<F: Real>(
    scenario: &Scenario<F>,
    rulebase: &RuleBase<F>,
) -> Result<AccessDecision<F>> {
    scenario.validate()?;
    let raw = scenario.raw_distances();
    let cap = F::from_f64(NORMALIZED_DISTANCE_MAX).unwrap();
    let normalized = if scenario.uses_prenormalized_distances() {
        raw.iter().map(|d| d.min(cap)).collect()
    } else {
        normalize_distances(&raw)?
    };
    let mut per_user = Vec::with_capacity(scenario.secondaries.len());
    for ((su, d), nd) in scenario.secondaries.iter().zip(&raw).zip(&normalized) {
        let y = possibility(su.utilization, su.mobility, *nd, rulebase)?;
        per_user.push(UserOutcome {
            id: su.id.clone(),
            raw_distance: *d,
            normalized_distance: *nd,
            possibility: y,
        });
    }
    let chosen = per_user
        .iter()
        .fold(None::<&UserOutcome<F>>, |best, u| match best {
            None => Some(u),
            Some(b) => {
                if u.possibility > b.possibility
                    || (u.possibility == b.possibility && u.id < b.id)
                {
                    Some(u)
                } else {
                    Some(b)
                }
            }
        })
        .expect("non-empty after validate")
        .id
        .clone();
    Ok(AccessDecision { per_user, chosen })
}

// --- scenario file schema ---

#[derive(Debug, Serialize, Deserialize)]
struct ScenarioFile {
    area: f64,
    #[serde(default)]
    distances_prenormalized: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    primary: PrimaryFile,
    secondary: Vec<SecondaryFile>,
}

#[derive(Debug, Serialize, Deserialize)]
struct PrimaryFile {
    x: f64,
    y: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct SecondaryFile {
    id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    y: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    distance: Option<f64>,
    mobility: f64,
    utilization: f64,
}

impl<F: Real> Scenario<F> {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let file: ScenarioFile =
            toml::from_str(text).map_err(|e| Error::ConfigParse(e.to_string()))?;
        let conv = |x: f64| {
            F::from_f64(x)
                .ok_or_else(|| Error::ConfigParse(format!("value {x} not representable")))
        };
        let mut secondaries = Vec::with_capacity(file.secondary.len());
        for su in &file.secondary {
            let placement = if file.distances_prenormalized {
                let d = su.distance.ok_or_else(|| {
                    Error::ConfigParse(format!("`{}`: missing `distance`", su.id))
                })?;
                Placement::NormalizedDistance(conv(d)?)
            } else {
                match (su.x, su.y) {
                    (Some(x), Some(y)) => Placement::Position {
                        x: conv(x)?,
                        y: conv(y)?,
                    },
                    _ => {
                        return Err(Error::ConfigParse(format!(
                            "`{}`: missing `x`/`y` position",
                            su.id
                        )))
                    }
                }
            };
            secondaries.push(SecondaryUser {
                id: su.id.clone(),
                placement,
                mobility: conv(su.mobility)?,
                utilization: conv(su.utilization)?,
            });
        }
        let scenario = Scenario {
            area: conv(file.area)?,
            primary: PrimaryUser {
                x: conv(file.primary.x)?,
                y: conv(file.primary.y)?,
            },
            secondaries,
            seed: file.seed,
        };
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn to_toml_string(&self) -> Result<String> {
        let f = |x: F| x.to_f64().unwrap();
        let prenorm = self.uses_prenormalized_distances();
        let file = ScenarioFile {
            area: f(self.area),
            distances_prenormalized: prenorm,
            seed: self.seed,
            primary: PrimaryFile {
                x: f(self.primary.x),
                y: f(self.primary.y),
            },
            secondary: self
                .secondaries
                .iter()
                .map(|su| {
                    let (x, y, distance) = match su.placement {
                        Placement::Position { x, y } => (Some(f(x)), Some(f(y)), None),
                        Placement::NormalizedDistance(d) => (None, None, Some(f(d))),
                    };
                    SecondaryFile {
                        id: su.id.clone(),
                        x,
                        y,
                        distance,
                        mobility: f(su.mobility),
                        utilization: f(su.utilization),
                    }
                })
                .collect(),
        };
        toml::to_string_pretty(&file).map_err(|e| Error::ConfigParse(e.to_string()))
    }
}

pub const TABLE3_SCENARIO_TOML: &str = include_str!("../data/table3.scenario");
