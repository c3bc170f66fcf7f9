//! Simulation harness: seeded scenario generation, decision-surface grids
//! at a fixed distance slice, and a Poisson-arrival channel-access traffic
//! simulation (M/M/C/C loss system with possibility-threshold admission).

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp};

use crate::error::{Error, Result};
use crate::fls::RuleBase;
use crate::model::{
    select_user, Placement, PrimaryUser, Scenario, SecondaryUser, MOBILITY_MAX, UTILIZATION_MAX,
};

pub const DEFAULT_STEP_X1: f64 = 2.0;
pub const DEFAULT_STEP_X2: f64 = 1.0;
pub const DEFAULT_INTERFERENCE_RADIUS: f64 = 20.0;

/// Deterministic random scenario: positions uniform over the square,
/// utilization uniform on [0,100], mobility uniform on [0,10].
pub fn generate_scenario(seed: u64, n_users: usize, area: f64) -> Scenario<f64> {
    assert!(n_users >= 1 && area > 0.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let primary = PrimaryUser {
        x: rng.gen_range(0.0..=area),
        y: rng.gen_range(0.0..=area),
    };
    let secondaries = (1..=n_users)
        .map(|i| SecondaryUser {
            id: format!("SU{i}"),
            placement: Placement::Position {
                x: rng.gen_range(0.0..=area),
                y: rng.gen_range(0.0..=area),
            },
            mobility: rng.gen_range(0.0..=MOBILITY_MAX),
            utilization: rng.gen_range(0.0..=UTILIZATION_MAX),
        })
        .collect();
    Scenario {
        area,
        primary,
        secondaries,
        seed: Some(seed),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceCell {
    pub x1: f64,
    pub x2: f64,
    pub possibility: f64,
}

/// Grid of possibilities over (x1, x2) with x3 held fixed.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceGrid {
    pub fixed_value: f64,
    pub step_x1: f64,
    pub step_x2: f64,
    pub cells: Vec<SurfaceCell>,
}

impl SurfaceGrid {
    pub fn mean(&self) -> f64 {
        let sum: f64 = self.cells.iter().map(|c| c.possibility).sum();
        sum / self.cells.len() as f64
    }
}

/// Evaluate the rule base over a (utilization, mobility) grid at a fixed
/// normalized distance.
pub fn decision_surface(
    rulebase: &RuleBase<f64>,
    fixed_x3: f64,
    step_x1: f64,
    step_x2: f64,
) -> Result<SurfaceGrid> {
    if step_x1 <= 0.0 || step_x2 <= 0.0 {
        return Err(Error::InvalidTrafficConfig("grid step must be positive".into()));
    }
    let (lo1, hi1) = rulebase.inputs()[0].universe();
    let (lo2, hi2) = rulebase.inputs()[1].universe();
    let n1 = ((hi1 - lo1) / step_x1).floor() as usize + 1;
    let n2 = ((hi2 - lo2) / step_x2).floor() as usize + 1;
    let mut cells = Vec::with_capacity(n1 * n2);
    for i in 0..n1 {
        let x1 = lo1 + step_x1 * i as f64;
        for j in 0..n2 {
            let x2 = lo2 + step_x2 * j as f64;
            let y = rulebase.infer([x1, x2, fixed_x3])?;
            cells.push(SurfaceCell {
                x1,
                x2,
                possibility: y,
            });
        }
    }
    Ok(SurfaceGrid {
        fixed_value: fixed_x3,
        step_x1,
        step_x2,
        cells,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrafficConfig {
    /// Mean call arrival rate, calls per unit time.
    pub arrival_rate: f64,
    /// Mean call holding time, time units (1/mu).
    pub mean_holding_time: f64,
    pub channel_count: usize,
    /// Admission threshold on the possibility score, [0,100].
    pub admission_threshold: f64,
    /// Admitted users closer than this to the primary count as interference
    /// events, meters.
    pub interference_radius: f64,
    pub sim_duration: f64,
    pub seed: u64,
}

impl TrafficConfig {
    fn validate(&self) -> Result<()> {
        if self.sim_duration <= 0.0 {
            return Err(Error::ZeroDuration(self.sim_duration));
        }
        if !(self.arrival_rate > 0.0) {
            return Err(Error::InvalidTrafficConfig("arrival rate must be positive".into()));
        }
        if !(self.mean_holding_time > 0.0) {
            return Err(Error::InvalidTrafficConfig("holding time must be positive".into()));
        }
        if self.channel_count < 1 {
            return Err(Error::InvalidTrafficConfig("need at least one channel".into()));
        }
        if !(0.0..=100.0).contains(&self.admission_threshold) {
            return Err(Error::InvalidTrafficConfig(
                "admission threshold must lie in [0,100]".into(),
            ));
        }
        if self.interference_radius < 0.0 {
            return Err(Error::InvalidTrafficConfig(
                "interference radius must be non-negative".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrafficStats {
    pub offered_calls: u64,
    pub blocked_calls: u64,
    pub blocking_rate: f64,
    pub interference_events: u64,
    pub interference_rate: f64,
    /// Time-averaged busy channels over total channels.
    pub channel_utilization: f64,
}

/// Discrete-event loss-system simulation. Calls arrive as a Poisson
/// process; each is attributed to a uniformly chosen secondary user and
/// admitted iff a channel is free and the user's possibility clears the
/// threshold. Holding times are exponential. Statistics are collected
/// after a warm-up of 10% of the duration.
pub fn run_traffic(
    scenario: &Scenario<f64>,
    rulebase: &RuleBase<f64>,
    config: &TrafficConfig,
) -> Result<TrafficStats> {
    config.validate()?;
    let decision = select_user(scenario, rulebase)?;
    let possibilities: Vec<f64> = decision.per_user.iter().map(|u| u.possibility).collect();
    let raw_distances: Vec<f64> = decision.per_user.iter().map(|u| u.raw_distance).collect();
    let n_users = possibilities.len();

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let interarrival = Exp::new(config.arrival_rate)
        .map_err(|e| Error::InvalidTrafficConfig(e.to_string()))?;
    let holding = Exp::new(1.0 / config.mean_holding_time)
        .map_err(|e| Error::InvalidTrafficConfig(e.to_string()))?;

    let warm_up = 0.1 * config.sim_duration;
    let horizon = config.sim_duration;
    // departure times of busy channels, min-first
    let mut departures: BinaryHeap<Reverse<u64>> = BinaryHeap::new();
    let to_bits = |t: f64| t.to_bits(); // times are non-negative; bit order == numeric order

    let mut offered = 0u64;
    let mut blocked = 0u64;
    let mut interference = 0u64;
    let mut busy_time = 0.0; // integral of busy-channel count over [warm_up, horizon]
    let mut clock = 0.0f64;

    let mut measure = |busy: usize, from: f64, to: f64| {
        let lo = from.max(warm_up);
        let hi = to.min(horizon);
        if hi > lo {
            busy_time += busy as f64 * (hi - lo);
        }
    };

    loop {
        let next_arrival = clock + interarrival.sample(&mut rng);
        // release channels that free up before the next event of interest
        while let Some(&Reverse(bits)) = departures.peek() {
            let dep = f64::from_bits(bits);
            if dep > next_arrival.min(horizon) {
                break;
            }
            measure(departures.len(), clock, dep);
            clock = dep;
            departures.pop();
        }
        if next_arrival > horizon {
            measure(departures.len(), clock, horizon);
            break;
        }
        measure(departures.len(), clock, next_arrival);
        clock = next_arrival;

        let user = rng.gen_range(0..n_users);
        let counted = clock >= warm_up;
        if counted {
            offered += 1;
        }
        let channel_free = departures.len() < config.channel_count;
        let admitted = channel_free && possibilities[user] >= config.admission_threshold;
        if admitted {
            let dep = clock + holding.sample(&mut rng);
            departures.push(Reverse(to_bits(dep)));
            debug_assert!(departures.len() <= config.channel_count);
            if counted && raw_distances[user] < config.interference_radius {
                interference += 1;
            }
        } else if counted {
            blocked += 1;
        }
    }

    let measured = horizon - warm_up;
    Ok(TrafficStats {
        offered_calls: offered,
        blocked_calls: blocked,
        blocking_rate: if offered > 0 {
            blocked as f64 / offered as f64
        } else {
            0.0
        },
        interference_events: interference,
        interference_rate: if offered > 0 {
            interference as f64 / offered as f64
        } else {
            0.0
        },
        channel_utilization: busy_time / (config.channel_count as f64 * measured),
    })
}

/// One `run_traffic` per arrival rate with otherwise identical config;
/// run i uses seed + i.
pub fn sweep_arrival_rates(
    scenario: &Scenario<f64>,
    rulebase: &RuleBase<f64>,
    base_config: &TrafficConfig,
    arrival_rates: &[f64],
) -> Result<Vec<(f64, TrafficStats)>> {
    if arrival_rates.is_empty() {
        return Err(Error::InvalidTrafficConfig("empty arrival-rate list".into()));
    }
    arrival_rates
        .iter()
        .enumerate()
        .map(|(i, &lambda)| {
            let config = TrafficConfig {
                arrival_rate: lambda,
                seed: base_config.seed + i as u64,
                ..*base_config
            };
            run_traffic(scenario, rulebase, &config).map(|s| (lambda, s))
        })
        .collect()
}
