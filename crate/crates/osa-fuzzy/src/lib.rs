//! Fuzzy-logic opportunistic spectrum access for cognitive radio.
//!
//! For each secondary user the library computes a possibility score from
//! three descriptors (spectrum-utilization efficiency, degree of mobility,
//! normalized distance to the primary user) via a 27-rule product t-norm
//! fuzzy system with center-of-sets defuzzification, then selects the
//! maximum-possibility user. A simulation harness produces decision-surface
//! grids and Poisson-traffic channel-access statistics as CSV.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

pub mod error;
pub mod fls;
pub mod model;
pub mod report;
pub mod sim;

pub use error::{Error, Result};

/// Scalar type for all core math; satisfied by `f32` and `f64`.
pub trait Real: Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static {}

impl<T> Real for T where
    T: Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

pub type MembershipFunction64 = fls::MembershipFunction<f64>;
pub type MembershipFunction32 = fls::MembershipFunction<f32>;
pub type FuzzyVariable64 = fls::FuzzyVariable<f64>;
pub type FuzzyVariable32 = fls::FuzzyVariable<f32>;
pub type RuleBase64 = fls::RuleBase<f64>;
pub type RuleBase32 = fls::RuleBase<f32>;
pub type Scenario64 = model::Scenario<f64>;
pub type AccessDecision64 = model::AccessDecision<f64>;
