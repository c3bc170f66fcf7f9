//! Output formatting: 6-significant-digit floats, CSV tables, and their
//! JSON mirrors.

use serde_json::{json, Value};

use crate::model::AccessDecision;
use crate::sim::{SurfaceGrid, TrafficStats};
use crate::Real;

/// Format with 6 significant digits.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0.00000".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn decision_csv<F: Real>(decision: &AccessDecision<F>) -> String {
    let mut out = String::from("id,d_i,D_i,possibility,chosen\n");
    for u in &decision.per_user {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            u.id,
            sig6(u.raw_distance.to_f64().unwrap()),
            sig6(u.normalized_distance.to_f64().unwrap()),
            sig6(u.possibility.to_f64().unwrap()),
            u32::from(u.id == decision.chosen),
        ));
    }
    out
}

pub fn decision_json<F: Real>(decision: &AccessDecision<F>) -> Value {
    json!({
        "per_user": decision.per_user.iter().map(|u| json!({
            "id": u.id,
            "d_i": u.raw_distance.to_f64().unwrap(),
            "D_i": u.normalized_distance.to_f64().unwrap(),
            "possibility": u.possibility.to_f64().unwrap(),
            "chosen": u.id == decision.chosen,
        })).collect::<Vec<_>>(),
        "chosen": decision.chosen,
    })
}

pub fn surface_csv(grid: &SurfaceGrid) -> String {
    let mut out = String::from("x1,x2,possibility\n");
    for cell in &grid.cells {
        out.push_str(&format!(
            "{},{},{}\n",
            sig6(cell.x1),
            sig6(cell.x2),
            sig6(cell.possibility)
        ));
    }
    out
}

pub fn surface_json(grid: &SurfaceGrid) -> Value {
    json!({
        "fixed_axis": "x3",
        "fixed_value": grid.fixed_value,
        "cells": grid.cells.iter().map(|c| json!({
            "x1": c.x1, "x2": c.x2, "possibility": c.possibility,
        })).collect::<Vec<_>>(),
    })
}

pub fn traffic_csv(series: &[(f64, TrafficStats)]) -> String {
    let mut out =
        String::from("lambda,offered,blocked,blocking_rate,interference_rate,channel_utilization\n");
    for (lambda, stats) in series {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            sig6(*lambda),
            stats.offered_calls,
            stats.blocked_calls,
            sig6(stats.blocking_rate),
            sig6(stats.interference_rate),
            sig6(stats.channel_utilization),
        ));
    }
    out
}

pub fn traffic_json(series: &[(f64, TrafficStats)]) -> Value {
    json!(series
        .iter()
        .map(|(lambda, s)| json!({
            "lambda": lambda,
            "offered": s.offered_calls,
            "blocked": s.blocked_calls,
            "blocking_rate": s.blocking_rate,
            "interference_rate": s.interference_rate,
            "channel_utilization": s.channel_utilization,
        }))
        .collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig6_examples() {
        assert_eq!(sig6(28.59), "28.5900");
        assert_eq!(sig6(0.110074), "0.110074");
        assert_eq!(sig6(123456.7), "123457");
        assert_eq!(sig6(0.000123456), "0.000123456");
        assert_eq!(sig6(-5.0), "-5.00000");
        assert_eq!(sig6(0.0), "0.00000");
    }
}
