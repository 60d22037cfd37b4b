use serde::{Deserialize, Serialize};

use super::series::ConvergenceReport;
use crate::error::{Error, Result};

/// Deviations below this are treated as exact zeros.
pub const DEVIATION_FLOOR: f64 = 1e-13;
pub const DEFAULT_WINDOW: usize = 3;
pub const MIN_FIT_POINTS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum FitOutcome {
    Rate(f64),
    NonConvergent,
}

impl FitOutcome {
    pub fn rate(self) -> Option<f64> {
        match self {
            FitOutcome::Rate(b) => Some(b),
            FitOutcome::NonConvergent => None,
        }
    }
}

/// Empirical rate of `deviations[r]` over `radii`: least squares on the log
/// of the running maximum over `window` consecutive radii.
pub fn fit_series(radii: &[usize], deviations: &[f64], window: usize) -> Result<FitOutcome> {
    let window = window.max(1);
    if deviations.len() < window {
        return Err(Error::InsufficientData(format!("{} radii, window {window}", deviations.len())));
    }
    let points: Vec<(f64, f64)> = deviations
        .windows(window)
        .zip(radii)
        .map(|(w, &r)| (r as f64, w.iter().copied().fold(0.0, f64::max)))
        .filter(|&(_, m)| m >= DEVIATION_FLOOR)
        .map(|(r, m)| (r, m.ln()))
        .collect();
    if points.len() < MIN_FIT_POINTS {
        return Err(Error::InsufficientData(format!("{} usable radii, need {MIN_FIT_POINTS}", points.len())));
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = points.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    let decreasing = points.last().unwrap().1 < points[0].1;
    if !decreasing || slope >= 0.0 {
        return Ok(FitOutcome::NonConvergent);
    }
    Ok(FitOutcome::Rate(slope.exp()))
}

/// Fits the report's deviations with the default window and stores the
/// outcome.
pub fn fit_rate(report: &mut ConvergenceReport) -> Result<FitOutcome> {
    let outcome = fit_series(&report.radii, &report.deviations, DEFAULT_WINDOW)?;
    report.fitted = Some(outcome);
    Ok(outcome)
}
