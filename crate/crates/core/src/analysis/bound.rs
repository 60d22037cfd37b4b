use serde::{Deserialize, Serialize};

use super::series::ConvergenceReport;
use crate::spectral::RateKind;

pub const DEFAULT_CALIBRATION: usize = 4;
/// Floating-point slack on the bound: relative, then absolute.
pub const BOUND_REL_SLACK: f64 = 1e-9;
pub const BOUND_ABS_SLACK: f64 = 1e-13;

/// `dev(r) <= C_hat (1 + r)^k beta^r`, with `k = 1` under the polynomial
/// flag and `C_hat` calibrated on `r <= calibration`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub beta: f64,
    pub polynomial: bool,
    pub calibration: usize,
    pub c_hat: f64,
    /// Radii past the calibration window where the bound fails.
    pub violations: Vec<usize>,
    pub pass: bool,
}

impl BoundCheck {
    fn envelope(beta: f64, polynomial: bool, r: usize) -> f64 {
        let g = beta.powi(r as i32);
        if polynomial {
            (1 + r) as f64 * g
        } else {
            g
        }
    }

    pub fn bound_at(&self, r: usize) -> f64 {
        self.c_hat * Self::envelope(self.beta, self.polynomial, r)
    }
}

/// Calibrates `C_hat` on the leading radii and tests the remaining ones.
pub fn bound_check_series(
    radii: &[usize],
    deviations: &[f64],
    beta: f64,
    kind: RateKind,
    calibration: usize,
) -> BoundCheck {
    let c_hat = calibrate(radii, deviations, beta, kind, calibration);
    bound_check_with_constant(radii, deviations, beta, kind, calibration, c_hat)
}

/// Largest `dev(r) / envelope(r)` over `r <= calibration`; deviations within
/// the absolute slack count as zero.
pub fn calibrate(radii: &[usize], deviations: &[f64], beta: f64, kind: RateKind, calibration: usize) -> f64 {
    let polynomial = kind == RateKind::GeometricWithPolynomialFactor;
    radii
        .iter()
        .zip(deviations)
        .filter(|(&r, _)| r <= calibration)
        .map(|(&r, &d)| if d <= BOUND_ABS_SLACK { 0.0 } else { d / BoundCheck::envelope(beta, polynomial, r) })
        .fold(0.0, f64::max)
}

/// Tests radii past `calibration` against a given constant.
pub fn bound_check_with_constant(
    radii: &[usize],
    deviations: &[f64],
    beta: f64,
    kind: RateKind,
    calibration: usize,
    c_hat: f64,
) -> BoundCheck {
    let polynomial = kind == RateKind::GeometricWithPolynomialFactor;
    let mut check = BoundCheck { beta, polynomial, calibration, c_hat, violations: Vec::new(), pass: true };
    for (&r, &d) in radii.iter().zip(deviations) {
        if r > calibration {
            let b = check.bound_at(r);
            if d > b * (1.0 + BOUND_REL_SLACK) + BOUND_ABS_SLACK {
                check.violations.push(r);
            }
        }
    }
    check.pass = check.violations.is_empty();
    check
}

/// Bound check against the report's own prediction, stored in the report.
/// Returns `None` when no prediction has been attached.
pub fn bound_check(report: &mut ConvergenceReport, calibration: usize) -> Option<&BoundCheck> {
    let beta = report.predicted_beta?;
    let kind = report.predicted_kind.unwrap_or(RateKind::ExactGeometric);
    report.bound = Some(bound_check_series(&report.radii, &report.deviations, beta, kind, calibration));
    report.bound.as_ref()
}

/// One constant for a family of reports sharing a prediction, e.g. every
/// base half-edge of a graph: `C_hat` is the largest calibrated constant
/// over the family and each report is checked against it. Returns the
/// shared constant, or `None` if some report has no prediction.
pub fn uniform_bound_check(reports: &mut [ConvergenceReport], calibration: usize) -> Option<f64> {
    let mut c_hat = 0.0f64;
    for r in reports.iter() {
        let beta = r.predicted_beta?;
        let kind = r.predicted_kind.unwrap_or(RateKind::ExactGeometric);
        c_hat = c_hat.max(calibrate(&r.radii, &r.deviations, beta, kind, calibration));
    }
    for r in reports.iter_mut() {
        let (beta, kind) = (r.predicted_beta?, r.predicted_kind.unwrap_or(RateKind::ExactGeometric));
        r.bound = Some(bound_check_with_constant(&r.radii, &r.deviations, beta, kind, calibration, c_hat));
    }
    Some(c_hat)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_geometric_passes_and_halved_fails() {
        let radii: Vec<usize> = (0..=15).collect();
        let dev: Vec<f64> = radii.iter().map(|&r| 0.3 * 0.6f64.powi(r as i32)).collect();
        let ok = bound_check_series(&radii, &dev, 0.6, RateKind::ExactGeometric, 4);
        assert!(ok.pass);
        assert!((ok.c_hat - 0.3).abs() < 1e-12);
        let bad = bound_check_series(&radii, &dev, 0.3, RateKind::ExactGeometric, 4);
        assert!(!bad.pass);
        assert_eq!(bad.violations, (5..=15).collect::<Vec<_>>());
    }

    #[test]
    fn zero_series() {
        let radii: Vec<usize> = (0..=10).collect();
        let c = bound_check_series(&radii, &[0.0; 11], 0.5, RateKind::ExactGeometric, 4);
        assert!(c.pass);
        assert_eq!(c.c_hat, 0.0);
    }

    #[test]
    fn polynomial_envelope() {
        let radii: Vec<usize> = (0..=30).collect();
        let dev: Vec<f64> = radii.iter().map(|&r| (1 + r) as f64 * 0.5f64.powi(r as i32)).collect();
        assert!(!bound_check_series(&radii, &dev, 0.5, RateKind::ExactGeometric, 4).pass);
        assert!(bound_check_series(&radii, &dev, 0.5, RateKind::GeometricWithPolynomialFactor, 4).pass);
    }
}
