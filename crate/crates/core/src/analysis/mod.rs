//! Empirical convergence: deviation series, rate fits, bound checks and
//! the structural checks behind them.

mod bound;
mod checks;
mod fit;
mod series;

pub use bound::{
    bound_check, bound_check_series, bound_check_with_constant, calibrate, uniform_bound_check, BoundCheck,
    BOUND_ABS_SLACK, BOUND_REL_SLACK, DEFAULT_CALIBRATION,
};
pub use checks::{
    check_bipartite_split, check_doob_condition, check_lemma_gap, check_ramanujan, check_sphere_decomposition,
    CheckOutcome, CHECK_TOL,
};
pub use fit::{fit_rate, fit_series, FitOutcome, DEFAULT_WINDOW, DEVIATION_FLOOR, MIN_FIT_POINTS};
pub use series::{deviation_series, ConvergenceReport, Method, SeriesOptions, Verdict, DEFAULT_BUDGET};

use crate::cover::{Region, ScalarField};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{rate_prediction, RateKind, Theorem};

/// Deviation series, rate prediction for `f`, bound check and fit in one
/// report. A field without nonconstant components gets a zero prediction.
pub fn analyse(
    g: &Graph,
    f: &ScalarField<f64>,
    region: &Region,
    theorem: Theorem,
    radius: usize,
    options: &SeriesOptions,
) -> Result<ConvergenceReport> {
    let mut report = deviation_series(g, f, region, radius, options)?;
    let (beta, kind) = match rate_prediction(g, Some(f), theorem) {
        Ok(p) => (p.beta_max, p.kind),
        Err(Error::OnlyConstantSpectrum) => (0.0, RateKind::ExactOneStep),
        Err(e) => return Err(e),
    };
    report.predicted_beta = Some(beta);
    report.predicted_kind = Some(kind);
    let pass = bound_check(&mut report, DEFAULT_CALIBRATION).is_some_and(|b| b.pass);
    report.push_verdict("bound", pass);
    report.fitted = fit_rate(&mut report).ok();
    Ok(report)
}
