use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::bound::BoundCheck;
use super::fit::FitOutcome;
use crate::cover::{arc_size, Decomposition, Region, ScalarField, Support};
use crate::error::{Error, Result};
use crate::graph::{classify, DirectedEdge, Graph, GraphKind};
use crate::spectral::RateKind;

/// Element cap for brute-force enumeration at the largest radius.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    /// Explicit enumeration of cover elements.
    Enumerate,
    /// Half-edge transfer operator.
    Transfer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesOptions {
    pub method: Method,
    pub budget: u128,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions { method: Method::Transfer, budget: DEFAULT_BUDGET }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub criterion: String,
    pub pass: bool,
}

/// Radial averages of one field over one region, with whatever prediction,
/// fit and bound check have been attached.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub region: Region,
    pub support: Support,
    pub method: Method,
    pub field_norm: f64,
    pub radii: Vec<usize>,
    pub averages: Vec<f64>,
    pub targets: Vec<f64>,
    pub deviations: Vec<f64>,
    pub predicted_beta: Option<f64>,
    pub predicted_kind: Option<RateKind>,
    pub fitted: Option<FitOutcome>,
    pub bound: Option<BoundCheck>,
    pub verdicts: Vec<Verdict>,
}

impl ConvergenceReport {
    /// Whether every recorded verdict passed.
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn push_verdict(&mut self, criterion: impl Into<String>, pass: bool) {
        self.verdicts.push(Verdict { criterion: criterion.into(), pass });
    }

    /// `r,average,target,deviation,bound`; the bound column is empty until a
    /// bound check has been attached.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("r,average,target,deviation,bound\n");
        for (i, &r) in self.radii.iter().enumerate() {
            let bound = self.bound.as_ref().map(|b| format!("{:.14e}", b.bound_at(r))).unwrap_or_default();
            let _ = writeln!(
                out,
                "{r},{:.14e},{:.14e},{:.14e},{bound}",
                self.averages[i], self.targets[i], self.deviations[i]
            );
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// Limit targets per radius. On a regular bipartite graph a vertex field
/// converges to its average over the part reached at that radius, which
/// alternates with parity; elsewhere the target is the graph average.
fn targets(g: &Graph, f: &ScalarField<f64>, region: &Region, radii: &[usize]) -> Result<Vec<f64>> {
    let mean = f.mean();
    let parts = match classify(g).kind {
        GraphKind::RegularBipartite { p_part, q_part, .. } if f.support() == Support::Vertices => {
            let mut side = vec![0u8; g.vertex_count()];
            for &v in &q_part {
                side[v] = 1;
            }
            Some((side, [f.mean_over(&p_part), f.mean_over(&q_part)]))
        }
        _ => None,
    };
    let Some((side, part_mean)) = parts else {
        return Ok(vec![mean; radii.len()]);
    };
    radii
        .iter()
        .map(|&r| {
            Ok(match region.decompose(g, Support::Vertices, r)? {
                Decomposition::Points(points) => {
                    points.iter().map(|x| part_mean[side[x.projection(g)] as usize]).sum::<f64>() / points.len() as f64
                }
                Decomposition::Arcs(arcs) => {
                    let mut total = 0.0;
                    let mut weight = 0.0;
                    for a in &arcs {
                        let n = arc_size(g, DirectedEdge(a.half_edge), a.radius) as f64;
                        let s = side[a.from.projection(g)] as usize ^ (a.radius % 2);
                        total += n * part_mean[s];
                        weight += n;
                    }
                    total / weight
                }
            })
        })
        .collect()
}

/// Averages and deviations at radii `0..=radius`.
pub fn deviation_series(
    g: &Graph,
    f: &ScalarField<f64>,
    region: &Region,
    radius: usize,
    options: &SeriesOptions,
) -> Result<ConvergenceReport> {
    f.check_against(g)?;
    region.validate(g)?;
    if radius < 2 {
        return Err(Error::InsufficientData(format!("radius {radius} < 2")));
    }
    if options.method == Method::Enumerate {
        let needed = region.size(g, f.support(), radius)?;
        if needed > options.budget {
            return Err(Error::BudgetExceeded { needed, budget: options.budget });
        }
    }
    let radii: Vec<usize> = (0..=radius).collect();
    let averages = radii
        .iter()
        .map(|&r| match options.method {
            Method::Enumerate => region.average_enumerated(g, f, r),
            Method::Transfer => region.average_transfer(g, f, r),
        })
        .collect::<Result<Vec<_>>>()?;
    let targets = targets(g, f, region, &radii)?;
    let deviations = averages.iter().zip(&targets).map(|(a, t)| (a - t).abs()).collect();
    Ok(ConvergenceReport {
        region: region.clone(),
        support: f.support(),
        method: options.method,
        field_norm: f.norm(),
        radii,
        averages,
        targets,
        deviations,
        predicted_beta: None,
        predicted_kind: None,
        fitted: None,
        bound: None,
        verdicts: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Generator};

    #[test]
    fn constant_field_has_zero_deviation() {
        let g = generate(&Generator::Petersen).unwrap();
        let f = ScalarField::constant(&g, Support::Vertices, -2.5);
        let rep = deviation_series(&g, &f, &Region::Sphere(0), 8, &SeriesOptions::default()).unwrap();
        assert!(rep.deviations.iter().all(|&d| d < 1e-15));
    }

    #[test]
    fn bipartite_targets_alternate() {
        let g = generate(&Generator::CompleteBipartite(3, 3)).unwrap();
        let f = ScalarField::indicator(&g, Support::Vertices, 0);
        let a = g.out_half_edges(0)[0];
        let rep = deviation_series(&g, &f, &Region::Arc(DirectedEdge(a)), 10, &SeriesOptions::default()).unwrap();
        for (r, t) in rep.targets.iter().enumerate() {
            let expected = if r % 2 == 0 { 1.0 / 3.0 } else { 0.0 };
            assert!((t - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn enumeration_budget() {
        let g = generate(&Generator::Complete(5)).unwrap();
        let f = ScalarField::indicator(&g, Support::Vertices, 0);
        let opts = SeriesOptions { method: Method::Enumerate, budget: 1000 };
        let err = deviation_series(&g, &f, &Region::Sphere(0), 12, &opts).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 1000, .. }));
    }

    #[test]
    fn csv_has_a_row_per_radius() {
        let g = generate(&Generator::Complete(4)).unwrap();
        let f = ScalarField::indicator(&g, Support::Vertices, 0);
        let rep = deviation_series(&g, &f, &Region::Arc(DirectedEdge(0)), 5, &SeriesOptions::default()).unwrap();
        let csv = rep.to_csv();
        assert_eq!(csv.lines().count(), 7);
        assert!(csv.lines().nth(1).unwrap().starts_with("0,1.00000000000000e0,2.50000000000000e-1,7.5"));
        let back: ConvergenceReport = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
    }
}
