//! Overall convergence-rate prediction from the active spectrum of a field.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::fourier::fourier_coefficients;
use super::rates::{beta_regular_edge, beta_regular_vertex, RateKind, EIGENVALUE_TOL};
use super::semiregular::beta_semiregular_edge;
use super::{edge_laplacian, eig_sym, vertex_laplacian, SpectralDecomposition};
use crate::cover::{ScalarField, Support};
use crate::error::{Error, Result};
use crate::graph::{classify, Graph, GraphKind};

/// Which family of arc averages the prediction is for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    /// Vertex functions on a nonbipartite regular graph.
    RegularVertex,
    /// Edge functions on a simple regular graph.
    RegularEdge,
    /// Edge functions on a simple semiregular graph with `p, q >= 2`.
    SemiregularEdge,
    /// Vertex functions on a regular bipartite graph, read separately on
    /// even and odd radii.
    BipartiteVertex,
}

impl Theorem {
    pub fn support(self) -> Support {
        match self {
            Theorem::RegularVertex | Theorem::BipartiteVertex => Support::Vertices,
            Theorem::RegularEdge | Theorem::SemiregularEdge => Support::Edges,
        }
    }

    /// Selector by number: 1, 2, 3, or `"bipartite"`.
    pub fn parse(s: &str) -> Option<Theorem> {
        match s {
            "1" => Some(Theorem::RegularVertex),
            "2" => Some(Theorem::RegularEdge),
            "3" => Some(Theorem::SemiregularEdge),
            "bipartite" | "b" => Some(Theorem::BipartiteVertex),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Theorem::RegularVertex => "1",
            Theorem::RegularEdge => "2",
            Theorem::SemiregularEdge => "3",
            Theorem::BipartiteVertex => "bipartite",
        }
    }
}

/// Degree parameters extracted once the graph fits the selected theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    Regular { q: usize },
    Semiregular { p: usize, q: usize },
}

/// Checks that `g` satisfies the hypotheses of `theorem`.
pub fn check_hypothesis(g: &Graph, theorem: Theorem) -> Result<Hypothesis> {
    let c = classify(g);
    let mismatch = |why: &str| Err(Error::ClassificationMismatch(why.to_string()));
    match (theorem, c.kind) {
        (Theorem::RegularVertex, GraphKind::Regular { q }) if q >= 2 => Ok(Hypothesis::Regular { q }),
        (Theorem::RegularVertex, GraphKind::RegularBipartite { .. }) => mismatch("graph is bipartite"),
        (Theorem::RegularVertex, _) => mismatch("needs a regular graph of degree at least 3"),
        (Theorem::BipartiteVertex, GraphKind::RegularBipartite { q, .. }) if q >= 2 => Ok(Hypothesis::Regular { q }),
        (Theorem::BipartiteVertex, _) => mismatch("needs a regular bipartite graph of degree at least 3"),
        (Theorem::RegularEdge, _) if !c.simple => mismatch("graph is not simple"),
        (Theorem::RegularEdge, GraphKind::Regular { q } | GraphKind::RegularBipartite { q, .. }) if q >= 2 => {
            Ok(Hypothesis::Regular { q })
        }
        (Theorem::RegularEdge, _) => mismatch("needs a regular graph of degree at least 3"),
        (Theorem::SemiregularEdge, _) if !c.simple => mismatch("graph is not simple"),
        (Theorem::SemiregularEdge, GraphKind::Semiregular { p, q, .. }) if p >= 2 && q >= 2 => {
            Ok(Hypothesis::Semiregular { p, q })
        }
        (Theorem::SemiregularEdge, GraphKind::RegularBipartite { q, .. }) if q >= 2 => {
            Ok(Hypothesis::Semiregular { p: q, q })
        }
        (Theorem::SemiregularEdge, _) => mismatch("needs a semiregular graph with p, q >= 2"),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueRate {
    pub mu: f64,
    pub multiplicity: usize,
    pub beta: f64,
    pub kind: RateKind,
    /// Whether the field has a nonzero projection on this eigenspace.
    pub active: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatePrediction {
    pub theorem: Theorem,
    pub per_eigenvalue: Vec<EigenvalueRate>,
    pub beta_max: f64,
    /// Kind of the eigenvalue attaining `beta_max`; polynomial wins ties.
    pub kind: RateKind,
    /// True when inactive eigenspaces were left out of `beta_max`.
    pub active_only: bool,
}

impl RatePrediction {
    /// Rows `mu,multiplicity,beta,kind,active` with 15 significant digits.
    pub fn spectrum_csv(&self) -> String {
        let mut out = String::from("mu,multiplicity,beta,kind,active\n");
        for e in &self.per_eigenvalue {
            let _ = writeln!(out, "{:.14e},{},{:.14e},{},{}", e.mu, e.multiplicity, e.beta, e.kind.name(), e.active);
        }
        out
    }
}

/// The Laplacian spectrum matching `theorem`.
pub fn spectrum_for(g: &Graph, theorem: Theorem) -> Result<SpectralDecomposition<f64>> {
    match theorem.support() {
        Support::Vertices => eig_sym(&vertex_laplacian::<f64>(g)?),
        Support::Edges => eig_sym(&edge_laplacian::<f64>(g)?),
    }
}

/// Rate for one eigenvalue under `hypothesis`. `None` marks the eigenvalues
/// excluded from the maximum (`1`, and `-1` for the bipartite split).
fn eigenvalue_rate(theorem: Theorem, hypothesis: Hypothesis, mu: f64) -> Result<Option<(f64, RateKind)>> {
    if (mu - 1.0).abs() <= EIGENVALUE_TOL {
        return Ok(None);
    }
    let term = match (theorem, hypothesis) {
        (Theorem::BipartiteVertex, Hypothesis::Regular { q }) => {
            if (mu + 1.0).abs() <= EIGENVALUE_TOL {
                return Ok(None);
            }
            beta_regular_vertex(mu.abs(), q)?
        }
        (Theorem::RegularVertex, Hypothesis::Regular { q }) => beta_regular_vertex(mu, q)?,
        (Theorem::RegularEdge, Hypothesis::Regular { q }) => beta_regular_edge(mu, q)?,
        (Theorem::SemiregularEdge, Hypothesis::Semiregular { p, q }) => beta_semiregular_edge(mu, p, q)?,
        _ => unreachable!("hypothesis is produced from the theorem"),
    };
    Ok(Some((term.beta, term.kind)))
}

/// Predicted per-radius rate of arc averages towards the graph average.
///
/// With a field, only eigenspaces it projects onto count; without one the
/// maximum runs over the whole nontrivial spectrum.
pub fn rate_prediction(g: &Graph, f: Option<&ScalarField<f64>>, theorem: Theorem) -> Result<RatePrediction> {
    let hypothesis = check_hypothesis(g, theorem)?;
    let spectrum = spectrum_for(g, theorem)?;
    rate_prediction_with(&spectrum, hypothesis, f, theorem)
}

/// As [`rate_prediction`] with a precomputed spectrum.
pub fn rate_prediction_with(
    spectrum: &SpectralDecomposition<f64>,
    hypothesis: Hypothesis,
    f: Option<&ScalarField<f64>>,
    theorem: Theorem,
) -> Result<RatePrediction> {
    let coefficients = f.map(|f| fourier_coefficients(f, spectrum)).transpose()?;
    let mut per_eigenvalue = Vec::with_capacity(spectrum.eigenspaces.len());
    let mut best: Option<(f64, RateKind)> = None;
    for (i, space) in spectrum.eigenspaces.iter().enumerate() {
        let active = coefficients.as_ref().is_none_or(|c| c.is_active(i));
        let rate = eigenvalue_rate(theorem, hypothesis, space.value)?;
        let (beta, kind) = rate.unwrap_or((0.0, RateKind::ExactOneStep));
        if active && rate.is_some() {
            best = Some(match best {
                Some((b, k)) if b > beta + EIGENVALUE_TOL => (b, k),
                Some((b, k)) if (b - beta).abs() <= EIGENVALUE_TOL && k == RateKind::GeometricWithPolynomialFactor => {
                    (b, k)
                }
                _ => (beta, kind),
            });
        }
        per_eigenvalue.push(EigenvalueRate { mu: space.value, multiplicity: space.multiplicity(), beta, kind, active });
    }
    let (beta_max, kind) = best.ok_or(Error::OnlyConstantSpectrum)?;
    Ok(RatePrediction { theorem, per_eigenvalue, beta_max, kind, active_only: f.is_some() })
}
