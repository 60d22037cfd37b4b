//! Structural facts about spheres, spectra and eigenfunctions as runnable
//! checks.

use serde::{Deserialize, Serialize};

use super::bound::{bound_check, DEFAULT_CALIBRATION};
use super::series::{deviation_series, ConvergenceReport, SeriesOptions};
use crate::cover::{arc_edges, arc_vertices, set_average, sphere_edges, sphere_vertices, Region, ScalarField, Support};
use crate::error::{Error, Result};
use crate::graph::{classify, DirectedEdge, Graph, GraphKind};
use crate::scalar::Scalar;
use crate::spectral::semiregular::forbidden_gap;
use crate::spectral::{
    check_hypothesis, edge_laplacian, eig_sym, rate_prediction, Hypothesis, Regime, SpectralDecomposition, Theorem,
};

/// Tolerance for spectral facts (gap, Ramanujan bound, star sums, exact
/// eigenfunction decay).
pub const CHECK_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub pass: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        CheckOutcome { pass, detail: detail.into() }
    }
}

/// Sphere averages against the equally weighted mean of the arc averages
/// at the root, and sphere sizes against the summed arc sizes, for
/// `1 <= r <= radius`. Comparisons are exact equalities, so an exact scalar
/// type checks the identity itself rather than its rounding.
pub fn check_sphere_decomposition<T: Scalar>(
    g: &Graph,
    v0: usize,
    f: &ScalarField<T>,
    radius: usize,
) -> Result<CheckOutcome> {
    f.check_against(g)?;
    if v0 >= g.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: v0, count: g.vertex_count() });
    }
    let out = g.out_half_edges(v0);
    for r in 1..=radius {
        let (sphere_avg, sphere_len, arc_avgs, arc_len) = match f.support() {
            Support::Vertices => {
                let s = sphere_vertices(g, v0, r);
                let arcs: Vec<_> = out.iter().map(|&h| arc_vertices(g, DirectedEdge(h), r)).collect();
                let avgs = arcs.iter().map(|a| set_average(g, f, a)).collect::<Result<Vec<_>>>()?;
                (set_average(g, f, &s)?, s.len(), avgs, arcs.iter().map(Vec::len).sum::<usize>())
            }
            Support::Edges => {
                let s = sphere_edges(g, v0, r);
                let arcs: Vec<_> = out.iter().map(|&h| arc_edges(g, DirectedEdge(h), r)).collect();
                let avgs = arcs.iter().map(|a| set_average(g, f, a)).collect::<Result<Vec<_>>>()?;
                (set_average(g, f, &s)?, s.len(), avgs, arcs.iter().map(Vec::len).sum::<usize>())
            }
        };
        let mean = arc_avgs.into_iter().fold(T::zero(), |acc, a| acc + a) / T::from_count(out.len());
        if sphere_len != arc_len {
            return Ok(CheckOutcome::new(false, format!("r = {r}: sphere has {sphere_len} elements, arcs {arc_len}")));
        }
        if sphere_avg != mean {
            return Ok(CheckOutcome::new(
                false,
                format!("r = {r}: sphere average {:?} differs from arc mean {:?}", sphere_avg, mean),
            ));
        }
    }
    Ok(CheckOutcome::new(true, format!("{} arcs, radii 1..={radius}", out.len())))
}

/// No edge-Laplacian eigenvalue strictly between `(min(p,q)-1)/(p+q)` and
/// `(max(p,q)-1)/(p+q)`.
pub fn check_lemma_gap(g: &Graph) -> Result<CheckOutcome> {
    let (p, q) = match classify(g).kind {
        GraphKind::Semiregular { p, q, .. } => (p, q),
        GraphKind::RegularBipartite { q, .. } => (q, q),
        _ => return Err(Error::ClassificationMismatch("needs a semiregular graph".into())),
    };
    let (lo, hi) = forbidden_gap::<f64>(p, q);
    if p == q {
        return Ok(CheckOutcome::new(true, "p = q: the gap is empty"));
    }
    let spectrum = eig_sym(&edge_laplacian::<f64>(g)?)?;
    let inside: Vec<f64> =
        spectrum.eigenvalues.iter().copied().filter(|&m| m > lo + CHECK_TOL && m < hi - CHECK_TOL).collect();
    Ok(CheckOutcome::new(inside.is_empty(), format!("gap ({lo}, {hi}); eigenvalues inside: {inside:?}")))
}

/// On a regular bipartite graph, arc averages at even radii approach the
/// average over the base vertex's part and at odd radii the other part's,
/// within the geometric bound built from the eigenvalues other than `±1`.
pub fn check_bipartite_split(
    g: &Graph,
    f: &ScalarField<f64>,
    a: DirectedEdge,
    radius: usize,
) -> Result<(CheckOutcome, ConvergenceReport)> {
    check_hypothesis(g, Theorem::BipartiteVertex)?;
    let mut report = deviation_series(g, f, &Region::Arc(a), radius, &SeriesOptions::default())?;
    match rate_prediction(g, Some(f), Theorem::BipartiteVertex) {
        Ok(prediction) => {
            report.predicted_beta = Some(prediction.beta_max);
            report.predicted_kind = Some(prediction.kind);
            let pass = bound_check(&mut report, DEFAULT_CALIBRATION).is_some_and(|b| b.pass);
            report.push_verdict("bipartite split bound", pass);
            let detail = format!("beta_max = {}", prediction.beta_max);
            Ok((CheckOutcome::new(pass, detail), report))
        }
        Err(Error::OnlyConstantSpectrum) => {
            // f lies in the span of the two parity eigenfunctions: arcs see
            // their part averages exactly
            let worst = report.deviations.iter().copied().fold(0.0, f64::max);
            let pass = worst <= CHECK_TOL;
            report.push_verdict("bipartite split exact", pass);
            Ok((CheckOutcome::new(pass, format!("exact parity constants, max deviation {worst:e}")), report))
        }
        Err(e) => Err(e),
    }
}

/// Every vertex eigenvalue other than `±1` satisfies
/// `|μ| <= 2√q/(q+1)`.
pub fn check_ramanujan(g: &Graph) -> Result<bool> {
    let q = match classify(g).kind {
        GraphKind::Regular { q } | GraphKind::RegularBipartite { q, .. } if q >= 2 => q,
        _ => return Err(Error::ClassificationMismatch("needs a regular graph of degree at least 3".into())),
    };
    let spectrum = eig_sym(&crate::spectral::vertex_laplacian::<f64>(g)?)?;
    let limit = 2.0 * (q as f64).sqrt() / (q + 1) as f64 + CHECK_TOL;
    Ok(spectrum.eigenvalues.iter().filter(|&&m| (m.abs() - 1.0).abs() > CHECK_TOL).all(|m| m.abs() <= limit))
}

/// The bottom edge eigenvalue: `-1/q` on regular graphs, `-2/(p+q)` on
/// semiregular ones.
fn star_eigenvalue(hypothesis: Hypothesis) -> f64 {
    match hypothesis {
        Hypothesis::Regular { q } => -1.0 / q as f64,
        Hypothesis::Semiregular { p, q } => -2.0 / (p + q) as f64,
    }
}

/// Eigenvectors at the bottom edge eigenvalue sum to zero around every
/// vertex, and their arc averages shrink by exactly `-1/(children)` per
/// radius, checked against enumeration for `n <= radius` from every base
/// half-edge.
pub fn check_doob_condition(g: &Graph, spectrum: &SpectralDecomposition<f64>, radius: usize) -> Result<CheckOutcome> {
    let hypothesis =
        check_hypothesis(g, Theorem::RegularEdge).or_else(|_| check_hypothesis(g, Theorem::SemiregularEdge))?;
    if spectrum.dim() != g.edge_count() {
        return Err(Error::SupportMismatch);
    }
    let mu = star_eigenvalue(hypothesis);
    let Some(space) = spectrum.eigenspace_near(mu, CHECK_TOL) else {
        return Ok(CheckOutcome::new(true, format!("no eigenvalue {mu}")));
    };
    let mut worst_star = 0.0f64;
    let mut worst_decay = 0.0f64;
    for &i in &space.members {
        let phi = &spectrum.basis[i];
        for v in 0..g.vertex_count() {
            let s: f64 = g.out_half_edges(v).iter().map(|&h| phi[g.edge_of(h)]).sum();
            worst_star = worst_star.max(s.abs());
        }
        let f = ScalarField::new(Support::Edges, phi.clone())?;
        for h in 0..g.half_edge_count() {
            let regime = Regime::SemiregularEdge { p: g.degree(g.tail(h)) - 1, q: g.degree(g.head(h)) - 1 };
            let mut prev = set_average(g, &f, &arc_edges(g, DirectedEdge(h), 0))?;
            for n in 0..radius {
                let next = set_average(g, &f, &arc_edges(g, DirectedEdge(h), n + 1))?;
                let children = regime.step_counts(n).2 as f64;
                worst_decay = worst_decay.max((next + prev / children).abs());
                prev = next;
            }
        }
    }
    let pass = worst_star <= CHECK_TOL && worst_decay <= CHECK_TOL;
    Ok(CheckOutcome::new(
        pass,
        format!(
            "mu = {mu}, multiplicity {}: max star sum {worst_star:e}, max decay residual {worst_decay:e}",
            space.multiplicity()
        ),
    ))
}
