mod args;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use covertree::analysis::{
    bound_check, deviation_series, fit_rate, uniform_bound_check, ConvergenceReport, FitOutcome, Method, SeriesOptions,
    BOUND_ABS_SLACK, DEFAULT_BUDGET,
};
use covertree::cover::{Region, ScalarField, Support};
use covertree::graph::{classify, generate, DirectedEdge, Generator, Graph, GraphKind};
use covertree::io::{load_field, load_geodesic, load_graph, load_tube, write_graph};
use covertree::random::{generic_field, random_field};
use covertree::spectral::{check_hypothesis, rate_prediction_with, spectrum_for, RateKind, Theorem};
use covertree::{analysis::check_ramanujan, Error, Field};
use serde_json::json;

use args::{Cli, Command, Format, MethodArg, Output, RateArgs, RegionArgs, SetKind, VerifyArgs};

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ClassificationMismatch(_)
            | Error::UnknownGenerator(_)
            | Error::InvalidParameters(_)
            | Error::NotRegular
            | Error::UnsupportedDegreeStructure(_)
            | Error::VertexOutOfRange { .. }
            | Error::HalfEdgeOutOfRange(_)
            | Error::SupportMismatch
            | Error::InsufficientData(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("covertree: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("covertree: {m}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Classify(a) => classify_cmd(&a.graph, &a.output),
        Command::Spectrum(a) => spectrum_cmd(&a.graph, &a.theorem, a.field.as_deref(), &a.output),
        Command::Average(a) => average_cmd(&a.region, &a.output),
        Command::Rate(a) => rate_cmd(&a, &a.output),
        Command::Verify(a) => verify_cmd(&a),
        Command::Gen(a) => {
            let g = generate(&Generator::parse(&a.name, &a.params)?)?;
            emit(a.output.as_deref(), &write_graph(&g))?;
            Ok(true)
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Runtime(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn theorem(s: &str) -> Result<Theorem, Failure> {
    Theorem::parse(s).ok_or_else(|| Failure::Usage(format!("unknown theorem `{s}` (expected 1, 2, 3 or bipartite)")))
}

fn budget() -> Result<u128, Failure> {
    match std::env::var("COVERTREE_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("COVERTREE_BUDGET is not an integer: `{v}`"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn classify_cmd(path: &Path, out: &Output) -> Outcome {
    let g = load_graph(path)?;
    let c = classify(&g);
    let (kind, p, q) = match &c.kind {
        GraphKind::Regular { q } => ("regular", None, Some(*q)),
        GraphKind::RegularBipartite { q, .. } => ("regular_bipartite", None, Some(*q)),
        GraphKind::Semiregular { p, q, .. } => ("semiregular", Some(*p), Some(*q)),
        GraphKind::Irregular => ("irregular", None, None),
    };
    let ramanujan = if matches!(c.kind, GraphKind::Regular { .. } | GraphKind::RegularBipartite { .. }) {
        Some(check_ramanujan(&g)?)
    } else {
        None
    };
    let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
    let text = match out.format {
        Format::Csv => format!(
            "vertices,edges,kind,p,q,bipartite,simple,ramanujan\n{},{},{kind},{},{},{},{},{}\n",
            g.vertex_count(),
            g.edge_count(),
            opt(p),
            opt(q),
            c.is_bipartite(),
            c.simple,
            ramanujan.map(|r| r.to_string()).unwrap_or_default(),
        ),
        Format::Json => pretty(&json!({
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "classification": c,
            "bipartite": c.is_bipartite(),
            "ramanujan": ramanujan,
        })),
    };
    emit(out.output.as_deref(), &text)?;
    Ok(true)
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serialises");
    s.push('\n');
    s
}

fn spectrum_cmd(path: &Path, theorem_arg: &str, field: Option<&Path>, out: &Output) -> Outcome {
    let t = theorem(theorem_arg)?;
    let g = load_graph(path)?;
    let hypothesis = check_hypothesis(&g, t)?;
    let spectrum = spectrum_for(&g, t)?;
    let f = field.map(load_field).transpose()?;
    let prediction = rate_prediction_with(&spectrum, hypothesis, f.as_ref(), t)?;
    let text = match out.format {
        Format::Csv => prediction.spectrum_csv(),
        Format::Json => pretty(&serde_json::to_value(&prediction).expect("prediction serialises")),
    };
    emit(out.output.as_deref(), &text)?;
    Ok(true)
}

fn region(g: &Graph, a: &RegionArgs) -> Result<Region, Failure> {
    let vertex = |s: &str| s.parse::<usize>().map_err(|_| Failure::Usage(format!("bad vertex `{s}`")));
    let one = |what: &str| -> Result<&str, Failure> {
        match a.base.as_slice() {
            [x] => Ok(x),
            _ => Err(Failure::Usage(format!("--base takes a single {what} for this set"))),
        }
    };
    Ok(match a.set {
        SetKind::Arc => {
            let [u, v, rest @ ..] = a.base.as_slice() else {
                return Err(Failure::Usage("--base takes `u v [k]` for an arc".into()));
            };
            let k = rest.first().map(|k| vertex(k)).transpose()?.unwrap_or(0);
            let (u, v) = (vertex(u)?, vertex(v)?);
            let h = g
                .find_half_edge(u, v, k)
                .ok_or_else(|| Failure::Usage(format!("no half-edge {u} -> {v} with index {k}")))?;
            Region::Arc(h)
        }
        SetKind::Sphere | SetKind::EdgeSphere => Region::Sphere(vertex(one("root vertex")?)?),
        SetKind::Tube => Region::Tube(load_tube(g, &PathBuf::from(one("tube file")?))?),
        SetKind::Horocycle => Region::Horocycle(load_geodesic(g, &PathBuf::from(one("geodesic file")?))?),
    })
}

fn load_region_field(g: &Graph, a: &RegionArgs) -> Result<Field, Failure> {
    let support = if a.set == SetKind::EdgeSphere { Support::Edges } else { Support::Vertices };
    let f = match &a.field {
        Some(p) => load_field(p)?,
        None => random_field(g, support, a.seed),
    };
    if a.set == SetKind::EdgeSphere && f.support() != Support::Edges {
        return Err(Failure::Usage("edge-sphere needs an edge field".into()));
    }
    Ok(f)
}

fn series(a: &RegionArgs) -> Result<(Graph, Field, ConvergenceReport), Failure> {
    let g = load_graph(&a.graph)?;
    let f = load_region_field(&g, a)?;
    let r = region(&g, a)?;
    let method = match a.method {
        MethodArg::Transfer => Method::Transfer,
        MethodArg::Enumerate => Method::Enumerate,
    };
    let report = deviation_series(&g, &f, &r, a.radius, &SeriesOptions { method, budget: budget()? })?;
    Ok((g, f, report))
}

fn report_text(report: &ConvergenceReport, format: Format) -> String {
    match format {
        Format::Csv => report.to_csv(),
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
    }
}

fn average_cmd(a: &RegionArgs, out: &Output) -> Outcome {
    let (_, _, report) = series(a)?;
    emit(out.output.as_deref(), &report_text(&report, out.format))?;
    Ok(true)
}

/// Predicted rate for `f`; a field with no nonconstant component converges
/// in one step.
fn predict(g: &Graph, f: &Field, t: Theorem) -> Result<(f64, RateKind), Failure> {
    let hypothesis = check_hypothesis(g, t)?;
    let spectrum = spectrum_for(g, t)?;
    match rate_prediction_with(&spectrum, hypothesis, Some(f), t) {
        Ok(p) => Ok((p.beta_max, p.kind)),
        Err(Error::OnlyConstantSpectrum) => Ok((0.0, RateKind::ExactOneStep)),
        Err(e) => Err(e.into()),
    }
}

fn rate_cmd(args: &RateArgs, out: &Output) -> Outcome {
    let t = theorem(&args.theorem)?;
    let (g, f, mut report) = series(&args.region)?;
    if f.support() != t.support() {
        return Err(Failure::Usage(format!("{} needs a field on {}", t.name(), t.support().name())));
    }
    let (beta, kind) = predict(&g, &f, t)?;
    report.predicted_beta = Some(args.override_beta.unwrap_or(beta));
    report.predicted_kind = Some(kind);
    let pass = bound_check(&mut report, args.calibration).is_some_and(|b| b.pass);
    report.push_verdict("bound", pass);
    report.fitted = fit_rate(&mut report).ok();
    emit(out.output.as_deref(), &report_text(&report, out.format))?;
    if !pass {
        eprintln!("covertree: deviations exceed the bound at radii {:?}", report.bound.as_ref().map(|b| &b.violations));
    }
    Ok(pass)
}

struct VerifyRow {
    field: String,
    mu: Option<f64>,
    beta: f64,
    kind: RateKind,
    c_hat: f64,
    /// Largest `dev / bound` past the calibration radius over all bases.
    worst: f64,
    fitted: Option<FitOutcome>,
    pass: bool,
}

fn verify_cmd(a: &VerifyArgs) -> Outcome {
    let (radius, seed, calibration) = (a.radius, a.seed, a.calibration);
    let t = theorem(&a.theorem)?;
    let g = load_graph(&a.graph)?;
    let hypothesis = check_hypothesis(&g, t)?;
    let spectrum = spectrum_for(&g, t)?;
    let support = t.support();
    let mut fields: Vec<(String, Option<f64>, Field)> = spectrum
        .basis
        .iter()
        .zip(&spectrum.eigenvalues)
        .enumerate()
        .map(|(i, (v, mu))| Ok((format!("eigenvector {i}"), Some(*mu), ScalarField::new(support, v.clone())?)))
        .collect::<Result<_, Error>>()?;
    let (random, used) = generic_field(&g, &spectrum, seed)
        .ok_or_else(|| Failure::Runtime(format!("no generic field from seeds {seed} onwards")))?;
    fields.push((format!("random seed {used}"), None, random));

    let options = SeriesOptions { method: Method::Transfer, budget: budget()? };
    let mut rows = Vec::with_capacity(fields.len());
    for (name, mu, f) in fields {
        let (beta, kind) = match rate_prediction_with(&spectrum, hypothesis, Some(&f), t) {
            Ok(p) => (p.beta_max, p.kind),
            Err(Error::OnlyConstantSpectrum) => (0.0, RateKind::ExactOneStep),
            Err(e) => return Err(e.into()),
        };
        let mut reports = (0..g.half_edge_count())
            .map(|h| {
                let mut r = deviation_series(&g, &f, &Region::Arc(DirectedEdge(h)), radius, &options)?;
                r.predicted_beta = Some(beta);
                r.predicted_kind = Some(kind);
                Ok(r)
            })
            .collect::<Result<Vec<_>, Error>>()?;
        let c_hat = uniform_bound_check(&mut reports, calibration).unwrap_or(0.0);
        let mut worst = 0.0f64;
        let mut pass = true;
        for r in &reports {
            let b = r.bound.as_ref().expect("bound attached");
            pass &= b.pass;
            for (&rad, &d) in
                r.radii.iter().zip(&r.deviations).filter(|(&rad, &d)| rad > calibration && d > BOUND_ABS_SLACK)
            {
                let env = b.bound_at(rad);
                worst = worst.max(if env > 0.0 { d / env } else { f64::INFINITY });
            }
        }
        let mut first = reports.swap_remove(0);
        let fitted = fit_rate(&mut first).ok();
        rows.push(VerifyRow { field: name, mu, beta, kind, c_hat, worst, fitted, pass });
    }
    let all = rows.iter().all(|r| r.pass);
    emit(a.output.output.as_deref(), &verify_text(&rows, t, radius, calibration, a.output.format))?;
    if !all {
        let failed: Vec<&str> = rows.iter().filter(|r| !r.pass).map(|r| r.field.as_str()).collect();
        eprintln!("covertree: bound fails for {}", failed.join(", "));
    }
    Ok(all)
}

fn fit_label(f: Option<FitOutcome>) -> String {
    match f {
        Some(FitOutcome::Rate(b)) => format!("{b:.14e}"),
        Some(FitOutcome::NonConvergent) => "nonconvergent".into(),
        None => String::new(),
    }
}

fn verify_text(rows: &[VerifyRow], t: Theorem, radius: usize, calibration: usize, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut s = String::from("field,mu,beta,kind,c_hat,worst_ratio,fitted,pass\n");
            for r in rows {
                let _ = writeln!(
                    s,
                    "{},{},{:.14e},{},{:.14e},{:.14e},{},{}",
                    r.field,
                    r.mu.map(|m| format!("{m:.14e}")).unwrap_or_default(),
                    r.beta,
                    r.kind.name(),
                    r.c_hat,
                    r.worst,
                    fit_label(r.fitted),
                    r.pass
                );
            }
            s
        }
        Format::Json => pretty(&json!({
            "theorem": t.name(),
            "radius": radius,
            "calibration": calibration,
            "rows": rows.iter().map(|r| json!({
                "field": r.field,
                "mu": r.mu,
                "beta": r.beta,
                "kind": r.kind.name(),
                "c_hat": r.c_hat,
                "worst_ratio": r.worst,
                "fitted": fit_label(r.fitted),
                "pass": r.pass,
            })).collect::<Vec<_>>(),
        })),
    }
}
