//! Plain-text formats for graphs, fields, geodesics and tube seeds.
//!
//! All formats are line based, ids are 0-based, blank lines and anything
//! after `#` are ignored.
//!
//! ```text
//! graph <vertex_count> <edge_count> [loops] [multi]
//! <u> <v>                      # one line per edge, in edge-id order
//!
//! field vertices|edges <count>
//! <id> <value>                 # every id exactly once
//!
//! geodesic <period>
//! <u> <v> [k]                  # k-th parallel edge from u to v, default 0
//!
//! tube <count>
//! <v0> <v1> ... <vn>           # cover vertex reached from root v0
//! ```
//!
//! Values are written in the shortest form that parses back to the same
//! `f64`, so writing and reading reproduces fields bit for bit.

use std::fmt::Write as _;
use std::path::Path;

use crate::cover::{CoverVertex, GeodesicSpec, ScalarField, Support};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFlags};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_num<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token.parse().map_err(|_| parse_error(line, format!("invalid {what} `{token}`")))
}

fn header<'a>(lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>, keyword: &str) -> Result<(usize, Vec<&'a str>)> {
    match lines.next() {
        Some((n, tokens)) if tokens[0] == keyword => Ok((n, tokens)),
        Some((n, tokens)) => Err(parse_error(n, format!("expected `{keyword}` header, found `{}`", tokens[0]))),
        None => Err(parse_error(0, format!("missing `{keyword}` header"))),
    }
}

pub fn write_graph(g: &Graph) -> String {
    let flags = g.flags();
    let mut out = format!("graph {} {}", g.vertex_count(), g.edge_count());
    if flags.allows_loops {
        out.push_str(" loops");
    }
    if flags.allows_multi {
        out.push_str(" multi");
    }
    out.push('\n');
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (n, head) = header(&mut lines, "graph")?;
    if head.len() < 3 {
        return Err(parse_error(n, "expected `graph <vertex_count> <edge_count>`"));
    }
    let vertex_count: usize = parse_num(n, head[1], "vertex count")?;
    let edge_count: usize = parse_num(n, head[2], "edge count")?;
    let mut flags = GraphFlags::SIMPLE;
    for &t in &head[3..] {
        match t {
            "loops" => flags.allows_loops = true,
            "multi" => flags.allows_multi = true,
            _ => return Err(parse_error(n, format!("unknown flag `{t}`"))),
        }
    }
    let mut edges = Vec::with_capacity(edge_count);
    for (n, tokens) in lines {
        if tokens.len() != 2 {
            return Err(parse_error(n, "expected `u v`"));
        }
        let u: usize = parse_num(n, tokens[0], "vertex")?;
        let v: usize = parse_num(n, tokens[1], "vertex")?;
        for w in [u, v] {
            if w >= vertex_count {
                return Err(parse_error(n, format!("vertex {w} out of range")));
            }
        }
        edges.push((u, v));
    }
    if edges.len() != edge_count {
        return Err(parse_error(n, format!("header declares {edge_count} edges, found {}", edges.len())));
    }
    Graph::from_edges(vertex_count, &edges, flags)
}

pub fn write_field(f: &ScalarField<f64>) -> String {
    let mut out = format!("field {} {}\n", f.support().name(), f.len());
    for (i, v) in f.values().iter().enumerate() {
        let _ = writeln!(out, "{i} {v:?}");
    }
    out
}

pub fn read_field(text: &str) -> Result<ScalarField<f64>> {
    let mut lines = content_lines(text);
    let (n, head) = header(&mut lines, "field")?;
    if head.len() != 3 {
        return Err(parse_error(n, "expected `field vertices|edges <count>`"));
    }
    let support = match head[1] {
        "vertices" => Support::Vertices,
        "edges" => Support::Edges,
        other => return Err(parse_error(n, format!("unknown support `{other}`"))),
    };
    let count: usize = parse_num(n, head[2], "count")?;
    let mut values: Vec<Option<f64>> = vec![None; count];
    for (n, tokens) in lines {
        if tokens.len() != 2 {
            return Err(parse_error(n, "expected `<id> <value>`"));
        }
        let id: usize = parse_num(n, tokens[0], "id")?;
        let value: f64 = parse_num(n, tokens[1], "value")?;
        if !value.is_finite() {
            return Err(parse_error(n, "value is not finite"));
        }
        match values.get_mut(id) {
            Some(slot @ None) => *slot = Some(value),
            Some(Some(_)) => return Err(parse_error(n, format!("duplicate id {id}"))),
            None => return Err(parse_error(n, format!("id {id} out of range"))),
        }
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| parse_error(n, format!("missing value for id {i}"))))
        .collect::<Result<Vec<_>>>()?;
    ScalarField::new(support, values)
}

/// Writes the geodesic as `u v k` triples. Fails for the reverse
/// orientation of a loop, which the format cannot name.
pub fn write_geodesic(g: &Graph, gamma: &GeodesicSpec) -> Result<String> {
    let mut out = format!("geodesic {}\n", gamma.period().len());
    for &h in gamma.period() {
        let (u, v) = (g.tail(h), g.head(h));
        let k = (0..)
            .map_while(|k| g.find_half_edge(u, v, k))
            .position(|d| d.id() == h)
            .ok_or_else(|| Error::InvalidGeodesic(format!("half-edge {h} has no `u v k` name")))?;
        let _ = writeln!(out, "{u} {v} {k}");
    }
    Ok(out)
}

pub fn read_geodesic(g: &Graph, text: &str) -> Result<GeodesicSpec> {
    let mut lines = content_lines(text);
    let (n, head) = header(&mut lines, "geodesic")?;
    if head.len() != 2 {
        return Err(parse_error(n, "expected `geodesic <period>`"));
    }
    let period: usize = parse_num(n, head[1], "period")?;
    let mut half_edges = Vec::with_capacity(period);
    for (n, tokens) in lines {
        if !(2..=3).contains(&tokens.len()) {
            return Err(parse_error(n, "expected `u v [k]`"));
        }
        let u: usize = parse_num(n, tokens[0], "vertex")?;
        let v: usize = parse_num(n, tokens[1], "vertex")?;
        let k: usize = tokens.get(2).map(|t| parse_num(n, t, "parallel index")).transpose()?.unwrap_or(0);
        let h = g.find_half_edge(u, v, k).ok_or_else(|| parse_error(n, format!("no edge {u} {v} {k}")))?;
        half_edges.push(h.id());
    }
    if half_edges.len() != period {
        return Err(parse_error(n, format!("header declares period {period}, found {}", half_edges.len())));
    }
    GeodesicSpec::new(g, half_edges)
}

/// Reads tube seeds: each line is a vertex walk from a root, following the
/// first edge between consecutive vertices.
pub fn read_tube(g: &Graph, text: &str) -> Result<Vec<CoverVertex>> {
    let mut lines = content_lines(text);
    let (n, head) = header(&mut lines, "tube")?;
    if head.len() != 2 {
        return Err(parse_error(n, "expected `tube <count>`"));
    }
    let count: usize = parse_num(n, head[1], "count")?;
    let mut out = Vec::with_capacity(count);
    for (n, tokens) in lines {
        let walk = tokens.iter().map(|t| parse_num::<usize>(n, t, "vertex")).collect::<Result<Vec<_>>>()?;
        if walk[0] >= g.vertex_count() {
            return Err(parse_error(n, format!("vertex {} out of range", walk[0])));
        }
        let mut x = CoverVertex::root(walk[0]);
        for pair in walk.windows(2) {
            let h = g
                .find_half_edge(pair[0], pair[1], 0)
                .ok_or_else(|| parse_error(n, format!("no edge {} {}", pair[0], pair[1])))?;
            x = x.step(g, h.id());
        }
        out.push(x);
    }
    if out.len() != count {
        return Err(parse_error(n, format!("header declares {count} vertices, found {}", out.len())));
    }
    Ok(out)
}

pub fn load_graph(path: &Path) -> Result<Graph> {
    read_graph(&std::fs::read_to_string(path)?)
}

pub fn load_field(path: &Path) -> Result<ScalarField<f64>> {
    read_field(&std::fs::read_to_string(path)?)
}

pub fn load_geodesic(g: &Graph, path: &Path) -> Result<GeodesicSpec> {
    read_geodesic(g, &std::fs::read_to_string(path)?)
}

pub fn load_tube(g: &Graph, path: &Path) -> Result<Vec<CoverVertex>> {
    read_tube(g, &std::fs::read_to_string(path)?)
}
