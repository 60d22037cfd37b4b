use crate::error::{Error, Result};

use super::{Graph, GraphFlags};

/// Named graph families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    Cycle(usize),
    CycleWithChords(usize, Vec<(usize, usize)>),
}

impl Generator {
    /// Parses a generator name and its integer parameters, e.g.
    /// `("complete_bipartite", [3, 4])`.
    pub fn parse(name: &str, params: &[usize]) -> Result<Self> {
        let arity = |n: usize| -> Result<()> {
            if params.len() == n {
                Ok(())
            } else {
                Err(Error::InvalidParameters(format!("{name} takes {n} parameter(s), got {}", params.len())))
            }
        };
        match name {
            "complete" => arity(1).map(|_| Generator::Complete(params[0])),
            "complete_bipartite" => arity(2).map(|_| Generator::CompleteBipartite(params[0], params[1])),
            "petersen" => arity(0).map(|_| Generator::Petersen),
            "cycle" => arity(1).map(|_| Generator::Cycle(params[0])),
            "cycle_with_chords" => {
                if params.is_empty() || params.len().is_multiple_of(2) {
                    return Err(Error::InvalidParameters(
                        "cycle_with_chords takes n followed by chord endpoint pairs".into(),
                    ));
                }
                let chords = params[1..].chunks(2).map(|c| (c[0], c[1])).collect();
                Ok(Generator::CycleWithChords(params[0], chords))
            }
            other => Err(Error::UnknownGenerator(other.to_string())),
        }
    }
}

/// Builds the named graph.
///
/// `CompleteBipartite(m, n)` numbers the `m`-side `0..m` and the `n`-side
/// `m..m + n`. The Petersen graph has outer 5-cycle `0..5`, spokes `i - i+5`
/// and inner pentagram on `5..10`.
pub fn generate(generator: &Generator) -> Result<Graph> {
    let mut edges = Vec::new();
    let n = match *generator {
        Generator::Complete(n) => {
            if n == 0 {
                return Err(Error::InvalidParameters("complete graph needs n >= 1".into()));
            }
            for u in 0..n {
                for v in (u + 1)..n {
                    edges.push((u, v));
                }
            }
            n
        }
        Generator::CompleteBipartite(m, n) => {
            if m == 0 || n == 0 {
                return Err(Error::InvalidParameters("complete bipartite graph needs m, n >= 1".into()));
            }
            for u in 0..m {
                for v in 0..n {
                    edges.push((u, m + v));
                }
            }
            m + n
        }
        Generator::Petersen => {
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
            }
            for i in 0..5 {
                edges.push((i, i + 5));
            }
            for i in 0..5 {
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            10
        }
        Generator::Cycle(n) | Generator::CycleWithChords(n, _) => {
            if n < 3 {
                return Err(Error::InvalidParameters("cycle needs n >= 3".into()));
            }
            edges.extend((0..n).map(|i| (i, (i + 1) % n)));
            if let Generator::CycleWithChords(_, chords) = generator {
                edges.extend(chords.iter().copied());
            }
            n
        }
    };
    Graph::from_edges(n, &edges, GraphFlags::SIMPLE)
}
