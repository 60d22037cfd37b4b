use serde::{Deserialize, Serialize};

use super::Graph;

/// Degree structure of a graph.
///
/// For `RegularBipartite` the part `p_part` contains vertex 0. For
/// `Semiregular` the parts are named so that `p_part` carries degree `p + 1`
/// with `p < q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphKind {
    Regular { q: usize },
    RegularBipartite { q: usize, p_part: Vec<usize>, q_part: Vec<usize> },
    Semiregular { p: usize, q: usize, p_part: Vec<usize>, q_part: Vec<usize> },
    Irregular,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: GraphKind,
    pub simple: bool,
}

impl Classification {
    pub fn is_bipartite(&self) -> bool {
        matches!(self.kind, GraphKind::RegularBipartite { .. } | GraphKind::Semiregular { .. })
    }

    /// `q` for regular graphs (bipartite or not).
    pub fn regular_q(&self) -> Option<usize> {
        match self.kind {
            GraphKind::Regular { q } | GraphKind::RegularBipartite { q, .. } => Some(q),
            _ => None,
        }
    }

    /// The two parts of a bipartite graph.
    pub fn parts(&self) -> Option<(&[usize], &[usize])> {
        match &self.kind {
            GraphKind::RegularBipartite { p_part, q_part, .. } | GraphKind::Semiregular { p_part, q_part, .. } => {
                Some((p_part, q_part))
            }
            _ => None,
        }
    }
}

/// BFS 2-colouring; `None` when an odd cycle (or a loop) exists.
pub(crate) fn two_colouring(g: &Graph) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut colour = vec![u8::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    colour[0] = 0;
    queue.push_back(0);
    while let Some(v) = queue.pop_front() {
        for &h in g.out_half_edges(v) {
            let w = g.head(h);
            if colour[w] == u8::MAX {
                colour[w] = 1 - colour[v];
                queue.push_back(w);
            } else if colour[w] == colour[v] {
                return None;
            }
        }
    }
    Some(colour)
}

/// Classifies the degree structure of `g`.
///
/// Degree-regular graphs with degree at least 2 are `Regular` (`q = d - 1`);
/// theorem-specific lower bounds on `q` are enforced by the callers.
pub fn classify(g: &Graph) -> Classification {
    let simple = g.is_simple();
    let degrees = g.degrees();
    let colouring = two_colouring(g);

    let all_equal = degrees.iter().all(|&d| d == degrees[0]);
    let kind = match colouring {
        Some(colour) => {
            let part = |c: u8| -> Vec<usize> { (0..g.vertex_count()).filter(|&v| colour[v] == c).collect() };
            let (a, b) = (part(0), part(1));
            if b.is_empty() {
                GraphKind::Irregular
            } else {
                let da = degrees[a[0]];
                let db = degrees[b[0]];
                let uniform = a.iter().all(|&v| degrees[v] == da) && b.iter().all(|&v| degrees[v] == db);
                if !uniform {
                    GraphKind::Irregular
                } else if da == db {
                    if da >= 2 {
                        GraphKind::RegularBipartite { q: da - 1, p_part: a, q_part: b }
                    } else {
                        GraphKind::Irregular
                    }
                } else if da < db {
                    GraphKind::Semiregular { p: da - 1, q: db - 1, p_part: a, q_part: b }
                } else {
                    GraphKind::Semiregular { p: db - 1, q: da - 1, p_part: b, q_part: a }
                }
            }
        }
        None if all_equal && degrees[0] >= 2 => GraphKind::Regular { q: degrees[0] - 1 },
        None => GraphKind::Irregular,
    };
    Classification { kind, simple }
}
