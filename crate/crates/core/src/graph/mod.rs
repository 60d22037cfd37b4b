//! Finite connected multigraphs in half-edge form.
//!
//! Every undirected edge `e` is stored as two twin half-edges. Arcs, the
//! non-backtracking step and edge fields all index into the same half-edge
//! space: the arc base is a half-edge, and the non-backtracking constraint
//! is `next != twin(prev)`.

mod classify;
mod generators;

pub use classify::{classify, Classification, GraphKind};
pub use generators::{generate, Generator};

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One direction of an undirected edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalfEdge {
    pub tail: usize,
    pub head: usize,
    pub twin: usize,
}

/// A directed edge of the base graph, identified by its half-edge id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DirectedEdge(pub usize);

impl DirectedEdge {
    pub fn id(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFlags {
    pub allows_loops: bool,
    pub allows_multi: bool,
}

impl GraphFlags {
    pub const SIMPLE: GraphFlags = GraphFlags { allows_loops: false, allows_multi: false };
    pub const ANY: GraphFlags = GraphFlags { allows_loops: true, allows_multi: true };
}

/// A finite connected graph. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    half_edges: Vec<HalfEdge>,
    edge_of: Vec<usize>,
    edge_half: Vec<usize>,
    out: Vec<Vec<usize>>,
    flags: GraphFlags,
}

impl Graph {
    /// Builds a graph from an undirected edge list. Edge `i` owns half-edges
    /// `2i` (listed orientation) and `2i + 1` (reverse).
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)], flags: GraphFlags) -> Result<Self> {
        let mut half_edges = Vec::with_capacity(2 * edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            half_edges.push(HalfEdge { tail: u, head: v, twin: 2 * i + 1 });
            half_edges.push(HalfEdge { tail: v, head: u, twin: 2 * i });
        }
        Self::from_half_edges(vertex_count, half_edges, flags)
    }

    /// Builds a graph from raw half-edges, validating the twin pairing.
    ///
    /// Edge ids are assigned in order of the lower half-edge id of each twin
    /// pair.
    pub fn from_half_edges(vertex_count: usize, half_edges: Vec<HalfEdge>, flags: GraphFlags) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let h_count = half_edges.len();
        for (h, he) in half_edges.iter().enumerate() {
            for v in [he.tail, he.head] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: v, count: vertex_count });
                }
            }
            if he.twin >= h_count || he.twin == h {
                return Err(Error::InvalidTwin(h));
            }
            let tw = &half_edges[he.twin];
            if tw.twin != h || tw.tail != he.head || tw.head != he.tail {
                return Err(Error::InvalidTwin(h));
            }
        }

        let mut edge_of = vec![usize::MAX; h_count];
        let mut edge_half = Vec::with_capacity(h_count / 2);
        for h in 0..h_count {
            if edge_of[h] == usize::MAX {
                let e = edge_half.len();
                edge_of[h] = e;
                edge_of[half_edges[h].twin] = e;
                edge_half.push(h);
            }
        }

        let mut pairs: HashMap<(usize, usize), usize> = HashMap::new();
        for &h in &edge_half {
            let HalfEdge { tail, head, .. } = half_edges[h];
            if tail == head && !flags.allows_loops {
                return Err(Error::IllegalLoop(tail));
            }
            let key = (tail.min(head), tail.max(head));
            let seen = pairs.entry(key).or_insert(0);
            *seen += 1;
            if *seen > 1 && !flags.allows_multi {
                return Err(Error::IllegalMultiEdge(key.0, key.1));
            }
        }

        let mut out = vec![Vec::new(); vertex_count];
        for (h, he) in half_edges.iter().enumerate() {
            out[he.tail].push(h);
        }

        let graph = Graph { vertex_count, half_edges, edge_of, edge_half, out, flags };
        if graph.bfs_distances(0).iter().any(|d| d.is_none()) {
            return Err(Error::DisconnectedGraph);
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_half.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.half_edges.len()
    }

    pub fn flags(&self) -> GraphFlags {
        self.flags
    }

    pub fn half_edges(&self) -> &[HalfEdge] {
        &self.half_edges
    }

    pub fn half_edge(&self, h: usize) -> HalfEdge {
        self.half_edges[h]
    }

    #[inline]
    pub fn tail(&self, h: usize) -> usize {
        self.half_edges[h].tail
    }

    #[inline]
    pub fn head(&self, h: usize) -> usize {
        self.half_edges[h].head
    }

    #[inline]
    pub fn twin(&self, h: usize) -> usize {
        self.half_edges[h].twin
    }

    /// Undirected edge id of a half-edge.
    #[inline]
    pub fn edge_of(&self, h: usize) -> usize {
        self.edge_of[h]
    }

    /// The half-edge of `e` in its listed orientation.
    pub fn edge_half_edge(&self, e: usize) -> usize {
        self.edge_half[e]
    }

    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        let h = self.half_edges[self.edge_half[e]];
        (h.tail, h.head)
    }

    /// Edges in id order as `(tail, head)` of their listed orientation.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.edge_count()).map(move |e| self.edge_endpoints(e))
    }

    /// Outgoing half-edges at `v`, ascending by id. A loop contributes two.
    #[inline]
    pub fn out_half_edges(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// Vertex degree; a loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count).map(|v| self.degree(v)).collect()
    }

    /// Edge degree: the number of other edges meeting `e` at either endpoint.
    /// Defined for simple graphs.
    pub fn edge_degree(&self, e: usize) -> Result<usize> {
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        let (u, v) = self.edge_endpoints(e);
        Ok(self.degree(u) + self.degree(v) - 2)
    }

    pub fn has_loops(&self) -> bool {
        self.half_edges.iter().any(|h| h.tail == h.head)
    }

    pub fn has_multi_edges(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges().any(|(u, v)| !seen.insert((u.min(v), u.max(v))))
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_multi_edges()
    }

    /// The `k`-th half-edge from `u` to `v` (ordered by edge id), if any.
    pub fn find_half_edge(&self, u: usize, v: usize, k: usize) -> Option<DirectedEdge> {
        if u >= self.vertex_count {
            return None;
        }
        let mut seen_edges = Vec::new();
        for &h in &self.out[u] {
            if self.head(h) == v && !seen_edges.contains(&self.edge_of(h)) {
                seen_edges.push(self.edge_of(h));
                if seen_edges.len() == k + 1 {
                    return Some(DirectedEdge(h));
                }
            }
        }
        None
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for &h in &self.out[v] {
                let w = self.head(h);
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Combinatorial distance between two vertices.
    pub fn distance(&self, v: usize, w: usize) -> Result<usize> {
        for x in [v, w] {
            if x >= self.vertex_count {
                return Err(Error::VertexOutOfRange { vertex: x, count: self.vertex_count });
            }
        }
        // connected by construction
        Ok(self.bfs_distances(v)[w].expect("graph is connected"))
    }

    /// The line graph: one vertex per edge, adjacent iff the edges share an
    /// endpoint. Requires a simple graph.
    pub fn line_graph(&self) -> Result<Graph> {
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        let m = self.edge_count();
        let mut edges = Vec::new();
        for e in 0..m {
            let (a, b) = self.edge_endpoints(e);
            for f in (e + 1)..m {
                let (c, d) = self.edge_endpoints(f);
                if a == c || a == d || b == c || b == d {
                    edges.push((e, f));
                }
            }
        }
        Graph::from_edges(m, &edges, GraphFlags::SIMPLE)
    }
}
