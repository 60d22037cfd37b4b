//! The universal covering tree, built lazily from non-backtracking paths.
//!
//! A cover vertex is a root vertex of the base graph plus a reduced
//! half-edge path. Moving along a half-edge either extends the path or, when
//! the half-edge is the twin of the last one, shortens it. Consequently every
//! non-backtracking walk in the base graph traces a non-backtracking walk in
//! the tree, and an arc based at the tree edge `x -> x.step(h)` is the set of
//! end points of the walks of the right length starting with `h`.

mod enumerate;
mod field;
mod horocycle;
mod region;
mod transfer;

pub use enumerate::{
    arc_edges, arc_edges_from, arc_size, arc_vertices, arc_vertices_from, for_each_walk, sphere_edges, sphere_vertices,
    sphere_vertices_from, tube_boundary, tube_edges, tube_vertices, validate_subtree,
};
pub use field::{set_average, Lifted, ScalarField, Support};
pub use horocycle::{horocycle_subset, horocycle_subset_by_definition, GeodesicSpec};
pub use region::{ArcBase, Decomposition, Region};
pub use transfer::{arc_average_transfer, arc_sum_transfer, ArcSum};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex of the universal cover: a reduced half-edge path from `root`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoverVertex {
    root: usize,
    path: Vec<usize>,
}

impl CoverVertex {
    /// The lift of `root` itself (empty path).
    pub fn root(root: usize) -> Self {
        CoverVertex { root, path: Vec::new() }
    }

    /// Validates that `path` is a non-backtracking path starting at `root`.
    pub fn from_path(g: &Graph, root: usize, path: Vec<usize>) -> Result<Self> {
        if root >= g.vertex_count() {
            return Err(Error::VertexOutOfRange { vertex: root, count: g.vertex_count() });
        }
        let mut at = root;
        let mut prev: Option<usize> = None;
        for &h in &path {
            if h >= g.half_edge_count() {
                return Err(Error::HalfEdgeOutOfRange(h));
            }
            if g.tail(h) != at {
                return Err(Error::InvalidCoverVertex(format!("half-edge {h} does not start at vertex {at}")));
            }
            if prev.is_some_and(|p| g.twin(p) == h) {
                return Err(Error::InvalidCoverVertex(format!("path backtracks at half-edge {h}")));
            }
            prev = Some(h);
            at = g.head(h);
        }
        Ok(CoverVertex { root, path })
    }

    pub(crate) fn from_raw(root: usize, path: Vec<usize>) -> Self {
        CoverVertex { root, path }
    }

    pub fn root_vertex(&self) -> usize {
        self.root
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    /// Tree distance to the root.
    pub fn depth(&self) -> usize {
        self.path.len()
    }

    /// The projection to the base graph.
    pub fn projection(&self, g: &Graph) -> usize {
        self.path.last().map_or(self.root, |&h| g.head(h))
    }

    pub fn parent(&self) -> Option<CoverVertex> {
        let mut path = self.path.clone();
        path.pop().map(|_| CoverVertex { root: self.root, path })
    }

    /// Moves along a half-edge leaving the projection of `self`.
    pub fn step(&self, g: &Graph, h: usize) -> CoverVertex {
        let mut next = self.clone();
        next.step_in_place(g, h);
        next
    }

    pub(crate) fn step_in_place(&mut self, g: &Graph, h: usize) {
        debug_assert_eq!(g.tail(h), self.projection(g));
        match self.path.last() {
            Some(&last) if g.twin(last) == h => {
                self.path.pop();
            }
            _ => self.path.push(h),
        }
    }

    /// Follows a whole walk of half-edges.
    pub fn walk(&self, g: &Graph, walk: &[usize]) -> CoverVertex {
        let mut v = self.clone();
        for &h in walk {
            v.step_in_place(g, h);
        }
        v
    }

    /// All tree neighbours, paired with the half-edge leading to them.
    pub fn neighbours(&self, g: &Graph) -> Vec<(usize, CoverVertex)> {
        g.out_half_edges(self.projection(g)).iter().map(|&h| (h, self.step(g, h))).collect()
    }

    /// Tree distance; both vertices must share a root.
    pub fn tree_distance(&self, other: &CoverVertex) -> usize {
        debug_assert_eq!(self.root, other.root);
        let common = self.path.iter().zip(&other.path).take_while(|(a, b)| a == b).count();
        self.path.len() + other.path.len() - 2 * common
    }

    /// True iff one path extends the other by exactly one half-edge.
    pub fn is_adjacent(&self, other: &CoverVertex) -> bool {
        self.root == other.root && self.tree_distance(other) == 1
    }
}

/// An edge of the universal cover, stored as its endpoint farther from the
/// root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoverEdge {
    deeper: CoverVertex,
}

impl CoverEdge {
    /// The tree edge between two adjacent cover vertices.
    pub fn between(a: &CoverVertex, b: &CoverVertex) -> Option<CoverEdge> {
        if !a.is_adjacent(b) {
            return None;
        }
        let deeper = if a.depth() > b.depth() { a } else { b };
        Some(CoverEdge { deeper: deeper.clone() })
    }

    pub(crate) fn from_deeper(deeper: CoverVertex) -> Self {
        debug_assert!(deeper.depth() > 0);
        CoverEdge { deeper }
    }

    pub fn deeper(&self) -> &CoverVertex {
        &self.deeper
    }

    pub fn shallower(&self) -> CoverVertex {
        self.deeper.parent().expect("cover edge has a parent endpoint")
    }

    /// The undirected base edge this tree edge projects to.
    pub fn projection(&self, g: &Graph) -> usize {
        g.edge_of(*self.deeper.path.last().expect("nonempty path"))
    }
}
