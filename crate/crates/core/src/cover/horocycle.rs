//! Periodic tree geodesics, truncated Busemann functions and horocycle
//! subsets.

use serde::{Deserialize, Serialize};

use super::enumerate::{arc_vertices_from, sphere_vertices_from};
use super::CoverVertex;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A bi-infinite tree geodesic obtained by unrolling a closed
/// non-backtracking walk of the base graph in both directions.
///
/// `v_0` is the lift of `tail(period[0])` with empty path; `v_k` for `k > 0`
/// follows the period forwards and `v_{-k}` follows it backwards.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeodesicSpec {
    period: Vec<usize>,
}

impl GeodesicSpec {
    pub fn new(g: &Graph, period: Vec<usize>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidGeodesic("empty period".into()));
        }
        let n = period.len();
        for (i, &h) in period.iter().enumerate() {
            if h >= g.half_edge_count() {
                return Err(Error::HalfEdgeOutOfRange(h));
            }
            let next = period[(i + 1) % n];
            if next >= g.half_edge_count() {
                return Err(Error::HalfEdgeOutOfRange(next));
            }
            if g.head(h) != g.tail(next) {
                return Err(Error::InvalidGeodesic(format!("half-edges {h} and {next} are not consecutive")));
            }
            if g.twin(h) == next {
                return Err(Error::InvalidGeodesic(format!("backtracking from {h} to {next}")));
            }
        }
        Ok(GeodesicSpec { period })
    }

    pub fn period(&self) -> &[usize] {
        &self.period
    }

    /// Half-edge from `v_k` to `v_{k+1}`.
    pub fn half_edge_at(&self, k: i64) -> usize {
        self.period[k.rem_euclid(self.period.len() as i64) as usize]
    }

    /// The geodesic vertex `v_k`.
    pub fn vertex(&self, g: &Graph, k: i64) -> CoverVertex {
        let root = g.tail(self.period[0]);
        let path = if k >= 0 {
            (0..k).map(|i| self.half_edge_at(i)).collect()
        } else {
            (1..=-k).map(|i| g.twin(self.half_edge_at(-i))).collect()
        };
        CoverVertex::from_raw(root, path)
    }

    /// `δ(w, v_n) - n`, the Busemann function `b_{γ,v_0}` truncated at `n`.
    /// It is non-increasing in `n` and constant once `v_n` lies beyond the
    /// point where `w` branches off the geodesic.
    pub fn busemann_truncated(&self, g: &Graph, w: &CoverVertex, n: usize) -> i64 {
        let vn = self.vertex(g, n as i64);
        w.tree_distance(&vn) as i64 - n as i64
    }
}

/// `H_{γ,r}(v_0) = H_0 ∩ S_r(v_r)`, computed as the vertex arc of radius
/// `r + 1` based at the tree edge from `v_{r+1}` to `v_r`.
pub fn horocycle_subset(g: &Graph, gamma: &GeodesicSpec, r: usize) -> Vec<CoverVertex> {
    let base = gamma.vertex(g, r as i64 + 1);
    let h = g.twin(gamma.half_edge_at(r as i64));
    arc_vertices_from(g, &base, h, r + 1)
}

/// `H_0 ∩ S_r(v_r)` straight from the definition: the sphere of radius `r`
/// about `v_r`, filtered by a Busemann value of zero. Points of that sphere
/// branch off the geodesic at some `v_j` with `j <= 2r`, so truncating the
/// Busemann limit at `2r + 2` is exact.
pub fn horocycle_subset_by_definition(g: &Graph, gamma: &GeodesicSpec, r: usize) -> Vec<CoverVertex> {
    let centre = gamma.vertex(g, r as i64);
    sphere_vertices_from(g, &centre, r).into_iter().filter(|w| gamma.busemann_truncated(g, w, 2 * r + 2) == 0).collect()
}
