use serde::{Deserialize, Serialize};

use super::enumerate::{arc_edges_from, arc_vertices_from, tube_boundary, validate_subtree};
use super::transfer::arc_sum_transfer;
use super::{set_average, CoverEdge, CoverVertex, GeodesicSpec, ScalarField, Support};
use crate::error::{Error, Result};
use crate::graph::{DirectedEdge, Graph};
use crate::scalar::Scalar;

/// An arc based at the tree edge from `from` along `half_edge`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcBase {
    pub from: CoverVertex,
    pub half_edge: usize,
    pub radius: usize,
}

/// A family of growing subsets of the cover, indexed by radius.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Region {
    Arc(DirectedEdge),
    Sphere(usize),
    Tube(Vec<CoverVertex>),
    Horocycle(GeodesicSpec),
}

/// A region at one radius, as a disjoint union of arcs or as explicit points
/// (radius-zero spheres and tubes).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    Points(Vec<CoverVertex>),
    Arcs(Vec<ArcBase>),
}

impl Region {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self {
            Region::Arc(a) if a.id() >= g.half_edge_count() => Err(Error::HalfEdgeOutOfRange(a.id())),
            Region::Sphere(v) if *v >= g.vertex_count() => {
                Err(Error::VertexOutOfRange { vertex: *v, count: g.vertex_count() })
            }
            Region::Tube(x) => validate_subtree(g, x),
            Region::Horocycle(gamma) => GeodesicSpec::new(g, gamma.period().to_vec()).map(|_| ()),
            _ => Ok(()),
        }
    }

    /// The base vertex whose lift all radii are measured from, used to pick
    /// parity targets on bipartite graphs.
    pub fn centre(&self, g: &Graph) -> CoverVertex {
        match self {
            Region::Arc(a) => CoverVertex::root(g.tail(a.id())),
            Region::Sphere(v) => CoverVertex::root(*v),
            Region::Tube(x) => x[0].clone(),
            Region::Horocycle(gamma) => gamma.vertex(g, 0),
        }
    }

    pub fn decompose(&self, g: &Graph, support: Support, r: usize) -> Result<Decomposition> {
        self.validate(g)?;
        let arcs = match (self, support) {
            (Region::Arc(a), Support::Vertices) if r == 0 => {
                return Ok(Decomposition::Points(vec![CoverVertex::root(g.tail(a.id()))]))
            }
            (Region::Arc(a), _) => {
                vec![ArcBase { from: CoverVertex::root(g.tail(a.id())), half_edge: a.id(), radius: r }]
            }
            (Region::Sphere(v), Support::Vertices) if r == 0 => {
                return Ok(Decomposition::Points(vec![CoverVertex::root(*v)]))
            }
            (Region::Sphere(v), _) => g
                .out_half_edges(*v)
                .iter()
                .map(|&h| ArcBase { from: CoverVertex::root(*v), half_edge: h, radius: r })
                .collect(),
            (Region::Tube(x), Support::Vertices) if r == 0 => {
                let mut pts = x.clone();
                pts.sort();
                pts.dedup();
                return Ok(Decomposition::Points(pts));
            }
            (Region::Tube(x), _) => tube_boundary(g, x)?
                .into_iter()
                .map(|(from, half_edge)| ArcBase { from, half_edge, radius: r })
                .collect(),
            (Region::Horocycle(gamma), Support::Vertices) => vec![ArcBase {
                from: gamma.vertex(g, r as i64 + 1),
                half_edge: g.twin(gamma.half_edge_at(r as i64)),
                radius: r + 1,
            }],
            (Region::Horocycle(_), Support::Edges) => return Err(Error::SupportMismatch),
        };
        Ok(Decomposition::Arcs(arcs))
    }

    /// Enumerates the region's tree vertices at radius `r`.
    pub fn vertices(&self, g: &Graph, r: usize) -> Result<Vec<CoverVertex>> {
        Ok(match self.decompose(g, Support::Vertices, r)? {
            Decomposition::Points(p) => p,
            Decomposition::Arcs(arcs) => {
                arcs.iter().flat_map(|a| arc_vertices_from(g, &a.from, a.half_edge, a.radius)).collect()
            }
        })
    }

    /// Enumerates the region's tree edges at radius `r`.
    pub fn edges(&self, g: &Graph, r: usize) -> Result<Vec<CoverEdge>> {
        Ok(match self.decompose(g, Support::Edges, r)? {
            Decomposition::Points(_) => unreachable!("edge regions decompose into arcs"),
            Decomposition::Arcs(arcs) => {
                arcs.iter().flat_map(|a| arc_edges_from(g, &a.from, a.half_edge, a.radius)).collect()
            }
        })
    }

    /// Average of `f ∘ π` by explicit enumeration.
    pub fn average_enumerated<T: Scalar>(&self, g: &Graph, f: &ScalarField<T>, r: usize) -> Result<T> {
        match f.support() {
            Support::Vertices => set_average(g, f, &self.vertices(g, r)?),
            Support::Edges => set_average(g, f, &self.edges(g, r)?),
        }
    }

    /// Average of `f ∘ π` through the transfer operator. Arc averages depend
    /// only on the base half-edge, so each arc is a single transfer run.
    pub fn average_transfer<T: Scalar>(&self, g: &Graph, f: &ScalarField<T>, r: usize) -> Result<T> {
        match self.decompose(g, f.support(), r)? {
            Decomposition::Points(p) => set_average(g, f, &p),
            Decomposition::Arcs(arcs) => {
                let mut sum = T::zero();
                let mut count = T::zero();
                for a in &arcs {
                    let s = arc_sum_transfer(g, f, DirectedEdge(a.half_edge), a.radius)?;
                    sum = sum + s.sum;
                    count = count + s.count;
                }
                if count.is_zero() {
                    return Err(Error::EmptySet);
                }
                Ok(sum / count)
            }
        }
    }

    /// Number of elements at radius `r`, saturating.
    pub fn size(&self, g: &Graph, support: Support, r: usize) -> Result<u128> {
        Ok(match self.decompose(g, support, r)? {
            Decomposition::Points(p) => p.len() as u128,
            Decomposition::Arcs(arcs) => arcs.iter().fold(0u128, |acc, a| {
                let len = match support {
                    Support::Vertices => a.radius,
                    Support::Edges => a.radius + 1,
                };
                acc.saturating_add(super::enumerate::arc_size(g, DirectedEdge(a.half_edge), len))
            }),
        })
    }
}
