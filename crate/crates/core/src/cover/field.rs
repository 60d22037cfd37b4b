use serde::{Deserialize, Serialize};

use super::{CoverEdge, CoverVertex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Support {
    Vertices,
    Edges,
}

impl Support {
    pub fn len(self, g: &Graph) -> usize {
        match self {
            Support::Vertices => g.vertex_count(),
            Support::Edges => g.edge_count(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Support::Vertices => "vertices",
            Support::Edges => "edges",
        }
    }
}

/// A real function on the vertices or on the edges of a base graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalarField<T> {
    support: Support,
    values: Vec<T>,
}

impl<T: Scalar> ScalarField<T> {
    /// Wraps `values`, rejecting non-finite entries.
    pub fn new(support: Support, values: Vec<T>) -> Result<Self> {
        if let Some(i) = values.iter().position(|v| !v.to_f64_lossy().is_finite()) {
            return Err(Error::NonFiniteValue(i));
        }
        Ok(ScalarField { support, values })
    }

    pub fn constant(g: &Graph, support: Support, c: T) -> Self {
        ScalarField { support, values: vec![c; support.len(g)] }
    }

    /// Indicator of one vertex or edge.
    pub fn indicator(g: &Graph, support: Support, index: usize) -> Self {
        let mut values = vec![T::zero(); support.len(g)];
        values[index] = T::one();
        ScalarField { support, values }
    }

    pub fn support(&self) -> Support {
        self.support
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &T {
        &self.values[i]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Errors unless the field has one value per vertex (or edge) of `g`.
    pub fn check_against(&self, g: &Graph) -> Result<()> {
        let expected = self.support.len(g);
        if self.values.len() != expected {
            return Err(Error::FieldLength { expected, found: self.values.len() });
        }
        Ok(())
    }

    /// Mean of the values: the graph average.
    pub fn mean(&self) -> T {
        let sum = self.values.iter().cloned().fold(T::zero(), |acc, v| acc + v);
        sum / T::from_count(self.values.len())
    }

    /// Mean over a subset of indices.
    pub fn mean_over(&self, indices: &[usize]) -> T {
        let sum = indices.iter().fold(T::zero(), |acc, &i| acc + self.values[i].clone());
        sum / T::from_count(indices.len())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> ScalarField<U> {
        ScalarField { support: self.support, values: self.values.iter().map(f).collect() }
    }
}

impl ScalarField<f64> {
    pub fn norm(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Tree objects that project to a base vertex or base edge.
pub trait Lifted {
    const SUPPORT: Support;
    fn project(&self, g: &Graph) -> usize;
}

impl Lifted for CoverVertex {
    const SUPPORT: Support = Support::Vertices;
    fn project(&self, g: &Graph) -> usize {
        self.projection(g)
    }
}

impl Lifted for CoverEdge {
    const SUPPORT: Support = Support::Edges;
    fn project(&self, g: &Graph) -> usize {
        self.projection(g)
    }
}

/// Mean of the lift `f ∘ π` over a finite set of tree vertices or edges.
pub fn set_average<T: Scalar, E: Lifted>(g: &Graph, f: &ScalarField<T>, set: &[E]) -> Result<T> {
    if f.support() != E::SUPPORT {
        return Err(Error::SupportMismatch);
    }
    f.check_against(g)?;
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let sum = set.iter().fold(T::zero(), |acc, x| acc + f.value(x.project(g)).clone());
    Ok(sum / T::from_count(set.len()))
}
