//! Arc averages without enumeration.
//!
//! The number of arc elements ending in each half-edge is propagated by the
//! non-backtracking step: a half-edge `h` feeds every `h'` with
//! `tail(h') = head(h)` and `h' != twin(h)`. On regular and semiregular
//! graphs all elements at one radius branch equally, so the normalised
//! counts coincide with the uniform non-backtracking walk distribution; on
//! irregular graphs the counts remain exact where the walk would not.
//! Cost is `O(r · |half-edges| · max degree)`.

use super::{ScalarField, Support};
use crate::error::{Error, Result};
use crate::graph::{DirectedEdge, Graph};
use crate::scalar::Scalar;

/// Sum of `f ∘ π` over an arc, together with the arc size.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcSum<T> {
    pub sum: T,
    pub count: T,
}

impl<T: Scalar> ArcSum<T> {
    pub fn average(&self) -> T {
        self.sum.clone() / self.count.clone()
    }
}

fn step_counts<T: Scalar>(g: &Graph, counts: &[T]) -> Vec<T> {
    let mut next = vec![T::zero(); counts.len()];
    for (h, c) in counts.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let back = g.twin(h);
        for &h2 in g.out_half_edges(g.head(h)) {
            if h2 != back {
                next[h2] = next[h2].clone() + c.clone();
            }
        }
    }
    next
}

/// Sum and size of the arc `A_r(a)` (vertex fields) or `A'_r(a)` (edge
/// fields) computed by the half-edge transfer operator.
pub fn arc_sum_transfer<T: Scalar>(g: &Graph, f: &ScalarField<T>, a: DirectedEdge, r: usize) -> Result<ArcSum<T>> {
    f.check_against(g)?;
    let a = a.id();
    if f.support() == Support::Vertices && r == 0 {
        return Ok(ArcSum { sum: f.value(g.tail(a)).clone(), count: T::one() });
    }
    // a vertex arc of radius r ends with the r-th half-edge of the walk,
    // an edge arc of radius r with the (r+1)-th
    let steps = match f.support() {
        Support::Vertices => r - 1,
        Support::Edges => r,
    };
    let mut counts = vec![T::zero(); g.half_edge_count()];
    counts[a] = T::one();
    for _ in 0..steps {
        counts = step_counts(g, &counts);
    }
    let mut sum = T::zero();
    let mut count = T::zero();
    for (h, c) in counts.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let idx = match f.support() {
            Support::Vertices => g.head(h),
            Support::Edges => g.edge_of(h),
        };
        sum = sum + c.clone() * f.value(idx).clone();
        count = count + c.clone();
    }
    if count.is_zero() {
        return Err(Error::EmptySet);
    }
    Ok(ArcSum { sum, count })
}

/// `M_{r,a}(f)` via the transfer operator.
pub fn arc_average_transfer<T: Scalar>(g: &Graph, f: &ScalarField<T>, a: DirectedEdge, r: usize) -> Result<T> {
    arc_sum_transfer(g, f, a, r).map(|s| s.average())
}
