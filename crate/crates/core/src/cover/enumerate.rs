//! Brute-force enumeration of arcs, spheres and tubes.

use std::collections::HashSet;

use super::{CoverEdge, CoverVertex};
use crate::error::{Error, Result};
use crate::graph::{DirectedEdge, Graph};

/// Calls `visit` on every non-backtracking walk of `len >= 1` half-edges
/// whose first half-edge is `first`.
pub fn for_each_walk(g: &Graph, first: usize, len: usize, visit: &mut dyn FnMut(&[usize])) {
    fn extend(g: &Graph, walk: &mut Vec<usize>, len: usize, visit: &mut dyn FnMut(&[usize])) {
        if walk.len() == len {
            visit(walk);
            return;
        }
        let last = *walk.last().expect("walk is nonempty");
        let back = g.twin(last);
        for &h in g.out_half_edges(g.head(last)) {
            if h != back {
                walk.push(h);
                extend(g, walk, len, visit);
                walk.pop();
            }
        }
    }
    debug_assert!(len >= 1);
    let mut walk = Vec::with_capacity(len);
    walk.push(first);
    extend(g, &mut walk, len, visit);
}

/// Number of non-backtracking walks of `len` half-edges starting with
/// `first`, saturating at `u128::MAX`.
fn walk_count(g: &Graph, first: usize, len: usize) -> u128 {
    if len == 0 {
        return 1;
    }
    let mut counts = vec![0u128; g.half_edge_count()];
    counts[first] = 1;
    for _ in 1..len {
        let mut next = vec![0u128; g.half_edge_count()];
        for (h, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let back = g.twin(h);
            for &h2 in g.out_half_edges(g.head(h)) {
                if h2 != back {
                    next[h2] = next[h2].saturating_add(c);
                }
            }
        }
        counts = next;
    }
    counts.iter().fold(0u128, |acc, &c| acc.saturating_add(c))
}

/// `|A_r(a)|` without enumerating.
pub fn arc_size(g: &Graph, a: DirectedEdge, r: usize) -> u128 {
    walk_count(g, a.id(), r)
}

/// The vertex arc `A_r(a)` in the cover rooted at the tail of `a`:
/// `A_0 = {root}`, and for `r >= 1` the paths of length `r` that start
/// with `a`.
pub fn arc_vertices(g: &Graph, a: DirectedEdge, r: usize) -> Vec<CoverVertex> {
    let root = g.tail(a.id());
    if r == 0 {
        return vec![CoverVertex::root(root)];
    }
    let mut out = Vec::new();
    for_each_walk(g, a.id(), r, &mut |w| out.push(CoverVertex::from_raw(root, w.to_vec())));
    out
}

/// The vertex arc based at the tree edge from `base` along half-edge `h`.
pub fn arc_vertices_from(g: &Graph, base: &CoverVertex, h: usize, r: usize) -> Vec<CoverVertex> {
    if r == 0 {
        return vec![base.clone()];
    }
    let mut out = Vec::new();
    for_each_walk(g, h, r, &mut |w| out.push(base.walk(g, w)));
    out
}

/// The edge arc `A'_r(a)`: `A'_0 = {ã}`, and tree edges whose nearer
/// endpoint lies at distance `r` from the tail on the branch through `a`.
pub fn arc_edges(g: &Graph, a: DirectedEdge, r: usize) -> Vec<CoverEdge> {
    let root = g.tail(a.id());
    let mut out = Vec::new();
    for_each_walk(g, a.id(), r + 1, &mut |w| out.push(CoverEdge::from_deeper(CoverVertex::from_raw(root, w.to_vec()))));
    out
}

/// The edge arc based at the tree edge from `base` along half-edge `h`.
pub fn arc_edges_from(g: &Graph, base: &CoverVertex, h: usize, r: usize) -> Vec<CoverEdge> {
    let mut out = Vec::new();
    for_each_walk(g, h, r + 1, &mut |w| {
        let near = base.walk(g, &w[..r]);
        let far = near.step(g, w[r]);
        out.push(CoverEdge::between(&near, &far).expect("walk steps are tree edges"));
    });
    out
}

/// `S_r(v0)`: all non-backtracking paths of length `r` from `v0`.
pub fn sphere_vertices(g: &Graph, v0: usize, r: usize) -> Vec<CoverVertex> {
    if r == 0 {
        return vec![CoverVertex::root(v0)];
    }
    let mut out = Vec::new();
    for &h in g.out_half_edges(v0) {
        for_each_walk(g, h, r, &mut |w| out.push(CoverVertex::from_raw(v0, w.to_vec())));
    }
    out
}

/// Tree vertices at distance exactly `r` from an arbitrary cover vertex.
pub fn sphere_vertices_from(g: &Graph, centre: &CoverVertex, r: usize) -> Vec<CoverVertex> {
    if r == 0 {
        return vec![centre.clone()];
    }
    g.out_half_edges(centre.projection(g)).iter().flat_map(|&h| arc_vertices_from(g, centre, h, r)).collect()
}

/// `S'_r(v0)`: tree edges whose nearer endpoint is at distance `r` from the
/// root, i.e. paths of length `r + 1` from `v0`, read as their last edge.
pub fn sphere_edges(g: &Graph, v0: usize, r: usize) -> Vec<CoverEdge> {
    let mut out = Vec::new();
    for &h in g.out_half_edges(v0) {
        for_each_walk(g, h, r + 1, &mut |w| out.push(CoverEdge::from_deeper(CoverVertex::from_raw(v0, w.to_vec()))));
    }
    out
}

/// Checks that `x` is a nonempty set of valid cover vertices sharing one
/// root and inducing a connected subtree.
///
/// A finite vertex set of a rooted tree is connected iff exactly one member
/// (the top) has its parent outside the set.
pub fn validate_subtree(g: &Graph, x: &[CoverVertex]) -> Result<()> {
    let first = x.first().ok_or(Error::EmptySubtree)?;
    let members: HashSet<&CoverVertex> = x.iter().collect();
    let mut tops = 0;
    for v in x {
        if v.root_vertex() != first.root_vertex() {
            return Err(Error::DisconnectedSubtree);
        }
        CoverVertex::from_path(g, v.root_vertex(), v.path().to_vec())?;
        match v.parent() {
            Some(p) if members.contains(&p) => {}
            _ => tops += 1,
        }
    }
    if tops == 1 {
        Ok(())
    } else {
        Err(Error::DisconnectedSubtree)
    }
}

/// Directed tree edges leaving the subtree `x`: pairs `(x_i, h)` where
/// `x_i.step(h)` lies outside `x`.
pub fn tube_boundary(g: &Graph, x: &[CoverVertex]) -> Result<Vec<(CoverVertex, usize)>> {
    validate_subtree(g, x)?;
    let members: HashSet<&CoverVertex> = x.iter().collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for v in x {
        if !seen.insert(v) {
            continue;
        }
        for (h, w) in v.neighbours(g) {
            if !members.contains(&w) {
                out.push((v.clone(), h));
            }
        }
    }
    Ok(out)
}

/// `T_r(X)`: cover vertices at tree distance exactly `r` from `X`, built as
/// the disjoint union of the arcs based on the boundary edges of `X`.
pub fn tube_vertices(g: &Graph, x: &[CoverVertex], r: usize) -> Result<Vec<CoverVertex>> {
    let boundary = tube_boundary(g, x)?;
    if r == 0 {
        let mut dedup: Vec<CoverVertex> = x.to_vec();
        dedup.sort();
        dedup.dedup();
        return Ok(dedup);
    }
    Ok(boundary.iter().flat_map(|(v, h)| arc_vertices_from(g, v, *h, r)).collect())
}

/// `T'_r(X)`: tree edges outside `X` whose nearer endpoint lies at distance
/// `r` from `X`. Edges with both endpoints in `X` are not included.
pub fn tube_edges(g: &Graph, x: &[CoverVertex], r: usize) -> Result<Vec<CoverEdge>> {
    let boundary = tube_boundary(g, x)?;
    Ok(boundary.iter().flat_map(|(v, h)| arc_edges_from(g, v, *h, r)).collect())
}
