//! Hypergraph surgeries: edge moving, part swapping, pendant-path
//! attachment, and the pendant reduction that lowers uniformity by one.
//!
//! Every operation validates its preconditions, never mutates its input, and
//! returns a fresh normalized hypergraph. These are the constructive halves
//! of the spectral comparison lemmas; the numeric halves live in
//! [`crate::verify`].

use crate::hypergraph::{Hypergraph, HypergraphError};
use std::fmt;

/// Moving edges `(e_1,…,e_r)` from `(v_1,…,v_r)` to `u`: each `e_i` is
/// replaced by `e_i' = (e_i \ {v_i}) ∪ {u}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveSpec {
    pub u: usize,
    pub pairs: Vec<(Vec<usize>, usize)>,
}

/// Errors from surgery precondition violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransformError {
    VertexOutOfRange { vertex: usize },
    EdgeNotPresent { index: usize },
    DuplicateSourceEdge { index: usize },
    VertexNotInEdge { index: usize, vertex: usize },
    TargetInEdge { index: usize, u: usize },
    ResultingEdgePresent { index: usize },
    EdgesOverlap { vertex: usize },
    BadPartSize { got: usize, k: usize },
    PartSizeMismatch { left: usize, right: usize },
    PartNotSubset { vertex: usize },
    SameAttachVertex { vertex: usize },
    NotReducible,
    ReduceNeedsHigherRank,
    ReduceCollision,
    Invalid(HypergraphError),
}

impl fmt::Display for TransformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::VertexOutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            Self::EdgeNotPresent { index } => write!(f, "edge #{index} is not in the hypergraph"),
            Self::DuplicateSourceEdge { index } => write!(f, "edge #{index} listed twice"),
            Self::VertexNotInEdge { index, vertex } => {
                write!(f, "vertex {vertex} does not lie in edge #{index}")
            }
            Self::TargetInEdge { index, u } => {
                write!(f, "target vertex {u} already lies in edge #{index}")
            }
            Self::ResultingEdgePresent { index } => {
                write!(f, "moved edge #{index} collides with an existing edge")
            }
            Self::EdgesOverlap { vertex } => {
                write!(f, "edges share vertex {vertex}, expected disjoint")
            }
            Self::BadPartSize { got, k } => {
                write!(f, "part size {got} outside 1..={}", k - 1)
            }
            Self::PartSizeMismatch { left, right } => {
                write!(f, "part sizes differ: {left} vs {right}")
            }
            Self::PartNotSubset { vertex } => {
                write!(f, "part vertex {vertex} is not in its edge")
            }
            Self::SameAttachVertex { vertex } => {
                write!(f, "both paths attach at vertex {vertex}")
            }
            Self::NotReducible => write!(f, "some edge has no pendant vertex"),
            Self::ReduceNeedsHigherRank => write!(f, "reduction requires k >= 3"),
            Self::ReduceCollision => {
                write!(f, "reduction would identify two edges (duplicate edge)")
            }
            Self::Invalid(e) => write!(f, "resulting hypergraph invalid: {e}"),
        }
    }
}

impl std::error::Error for TransformError {}

impl From<HypergraphError> for TransformError {
    fn from(e: HypergraphError) -> Self {
        TransformError::Invalid(e)
    }
}

fn normalized(edge: &[usize]) -> Vec<usize> {
    let mut e = edge.to_vec();
    e.sort_unstable();
    e
}

fn edge_position(g: &Hypergraph, edge: &[usize]) -> Option<usize> {
    g.edges().binary_search(&normalized(edge)).ok()
}

/// Replaces each `e_i` by `e_i' = (e_i \ {v_i}) ∪ {u}`.
///
/// Labels are compacted afterwards, so a `v_i` left isolated by the move
/// disappears from the vertex set.
pub fn move_edges(g: &Hypergraph, spec: &MoveSpec) -> Result<Hypergraph, TransformError> {
    if spec.u >= g.n() {
        return Err(TransformError::VertexOutOfRange { vertex: spec.u });
    }
    let mut removed: Vec<usize> = Vec::with_capacity(spec.pairs.len());
    let mut added: Vec<Vec<usize>> = Vec::with_capacity(spec.pairs.len());
    for (index, (edge, v)) in spec.pairs.iter().enumerate() {
        let e = normalized(edge);
        let pos = edge_position(g, &e).ok_or(TransformError::EdgeNotPresent { index })?;
        if removed.contains(&pos) {
            return Err(TransformError::DuplicateSourceEdge { index });
        }
        if !e.contains(v) {
            return Err(TransformError::VertexNotInEdge { index, vertex: *v });
        }
        if e.contains(&spec.u) {
            return Err(TransformError::TargetInEdge { index, u: spec.u });
        }
        let mut moved: Vec<usize> = e.iter().copied().filter(|w| w != v).collect();
        moved.push(spec.u);
        moved.sort_unstable();
        if edge_position(g, &moved).is_some() || added.contains(&moved) {
            return Err(TransformError::ResultingEdgePresent { index });
        }
        removed.push(pos);
        added.push(moved);
    }
    let mut edges: Vec<Vec<usize>> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| !removed.contains(i))
        .map(|(_, e)| e.clone())
        .collect();
    edges.extend(added);
    Ok(Hypergraph::from_edges(g.k(), edges)?)
}

/// Lemma 2 rewiring: deletes disjoint edges `e`, `f` and adds
/// `e' = U1 ∪ (f \ V1)`, `f' = V1 ∪ (e \ U1)` for parts `U1 ⊆ e`, `V1 ⊆ f`
/// of equal size between 1 and k−1.
pub fn swap_parts(
    g: &Hypergraph,
    e: &[usize],
    u1: &[usize],
    f: &[usize],
    v1: &[usize],
) -> Result<Hypergraph, TransformError> {
    let e = normalized(e);
    let f = normalized(f);
    let pos_e = edge_position(g, &e).ok_or(TransformError::EdgeNotPresent { index: 0 })?;
    let pos_f = edge_position(g, &f).ok_or(TransformError::EdgeNotPresent { index: 1 })?;
    if pos_e == pos_f {
        return Err(TransformError::DuplicateSourceEdge { index: 1 });
    }
    if let Some(&v) = e.iter().find(|v| f.contains(v)) {
        return Err(TransformError::EdgesOverlap { vertex: v });
    }
    let u1 = normalized(u1);
    let v1 = normalized(v1);
    if u1.len() != v1.len() {
        return Err(TransformError::PartSizeMismatch { left: u1.len(), right: v1.len() });
    }
    if u1.is_empty() || u1.len() >= g.k() {
        return Err(TransformError::BadPartSize { got: u1.len(), k: g.k() });
    }
    for (part, host) in [(&u1, &e), (&v1, &f)] {
        if let Some(&v) = part.iter().find(|v| !host.contains(v)) {
            return Err(TransformError::PartNotSubset { vertex: v });
        }
    }
    let mut e_new: Vec<usize> = u1.clone();
    e_new.extend(f.iter().filter(|v| !v1.contains(v)));
    e_new.sort_unstable();
    let mut f_new: Vec<usize> = v1.clone();
    f_new.extend(e.iter().filter(|v| !u1.contains(v)));
    f_new.sort_unstable();
    for (index, cand) in [(0, &e_new), (1, &f_new)] {
        if edge_position(g, cand).is_some() {
            return Err(TransformError::ResultingEdgePresent { index });
        }
    }
    let mut edges: Vec<Vec<usize>> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != pos_e && *i != pos_f)
        .map(|(_, e)| e.clone())
        .collect();
    edges.push(e_new);
    edges.push(f_new);
    Ok(Hypergraph::from_edges(g.k(), edges)?)
}

/// Attaches a pendant path of length `p` at `u`: each new edge brings k−1
/// fresh vertices and consecutive new edges share exactly one. `p = 0`
/// returns the input unchanged.
pub fn attach_path(g: &Hypergraph, u: usize, p: usize) -> Result<Hypergraph, TransformError> {
    if u >= g.n() {
        return Err(TransformError::VertexOutOfRange { vertex: u });
    }
    if p == 0 {
        return Ok(g.clone());
    }
    let k = g.k();
    let mut edges: Vec<Vec<usize>> = g.edges().to_vec();
    let mut anchor = u;
    let mut next = g.n();
    for _ in 0..p {
        let mut edge = vec![anchor];
        edge.extend(next..next + k - 1);
        anchor = next + k - 2;
        next += k - 1;
        edges.push(edge);
    }
    Ok(Hypergraph::from_raw_parts(k, next, edges)?)
}

/// Attaches pendant paths of lengths `p` at `u` and `q` at `v`.
pub fn attach_two_paths(
    g: &Hypergraph,
    u: usize,
    v: usize,
    p: usize,
    q: usize,
) -> Result<Hypergraph, TransformError> {
    if u == v {
        return Err(TransformError::SameAttachVertex { vertex: u });
    }
    if v >= g.n() {
        return Err(TransformError::VertexOutOfRange { vertex: v });
    }
    attach_path(&attach_path(g, u, p)?, v, q)
}

/// True iff every edge contains at least one pendant (degree-1) vertex.
pub fn is_reducible(g: &Hypergraph) -> bool {
    let d = g.degrees();
    g.edges().iter().all(|e| e.iter().any(|&v| d[v] == 1))
}

/// Deletes the largest-index pendant vertex from every edge, producing the
/// (k−1)-uniform reduction with the same number of edges.
///
/// The spectral radii are linked by `ρ^k(G) = ρ^{k−1}(reduce(G))`, and that
/// value does not depend on which pendant vertex is chosen; the largest
/// index is used so outputs are reproducible.
pub fn reduce(g: &Hypergraph) -> Result<Hypergraph, TransformError> {
    reduce_choosing(g, |e, d| e.iter().rev().find(|&&v| d[v] == 1).copied())
}

/// Reduction with an explicit pendant-choice rule; used to cross-check that
/// the choice does not matter up to isomorphism.
pub fn reduce_choosing(
    g: &Hypergraph,
    choose: impl Fn(&[usize], &[usize]) -> Option<usize>,
) -> Result<Hypergraph, TransformError> {
    if g.k() < 3 {
        return Err(TransformError::ReduceNeedsHigherRank);
    }
    if !is_reducible(g) {
        return Err(TransformError::NotReducible);
    }
    let d = g.degrees();
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(g.m());
    for e in g.edges() {
        let drop = choose(e, &d).expect("reducible edge has a pendant vertex");
        edges.push(e.iter().copied().filter(|&v| v != drop).collect());
    }
    Hypergraph::from_edges(g.k() - 1, edges).map_err(|err| match err {
        HypergraphError::DuplicateEdge { .. } => TransformError::ReduceCollision,
        other => TransformError::Invalid(other),
    })
}
