//! Isomorph-free exhaustive generation of connected k-uniform hypergraphs
//! with m edges, and spectral ranking of the classes.
//!
//! Generation augments by one edge at a time, deduplicating every level
//! through canonical forms and keeping the canonical representative, so the
//! output is independent of generation order. Intermediate states may be
//! disconnected (a connected hypergraph minus one edge need not be
//! connected), but a state whose component count cannot be absorbed by the
//! remaining edges is pruned — each added edge reduces the count by at most
//! k−1. That prune also bounds every surviving state by the hypertree vertex
//! count (k−1)m+1, so the cap check up front covers the whole search.

use crate::canon::{canonical_form_capped, CanonError, CanonicalForm, DEFAULT_MAX_N};
use crate::hypergraph::Hypergraph;
use crate::spectral::{spectral_radius, EigenResult, SpectralError};
use std::collections::HashSet;
use std::fmt;

/// Errors from enumeration and ranking.
#[derive(Debug, Clone, PartialEq)]
pub enum EnumerateError {
    BadParameters(String),
    /// The search needs more vertices than the cap allows.
    CapExceeded { needed: usize, max_n: usize },
    /// A class's spectral radius failed to certify.
    Spectral(SpectralError),
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BadParameters(s) => write!(f, "bad parameters: {s}"),
            Self::CapExceeded { needed, max_n } => {
                write!(f, "enumeration needs up to {needed} vertices, cap is {max_n}")
            }
            Self::Spectral(e) => write!(f, "spectral computation failed: {e}"),
        }
    }
}

impl std::error::Error for EnumerateError {}

impl From<CanonError> for EnumerateError {
    fn from(e: CanonError) -> Self {
        match e {
            CanonError::CapExceeded { n, max_n } => EnumerateError::CapExceeded { needed: n, max_n },
        }
    }
}

impl From<SpectralError> for EnumerateError {
    fn from(e: SpectralError) -> Self {
        EnumerateError::Spectral(e)
    }
}

/// One representative per isomorphism class of connected k-uniform
/// hypergraphs with m edges, in canonical order.
pub fn enumerate_connected(
    k: usize,
    m: usize,
    max_n: usize,
) -> Result<Vec<Hypergraph>, EnumerateError> {
    if k < 2 {
        return Err(EnumerateError::BadParameters(format!("k must be >= 2, got {k}")));
    }
    if m < 1 {
        return Err(EnumerateError::BadParameters(format!("m must be >= 1, got {m}")));
    }
    let needed = (k - 1) * m + 1;
    if needed > max_n {
        return Err(EnumerateError::CapExceeded { needed, max_n });
    }
    let single = Hypergraph::from_raw_parts(k, k, vec![(0..k).collect()]).expect("single edge");
    let mut reps = vec![single];
    for level in 2..=m {
        let remaining = m - level;
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        let mut next: Vec<Hypergraph> = Vec::new();
        for g in &reps {
            for cand in augmentations(g) {
                if cand.component_count() > 1 + remaining * (k - 1) {
                    continue;
                }
                let cf = canonical_form_capped(&cand, max_n)?;
                if seen.insert(cf.clone()) {
                    next.push(cf.to_hypergraph());
                }
            }
        }
        reps = next;
    }
    reps.sort_unstable();
    Ok(reps)
}

/// All ways to add one edge: choose j fresh vertices (appended densely) and
/// k−j existing ones.
fn augmentations(g: &Hypergraph) -> Vec<Hypergraph> {
    let (k, n) = (g.k(), g.n());
    let mut out = Vec::new();
    for fresh in 0..=k {
        let existing = k - fresh;
        for subset in combinations(n, existing) {
            let mut edge = subset;
            edge.extend(n..n + fresh);
            if fresh == 0 && g.edges().binary_search(&edge).is_ok() {
                continue;
            }
            let mut edges = g.edges().to_vec();
            edges.push(edge);
            out.push(
                Hypergraph::from_raw_parts(k, n + fresh, edges).expect("augmented edge is valid"),
            );
        }
    }
    out
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r);
    fn recurse(start: usize, n: usize, r: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == r {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            if n - v < r - current.len() {
                break;
            }
            current.push(v);
            recurse(v + 1, n, r, current, out);
            current.pop();
        }
    }
    recurse(0, n, r, &mut current, &mut out);
    out
}

/// An isomorphism class with its certified spectral data.
#[derive(Debug, Clone)]
pub struct RankedClass {
    pub canonical: CanonicalForm,
    pub hypergraph: Hypergraph,
    pub eigen: EigenResult,
    /// True when this class's bound interval overlaps the next one's — the
    /// order between the two is then not certified.
    pub tied_with_next: bool,
}

/// All classes at (k, m) sorted ascending by certified lower bound.
#[derive(Debug, Clone)]
pub struct RankingReport {
    pub k: usize,
    pub m: usize,
    pub classes: Vec<RankedClass>,
    pub total_count: usize,
}

/// Enumerates, computes every spectral radius, and sorts (default caps).
pub fn rank_by_rho(k: usize, m: usize, tol: f64) -> Result<RankingReport, EnumerateError> {
    rank_by_rho_capped(k, m, tol, DEFAULT_MAX_N, 1_000_000)
}

/// Ranking with explicit vertex cap and iteration budget.
pub fn rank_by_rho_capped(
    k: usize,
    m: usize,
    tol: f64,
    max_n: usize,
    max_iter: usize,
) -> Result<RankingReport, EnumerateError> {
    let reps = enumerate_connected(k, m, max_n)?;
    let mut classes = Vec::with_capacity(reps.len());
    for g in reps {
        let eigen = spectral_radius(&g, tol, max_iter)?;
        let canonical = canonical_form_capped(&g, max_n)?;
        classes.push(RankedClass { canonical, hypergraph: g, eigen, tied_with_next: false });
    }
    classes.sort_by(|a, b| {
        a.eigen
            .lower
            .partial_cmp(&b.eigen.lower)
            .expect("bounds are finite")
            .then_with(|| a.canonical.cmp(&b.canonical))
    });
    let total_count = classes.len();
    for i in 0..total_count.saturating_sub(1) {
        classes[i].tied_with_next = classes[i].eigen.upper >= classes[i + 1].eigen.lower;
    }
    Ok(RankingReport { k, m, classes, total_count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::families::{d_family, loose_path, two_edge_overlap};

    #[test]
    fn single_edge_level() {
        let reps = enumerate_connected(3, 1, 16).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!((reps[0].n(), reps[0].m()), (3, 1));
    }

    #[test]
    fn two_edge_classes_are_the_overlaps() {
        let reps = enumerate_connected(3, 2, 16).unwrap();
        assert_eq!(reps.len(), 2);
        let p2 = loose_path(3, 2).unwrap();
        let te = two_edge_overlap(3, 2).unwrap();
        assert!(reps.iter().any(|g| is_isomorphic(g, &p2).unwrap()));
        assert!(reps.iter().any(|g| is_isomorphic(g, &te).unwrap()));
    }

    #[test]
    fn connected_graph_counts_match_known_values() {
        assert_eq!(enumerate_connected(2, 3, 16).unwrap().len(), 3);
        assert_eq!(enumerate_connected(2, 4, 16).unwrap().len(), 5);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = enumerate_connected(3, 3, 16).unwrap();
        let b = enumerate_connected(3, 3, 16).unwrap();
        let sa: Vec<String> = a.iter().map(|g| g.serialize()).collect();
        let sb: Vec<String> = b.iter().map(|g| g.serialize()).collect();
        assert_eq!(sa, sb);
    }

    #[test]
    fn cap_is_checked_up_front() {
        assert_eq!(
            enumerate_connected(4, 12, 16).unwrap_err(),
            EnumerateError::CapExceeded { needed: 37, max_n: 16 }
        );
    }

    #[test]
    fn ranking_two_edges() {
        let report = rank_by_rho(3, 2, 1e-10).unwrap();
        assert_eq!(report.total_count, 2);
        let min = &report.classes[0];
        let second = &report.classes[1];
        assert!(is_isomorphic(&min.hypergraph, &loose_path(3, 2).unwrap()).unwrap());
        assert!(is_isomorphic(&second.hypergraph, &two_edge_overlap(3, 2).unwrap()).unwrap());
        assert!((min.eigen.rho - 2f64.powf(1.0 / 3.0)).abs() < 1e-9);
        assert!((second.eigen.rho - 2f64.powf(2.0 / 3.0)).abs() < 1e-9);
        assert!(!min.tied_with_next);
    }

    #[test]
    fn ranking_three_edges_matches_theorem() {
        let report = rank_by_rho(3, 3, 1e-10).unwrap();
        assert!(is_isomorphic(&report.classes[0].hypergraph, &loose_path(3, 3).unwrap()).unwrap());
        assert!(is_isomorphic(&report.classes[1].hypergraph, &d_family(3, 3).unwrap()).unwrap());
        assert!(!report.classes[0].tied_with_next);
        assert!(!report.classes[1].tied_with_next);
    }
}
