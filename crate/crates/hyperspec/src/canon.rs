//! Exact canonical forms and isomorphism testing for small hypergraphs.
//!
//! Two hypergraphs have equal [`CanonicalForm`] iff they are isomorphic. The
//! form is the minimal `.hg` encoding over all vertex relabelings, found by
//! backtracking search. The search space is cut down first by an equitable
//! partition refinement (vertices may only receive labels reserved for their
//! class), then by branch-and-bound against the best relabeling found so far.
//! Exactness is required for enumeration dedup, so this is a permutation
//! search, not a heuristic — instances are capped at [`DEFAULT_MAX_N`]
//! vertices by default.

use crate::hypergraph::Hypergraph;
use std::cmp::Ordering;
use std::fmt;

/// Default vertex cap for the canonical-labeling search.
pub const DEFAULT_MAX_N: usize = 16;

/// Errors from canonicalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonError {
    /// Instance has more vertices than the search cap allows.
    CapExceeded { n: usize, max_n: usize },
}

impl fmt::Display for CanonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::CapExceeded { n, max_n } => {
                write!(f, "canonical form cap exceeded: n={n} > max_n={max_n}")
            }
        }
    }
}

impl std::error::Error for CanonError {}

/// Minimal encoding of a hypergraph over all vertex relabelings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    /// The encoded form: the `.hg` serialization of the canonical relabeling.
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// The encoding as `.hg` text.
    pub fn as_text(&self) -> &str {
        std::str::from_utf8(&self.bytes).expect("canonical bytes are .hg text")
    }

    /// The canonical representative itself.
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::parse(self.as_text()).expect("canonical bytes parse back")
    }
}

/// Canonicalizes under the default vertex cap.
pub fn canonical_form(g: &Hypergraph) -> Result<CanonicalForm, CanonError> {
    canonical_form_capped(g, DEFAULT_MAX_N)
}

/// Canonicalizes with an explicit vertex cap.
pub fn canonical_form_capped(g: &Hypergraph, max_n: usize) -> Result<CanonicalForm, CanonError> {
    if g.n() > max_n {
        return Err(CanonError::CapExceeded { n: g.n(), max_n });
    }
    let class_of = refine_classes(g);
    let enc = Search::new(g, &class_of).run();
    let mut edges = enc;
    edges.sort_unstable();
    let canon = Hypergraph::from_raw_parts(g.k(), g.n(), edges).expect("relabeling stays valid");
    Ok(CanonicalForm { bytes: canon.serialize().into_bytes() })
}

/// True iff the two hypergraphs are isomorphic (default cap).
pub fn is_isomorphic(g: &Hypergraph, h: &Hypergraph) -> Result<bool, CanonError> {
    is_isomorphic_capped(g, h, DEFAULT_MAX_N)
}

/// Isomorphism test with an explicit vertex cap.
pub fn is_isomorphic_capped(
    g: &Hypergraph,
    h: &Hypergraph,
    max_n: usize,
) -> Result<bool, CanonError> {
    if g.k() != h.k() || g.n() != h.n() || g.m() != h.m() {
        return Ok(false);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form_capped(g, max_n)? == canonical_form_capped(h, max_n)?)
}

/// Equitable refinement: returns an isomorphism-invariant class index per
/// vertex. Classes are seeded by degree (descending) and repeatedly split by
/// the multiset of incident-edge class signatures; the class order depends
/// only on those invariants, never on vertex indices.
fn refine_classes(g: &Hypergraph) -> Vec<usize> {
    let n = g.n();
    let degrees = g.degrees();
    let mut uniq = degrees.clone();
    uniq.sort_unstable();
    uniq.dedup();
    let mut class: Vec<usize> = degrees
        .iter()
        .map(|d| uniq.len() - 1 - uniq.binary_search(d).expect("degree present"))
        .collect();
    let incident = incidence_lists(g);
    loop {
        let mut keys: Vec<(usize, Vec<Vec<usize>>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut sig: Vec<Vec<usize>> = incident[v]
                .iter()
                .map(|&ei| {
                    let mut others: Vec<usize> = g.edges()[ei]
                        .iter()
                        .filter(|&&w| w != v)
                        .map(|&w| class[w])
                        .collect();
                    others.sort_unstable();
                    others
                })
                .collect();
            sig.sort_unstable();
            keys.push((class[v], sig));
        }
        let mut order: Vec<(usize, Vec<Vec<usize>>)> = keys.clone();
        order.sort_unstable();
        order.dedup();
        let next: Vec<usize> = keys
            .iter()
            .map(|k| order.binary_search(k).expect("key present"))
            .collect();
        if next == class {
            return class;
        }
        class = next;
    }
}

fn incidence_lists(g: &Hypergraph) -> Vec<Vec<usize>> {
    let mut inc = vec![Vec::new(); g.n()];
    for (ei, e) in g.edges().iter().enumerate() {
        for &v in e {
            inc[v].push(ei);
        }
    }
    inc
}

/// Edges are compared by (max vertex, then content): this makes the list of
/// edges finalized after assigning labels 0..L a stable prefix of the final
/// encoding, so partial assignments can be bounded against the best complete
/// one.
fn edge_cmp(a: &[usize], b: &[usize]) -> Ordering {
    a.last().cmp(&b.last()).then_with(|| a.cmp(b))
}

struct Search<'a> {
    g: &'a Hypergraph,
    incident: Vec<Vec<usize>>,
    /// Class whose vertices are eligible for each new label, in label order.
    block_class: Vec<usize>,
    class_of: &'a [usize],
    new_label: Vec<Option<usize>>,
    assigned_in_edge: Vec<usize>,
    enc: Vec<Vec<usize>>,
    best: Option<Vec<Vec<usize>>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Hypergraph, class_of: &'a [usize]) -> Self {
        let mut block_class: Vec<usize> = class_of.to_vec();
        block_class.sort_unstable();
        Search {
            g,
            incident: incidence_lists(g),
            block_class,
            class_of,
            new_label: vec![None; g.n()],
            assigned_in_edge: vec![0; g.m()],
            enc: Vec::with_capacity(g.m()),
            best: None,
        }
    }

    fn run(mut self) -> Vec<Vec<usize>> {
        self.descend(0);
        self.best.expect("search visits at least one complete relabeling")
    }

    /// Assigns new label `level` to each eligible vertex in turn.
    ///
    /// Invariant on entry: `best` is `None`, or `enc` equals the first
    /// `enc.len()` edges of `best`. A candidate whose finalized batch
    /// diverges above the best encoding can never beat it (the encoding
    /// order is settled at the first divergence), so it is pruned; one that
    /// diverges below it beats the best on every completion, so the stale
    /// best is dropped and the subtree rebuilds it from its own first leaf.
    fn descend(&mut self, level: usize) {
        if level == self.g.n() {
            if self.best.is_none() {
                self.best = Some(self.enc.clone());
            }
            return;
        }
        let cls = self.block_class[level];
        let mut candidates: Vec<(Vec<Vec<usize>>, usize)> = Vec::new();
        for v in 0..self.g.n() {
            if self.new_label[v].is_some() || self.class_of[v] != cls {
                continue;
            }
            candidates.push((self.finalized_by(v, level), v));
        }
        // Try likely-minimal candidates first so the bound tightens early;
        // when one batch is a prefix of another, the longer one finalizes
        // more edges at this level and encodes smaller.
        candidates.sort_by(|a, b| {
            let common = a.0.len().min(b.0.len());
            a.0[..common]
                .cmp(&b.0[..common])
                .then(b.0.len().cmp(&a.0.len()))
                .then(a.1.cmp(&b.1))
        });
        for (batch, v) in candidates {
            let mut verdict = Ordering::Equal;
            if let Some(best) = self.best.as_ref() {
                for (i, e) in batch.iter().enumerate() {
                    verdict = edge_cmp(e, &best[self.enc.len() + i]);
                    if verdict != Ordering::Equal {
                        break;
                    }
                }
            }
            match verdict {
                Ordering::Greater => continue,
                Ordering::Less => self.best = None,
                Ordering::Equal => {}
            }
            self.new_label[v] = Some(level);
            for &ei in &self.incident[v] {
                self.assigned_in_edge[ei] += 1;
            }
            let appended = batch.len();
            self.enc.extend(batch);
            self.descend(level + 1);
            self.enc.truncate(self.enc.len() - appended);
            for &ei in &self.incident[v] {
                self.assigned_in_edge[ei] -= 1;
            }
            self.new_label[v] = None;
        }
    }

    /// Relabeled edges that become fully assigned when `v` receives `level`,
    /// sorted; all have maximum label `level`.
    fn finalized_by(&self, v: usize, level: usize) -> Vec<Vec<usize>> {
        let mut batch: Vec<Vec<usize>> = Vec::new();
        for &ei in &self.incident[v] {
            if self.assigned_in_edge[ei] + 1 < self.g.k() {
                continue;
            }
            let mut e2: Vec<usize> = self.g.edges()[ei]
                .iter()
                .map(|&w| if w == v { level } else { self.new_label[w].expect("assigned") })
                .collect();
            e2.sort_unstable();
            batch.push(e2);
        }
        batch.sort_unstable();
        batch
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn loose_path_3_2() -> Hypergraph {
        Hypergraph::from_edges(3, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap()
    }

    fn d3_3() -> Hypergraph {
        Hypergraph::from_edges(3, vec![vec![0, 1, 2], vec![2, 3, 4], vec![2, 5, 6]]).unwrap()
    }

    fn p3_3() -> Hypergraph {
        Hypergraph::from_edges(3, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 6]]).unwrap()
    }

    #[test]
    fn canonical_representative_of_loose_path() {
        let c = canonical_form(&loose_path_3_2()).unwrap();
        assert_eq!(c.as_text(), "3 5 2\n0 1 2\n0 3 4\n");
    }

    #[test]
    fn equal_under_relabeling() {
        let g = loose_path_3_2();
        let c = canonical_form(&g).unwrap();
        for perm in [vec![4, 3, 2, 1, 0], vec![2, 0, 4, 1, 3], vec![1, 3, 0, 4, 2]] {
            assert_eq!(canonical_form(&g.relabel(&perm)).unwrap(), c);
        }
    }

    #[test]
    fn invariant_under_100_random_permutations() {
        let mut rng = StdRng::seed_from_u64(7);
        for g in [d3_3(), p3_3()] {
            let c = canonical_form(&g).unwrap();
            let mut perm: Vec<usize> = (0..g.n()).collect();
            for _ in 0..100 {
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&g.relabel(&perm)).unwrap(), c);
            }
        }
    }

    #[test]
    fn distinguishes_p3_from_d3() {
        assert_ne!(canonical_form(&p3_3()).unwrap(), canonical_form(&d3_3()).unwrap());
        assert!(!is_isomorphic(&p3_3(), &d3_3()).unwrap());
    }

    #[test]
    fn idempotent() {
        for g in [loose_path_3_2(), d3_3(), p3_3()] {
            let c = canonical_form(&g).unwrap();
            assert_eq!(canonical_form(&c.to_hypergraph()).unwrap(), c);
        }
    }

    #[test]
    fn distinguishes_same_degree_multiset() {
        let c6 = Hypergraph::from_edges(
            2,
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![5, 0]],
        )
        .unwrap();
        let two_triangles = Hypergraph::from_edges(
            2,
            vec![vec![0, 1], vec![1, 2], vec![2, 0], vec![3, 4], vec![4, 5], vec![5, 3]],
        )
        .unwrap();
        assert_eq!(c6.degrees(), vec![2; 6]);
        assert_eq!(two_triangles.degrees(), vec![2; 6]);
        assert!(!is_isomorphic(&c6, &two_triangles).unwrap());
    }

    #[test]
    fn isomorphic_after_scramble() {
        let g = d3_3();
        let perm = vec![6, 2, 0, 5, 1, 4, 3];
        assert!(is_isomorphic(&g, &g.relabel(&perm)).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let chain: Vec<Vec<usize>> = (0..16).map(|i| vec![i, i + 1]).collect();
        let g = Hypergraph::from_edges(2, chain).unwrap();
        assert_eq!(g.n(), 17);
        assert_eq!(
            canonical_form(&g).unwrap_err(),
            CanonError::CapExceeded { n: 17, max_n: 16 }
        );
        assert!(canonical_form_capped(&g, 17).is_ok());
    }

    #[test]
    fn star_with_large_pendant_class() {
        let star = Hypergraph::from_edges(
            4,
            vec![vec![0, 1, 2, 3], vec![0, 4, 5, 6], vec![0, 7, 8, 9]],
        )
        .unwrap();
        let c = canonical_form(&star).unwrap();
        assert_eq!(c.as_text(), "4 10 3\n0 1 2 3\n0 4 5 6\n0 7 8 9\n");
        let mut rng = StdRng::seed_from_u64(11);
        let mut perm: Vec<usize> = (0..10).collect();
        for _ in 0..20 {
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&star.relabel(&perm)).unwrap(), c);
        }
    }
}
