//! Hypergraph data model: validation, degrees, connectivity, `.hg` file I/O.
//!
//! A [`Hypergraph`] is always stored in normalized form: every edge is a
//! strictly ascending list of `k` distinct vertex indices, the edge list is
//! sorted lexicographically, there are no duplicate edges and no isolated
//! vertices. Equality of normalized hypergraphs is therefore a plain
//! structural comparison.

use std::fmt;

/// Errors from construction, validation and `.hg` parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    /// Header line is not `k n m` or a value failed to parse.
    MalformedHeader(String),
    /// Edge does not contain exactly `k` vertices.
    WrongCardinality { edge_index: usize, got: usize, k: usize },
    /// A vertex occurs twice within one edge.
    DuplicateVertexInEdge { edge_index: usize, vertex: usize },
    /// The same edge occurs twice.
    DuplicateEdge { edge_index: usize },
    /// A vertex index is `>= n`.
    VertexOutOfRange { edge_index: usize, vertex: usize, n: usize },
    /// A declared vertex appears in no edge.
    IsolatedVertex { vertex: usize },
    /// `k < 2` or no edges where at least one is required.
    BadParameters(String),
}

impl fmt::Display for HypergraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MalformedHeader(s) => write!(f, "malformed header: {s}"),
            Self::WrongCardinality { edge_index, got, k } => {
                write!(f, "edge {edge_index} has {got} vertices, expected {k}")
            }
            Self::DuplicateVertexInEdge { edge_index, vertex } => {
                write!(f, "edge {edge_index} contains vertex {vertex} more than once")
            }
            Self::DuplicateEdge { edge_index } => write!(f, "duplicate edge at index {edge_index}"),
            Self::VertexOutOfRange { edge_index, vertex, n } => {
                write!(f, "edge {edge_index} has vertex {vertex} out of range (n={n})")
            }
            Self::IsolatedVertex { vertex } => write!(f, "vertex {vertex} appears in no edge"),
            Self::BadParameters(s) => write!(f, "bad parameters: {s}"),
        }
    }
}

impl std::error::Error for HypergraphError {}

/// A k-uniform hypergraph on vertices `0..n`, stored in normalized form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph from an edge list, compacting vertex labels.
    ///
    /// Vertices are relabeled densely in increasing order of their original
    /// labels, so any unused indices disappear. Edges are normalized (sorted
    /// within and across) and validated.
    pub fn from_edges(k: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        if k < 2 {
            return Err(HypergraphError::BadParameters(format!("k must be >= 2, got {k}")));
        }
        if edges.is_empty() {
            return Err(HypergraphError::BadParameters("at least one edge required".into()));
        }
        let mut used: Vec<usize> = edges.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        let relabel = |v: usize| used.binary_search(&v).expect("vertex present in used list");
        let compacted: Vec<Vec<usize>> = edges
            .iter()
            .map(|e| e.iter().map(|&v| relabel(v)).collect())
            .collect();
        Self::from_raw_parts(k, used.len(), compacted)
    }

    /// Builds a hypergraph with an explicit vertex count, without relabeling.
    ///
    /// Edges may arrive unsorted; they are normalized here. Fails on wrong
    /// cardinality, duplicate vertices within an edge, out-of-range indices,
    /// duplicate edges, or isolated vertices.
    pub fn from_raw_parts(
        k: usize,
        n: usize,
        edges: Vec<Vec<usize>>,
    ) -> Result<Self, HypergraphError> {
        if k < 2 {
            return Err(HypergraphError::BadParameters(format!("k must be >= 2, got {k}")));
        }
        if edges.is_empty() {
            return Err(HypergraphError::BadParameters("at least one edge required".into()));
        }
        let mut norm: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        for (idx, edge) in edges.into_iter().enumerate() {
            if edge.len() != k {
                return Err(HypergraphError::WrongCardinality {
                    edge_index: idx,
                    got: edge.len(),
                    k,
                });
            }
            let mut e = edge;
            e.sort_unstable();
            for w in e.windows(2) {
                if w[0] == w[1] {
                    return Err(HypergraphError::DuplicateVertexInEdge {
                        edge_index: idx,
                        vertex: w[0],
                    });
                }
            }
            if let Some(&v) = e.last() {
                if v >= n {
                    return Err(HypergraphError::VertexOutOfRange { edge_index: idx, vertex: v, n });
                }
            }
            norm.push(e);
        }
        norm.sort_unstable();
        for (idx, w) in norm.windows(2).enumerate() {
            if w[0] == w[1] {
                return Err(HypergraphError::DuplicateEdge { edge_index: idx + 1 });
            }
        }
        let mut seen = vec![false; n];
        for e in &norm {
            for &v in e {
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(HypergraphError::IsolatedVertex { vertex: v });
        }
        Ok(Self { k, n, edges: norm })
    }

    /// Edge cardinality k.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// The normalized edge list.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Per-vertex incidence counts; pendant vertices are those with count 1.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    /// True iff any two vertices are joined by a path of edges.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut dsu = Dsu::new(self.n);
        for e in &self.edges {
            for w in e.windows(2) {
                dsu.union(w[0], w[1]);
            }
        }
        (0..self.n).filter(|&v| dsu.find(v) == v).count()
    }

    /// Parses the `.hg` text format: header `k n m`, then `m` edge lines.
    pub fn parse(text: &str) -> Result<Self, HypergraphError> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| HypergraphError::MalformedHeader("empty input".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(HypergraphError::MalformedHeader(format!(
                "expected `k n m`, got {:?}",
                header
            )));
        }
        let parse_field = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| HypergraphError::MalformedHeader(format!("bad integer {s:?}")))
        };
        let k = parse_field(fields[0])?;
        let n = parse_field(fields[1])?;
        let m = parse_field(fields[2])?;
        let mut edges = Vec::with_capacity(m);
        for (idx, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let mut edge = Vec::with_capacity(k);
            for tok in line.split_whitespace() {
                edge.push(tok.parse::<usize>().map_err(|_| {
                    HypergraphError::MalformedHeader(format!("edge {idx}: bad integer {tok:?}"))
                })?);
            }
            edges.push(edge);
        }
        if edges.len() != m {
            return Err(HypergraphError::MalformedHeader(format!(
                "header declares {m} edges, found {}",
                edges.len()
            )));
        }
        Self::from_raw_parts(k, n, edges)
    }

    /// Serializes to the `.hg` text format (normalized, trailing newline).
    pub fn serialize(&self) -> String {
        let mut out = format!("{} {} {}\n", self.k, self.n, self.edges.len());
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    ///
    /// `perm` must be a permutation of `0..n`. The result is renormalized.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .map(|e| {
                let mut e2: Vec<usize> = e.iter().map(|&v| perm[v]).collect();
                e2.sort_unstable();
                e2
            })
            .collect();
        edges.sort_unstable();
        Self { k: self.k, n: self.n, edges }
    }
}

/// Disjoint-set union used by the connectivity check.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}
