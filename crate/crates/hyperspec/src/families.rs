//! Deterministic generators for the extremal families: loose paths and
//! cycles, the D and D′ families, the 3-uniform E/F/G shapes, the 4-uniform
//! H family, and the two-edge overlap graphs.
//!
//! Labels are assigned spine-first, then legs in declaration order, so every
//! generator is byte-reproducible. [`FamilySpec`] parses the CLI string
//! syntax (`P:k,m`, `Dp:k,m`, `E3:i,j,l`, `G3:i,j,l,p,q`, `H4:t`, `TE:k,a`,
//! …) and expands it to a hypergraph.

use crate::hypergraph::Hypergraph;
use crate::transforms::attach_path;
use std::fmt;

/// Errors from family expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    UnknownFamily(String),
    Malformed(String),
    BadParameters { family: String, reason: String },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnknownFamily(s) => write!(f, "unknown family {s:?}"),
            Self::Malformed(s) => write!(f, "malformed family string: {s}"),
            Self::BadParameters { family, reason } => write!(f, "{family}: {reason}"),
        }
    }
}

impl std::error::Error for FamilyError {}

fn bad(family: &str, reason: impl Into<String>) -> FamilyError {
    FamilyError::BadParameters { family: family.into(), reason: reason.into() }
}

/// The loose path P_m^(k): m edges, consecutive ones sharing one vertex.
pub fn loose_path(k: usize, m: usize) -> Result<Hypergraph, FamilyError> {
    if k < 2 {
        return Err(bad("P", format!("k must be >= 2, got {k}")));
    }
    if m < 1 {
        return Err(bad("P", "m must be >= 1"));
    }
    let edges = (0..m).map(|i| (i * (k - 1)..i * (k - 1) + k).collect()).collect();
    Ok(Hypergraph::from_raw_parts(k, (k - 1) * m + 1, edges).expect("loose path is valid"))
}

/// The loose cycle C_m^(k): as the loose path, but closed up.
pub fn loose_cycle(k: usize, m: usize) -> Result<Hypergraph, FamilyError> {
    if k < 2 {
        return Err(bad("C", format!("k must be >= 2, got {k}")));
    }
    if m < 3 {
        return Err(bad("C", format!("cycle needs m >= 3, got {m}")));
    }
    let n = (k - 1) * m;
    let mut edges: Vec<Vec<usize>> =
        (0..m - 1).map(|i| (i * (k - 1)..i * (k - 1) + k).collect()).collect();
    let mut last: Vec<usize> = ((m - 1) * (k - 1)..n).collect();
    last.push(0);
    edges.push(last);
    Ok(Hypergraph::from_raw_parts(k, n, edges).expect("loose cycle is valid"))
}

/// D_m^(k): a loose path of length m−1 with a pendant edge at u_1, the
/// vertex shared by its first two edges.
pub fn d_family(k: usize, m: usize) -> Result<Hypergraph, FamilyError> {
    if m < 3 {
        return Err(bad("D", format!("m must be >= 3, got {m}")));
    }
    let spine = loose_path(k, m - 1)?;
    Ok(attach_path(&spine, k - 1, 1).expect("u_1 in range"))
}

/// D′_m^(k): a loose path of length m−1 with a pendant edge at a degree-1
/// vertex interior to its second edge.
pub fn d_prime_family(k: usize, m: usize) -> Result<Hypergraph, FamilyError> {
    if k < 3 {
        return Err(bad("Dp", format!("k must be >= 3, got {k}: e_2 has no spare degree-1 vertex")));
    }
    if m < 3 {
        return Err(bad("Dp", format!("m must be >= 3, got {m}")));
    }
    let spine = loose_path(k, m - 1)?;
    Ok(attach_path(&spine, k, 1).expect("first interior vertex of e_2 in range"))
}

/// E_{i,j,l}^(3): three pendant paths of lengths i, j, l at a common vertex.
pub fn e3_family(i: usize, j: usize, l: usize) -> Result<Hypergraph, FamilyError> {
    if i < 1 || j < 1 || l < 1 {
        return Err(bad("E3", format!("path lengths must be >= 1, got ({i},{j},{l})")));
    }
    let first_leg = loose_path(3, i)?;
    let two = attach_path(&first_leg, 0, j).expect("common vertex in range");
    Ok(attach_path(&two, 0, l).expect("common vertex in range"))
}

/// F_{i,j,l}^(3): pendant paths of lengths i, j, l at the three vertices of
/// a single edge.
pub fn f3_family(i: usize, j: usize, l: usize) -> Result<Hypergraph, FamilyError> {
    if i < 1 || j < 1 || l < 1 {
        return Err(bad("F3", format!("path lengths must be >= 1, got ({i},{j},{l})")));
    }
    let center = loose_path(3, 1)?;
    let a = attach_path(&center, 0, i).expect("in range");
    let b = attach_path(&a, 1, j).expect("in range");
    Ok(attach_path(&b, 2, l).expect("in range"))
}

/// G_{i,j:l:p,q}^(3): a loose path of length l+2 with pendant paths of
/// lengths i, j at the two pendant vertices of its first edge and p, q at
/// the two pendant vertices of its last edge.
pub fn g3_family(
    i: usize,
    j: usize,
    l: usize,
    p: usize,
    q: usize,
) -> Result<Hypergraph, FamilyError> {
    if i < 1 || j < 1 || p < 1 || q < 1 {
        return Err(bad("G3", format!("leg lengths must be >= 1, got ({i},{j},{p},{q})")));
    }
    let spine = loose_path(3, l + 2)?;
    let tail = spine.n() - 1;
    let g = attach_path(&spine, 0, i).expect("in range");
    let g = attach_path(&g, 1, j).expect("in range");
    let g = attach_path(&g, tail - 1, p).expect("in range");
    Ok(attach_path(&g, tail, q).expect("in range"))
}

/// H_{1,1,1,t}: 4-uniform; a central edge {u_1, v_1, v_2, u_2} with pendant
/// edges at u_1, v_1, v_2 and a pendant path of length t at u_2.
pub fn h4_family(t: usize) -> Result<Hypergraph, FamilyError> {
    if !(1..=4).contains(&t) {
        return Err(bad("H4", format!("t must be in 1..=4, got {t}")));
    }
    let center = Hypergraph::from_raw_parts(4, 4, vec![vec![0, 1, 2, 3]]).expect("single edge");
    let g = attach_path(&center, 0, 1).expect("in range");
    let g = attach_path(&g, 1, 1).expect("in range");
    let g = attach_path(&g, 2, 1).expect("in range");
    Ok(attach_path(&g, 3, t).expect("in range"))
}

/// Two k-edges sharing exactly `a` vertices.
pub fn two_edge_overlap(k: usize, a: usize) -> Result<Hypergraph, FamilyError> {
    if k < 2 {
        return Err(bad("TE", format!("k must be >= 2, got {k}")));
    }
    if a < 1 || a > k - 1 {
        return Err(bad("TE", format!("overlap must satisfy 1 <= a <= k-1, got a={a}")));
    }
    let first: Vec<usize> = (0..k).collect();
    let mut second: Vec<usize> = (0..a).collect();
    second.extend(k..2 * k - a);
    Ok(Hypergraph::from_raw_parts(k, 2 * k - a, vec![first, second]).expect("overlap is valid"))
}

/// A parsed family name plus parameters, e.g. `Dp:3,4` or `G3:1,1,0,1,3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub params: Vec<usize>,
}

/// The generator a [`FamilySpec`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyName {
    P,
    C,
    D,
    Dprime,
    E3,
    F3,
    G3,
    H4,
    TwoEdge,
}

impl FamilyName {
    fn token(self) -> &'static str {
        match self {
            Self::P => "P",
            Self::C => "C",
            Self::D => "D",
            Self::Dprime => "Dp",
            Self::E3 => "E3",
            Self::F3 => "F3",
            Self::G3 => "G3",
            Self::H4 => "H4",
            Self::TwoEdge => "TE",
        }
    }

    fn arity(self) -> usize {
        match self {
            Self::P | Self::C | Self::D | Self::Dprime | Self::TwoEdge => 2,
            Self::E3 | Self::F3 => 3,
            Self::G3 => 5,
            Self::H4 => 1,
        }
    }
}

impl FamilySpec {
    /// Parses the CLI syntax `NAME:p1,p2,…`.
    pub fn parse(s: &str) -> Result<Self, FamilyError> {
        let (name_str, params_str) = s
            .split_once(':')
            .ok_or_else(|| FamilyError::Malformed(format!("{s:?}: expected NAME:params")))?;
        let name = match name_str {
            "P" => FamilyName::P,
            "C" => FamilyName::C,
            "D" => FamilyName::D,
            "Dp" => FamilyName::Dprime,
            "E3" => FamilyName::E3,
            "F3" => FamilyName::F3,
            "G3" => FamilyName::G3,
            "H4" => FamilyName::H4,
            "TE" => FamilyName::TwoEdge,
            other => return Err(FamilyError::UnknownFamily(other.into())),
        };
        let params: Vec<usize> = params_str
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| FamilyError::Malformed(format!("bad integer {t:?} in {s:?}")))
            })
            .collect::<Result<_, _>>()?;
        if params.len() != name.arity() {
            return Err(FamilyError::Malformed(format!(
                "{} takes {} parameters, got {}",
                name.token(),
                name.arity(),
                params.len()
            )));
        }
        Ok(FamilySpec { name, params })
    }

    /// Expands the spec into a hypergraph.
    pub fn build(&self) -> Result<Hypergraph, FamilyError> {
        let p = &self.params;
        match self.name {
            FamilyName::P => loose_path(p[0], p[1]),
            FamilyName::C => loose_cycle(p[0], p[1]),
            FamilyName::D => d_family(p[0], p[1]),
            FamilyName::Dprime => d_prime_family(p[0], p[1]),
            FamilyName::E3 => e3_family(p[0], p[1], p[2]),
            FamilyName::F3 => f3_family(p[0], p[1], p[2]),
            FamilyName::G3 => g3_family(p[0], p[1], p[2], p[3], p[4]),
            FamilyName::H4 => h4_family(p[0]),
            FamilyName::TwoEdge => two_edge_overlap(p[0], p[1]),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        write!(f, "{}:{}", self.name.token(), params.join(","))
    }
}

/// Names the family a hypergraph belongs to, if any generator produces its
/// isomorphism class; used to label enumeration reports.
pub fn recognize_family(g: &Hypergraph) -> Option<FamilySpec> {
    let (k, m) = (g.k(), g.m());
    let mut candidates: Vec<FamilySpec> = Vec::new();
    let spec = |name: FamilyName, params: Vec<usize>| FamilySpec { name, params };
    candidates.push(spec(FamilyName::P, vec![k, m]));
    if m == 2 {
        for a in 2..k {
            candidates.push(spec(FamilyName::TwoEdge, vec![k, a]));
        }
    }
    candidates.push(spec(FamilyName::D, vec![k, m]));
    candidates.push(spec(FamilyName::Dprime, vec![k, m]));
    candidates.push(spec(FamilyName::C, vec![k, m]));
    if k == 4 && (5..=8).contains(&m) {
        candidates.push(spec(FamilyName::H4, vec![m - 4]));
    }
    if k == 3 {
        for i in 1..=m {
            for j in i..=m {
                for l in j..=m {
                    if i + j + l == m {
                        candidates.push(spec(FamilyName::E3, vec![i, j, l]));
                    }
                    if i + j + l + 1 == m {
                        candidates.push(spec(FamilyName::F3, vec![i, j, l]));
                    }
                }
            }
        }
        for i in 1..m {
            for j in i..m {
                for p in 1..m {
                    for q in p..m {
                        if (i, j) > (p, q) || i + j + p + q + 2 > m {
                            continue;
                        }
                        let l = m - 2 - (i + j + p + q);
                        candidates.push(spec(FamilyName::G3, vec![i, j, l, p, q]));
                    }
                }
            }
        }
    }
    for cand in candidates {
        let Ok(h) = cand.build() else { continue };
        if h.n() != g.n() {
            continue;
        }
        if let Ok(true) = crate::canon::is_isomorphic_capped(g, &h, g.n()) {
            return Some(cand);
        }
    }
    None
}
