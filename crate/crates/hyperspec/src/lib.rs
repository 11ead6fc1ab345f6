//! Spectral radii of k-uniform hypergraph adjacency tensors.
//!
//! The crate revolves around three questions about a connected k-uniform
//! hypergraph `G` with `m` edges:
//!
//! 1. what is the spectral radius of its adjacency tensor, with certified
//!    two-sided bounds ([`spectral`]);
//! 2. how do edge surgeries (moving, part swaps, pendant-path shifts,
//!    reduction) change it ([`transforms`]);
//! 3. which hypergraphs minimize it at a fixed edge count — answered
//!    exhaustively at desk scale by isomorph-free enumeration
//!    ([`enumerate`]) and constructively by the extremal families
//!    ([`families`]).
//!
//! Everything is exact or certified: isomorphism uses a canonical form from
//! pruned permutation search, and spectral comparisons are only asserted
//! when the certified Perron bound intervals are disjoint.

pub mod canon;
pub mod enumerate;
pub mod families;
pub mod hypergraph;
pub mod jsonfmt;
pub mod spectral;
pub mod transforms;
pub mod verify;

pub use canon::{canonical_form, is_isomorphic, CanonError, CanonicalForm, DEFAULT_MAX_N};
pub use enumerate::{enumerate_connected, rank_by_rho, RankedClass, RankingReport};
pub use families::FamilySpec;
pub use hypergraph::{Hypergraph, HypergraphError};
pub use spectral::{
    apply_adjacency, poly_residual, rayleigh, residual, spectral_radius, EigenResult,
    SpectralError,
};
pub use transforms::MoveSpec;
