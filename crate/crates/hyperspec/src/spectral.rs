//! Adjacency-tensor action and spectral radius via shifted power iteration.
//!
//! The adjacency tensor of a k-uniform hypergraph acts on a vector by
//! `(Ax)_i = Σ_{e ∋ i} Π_{v ∈ e\{i}} x_v`; the spectral radius is the largest
//! H-eigenvalue `λ` with `Ax = λ x^{k−1}` for a positive eigenvector. The
//! iteration here runs on the shifted action `B(x) = Ax + x^{k−1}` — the shift
//! makes the iteration converge for every connected input (bipartite-like
//! structures make the unshifted ratios oscillate) and adds exactly 1 to every
//! eigenvalue while preserving eigenvectors. Each step yields certified
//! Collatz–Wielandt bounds `min_i y_i/x_i^{k−1} ≤ ρ(B) ≤ max_i y_i/x_i^{k−1}`,
//! so convergence is declared on a rigorous two-sided gap, not on iterate
//! movement, and strict comparisons between spectral radii can be asserted on
//! disjoint bound intervals.

use crate::hypergraph::Hypergraph;
use std::fmt;

/// Spectral radius estimate with certified bounds and the principal
/// eigenvector (normalized so `Σ x_v^k = 1`).
#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    pub rho: f64,
    pub lower: f64,
    pub upper: f64,
    pub x: Vec<f64>,
    pub iterations: usize,
    pub residual: f64,
}

/// Errors from spectral computations.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectralError {
    /// Vector length differs from the vertex count.
    LengthMismatch { expected: usize, got: usize },
    /// Positive principal eigenvector requires a connected hypergraph.
    Disconnected,
    /// Bound gap stayed above tolerance; best certified result attached.
    DidNotConverge { best: EigenResult },
    /// Polynomial evaluation needs at least one coefficient.
    EmptyCoefficients,
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LengthMismatch { expected, got } => {
                write!(f, "vector length {got}, expected {expected}")
            }
            Self::Disconnected => write!(f, "hypergraph is not connected"),
            Self::DidNotConverge { best } => write!(
                f,
                "no convergence within {} iterations; certified bounds [{:.17e}, {:.17e}]",
                best.iterations, best.lower, best.upper
            ),
            Self::EmptyCoefficients => write!(f, "empty coefficient list"),
        }
    }
}

impl std::error::Error for SpectralError {}

/// Applies the adjacency tensor: `result_i = Σ_{e ∋ i} Π_{v ∈ e\{i}} x_v`.
pub fn apply_adjacency(g: &Hypergraph, x: &[f64]) -> Result<Vec<f64>, SpectralError> {
    if x.len() != g.n() {
        return Err(SpectralError::LengthMismatch { expected: g.n(), got: x.len() });
    }
    let k = g.k();
    let mut out = vec![0.0; g.n()];
    let mut suffix = vec![1.0; k + 1];
    for e in g.edges() {
        for i in (0..k).rev() {
            suffix[i] = suffix[i + 1] * x[e[i]];
        }
        let mut prefix = 1.0;
        for i in 0..k {
            out[e[i]] += prefix * suffix[i + 1];
            prefix *= x[e[i]];
        }
    }
    Ok(out)
}

/// The Rayleigh form `x^T (Ax) = k · Σ_e Π_{v∈e} x_v`.
pub fn rayleigh(g: &Hypergraph, x: &[f64]) -> Result<f64, SpectralError> {
    if x.len() != g.n() {
        return Err(SpectralError::LengthMismatch { expected: g.n(), got: x.len() });
    }
    let sum: f64 = g
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| x[v]).product::<f64>())
        .sum();
    Ok(g.k() as f64 * sum)
}

/// Computes the spectral radius of a connected hypergraph.
///
/// Runs the shifted power iteration from the all-ones direction until the
/// certified gap `upper − lower` drops to `tol`; fails with the best bounds
/// attached if `max_iter` steps do not suffice.
pub fn spectral_radius(
    g: &Hypergraph,
    tol: f64,
    max_iter: usize,
) -> Result<EigenResult, SpectralError> {
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let k = g.k();
    let n = g.n();
    let km1 = (k - 1) as i32;
    let mut x = vec![(n as f64).powf(-1.0 / k as f64); n];
    let mut bounds = (f64::NEG_INFINITY, f64::INFINITY);
    let mut iterations = 0;
    for _ in 0..max_iter {
        iterations += 1;
        let ax = apply_adjacency(g, &x).expect("length matches");
        let mut lmin = f64::INFINITY;
        let mut lmax = f64::NEG_INFINITY;
        let mut y = vec![0.0; n];
        for i in 0..n {
            let p = x[i].powi(km1);
            y[i] = ax[i] + p;
            let ratio = y[i] / p;
            lmin = lmin.min(ratio);
            lmax = lmax.max(ratio);
        }
        bounds = (lmin, lmax);
        if lmax - lmin <= tol {
            normalize(&mut x, k);
            return Ok(build_result(g, x, lmin - 1.0, lmax - 1.0, iterations));
        }
        for i in 0..n {
            x[i] = if k == 2 { y[i] } else { y[i].powf(1.0 / km1 as f64) };
        }
        normalize(&mut x, k);
    }
    normalize(&mut x, k);
    let best = build_result(g, x, bounds.0 - 1.0, bounds.1 - 1.0, iterations);
    Err(SpectralError::DidNotConverge { best })
}

fn normalize(x: &mut [f64], k: usize) {
    let s: f64 = x.iter().map(|&v| v.powi(k as i32)).sum();
    let scale = s.powf(-1.0 / k as f64);
    for v in x.iter_mut() {
        *v *= scale;
    }
}

fn build_result(g: &Hypergraph, x: Vec<f64>, lower: f64, upper: f64, iterations: usize) -> EigenResult {
    let rho = (lower + upper) / 2.0;
    let mut r = EigenResult { rho, lower, upper, x, iterations, residual: 0.0 };
    r.residual = residual(g, &r);
    r
}

/// Eigen-equation defect: `max_i |(Ax)_i − rho · x_i^{k−1}|`.
pub fn residual(g: &Hypergraph, r: &EigenResult) -> f64 {
    let ax = apply_adjacency(g, &r.x).expect("result belongs to g");
    let km1 = (g.k() - 1) as i32;
    ax.iter()
        .zip(&r.x)
        .map(|(&a, &xi)| (a - r.rho * xi.powi(km1)).abs())
        .fold(0.0, f64::max)
}

/// Horner evaluation of a polynomial given highest-degree-first coefficients.
pub fn poly_residual(coeffs: &[f64], value: f64) -> Result<f64, SpectralError> {
    let (first, rest) = coeffs.split_first().ok_or(SpectralError::EmptyCoefficients)?;
    Ok(rest.iter().fold(*first, |acc, &c| acc * value + c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_edge(k: usize) -> Hypergraph {
        Hypergraph::from_edges(k, vec![(0..k).collect()]).unwrap()
    }

    fn p2_3() -> Hypergraph {
        Hypergraph::from_edges(3, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap()
    }

    fn path_graph(m: usize) -> Hypergraph {
        Hypergraph::from_edges(2, (0..m).map(|i| vec![i, i + 1]).collect()).unwrap()
    }

    #[test]
    fn apply_single_edge() {
        let g = single_edge(3);
        assert_eq!(apply_adjacency(&g, &[1.0, 2.0, 3.0]).unwrap(), vec![6.0, 3.0, 2.0]);
    }

    #[test]
    fn apply_counts_shared_vertex_twice() {
        let g = p2_3();
        assert_eq!(apply_adjacency(&g, &[1.0; 5]).unwrap(), vec![1.0, 1.0, 2.0, 1.0, 1.0]);
    }

    #[test]
    fn apply_zero_vector() {
        assert_eq!(apply_adjacency(&p2_3(), &[0.0; 5]).unwrap(), vec![0.0; 5]);
    }

    #[test]
    fn apply_scale_law_is_exact_for_powers_of_two() {
        let g = p2_3();
        let x = [0.5, 1.5, 2.0, 0.25, 3.0];
        let doubled: Vec<f64> = x.iter().map(|v| 2.0 * v).collect();
        let base = apply_adjacency(&g, &x).unwrap();
        let scaled = apply_adjacency(&g, &doubled).unwrap();
        for i in 0..5 {
            assert_eq!(scaled[i], 4.0 * base[i]);
        }
    }

    #[test]
    fn apply_rejects_length_mismatch() {
        assert!(matches!(
            apply_adjacency(&p2_3(), &[1.0; 4]),
            Err(SpectralError::LengthMismatch { expected: 5, got: 4 })
        ));
    }

    #[test]
    fn rayleigh_examples() {
        assert_eq!(rayleigh(&single_edge(3), &[1.0; 3]).unwrap(), 3.0);
        assert_eq!(rayleigh(&p2_3(), &[1.0; 5]).unwrap(), 6.0);
        assert_eq!(rayleigh(&single_edge(3), &[1.0, 2.0, 3.0]).unwrap(), 18.0);
    }

    #[test]
    fn rayleigh_matches_inner_product() {
        let g = p2_3();
        let x = [0.3, 1.1, 0.9, 2.0, 0.7];
        let ax = apply_adjacency(&g, &x).unwrap();
        let inner: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        assert!((rayleigh(&g, &x).unwrap() - inner).abs() < 1e-12);
    }

    #[test]
    fn single_edge_rho_is_one() {
        for k in 2..=6 {
            let r = spectral_radius(&single_edge(k), 1e-10, 1_000_000).unwrap();
            assert!((r.rho - 1.0).abs() <= 1e-10, "k={k}: rho={}", r.rho);
            assert!(r.lower <= r.rho && r.rho <= r.upper);
            assert!(r.residual <= 1e-12);
        }
    }

    #[test]
    fn two_edges_sharing_two_vertices() {
        let g = Hypergraph::from_edges(3, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        let r = spectral_radius(&g, 1e-12, 1_000_000).unwrap();
        assert!((r.rho - 2f64.powf(2.0 / 3.0)).abs() < 1e-9);
    }

    #[test]
    fn loose_path_k3_m2() {
        let r = spectral_radius(&p2_3(), 1e-12, 1_000_000).unwrap();
        assert!((r.rho - 2f64.powf(1.0 / 3.0)).abs() < 1e-9);
    }

    #[test]
    fn ordinary_path_closed_form() {
        for m in 1..=6 {
            let want = 2.0 * (std::f64::consts::PI / (m as f64 + 2.0)).cos();
            let r = spectral_radius(&path_graph(m), 1e-12, 1_000_000).unwrap();
            assert!((r.rho - want).abs() < 1e-9, "m={m}: {} vs {}", r.rho, want);
        }
    }

    #[test]
    fn loose_path_k4_m6_fourth_power() {
        let edges: Vec<Vec<usize>> = (0..6).map(|i| (3 * i..3 * i + 4).collect()).collect();
        let g = Hypergraph::from_edges(4, edges).unwrap();
        let r = spectral_radius(&g, 1e-12, 1_000_000).unwrap();
        assert!((r.rho.powi(4) - (2.0 + 2f64.sqrt())).abs() < 1e-8);
    }

    #[test]
    fn loose_three_cycle() {
        let g = Hypergraph::from_edges(3, vec![vec![0, 1, 2], vec![2, 3, 4], vec![0, 4, 5]]).unwrap();
        let r = spectral_radius(&g, 1e-12, 1_000_000).unwrap();
        assert!((r.rho - 4f64.powf(1.0 / 3.0)).abs() < 1e-9);
    }

    #[test]
    fn eigenvector_is_positive_and_normalized() {
        let g = p2_3();
        let r = spectral_radius(&g, 1e-10, 1_000_000).unwrap();
        assert!(r.x.iter().all(|&v| v > 0.0));
        let s: f64 = r.x.iter().map(|v| v.powi(3)).sum();
        assert!((s - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Hypergraph::from_edges(3, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert!(matches!(spectral_radius(&g, 1e-10, 100), Err(SpectralError::Disconnected)));
    }

    #[test]
    fn non_convergence_reports_valid_bounds() {
        let g = p2_3();
        let rho = 2f64.powf(1.0 / 3.0);
        match spectral_radius(&g, 1e-14, 2) {
            Err(SpectralError::DidNotConverge { best }) => {
                assert_eq!(best.iterations, 2);
                assert!(best.lower <= rho && rho <= best.upper);
            }
            other => panic!("expected DidNotConverge, got {other:?}"),
        }
    }

    #[test]
    fn residual_detects_perturbed_eigenvector() {
        let g = p2_3();
        let mut r = spectral_radius(&g, 1e-10, 1_000_000).unwrap();
        assert!(r.residual <= 1e-10);
        for v in r.x.iter_mut() {
            *v += 0.1;
        }
        assert!(residual(&g, &r) > 1e-3);
    }

    #[test]
    fn horner_evaluation() {
        let f = [1.0, -8.0, 21.0, -23.0, 13.0, -3.0];
        assert_eq!(poly_residual(&f, 1.0).unwrap(), 1.0);
        assert_eq!(poly_residual(&f, 4.0).unwrap(), 1.0);
        assert_eq!(poly_residual(&f, 0.5).unwrap(), -3.0 / 32.0);
        assert!(matches!(poly_residual(&[], 1.0), Err(SpectralError::EmptyCoefficients)));
    }

    #[test]
    fn rayleigh_never_exceeds_rho_on_normalized_vectors() {
        let g = p2_3();
        let r = spectral_radius(&g, 1e-12, 1_000_000).unwrap();
        let mut x: Vec<f64> = vec![0.9, 0.3, 1.7, 0.2, 1.1];
        let s: f64 = x.iter().map(|v| v.powi(3)).sum();
        let scale = s.powf(-1.0 / 3.0);
        for v in x.iter_mut() {
            *v *= scale;
        }
        assert!(rayleigh(&g, &x).unwrap() <= r.rho + 1e-12);
    }
}
