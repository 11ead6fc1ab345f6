//! Numeric verification suites: the comparison lemmas (certified strict
//! inequalities), the reduction identity, the Rayleigh identity, the H-family
//! characteristic polynomials, and the cited table values.
//!
//! Strict inequalities are only asserted through disjoint certified bound
//! intervals — `upper(G) < lower(G')` — never point estimates, so a pass is
//! meaningful at finite precision. Suites that compare near-tied instances
//! tighten the tolerance to at most 1e−12 regardless of the configured one.

use crate::families::{
    d_family, d_prime_family, e3_family, f3_family, g3_family, h4_family, loose_cycle, loose_path,
    two_edge_overlap,
};
use crate::hypergraph::Hypergraph;
use crate::spectral::{
    apply_adjacency, poly_residual, rayleigh, spectral_radius, EigenResult, SpectralError,
};
use crate::transforms::{attach_path, attach_two_paths, is_reducible, move_edges, reduce, MoveSpec};
use std::fmt;

/// Tolerance and iteration budget for a verification run.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { tol: 1e-12, max_iter: 1_000_000 }
    }
}

/// One named check with its outcome and margin information.
#[derive(Debug, Clone)]
pub struct CheckCase {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The outcome of one suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub cases: Vec<CheckCase>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.cases.iter().filter(|c| c.passed).count()
    }

    /// Per-case lines plus a summary line, as printed by the CLI.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let mark = if c.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("[{mark}] {}: {}\n", c.name, c.detail));
        }
        out.push_str(&format!(
            "{}: {}/{} passed\n",
            self.suite,
            self.passed_count(),
            self.cases.len()
        ));
        out
    }
}

/// The available verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lemma1,
    Lemma3,
    LemmaTh1,
    Lemma4,
    Rayleigh,
    Polys,
    Tables,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Lemma1,
        Suite::Lemma3,
        Suite::LemmaTh1,
        Suite::Lemma4,
        Suite::Rayleigh,
        Suite::Polys,
        Suite::Tables,
    ];

    pub fn parse(name: &str) -> Option<Suite> {
        match name {
            "lemma1" => Some(Suite::Lemma1),
            "lemma3" => Some(Suite::Lemma3),
            "lemmaTh1" => Some(Suite::LemmaTh1),
            "lemma4" => Some(Suite::Lemma4),
            "rayleigh" => Some(Suite::Rayleigh),
            "polys" => Some(Suite::Polys),
            "tables" => Some(Suite::Tables),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Lemma3 => "lemma3",
            Suite::LemmaTh1 => "lemmaTh1",
            Suite::Lemma4 => "lemma4",
            Suite::Rayleigh => "rayleigh",
            Suite::Polys => "polys",
            Suite::Tables => "tables",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Runs one suite; errors only on computation failure (non-convergence),
/// never on a failed check — those land in the report.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport, SpectralError> {
    let cases = match suite {
        Suite::Lemma1 => lemma1_cases(cfg)?,
        Suite::Lemma3 => lemma3_cases(cfg)?,
        Suite::LemmaTh1 => lemma_th1_cases(cfg)?,
        Suite::Lemma4 => lemma4_cases(cfg)?,
        Suite::Rayleigh => rayleigh_cases(),
        Suite::Polys => polys_cases(cfg)?,
        Suite::Tables => tables_cases(cfg)?,
    };
    Ok(SuiteReport { suite: suite.name(), cases })
}

fn tightened(cfg: &VerifyConfig) -> VerifyConfig {
    VerifyConfig { tol: cfg.tol.min(1e-12), max_iter: cfg.max_iter }
}

fn rho(g: &Hypergraph, cfg: &VerifyConfig) -> Result<EigenResult, SpectralError> {
    spectral_radius(g, cfg.tol, cfg.max_iter)
}

/// Every instance the reduction identity is checked on: all reducible
/// generated families, plus loose cycles (whose waist vertices stay pendant
/// for k ≥ 3). Some shapes contribute nothing and are recorded as explicit
/// exclusions rather than silently skipped: F3 and G3 attach pendant paths
/// to every otherwise-free vertex of their first edge, and D′ at k=3 spends
/// e_2's only spare degree-1 vertex on the pendant edge, so those are never
/// reducible.
fn lemma4_cases(cfg: &VerifyConfig) -> Result<Vec<CheckCase>, SpectralError> {
    let mut instances: Vec<(String, Hypergraph)> = Vec::new();
    for k in 3..=6 {
        for m in 2..=6 {
            instances.push((format!("P:{k},{m}"), loose_path(k, m).expect("valid")));
        }
        for m in 3..=6 {
            instances.push((format!("D:{k},{m}"), d_family(k, m).expect("valid")));
        }
        instances.push((format!("C:{k},3"), loose_cycle(k, 3).expect("valid")));
    }
    for k in 4..=6 {
        for m in 3..=6 {
            instances.push((format!("Dp:{k},{m}"), d_prime_family(k, m).expect("valid")));
        }
    }
    for (i, j, l) in [(1, 1, 1), (1, 2, 2), (1, 1, 3), (2, 2, 2)] {
        instances.push((format!("E3:{i},{j},{l}"), e3_family(i, j, l).expect("valid")));
    }
    let mut cases = Vec::with_capacity(instances.len() + 3);
    for (name, g) in instances {
        let r = rho(&g, cfg)?;
        let reduced = reduce(&g).expect("instance is reducible");
        let r2 = rho(&reduced, cfg)?;
        let lhs = r.rho.powi(g.k() as i32);
        let rhs = r2.rho.powi(reduced.k() as i32);
        let rel = (lhs - rhs).abs() / rhs.abs().max(1.0);
        cases.push(CheckCase {
            name: format!("lemma4 {name}"),
            passed: rel <= 1e-8,
            detail: format!("rho^k={lhs:.12}, rho'^(k-1)={rhs:.12}, rel={rel:.3e}"),
        });
    }
    for (name, g, why) in [
        (
            "F3:1,1,1",
            f3_family(1, 1, 1).expect("valid"),
            "central edge has no pendant vertex",
        ),
        (
            "G3:1,1,0,1,1",
            g3_family(1, 1, 0, 1, 1).expect("valid"),
            "first edge has no pendant vertex",
        ),
        (
            "Dp:3,4",
            d_prime_family(3, 4).expect("valid"),
            "pendant edge takes e_2's only spare degree-1 vertex",
        ),
    ] {
        cases.push(CheckCase {
            name: format!("lemma4 {name} excluded"),
            passed: !is_reducible(&g),
            detail: format!("{why}; family instance is not reducible"),
        });
    }
    Ok(cases)
}

/// Move-edges instances where the eigenvector precondition x_u ≥ max x_{v_i}
/// is verified numerically before asserting the strict increase.
fn lemma1_cases(cfg: &VerifyConfig) -> Result<Vec<CheckCase>, SpectralError> {
    let cfg = tightened(cfg);
    let mut cases = Vec::new();
    let mut check = |name: String,
                     g: &Hypergraph,
                     spec: &MoveSpec|
     -> Result<(), SpectralError> {
        let before = rho(g, &cfg)?;
        let x_u = before.x[spec.u];
        let x_moved = spec
            .pairs
            .iter()
            .map(|(_, v)| before.x[*v])
            .fold(f64::NEG_INFINITY, f64::max);
        let precondition = x_u >= x_moved - 1e-9;
        let moved = move_edges(g, spec).expect("move spec is valid");
        let after = rho(&moved, &cfg)?;
        let margin = after.lower - before.upper;
        cases.push(CheckCase {
            name,
            passed: precondition && margin > 0.0,
            detail: format!(
                "x_u={x_u:.9}, max x_v={x_moved:.9}, rho {:.12} -> {:.12}, margin={margin:.3e}",
                before.rho, after.rho
            ),
        });
        Ok(())
    };
    for k in 2..=4usize {
        for m in 3..=6usize {
            let g = loose_path(k, m).expect("valid");
            let last = g.edges()[m - 1].clone();
            let spec = MoveSpec { u: k - 1, pairs: vec![(last, (m - 1) * (k - 1))] };
            check(format!("lemma1 P:{k},{m} tail->u1"), &g, &spec)?;
        }
    }
    for k in 3..=4usize {
        let g = loose_path(k, 5).expect("valid");
        let first = g.edges()[0].clone();
        let last = g.edges()[4].clone();
        let spec = MoveSpec {
            u: 2 * (k - 1),
            pairs: vec![(first, k - 1), (last, 4 * (k - 1))],
        };
        check(format!("lemma1 P:{k},5 both-ends->u2"), &g, &spec)?;
    }
    Ok(cases)
}

/// Strict decrease along each path-shifting chain: compute every split of
/// p+q once, then require certified-disjoint intervals between neighbors.
fn chain_cases(
    label: &str,
    build: impl Fn(usize, usize) -> Hypergraph,
    cfg: &VerifyConfig,
    cases: &mut Vec<CheckCase>,
) -> Result<(), SpectralError> {
    for s in 2..=8usize {
        let splits: Vec<usize> = (s.div_ceil(2)..=s).collect();
        let mut results: Vec<(usize, EigenResult)> = Vec::new();
        for &p in &splits {
            results.push((p, rho(&build(p, s - p), cfg)?));
        }
        for w in results.windows(2) {
            let (p, balanced) = &w[0];
            let (p2, shifted) = &w[1];
            let margin = balanced.lower - shifted.upper;
            cases.push(CheckCase {
                name: format!("{label} ({p},{}) > ({p2},{})", s - p, s - p2),
                passed: margin > 0.0,
                detail: format!(
                    "rho {:.12} > {:.12}, margin={margin:.3e}",
                    balanced.rho, shifted.rho
                ),
            });
        }
    }
    Ok(())
}

fn lemma3_cases(cfg: &VerifyConfig) -> Result<Vec<CheckCase>, SpectralError> {
    let cfg = tightened(cfg);
    let mut cases = Vec::new();
    for k in 2..=4usize {
        for (shape, base) in [("edge", loose_path(k, 1)), ("P2", loose_path(k, 2))] {
            let base = base.expect("valid");
            chain_cases(
                &format!("lemma3 k={k} {shape}"),
                |p, q| {
                    let one = attach_path(&base, 0, p).expect("in range");
                    attach_path(&one, 0, q).expect("in range")
                },
                &cfg,
                &mut cases,
            )?;
        }
    }
    Ok(cases)
}

/// The two attach vertices must be pendant vertices of a pendant edge, so
/// the base needs at least two edges; vertices 0 and 1 of a loose path's
/// first edge qualify. A single shared edge would make every split collapse
/// into the same loose path.
fn lemma_th1_cases(cfg: &VerifyConfig) -> Result<Vec<CheckCase>, SpectralError> {
    let cfg = tightened(cfg);
    let mut cases = Vec::new();
    for k in 3..=4usize {
        for (shape, base) in [("P2", loose_path(k, 2)), ("P3", loose_path(k, 3))] {
            let base = base.expect("valid");
            chain_cases(
                &format!("lemmaTh1 k={k} {shape}"),
                |p, q| attach_two_paths(&base, 0, 1, p, q).expect("in range"),
                &cfg,
                &mut cases,
            )?;
        }
    }
    Ok(cases)
}

/// Deterministic positive test vectors for the Rayleigh identity.
struct XorShift(u64);

impl XorShift {
    fn next_unit(&mut self) -> f64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }
}

fn rayleigh_cases() -> Vec<CheckCase> {
    let mut instances: Vec<(String, Hypergraph)> = Vec::new();
    for k in 2..=5 {
        for m in 1..=4 {
            instances.push((format!("P:{k},{m}"), loose_path(k, m).expect("valid")));
        }
        instances.push((format!("C:{k},3"), loose_cycle(k, 3).expect("valid")));
        instances.push((format!("TE:{k},{}", k - 1), two_edge_overlap(k, k - 1).expect("valid")));
    }
    for m in 4..=6 {
        instances.push((format!("Dp:3,{m}"), d_prime_family(3, m).expect("valid")));
    }
    instances.push(("H4:1".into(), h4_family(1).expect("valid")));
    instances.push(("F3:1,2,2".into(), f3_family(1, 2, 2).expect("valid")));
    let mut rng = XorShift(0x9e3779b97f4a7c15);
    instances
        .into_iter()
        .map(|(name, g)| {
            let x: Vec<f64> = (0..g.n()).map(|_| 0.1 + rng.next_unit()).collect();
            let ax = apply_adjacency(&g, &x).expect("length matches");
            let inner: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
            let form = rayleigh(&g, &x).expect("length matches");
            let rel = (inner - form).abs() / form.abs().max(1.0);
            CheckCase {
                name: format!("rayleigh {name}"),
                passed: rel <= 1e-12,
                detail: format!("x^T(Ax)={inner:.12}, k*sum={form:.12}, rel={rel:.3e}"),
            }
        })
        .collect()
}

/// Characteristic-polynomial residuals for the H family, scaled by the
/// polynomial's value spread near the root.
fn polys_cases(cfg: &VerifyConfig) -> Result<Vec<CheckCase>, SpectralError> {
    let polys: [(usize, &[f64], bool); 4] = [
        (1, &[1.0, -1.0, 0.0, 0.0, -1.0], false),
        (2, &[1.0, -6.0, 10.0, -7.0, 2.0], true),
        (3, &[1.0, -7.0, 15.0, -13.0, 6.0, -1.0], true),
        (4, &[1.0, -8.0, 21.0, -23.0, 13.0, -3.0], true),
    ];
    let mut cases = Vec::new();
    let mut rho4_of_t4 = 0.0;
    let mut rho_of_t1 = 0.0;
    for (t, coeffs, in_fourth_power) in polys {
        let g = h4_family(t).expect("valid");
        let r = rho(&g, cfg)?;
        let v = if in_fourth_power { r.rho.powi(4) } else { r.rho };
        if t == 4 {
            rho4_of_t4 = r.rho.powi(4);
        }
        if t == 1 {
            rho_of_t1 = r.rho;
        }
        let samples = 201;
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for i in 0..samples {
            let u = v - 0.1 + 0.2 * i as f64 / (samples - 1) as f64;
            let fv = poly_residual(coeffs, u).expect("nonempty");
            lo = lo.min(fv);
            hi = hi.max(fv);
        }
        let spread = hi - lo;
        let scaled = poly_residual(coeffs, v).expect("nonempty").abs() / spread;
        let var = if in_fourth_power { "rho^4" } else { "rho" };
        cases.push(CheckCase {
            name: format!("polys H4:{t}"),
            passed: scaled < 1e-6,
            detail: format!("{var}={v:.12}, |f|/spread={scaled:.3e}"),
        });
    }
    cases.push(CheckCase {
        name: "polys H4:4 bracket".into(),
        passed: 3.9 < rho4_of_t4 && rho4_of_t4 < 4.0,
        detail: format!("rho^4={rho4_of_t4:.12} in (3.9, 4)"),
    });
    cases.push(CheckCase {
        name: "polys H4:1 above 1.38".into(),
        passed: rho_of_t1 > 1.38,
        detail: format!("rho={rho_of_t1:.12}"),
    });
    Ok(cases)
}

fn round3(x: f64) -> f64 {
    (x * 1000.0).round() / 1000.0
}

/// The cited D-family decimals. Three views, because the source table is
/// rounded to 3 decimals before the k=4 values are derived from it:
/// direct ρ(D_m^(2)) against the citations, the same rounding chain the
/// citations use for the k=4 numbers, and the exact k-lift identity
/// ρ⁴(D_m^(4)) = ρ²(D_m^(2)) between directly computed tensor values.
fn tables_cases(cfg: &VerifyConfig) -> Result<Vec<CheckCase>, SpectralError> {
    let cited2 = [(5, 1.902), (6, 1.932), (7, 1.950), (8, 1.962)];
    let cited4 = [(6, 3.733, 5e-4), (7, 3.8025, 5e-5), (8, 3.8494, 5e-5)];
    let mut cases = Vec::new();
    let mut rho2 = std::collections::HashMap::new();
    for (m, cited) in cited2 {
        let r = rho(&d_family(2, m).expect("valid"), cfg)?;
        rho2.insert(m, r.rho);
        let diff = (r.rho - cited).abs();
        cases.push(CheckCase {
            name: format!("tables rho(D_{m}^(2))={cited}"),
            passed: diff <= 5e-4,
            detail: format!("computed={:.9}, diff={diff:.3e}", r.rho),
        });
    }
    for (m, cited, tol) in cited4 {
        let chained = round3(rho2[&m]).powi(2);
        let diff = (chained - cited).abs();
        cases.push(CheckCase {
            name: format!("tables rho^4(D_{m}^(4))={cited} via rounded table"),
            passed: diff <= tol,
            detail: format!("round3(rho_2)^2={chained:.9}, diff={diff:.3e}"),
        });
    }
    {
        let chained = round3(rho2[&5]).sqrt();
        let diff = (chained - 1.3791).abs();
        cases.push(CheckCase {
            name: "tables rho(D_5^(4))=1.3791 via rounded table".into(),
            passed: diff <= 5e-5,
            detail: format!("sqrt(round3(rho_2))={chained:.9}, diff={diff:.3e}"),
        });
    }
    for m in 5..=8 {
        let r4 = rho(&d_family(4, m).expect("valid"), cfg)?;
        let lhs = r4.rho.powi(4);
        let rhs = rho2[&m].powi(2);
        let rel = (lhs - rhs).abs() / rhs;
        cases.push(CheckCase {
            name: format!("tables identity rho^4(D_{m}^(4)) = rho^2(D_{m}^(2))"),
            passed: rel <= 1e-8,
            detail: format!("lhs={lhs:.12}, rhs={rhs:.12}, rel={rel:.3e}"),
        });
    }
    Ok(cases)
}

/// Convenience: the P < D′ < D ranking spot-checks from the theorems,
/// asserted with certified-disjoint intervals. Used by the acceptance tests
/// rather than a CLI suite.
pub fn ranking_spot_checks(
    cfg: &VerifyConfig,
    ks: &[usize],
    ms: &[usize],
) -> Result<Vec<CheckCase>, SpectralError> {
    let cfg = tightened(cfg);
    let mut cases = Vec::new();
    for &k in ks {
        for &m in ms {
            let p = rho(&loose_path(k, m).expect("valid"), &cfg)?;
            let dp = rho(&d_prime_family(k, m).expect("valid"), &cfg)?;
            let d = rho(&d_family(k, m).expect("valid"), &cfg)?;
            let first = dp.lower - p.upper;
            let second = d.lower - dp.upper;
            cases.push(CheckCase {
                name: format!("ranking P < D' < D at k={k}, m={m}"),
                passed: first > 0.0 && second > 0.0,
                detail: format!(
                    "rho(P)={:.10}, rho(D')={:.10}, rho(D)={:.10}, margins={first:.3e},{second:.3e}",
                    p.rho, dp.rho, d.rho
                ),
            });
        }
    }
    Ok(cases)
}
