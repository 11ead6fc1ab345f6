//! Browser bindings for the demo page: every export takes plain strings or
//! integers and returns a JSON string, so the page needs no glue types. A
//! computation problem comes back as `{"error": "..."}` rather than an
//! exception.

use hyperspec::enumerate::{rank_by_rho_capped, EnumerateError};
use hyperspec::families::{d_family, d_prime_family, loose_path, recognize_family, FamilySpec};
use hyperspec::jsonfmt::{self, JsonObject};
use hyperspec::spectral::SpectralError;
use hyperspec::{spectral_radius, Hypergraph, DEFAULT_MAX_N};
use wasm_bindgen::prelude::*;

const TOL: f64 = 1e-10;
const MAX_ITER: usize = 1_000_000;

fn error_json(message: &str) -> String {
    JsonObject::new().str("error", message).render()
}

/// Family strings contain a colon; anything else is treated as `.hg` text.
fn parse_source(source: &str) -> Result<Hypergraph, String> {
    let trimmed = source.trim();
    if trimmed.is_empty() {
        return Err("empty input".into());
    }
    if trimmed.contains(':') {
        let spec = FamilySpec::parse(trimmed).map_err(|e| e.to_string())?;
        spec.build().map_err(|e| e.to_string())
    } else {
        Hypergraph::parse(source).map_err(|e| e.to_string())
    }
}

fn edges_json(g: &Hypergraph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|e| {
            let vs: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            format!("[{}]", vs.join(","))
        })
        .collect();
    format!("[{}]", edges.join(","))
}

fn family_json(g: &Hypergraph) -> String {
    recognize_family(g)
        .map(|spec| jsonfmt::string(&spec.to_string()))
        .unwrap_or_else(|| "null".into())
}

fn rho_report_inner(source: &str) -> Result<String, String> {
    let g = parse_source(source)?;
    let r = spectral_radius(&g, TOL, MAX_ITER).map_err(|e| e.to_string())?;
    Ok(JsonObject::new()
        .float("rho", r.rho)
        .float("lower", r.lower)
        .float("upper", r.upper)
        .int("iterations", r.iterations)
        .float("residual", r.residual)
        .raw("eigenvector", jsonfmt::float_array(&r.x))
        .int("k", g.k())
        .int("n", g.n())
        .int("m", g.m())
        .raw("edges", edges_json(&g))
        .raw("family", family_json(&g))
        .render())
}

/// Certified spectral radius of a family string or `.hg` text.
#[wasm_bindgen]
pub fn rho_report(source: &str) -> String {
    rho_report_inner(source).unwrap_or_else(|msg| error_json(&msg))
}

fn sweep_series(
    name: &str,
    build: impl Fn(usize) -> Option<Hypergraph>,
    m_max: usize,
) -> Result<String, String> {
    let mut points = Vec::new();
    for m in 1..=m_max {
        let Some(g) = build(m) else { continue };
        let r = spectral_radius(&g, TOL, MAX_ITER).map_err(|e| e.to_string())?;
        points.push(format!("{{\"m\":{m},\"rho\":{}}}", jsonfmt::float(r.rho)));
    }
    Ok(format!("{{\"name\":{},\"points\":[{}]}}", jsonfmt::string(name), points.join(",")))
}

fn family_sweep_inner(k: usize, m_max: usize) -> Result<String, String> {
    if !(3..=6).contains(&k) {
        return Err(format!("k must be between 3 and 6, got {k}"));
    }
    if !(4..=24).contains(&m_max) {
        return Err(format!("m_max must be between 4 and 24, got {m_max}"));
    }
    let series = vec![
        sweep_series("P", |m| loose_path(k, m).ok(), m_max)?,
        sweep_series("D'", |m| if m >= 4 { d_prime_family(k, m).ok() } else { None }, m_max)?,
        sweep_series("D", |m| if m >= 3 { d_family(k, m).ok() } else { None }, m_max)?,
    ];
    Ok(format!(
        "{{\"k\":{k},\"asymptote\":{},\"series\":[{}]}}",
        jsonfmt::float(4f64.powf(1.0 / k as f64)),
        series.join(",")
    ))
}

/// rho as a function of m for P, D' and D, with the common limit 4^(1/k).
/// D' starts at m = 4 — at m = 3 it is isomorphic to the path.
#[wasm_bindgen]
pub fn family_sweep(k: usize, m_max: usize) -> String {
    family_sweep_inner(k, m_max).unwrap_or_else(|msg| error_json(&msg))
}

fn enumerate_rank_inner(k: usize, m: usize) -> Result<String, String> {
    let within_budget = matches!((k, m), (2, 1..=6) | (3, 1..=4) | (4, 1..=3));
    if !within_budget {
        return Err(format!(
            "enumeration at k={k}, m={m} is beyond the page budget \
             (k=2 with m <= 6, k=3 with m <= 4, k=4 with m <= 3)"
        ));
    }
    let report = rank_by_rho_capped(k, m, TOL, DEFAULT_MAX_N, MAX_ITER).map_err(|e| match e {
        EnumerateError::Spectral(SpectralError::DidNotConverge { .. }) => {
            "a class did not converge".to_string()
        }
        other => other.to_string(),
    })?;
    let rows: Vec<String> = report
        .classes
        .iter()
        .enumerate()
        .map(|(i, class)| {
            JsonObject::new()
                .int("rank", i + 1)
                .raw("family", family_json(&class.hypergraph))
                .str("canonical", class.canonical.as_text())
                .float("rho", class.eigen.rho)
                .float("lower", class.eigen.lower)
                .float("upper", class.eigen.upper)
                .raw("tied_with_next", class.tied_with_next.to_string())
                .render()
        })
        .collect();
    Ok(format!(
        "{{\"k\":{k},\"m\":{m},\"classes\":{},\"rows\":[{}]}}",
        report.total_count,
        rows.join(",")
    ))
}

/// Every isomorphism class at (k, m), ranked by certified spectral radius.
#[wasm_bindgen]
pub fn enumerate_rank(k: usize, m: usize) -> String {
    enumerate_rank_inner(k, m).unwrap_or_else(|msg| error_json(&msg))
}
