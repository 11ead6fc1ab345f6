//! Minimal JSON rendering with fixed-width float formatting.
//!
//! Floats are printed as `{:.16e}` — 17 significant digits, enough to
//! round-trip any f64 — so identical inputs produce byte-identical reports
//! that can be diffed directly.

use crate::hypergraph::Hypergraph;
use crate::spectral::EigenResult;

/// A float as a JSON number with 17 significant digits.
pub fn float(x: f64) -> String {
    debug_assert!(x.is_finite(), "JSON output requires finite values");
    format!("{x:.16e}")
}

/// A float array.
pub fn float_array(xs: &[f64]) -> String {
    let parts: Vec<String> = xs.iter().map(|&x| float(x)).collect();
    format!("[{}]", parts.join(","))
}

/// A JSON string literal, escaped.
pub fn string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Single-level JSON object builder; values arrive pre-rendered.
#[derive(Default)]
pub struct JsonObject {
    fields: Vec<(String, String)>,
}

impl JsonObject {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn float(mut self, key: &str, x: f64) -> Self {
        self.fields.push((key.into(), float(x)));
        self
    }

    pub fn int(mut self, key: &str, v: usize) -> Self {
        self.fields.push((key.into(), v.to_string()));
        self
    }

    pub fn str(mut self, key: &str, s: &str) -> Self {
        self.fields.push((key.into(), string(s)));
        self
    }

    /// Inserts an already-rendered JSON value (array, nested object…).
    pub fn raw(mut self, key: &str, rendered: String) -> Self {
        self.fields.push((key.into(), rendered));
        self
    }

    pub fn render(self) -> String {
        let parts: Vec<String> =
            self.fields.into_iter().map(|(k, v)| format!("{}:{}", string(&k), v)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// The CLI/report rendering of an [`EigenResult`].
pub fn eigen_result(g: &Hypergraph, r: &EigenResult) -> String {
    JsonObject::new()
        .float("rho", r.rho)
        .float("lower", r.lower)
        .float("upper", r.upper)
        .int("iterations", r.iterations)
        .float("residual", r.residual)
        .raw("eigenvector", float_array(&r.x))
        .int("k", g.k())
        .int("n", g.n())
        .int("m", g.m())
        .render()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_have_17_significant_digits() {
        assert_eq!(float(1.0), "1.0000000000000000e0");
        assert_eq!(float(2f64.powf(1.0 / 3.0)), "1.2599210498948732e0");
        assert_eq!(float(-0.09375), "-9.3750000000000000e-2");
    }

    #[test]
    fn float_round_trips_exactly() {
        for x in [1.0 / 3.0, 2f64.sqrt(), 1e-300, 123456.789012345678, f64::MIN_POSITIVE] {
            assert_eq!(float(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn strings_are_escaped() {
        assert_eq!(string("3 5 2\n0 1 2\n"), "\"3 5 2\\n0 1 2\\n\"");
        assert_eq!(string("a\"b\\c"), "\"a\\\"b\\\\c\"");
    }

    #[test]
    fn object_rendering() {
        let s = JsonObject::new().int("k", 3).float("rho", 1.0).str("name", "P:3,2").render();
        assert_eq!(s, "{\"k\":3,\"rho\":1.0000000000000000e0,\"name\":\"P:3,2\"}");
    }
}
