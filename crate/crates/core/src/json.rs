//! Wire formats: metric and graph JSON, analysis reports, and DOT export.
//!
//! Output is built by hand so float formatting and key order are fixed:
//! identical inputs give byte-identical files. Floats use a C-style `%g`
//! with 12 significant digits (6 in DOT labels).

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::geomspec::GeometricFiedlerResult;
use crate::metric::{CriticalGraph, MetricSpace, WeightedGraph};
use crate::schoenberg::{Embedding, EmbeddabilityReport};

/// C-style `%.<sig>g` formatting.
pub fn fmt_g(x: f64, sig: usize) -> String {
    debug_assert!(sig >= 1);
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let sci = format!("{:.*e}", sig - 1, x);
    let (mant, exp_str) = sci.split_once('e').expect("exponential format");
    let exp: i32 = exp_str.parse().expect("numeric exponent");
    if exp < -4 || exp >= sig as i32 {
        format!(
            "{}e{}{:02}",
            trim_zeros(mant),
            if exp < 0 { "-" } else { "+" },
            exp.abs()
        )
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x))
    }
}

/// `%.12g`, the float format of every JSON field.
pub fn fmt_g12(x: f64) -> String {
    fmt_g(x, 12)
}

fn trim_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// JSON string literal with escaping.
pub fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn float_array(xs: &[f64]) -> String {
    let inner: Vec<String> = xs.iter().map(|&x| fmt_g12(x)).collect();
    format!("[{}]", inner.join(","))
}

fn float_matrix(rows: &[Vec<f64>]) -> String {
    let inner: Vec<String> = rows.iter().map(|r| float_array(r)).collect();
    format!("[{}]", inner.join(","))
}

#[derive(Deserialize)]
struct MetricFile {
    labels: Option<Vec<String>>,
    d: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
}

fn bad_json(kind: &str, err: serde_json::Error) -> Error {
    Error::BadParameters {
        reason: format!("invalid {kind} JSON: {err}"),
    }
}

/// Parses `{"labels":[...], "d":[[...]]}` and validates the metric axioms.
/// Missing labels default to point indices.
pub fn parse_metric(text: &str, tol: f64) -> Result<MetricSpace> {
    let file: MetricFile = serde_json::from_str(text).map_err(|e| bad_json("metric", e))?;
    let labels = file
        .labels
        .unwrap_or_else(|| (0..file.d.len()).map(|i| i.to_string()).collect());
    MetricSpace::new(labels, &file.d, tol)
}

/// Serializes a metric as `{"labels":[...],"d":[[...]]}`.
pub fn metric_to_json(m: &MetricSpace) -> String {
    let labels: Vec<String> = m.labels().iter().map(|l| json_string(l)).collect();
    format!(
        "{{\"labels\":[{}],\"d\":{}}}",
        labels.join(","),
        float_matrix(&m.rows())
    )
}

/// Parses `{"n":N, "edges":[[u,v,w],...]}` with 0-based endpoints.
pub fn parse_graph(text: &str) -> Result<WeightedGraph> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| bad_json("graph", e))?;
    WeightedGraph::new(file.n, &file.edges)
}

/// Serializes a graph as `{"n":N,"edges":[[u,v,w],...]}`.
pub fn graph_to_json(g: &WeightedGraph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|e| format!("[{},{},{}]", e.u, e.v, fmt_g12(e.w)))
        .collect();
    format!("{{\"n\":{},\"edges\":[{}]}}", g.n(), edges.join(","))
}

/// Embeddability report plus the kernel trace profile.
pub fn report_to_json(report: &EmbeddabilityReport, trace_profile: &[f64]) -> String {
    let witness = match &report.witness {
        Some(alpha) => float_array(alpha),
        None => "null".to_string(),
    };
    format!(
        "{{\"embeddable\":{},\"lambda_max\":{},\"witness\":{},\"trace_profile\":{}}}",
        report.embeddable,
        fmt_g12(report.lambda_max),
        witness,
        float_array(trace_profile)
    )
}

/// Embedding coordinates report.
pub fn embedding_to_json(e: &Embedding) -> String {
    format!(
        "{{\"base\":{},\"rank\":{},\"coords\":{},\"residual\":{}}}",
        e.base,
        e.rank,
        float_matrix(&e.coords),
        fmt_g12(e.residual)
    )
}

/// Geometric Fiedler search result with the classical value for reference.
pub fn fiedler_to_json(res: &GeometricFiedlerResult, classic_lambda2: f64) -> String {
    let argmin: Vec<String> = res.argmin.assignment.iter().map(|i| i.to_string()).collect();
    format!(
        "{{\"value\":{},\"argmin\":[{}],\"classic_lambda2\":{},\"maps_searched\":{}}}",
        fmt_g12(res.value),
        argmin.join(","),
        fmt_g12(classic_lambda2),
        res.maps_searched
    )
}

/// DOT rendering of a critical graph, weights as `%.6g` edge labels.
pub fn critical_to_dot(cg: &CriticalGraph) -> String {
    let mut out = String::from("graph critical {\n");
    for (i, label) in cg.labels.iter().enumerate() {
        out.push_str(&format!("  {} [label={}];\n", i, json_string(label)));
    }
    for e in cg.edges() {
        out.push_str(&format!(
            "  {} -- {} [label=\"{}\"];\n",
            e.u,
            e.v,
            fmt_g(e.w, 6)
        ));
    }
    out.push_str("}\n");
    out
}
