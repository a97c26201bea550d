//! Report assembly and rendering.
//!
//! Reports are built as key-sorted JSON trees (serde_json maps are
//! BTree-backed, so serialization order is stable) and rendered either as
//! JSON or as indented `key: value` text with reals printed to 9
//! significant digits. Identical input and flags give byte-identical
//! output, which keeps golden-file diffs meaningful.

use crate::formats::ParsedInput;
use serde_json::{json, Map, Value};
use specrad::bounds::{
    digraph_bound, general_bound, graph_bound, modulus_bound, BoundReport, BoundsError, Tolerances,
};
use specrad::graphs::{classify, is_connected, is_strongly_connected, GraphClass};
use specrad::linalg::{is_irreducible, row_sum_interval};
use specrad::spectra::MatrixKind;

/// %.9g-style formatting: nine significant digits, fixed notation for
/// moderate exponents, trailing zeros trimmed.
pub fn fmt_sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let scientific = format!("{x:.8e}");
    let (mantissa, exponent) = scientific
        .split_once('e')
        .expect("{:e} always carries an exponent");
    let exponent: i32 = exponent.parse().expect("exponent is an integer");
    if (-4..9).contains(&exponent) {
        let decimals = (8 - exponent).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{}", trim_zeros(mantissa.to_string()), exponent)
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Render a JSON tree as indented `key: value` text, keys in map order
/// (already sorted), reals via [`fmt_sig9`].
pub fn render_text(value: &Value) -> String {
    let mut out = String::new();
    render_into(value, 0, &mut out);
    out
}

fn render_into(value: &Value, indent: usize, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (key, child) in map {
                out.push_str(&"  ".repeat(indent));
                out.push_str(key);
                out.push(':');
                match child {
                    Value::Object(_) => {
                        out.push('\n');
                        render_into(child, indent + 1, out);
                    }
                    _ => {
                        out.push(' ');
                        out.push_str(&render_scalar(child));
                        out.push('\n');
                    }
                }
            }
        }
        other => {
            out.push_str(&"  ".repeat(indent));
            out.push_str(&render_scalar(other));
            out.push('\n');
        }
    }
}

fn render_scalar(value: &Value) -> String {
    match value {
        Value::Number(n) => match n.as_f64() {
            Some(f) if n.is_f64() => fmt_sig9(f),
            _ => n.to_string(),
        },
        Value::String(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        Value::Null => "null".to_string(),
        Value::Array(items) => {
            let rendered: Vec<String> = items.iter().map(render_scalar).collect();
            format!("[{}]", rendered.join(", "))
        }
        Value::Object(_) => unreachable!("objects are rendered structurally"),
    }
}

fn classification_value(class: &GraphClass) -> Value {
    match class {
        GraphClass::Regular(r) => json!({ "type": "regular", "degree": r }),
        GraphClass::BipartiteSemiRegular { r, s, parts } => json!({
            "type": "bipartite-semi-regular",
            "degrees": [r, s],
            "parts": [parts.0, parts.1],
        }),
        GraphClass::Other => json!({ "type": "other" }),
    }
}

fn bound_block(report: &BoundReport, tol: &Tolerances) -> Value {
    let gap = report.gap.expect("bound operations attach exact radii");
    let equality = gap.abs() <= tol.gap_tol * report.bound.abs().max(1.0);
    json!({
        "exact_radius": report.exact_radius,
        "bound": report.bound,
        "gap": gap,
        "argmax": report.argmax,
        "all_expressions_equal": report.all_equal,
        "equality": equality,
    })
}

fn skipped_block(reason: &str) -> Value {
    json!({ "skipped": reason })
}

/// The full per-input report. Solver failures bubble up (exit code 3 at
/// the CLI boundary); a disconnected input merely skips its distance
/// blocks.
pub fn build_report(
    path: &str,
    input: &ParsedInput,
    tol: &Tolerances,
    require_nonnegative: bool,
) -> Result<Value, BoundsError> {
    let mut root = Map::new();
    root.insert("tool_version".into(), json!(env!("CARGO_PKG_VERSION")));
    root.insert(
        "tolerances".into(),
        json!({ "gap": tol.gap_tol, "expression": tol.eq_tol }),
    );

    match input {
        ParsedInput::Graph(g) => {
            root.insert(
                "input".into(),
                json!({
                    "path": path,
                    "format": "edge-list",
                    "kind": "graph",
                    "n": g.n(),
                    "edges": g.edge_count(),
                }),
            );
            let connected = is_connected(g);
            root.insert("connected".into(), json!(connected));
            root.insert("classification".into(), classification_value(&classify(g)));
            let mut blocks = Map::new();
            for kind in MatrixKind::ALL {
                let block = if kind.is_distance_family() && !connected {
                    skipped_block("disconnected")
                } else {
                    bound_block(&graph_bound(kind, g, tol)?, tol)
                };
                blocks.insert(kind.label().into(), block);
            }
            root.insert("matrices".into(), Value::Object(blocks));
        }
        ParsedInput::Digraph(d) => {
            root.insert(
                "input".into(),
                json!({
                    "path": path,
                    "format": "edge-list",
                    "kind": "digraph",
                    "n": d.n(),
                    "arcs": d.arc_count(),
                }),
            );
            let strong = is_strongly_connected(d);
            root.insert("strongly_connected".into(), json!(strong));
            let mut blocks = Map::new();
            for kind in MatrixKind::ALL {
                let block = if kind.is_distance_family() && !strong {
                    skipped_block("not strongly connected")
                } else {
                    bound_block(&digraph_bound(kind, d, tol)?, tol)
                };
                blocks.insert(kind.label().into(), block);
            }
            root.insert("matrices".into(), Value::Object(blocks));
        }
        ParsedInput::Matrix(m) => {
            let nonzeros = m.entries().iter().filter(|&&v| v != 0.0).count();
            root.insert(
                "input".into(),
                json!({
                    "path": path,
                    "format": "matrix-market",
                    "kind": "matrix",
                    "n": m.n(),
                    "nonzeros": nonzeros,
                }),
            );
            let nonnegative = m.is_nonnegative();
            if !nonnegative && require_nonnegative {
                let (row, col, value) = m.first_negative().expect("sign checked");
                return Err(BoundsError::NegativeEntry { row, col, value });
            }
            root.insert("irreducible".into(), json!(is_irreducible(m)));
            root.insert("nonnegative".into(), json!(nonnegative));
            let report = if nonnegative {
                general_bound(m, tol)?
            } else {
                modulus_bound(m, tol)?
            };
            let route = if nonnegative { "general" } else { "modulus" };
            root.insert("bound_route".into(), json!(route));
            root.insert("bound".into(), bound_block(&report, tol));
            let rows = if nonnegative {
                let (min, max) = row_sum_interval(m).expect("sign checked");
                json!({ "min": min, "max": max })
            } else {
                skipped_block("negative entries")
            };
            root.insert("row_sums".into(), rows);
        }
    }
    Ok(Value::Object(root))
}
