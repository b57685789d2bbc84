//! Human-readable renderings of an envelope: a plain table and a character-grid
//! plot of the HN polygon.

use std::fmt::Write;

use hnsplit::BigInt;
use serde_json::Value;

use crate::envelope::Envelope;

const MAX_COLS: usize = 61;
const MAX_ROWS: usize = 17;

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("({})", xs.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn inputs_line(inputs: &Value) -> String {
    match inputs {
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", scalar(v)))
            .collect::<Vec<_>>()
            .join("  "),
        other => other.to_string(),
    }
}

fn polygon_table(out: &mut String, pieces: &[Value]) {
    let rows: Vec<[String; 4]> = pieces
        .iter()
        .map(|p| {
            let den = p["slope_denominator"].to_string();
            let slope = if den == "1" {
                p["slope_numerator"].to_string()
            } else {
                format!("{}/{}", p["slope_numerator"], den)
            };
            [p["rank"].to_string(), p["degree"].to_string(), slope, scalar(&p["label"])]
        })
        .collect();
    let header = ["rank", "degree", "slope", "label"];
    let widths: Vec<usize> = (0..3)
        .map(|i| rows.iter().map(|r| r[i].chars().count()).chain([header[i].len()]).max().unwrap())
        .collect();
    let _ = writeln!(
        out,
        "  {:>w0$}  {:>w1$}  {:>w2$}  {}",
        header[0], header[1], header[2], header[3],
        w0 = widths[0], w1 = widths[1], w2 = widths[2]
    );
    for r in rows {
        let _ = writeln!(
            out,
            "  {:>w0$}  {:>w1$}  {:>w2$}  {}",
            r[0], r[1], r[2], r[3],
            w0 = widths[0], w1 = widths[1], w2 = widths[2]
        );
    }
}

pub fn table(env: &Envelope) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}  {}", env.command, inputs_line(&env.inputs));
    let result = &env.result;
    if result["zero_sheaf"] == Value::Bool(true) {
        let _ = writeln!(out, "result: zero sheaf");
    }
    if let Some(a) = result["a"].as_array() {
        let _ = writeln!(out, "  j  a_j");
        for (j, x) in a.iter().enumerate() {
            let _ = writeln!(out, "{j:>3}  {x}");
        }
    }
    if let Some(b) = result["bundle"].as_str() {
        let _ = writeln!(out, "bundle: {b}");
    }
    for key in ["source", "kernel"] {
        if result[key].is_object() {
            let _ = writeln!(out, "{key}: rank {}, degree {}", result[key]["rank"], result[key]["degree"]);
        }
    }
    if let Some(ts) = result["targets"].as_array() {
        for (i, t) in ts.iter().enumerate() {
            let _ = writeln!(out, "target {}: rank {}, degree {}", i + 1, t["rank"], t["degree"]);
        }
    }
    if let Some(pieces) = result["polygon"].as_array() {
        let _ = writeln!(out, "HN polygon:");
        polygon_table(&mut out, pieces);
    }
    if !env.checks.is_empty() {
        let _ = writeln!(out, "checks:");
        for c in &env.checks {
            let _ = writeln!(out, "  [{}] {}", if c.pass { "pass" } else { "FAIL" }, c.name);
        }
    }
    out
}

fn num(v: &Value) -> BigInt {
    v.to_string().parse().expect("polygon entries are integers")
}

/// Cumulative (rank, degree) vertices plotted with rank on the horizontal axis.
pub fn ascii_polygon(env: &Envelope) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}  {}", env.command, inputs_line(&env.inputs));
    let Some(pieces) = env.result["polygon"].as_array() else {
        let what = if env.result["zero_sheaf"] == Value::Bool(true) {
            "zero sheaf"
        } else {
            "no HN polygon for this command"
        };
        let _ = writeln!(out, "({what})");
        return out;
    };

    let mut vertices = vec![(BigInt::from(0), BigInt::from(0))];
    for p in pieces {
        let (r, d) = vertices.last().unwrap().clone();
        vertices.push((r + num(&p["rank"]), d + num(&p["degree"])));
    }
    // Plot coordinates only; every reported value stays exact.
    let pts: Vec<(f64, f64)> = vertices
        .iter()
        .map(|(r, d)| (r.to_string().parse().unwrap(), d.to_string().parse().unwrap()))
        .collect();
    let total = pts.last().unwrap().0;
    let ymin = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let ymax = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);

    let cols = ((total as usize) * 6 + 1).clamp(13, MAX_COLS);
    let rows = if ymax > ymin { ((ymax - ymin) as usize + 1).clamp(3, MAX_ROWS) } else { 1 };
    let col_of = |x: f64| ((x / total) * (cols - 1) as f64).round() as usize;
    let row_of = |y: f64| {
        if ymax > ymin {
            (((ymax - y) / (ymax - ymin)) * (rows - 1) as f64).round() as usize
        } else {
            0
        }
    };

    let mut grid = vec![vec![' '; cols]; rows];
    for c in 0..cols {
        let x = total * c as f64 / (cols - 1) as f64;
        let seg = pts.windows(2).find(|w| x <= w[1].0).unwrap_or(&pts[pts.len() - 2..]);
        let (x0, y0, x1, y1) = (seg[0].0, seg[0].1, seg[1].0, seg[1].1);
        let y = if x1 > x0 { y0 + (y1 - y0) * (x - x0) / (x1 - x0) } else { y1 };
        grid[row_of(y)][c] = '.';
    }
    for &(x, y) in &pts {
        grid[row_of(y)][col_of(x)] = '*';
    }

    let top = vertices.iter().map(|v| &v.1).max().unwrap().to_string();
    let bottom = vertices.iter().map(|v| &v.1).min().unwrap().to_string();
    let label_width = top.len().max(bottom.len());
    for (i, line) in grid.iter().enumerate() {
        let label = if i == 0 {
            top.clone()
        } else if i == rows - 1 {
            bottom.clone()
        } else {
            String::new()
        };
        let body: String = line.iter().collect();
        let _ = writeln!(out, "{label:>label_width$} |{}", body.trim_end());
    }
    let _ = writeln!(out, "{:>label_width$} +{}", "", "-".repeat(cols));
    let total_label = vertices.last().unwrap().0.to_string();
    let pad = cols.saturating_sub(total_label.len() + 1);
    let _ = writeln!(out, "{:>label_width$}  0{}{}", "", " ".repeat(pad), total_label);
    let _ = writeln!(
        out,
        "vertices: {}",
        vertices
            .iter()
            .map(|(r, d)| format!("({r}, {d})"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    out
}
