//! File formats: hyperedge-list parsing, trajectory CSV/JSON export and SVG
//! curve rendering. All writers are deterministic; reals are rendered with
//! six decimal places.

use serde::{Deserialize, Serialize};

use crate::dismantle::Trajectory;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperedgeLine {
    /// 1-based line number in the source text.
    pub line: usize,
    pub labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWarning {
    pub line: usize,
    pub message: String,
}

/// A parsed hyperedge-list file: one hyperedge per non-blank line, labels
/// separated by commas or whitespace, `#` to end of line is a comment.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HyperedgeListDocument {
    pub source: Option<String>,
    pub hyperedges: Vec<HyperedgeLine>,
    pub warnings: Vec<ParseWarning>,
}

impl HyperedgeListDocument {
    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        let edges: Vec<Vec<&str>> = self
            .hyperedges
            .iter()
            .map(|e| e.labels.iter().map(|l| l.as_str()).collect())
            .collect();
        Hypergraph::build(&edges)
    }
}

pub fn parse_hyperedge_list(text: &str) -> Result<HyperedgeListDocument> {
    let mut doc = HyperedgeListDocument::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let mut labels: Vec<String> = Vec::new();
        for token in content.replace(',', " ").split_whitespace() {
            if labels.iter().any(|l| l == token) {
                doc.warnings.push(ParseWarning {
                    line,
                    message: format!("duplicate label {token:?} collapsed"),
                });
            } else {
                labels.push(token.to_string());
            }
        }
        if labels.is_empty() {
            return Err(Error::Parse {
                line,
                message: "no labels on non-blank line".to_string(),
            });
        }
        doc.hyperedges.push(HyperedgeLine { line, labels });
    }
    Ok(doc)
}

pub fn read_hyperedge_list_file(path: &std::path::Path) -> Result<HyperedgeListDocument> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut doc = parse_hyperedge_list(&text)?;
    doc.source = Some(path.display().to_string());
    Ok(doc)
}

/// One hyperedge per line, labels space-separated.
pub fn write_hyperedge_list(doc: &HyperedgeListDocument) -> String {
    let mut out = String::new();
    for edge in &doc.hyperedges {
        out.push_str(&edge.labels.join(" "));
        out.push('\n');
    }
    out
}

fn fmt6(x: f64) -> String {
    format!("{x:.6}")
}

fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

/// CSV export, one row per batch.
pub fn write_trajectory_csv(t: &Trajectory) -> String {
    let mut out =
        String::from("batch,removed_nodes,frac_removed,sigma_remaining,sigma_original,ratio\n");
    for (i, b) in t.batches.iter().enumerate() {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            i + 1,
            b.removed.join(";"),
            fmt6(b.frac_removed),
            fmt6(b.sigma_remaining),
            fmt6(b.sigma_original),
            fmt6(b.ratio),
        ));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryDocument {
    pub format_version: u32,
    pub tool_version: String,
    pub trajectory: Trajectory,
}

/// JSON export with fixed key order. Reals carry six decimals so that the
/// CSV and JSON of one trajectory hold identical numeric values.
pub fn write_trajectory_json(t: &Trajectory) -> String {
    let mut t = t.clone();
    t.initial_sigma = round6(t.initial_sigma);
    t.anc = round6(t.anc);
    for b in &mut t.batches {
        b.frac_removed = round6(b.frac_removed);
        b.sigma_remaining = round6(b.sigma_remaining);
        b.sigma_original = round6(b.sigma_original);
        b.ratio = round6(b.ratio);
    }
    let doc = TrajectoryDocument {
        format_version: FORMAT_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        trajectory: t,
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("trajectory serializes");
    out.push('\n');
    out
}

pub fn read_trajectory_json(text: &str) -> Result<Trajectory> {
    let doc: TrajectoryDocument =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    if doc.format_version != FORMAT_VERSION {
        return Err(Error::Schema(format!(
            "unsupported format_version {}",
            doc.format_version
        )));
    }
    Ok(doc.trajectory)
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
];

/// Renders labeled (fraction removed, normalized connectivity) curves as a
/// single SVG line chart. Polyline points are the input data coordinates to
/// six decimals, mapped to screen space by a group transform.
pub fn render_anc_svg(curves: &[(String, Vec<(f64, f64)>)]) -> Result<String> {
    if curves.is_empty() {
        return Err(Error::NoCurves);
    }
    for (label, points) in curves {
        if points.len() < 2 {
            return Err(Error::ShortCurve {
                label: label.clone(),
            });
        }
    }

    let width = 640.0;
    let height = 440.0;
    let (left, right, top, bottom) = (70.0, 20.0, 20.0, 50.0);
    let plot_w = width - left - right;
    let plot_h = height - top - bottom;

    let x_max = curves
        .iter()
        .flat_map(|(_, pts)| pts.iter().map(|p| p.0))
        .fold(0.0_f64, f64::max)
        .max(1e-9);
    let y_max = curves
        .iter()
        .flat_map(|(_, pts)| pts.iter().map(|p| p.1))
        .fold(0.0_f64, f64::max)
        .max(1.0);
    let sx = plot_w / x_max;
    let sy = plot_h / y_max;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    svg.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"white\"/>\n"
    ));
    // axes
    let x0 = left;
    let y0 = top + plot_h;
    svg.push_str(&format!(
        "  <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{}\" y2=\"{y0}\" stroke=\"black\"/>\n",
        left + plot_w
    ));
    svg.push_str(&format!(
        "  <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{top}\" stroke=\"black\"/>\n"
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"13\">fraction removed</text>\n",
        left + plot_w / 2.0,
        height - 10.0
    ));
    svg.push_str(&format!(
        "  <text x=\"18\" y=\"{}\" text-anchor=\"middle\" font-size=\"13\" \
         transform=\"rotate(-90 18 {})\">normalized connectivity</text>\n",
        top + plot_h / 2.0,
        top + plot_h / 2.0
    ));
    // end-of-axis tick labels
    svg.push_str(&format!(
        "  <text x=\"{x0}\" y=\"{}\" text-anchor=\"middle\" font-size=\"11\">0</text>\n",
        y0 + 16.0
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"11\">{}</text>\n",
        left + plot_w,
        y0 + 16.0,
        fmt6(x_max)
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" text-anchor=\"end\" font-size=\"11\">{}</text>\n",
        x0 - 6.0,
        top + 4.0,
        fmt6(y_max)
    ));

    // data-space group: y axis flipped so input coordinates plot upward
    svg.push_str(&format!(
        "  <g transform=\"translate({x0} {y0}) scale({sx} -{sy})\">\n"
    ));
    for (i, (_, points)) in curves.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let pts: Vec<String> = points
            .iter()
            .map(|(x, y)| format!("{},{}", fmt6(*x), fmt6(*y)))
            .collect();
        svg.push_str(&format!(
            "    <polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" \
             vector-effect=\"non-scaling-stroke\" points=\"{}\"/>\n",
            pts.join(" ")
        ));
    }
    svg.push_str("  </g>\n");

    // legend
    for (i, (label, _)) in curves.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let ly = top + 14.0 + i as f64 * 16.0;
        let lx = left + plot_w - 140.0;
        svg.push_str(&format!(
            "  <line x1=\"{lx}\" y1=\"{ly}\" x2=\"{}\" y2=\"{ly}\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
            lx + 20.0
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\">{}</text>\n",
            lx + 26.0,
            ly + 4.0,
            xml_escape(label)
        ));
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
