//! Self-contained SVG line charts of sweep results.
//!
//! One chart per sweep: negativity as a solid red line, CCNR as a dashed
//! blue line, labelled axes, a legend and a title built from the sweep
//! metadata. The output is plain SVG 1.1 with no external references.

use std::fs;
use std::io;
use std::path::Path;

use boundsim_core::{SweepConfig, SweepResult};

pub const WIDTH: f64 = 860.0;
pub const HEIGHT: f64 = 520.0;
pub const MARGIN_LEFT: f64 = 78.0;
pub const MARGIN_RIGHT: f64 = 24.0;
pub const MARGIN_TOP: f64 = 46.0;
pub const MARGIN_BOTTOM: f64 = 58.0;

/// Affine mapping between data space and pixel space for one result.
pub struct PlotLayout {
    pub t_min: f64,
    pub t_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl PlotLayout {
    pub fn new(result: &SweepResult) -> Self {
        let t_min = result.records.first().map_or(0.0, |r| r.t);
        let t_max = result.records.last().map_or(1.0, |r| r.t);
        let mut y_min = f64::INFINITY;
        let mut y_max = f64::NEG_INFINITY;
        for r in &result.records {
            y_min = y_min.min(r.negativity).min(r.ccnr);
            y_max = y_max.max(r.negativity).max(r.ccnr);
        }
        // Pad degenerate ranges so constant series still render mid-chart.
        if !(y_max - y_min).is_normal() {
            y_min -= 0.5;
            y_max += 0.5;
        }
        Self {
            t_min,
            t_max,
            y_min,
            y_max,
        }
    }

    pub fn x_px(&self, t: f64) -> f64 {
        let span = (self.t_max - self.t_min).max(f64::MIN_POSITIVE);
        MARGIN_LEFT + (t - self.t_min) / span * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)
    }

    pub fn y_px(&self, v: f64) -> f64 {
        let span = (self.y_max - self.y_min).max(f64::MIN_POSITIVE);
        HEIGHT - MARGIN_BOTTOM - (v - self.y_min) / span * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn polyline(points: &[(f64, f64)], style: &str) -> String {
    let coords: Vec<String> = points
        .iter()
        .map(|(x, y)| format!("{x:.2},{y:.2}"))
        .collect();
    format!(
        "  <polyline fill=\"none\" {style} points=\"{}\"/>\n",
        coords.join(" ")
    )
}

fn title_of(cfg: &SweepConfig) -> String {
    let reduce = if cfg.measurement.reduce.is_empty() {
        "none".to_string()
    } else {
        cfg.measurement
            .reduce
            .iter()
            .map(|s| s.to_string())
            .collect()
    };
    format!(
        "{} strength={} {} reduce={} cut={}",
        cfg.hamiltonian.kind,
        cfg.hamiltonian.strength,
        cfg.hamiltonian.convention,
        reduce,
        cfg.measurement.cut
    )
}

pub fn render_svg(result: &SweepResult) -> String {
    let layout = PlotLayout::new(result);
    let negativity: Vec<(f64, f64)> = result
        .records
        .iter()
        .map(|r| (layout.x_px(r.t), layout.y_px(r.negativity)))
        .collect();
    let ccnr: Vec<(f64, f64)> = result
        .records
        .iter()
        .map(|r| (layout.x_px(r.t), layout.y_px(r.ccnr)))
        .collect();

    let x0 = MARGIN_LEFT;
    let x1 = WIDTH - MARGIN_RIGHT;
    let y0 = HEIGHT - MARGIN_BOTTOM;
    let y1 = MARGIN_TOP;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" \
         height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    svg.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" \
         text-anchor=\"middle\">{}</text>\n",
        (x0 + x1) / 2.0,
        xml_escape(&title_of(&result.config))
    ));

    // Axes.
    svg.push_str(&format!(
        "  <line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x1:.2}\" y2=\"{y0:.2}\" stroke=\"black\"/>\n"
    ));
    svg.push_str(&format!(
        "  <line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x0:.2}\" y2=\"{y1:.2}\" stroke=\"black\"/>\n"
    ));

    // Ticks and numeric labels.
    let ticks = 5usize;
    for k in 0..=ticks {
        let frac = k as f64 / ticks as f64;
        let t = layout.t_min + frac * (layout.t_max - layout.t_min);
        let x = layout.x_px(t);
        svg.push_str(&format!(
            "  <line x1=\"{x:.2}\" y1=\"{y0:.2}\" x2=\"{x:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
            y0 + 5.0
        ));
        svg.push_str(&format!(
            "  <text x=\"{x:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
             text-anchor=\"middle\">{t:.3}</text>\n",
            y0 + 20.0
        ));

        let v = layout.y_min + frac * (layout.y_max - layout.y_min);
        let y = layout.y_px(v);
        svg.push_str(&format!(
            "  <line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{x0:.2}\" y2=\"{y:.2}\" stroke=\"black\"/>\n",
            x0 - 5.0
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
             text-anchor=\"end\">{v:.4}</text>\n",
            x0 - 9.0,
            y + 4.0
        ));
    }

    // Axis labels.
    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"14\" \
         text-anchor=\"middle\">t</text>\n",
        (x0 + x1) / 2.0,
        HEIGHT - 14.0
    ));
    svg.push_str(&format!(
        "  <text x=\"20\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"14\" \
         text-anchor=\"middle\" transform=\"rotate(-90 20 {:.2})\">value</text>\n",
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0
    ));

    // Data series: solid red negativity, dashed blue CCNR.
    svg.push_str(&polyline(
        &negativity,
        "stroke=\"red\" stroke-width=\"1.5\"",
    ));
    svg.push_str(&polyline(
        &ccnr,
        "stroke=\"blue\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"",
    ));

    // Legend.
    let lx = x1 - 150.0;
    let ly = y1 + 10.0;
    svg.push_str(&format!(
        "  <line x1=\"{lx:.2}\" y1=\"{ly:.2}\" x2=\"{:.2}\" y2=\"{ly:.2}\" stroke=\"red\" \
         stroke-width=\"1.5\"/>\n",
        lx + 28.0
    ));
    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\">negativity</text>\n",
        lx + 34.0,
        ly + 4.0
    ));
    svg.push_str(&format!(
        "  <line x1=\"{lx:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"blue\" \
         stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n",
        ly + 18.0,
        lx + 28.0,
        ly + 18.0
    ));
    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\">ccnr</text>\n",
        lx + 34.0,
        ly + 22.0
    ));

    svg.push_str("</svg>\n");
    svg
}

pub fn write_plot(result: &SweepResult, path: &Path) -> io::Result<()> {
    fs::write(path, render_svg(result))
}
