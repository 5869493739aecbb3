//! CSV result files.
//!
//! Layout: a `# key = value` metadata block echoing the full sweep config,
//! then the header `t,negativity,ccnr,purity,min_eigenvalue`, then one row
//! per record. Reals carry 12 significant digits in scientific notation;
//! identical configs produce byte-identical files.

use std::fs;
use std::io;
use std::path::Path;

use boundsim_core::{C64, SweepConfig, SweepResult};

/// 12 significant digits, scientific notation.
fn fmt12(v: f64) -> String {
    format!("{v:.11e}")
}

fn fmt_aux_component(c: C64) -> String {
    format!("{}, {}", c.re, c.im)
}

/// The `# key = value` block; sufficient to reconstruct the sweep.
pub fn metadata_block(cfg: &SweepConfig) -> String {
    let reduce = if cfg.measurement.reduce.is_empty() {
        "none".to_string()
    } else {
        cfg.measurement
            .reduce
            .iter()
            .map(|s| s.to_string())
            .collect()
    };
    let aux = format!(
        "{}, {}, {}",
        fmt_aux_component(cfg.aux.alpha),
        fmt_aux_component(cfg.aux.beta),
        fmt_aux_component(cfg.aux.gamma)
    );
    let mut out = String::new();
    out.push_str(&format!("# interaction = {}\n", cfg.hamiltonian.kind));
    out.push_str(&format!("# strength = {}\n", cfg.hamiltonian.strength));
    out.push_str(&format!(
        "# operator_convention = {}\n",
        cfg.hamiltonian.convention
    ));
    out.push_str(&format!("# aux = {aux}\n"));
    out.push_str(&format!("# t_start = {}\n", cfg.t_start));
    out.push_str(&format!("# t_end = {}\n", cfg.t_end));
    out.push_str(&format!("# steps = {}\n", cfg.steps));
    out.push_str(&format!("# reduce = {reduce}\n"));
    out.push_str(&format!("# cut = {}\n", cfg.measurement.cut));
    out.push_str(&format!("# pt_side = {}\n", cfg.measurement.pt_side));
    out
}

pub const CSV_HEADER: &str = "t,negativity,ccnr,purity,min_eigenvalue";

pub fn render_csv(result: &SweepResult) -> String {
    let mut out = metadata_block(&result.config);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in &result.records {
        // Presentation-only clamp: negativity is mathematically >= 0 and the
        // library returns the raw value, but solver noise of order -1e-16
        // would render as a spurious negative column entry. min_eigenvalue
        // stays raw so positivity violations remain visible.
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            fmt12(r.t),
            fmt12(r.negativity.max(0.0)),
            fmt12(r.ccnr),
            fmt12(r.reduced.purity),
            fmt12(r.reduced.min_eigenvalue)
        ));
    }
    out
}

pub fn write_csv(result: &SweepResult, path: &Path) -> io::Result<()> {
    fs::write(path, render_csv(result))
}

/// Data rows of an emitted CSV, parsed back to floats. Metadata and header
/// lines are skipped.
pub fn parse_csv_rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .filter(|l| matches!(l.chars().next(), Some(c) if c.is_ascii_digit() || c == '-'))
        .map(|l| {
            l.split(',')
                .map(|v| v.parse::<f64>().expect("numeric CSV field"))
                .collect()
        })
        .collect()
}
