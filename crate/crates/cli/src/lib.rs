//! Config parsing, CSV emission and SVG plotting for the `boundsim`
//! command-line runner.

pub mod config;
pub mod csv_out;
pub mod plot;

pub use config::{RunManifest, file_stem, parse_sweep_configs};
pub use csv_out::{metadata_block, parse_csv_rows, render_csv, write_csv};
pub use plot::{PlotLayout, render_svg, write_plot};
