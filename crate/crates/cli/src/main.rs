use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use boundsim_cli::{RunManifest, file_stem, write_csv, write_plot};
use boundsim_core::{
    Error, MeasurementConfig, PtSide, hermitian_eigenvalues, measure, run_sweep, tiles_state, tol,
};

const CONFIG_HELP: &str = "\
Config file format: one `key = value` per line, `#` comments.

Keys and defaults:
  interaction          heisenberg | blbq | dm; comma list allowed   [heisenberg]
  strength             coupling J or D; comma list allowed          [0.5]
  operator_convention  spin1 | gellmann; comma list allowed         [spin1]
  aux                  3 reals, or 6 reals as re,im pairs           [uniform (1,1,1)/sqrt(3)]
  t_start              sweep start time                             [0]
  t_end                sweep end time                               [20]
  steps                grid points, endpoints inclusive             [801]
  reduce               subsystems traced out before measuring,
                       e.g. C, AB, or none                          [C]
  cut                  bipartition of the rest, e.g. A|B or A|BC;
                       comma list allowed                           [A|B]
  pt_side              left | right block transposed for negativity [right]

The manifest expands to the cross product of interaction x strength x
operator_convention x cut; each entry produces one CSV file (and one SVG
with --plots) named after its parameters.";

#[derive(Parser)]
#[command(
    name = "boundsim",
    about = "Unitary dynamics of a two-qutrit bound entangled state coupled to an auxiliary \
             qutrit, tracked with negativity and the CCNR criterion",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every sweep in a config file and write CSV (and optional SVG) results.
    #[command(after_help = CONFIG_HELP)]
    Simulate {
        /// Path to the sweep config file.
        #[arg(long)]
        config: PathBuf,
        /// Output directory for result files.
        #[arg(long, default_value = "results")]
        out: PathBuf,
        /// Also emit an SVG line chart per sweep.
        #[arg(long)]
        plots: bool,
    },
    /// Parse and validate a config file without running anything.
    #[command(after_help = CONFIG_HELP)]
    Validate {
        /// Path to the sweep config file.
        #[arg(long)]
        config: PathBuf,
    },
    /// Print the t = 0 reference values of the tiles state: its spectrum,
    /// negativity and CCNR on the A|B cut.
    Baseline,
}

fn main() -> ExitCode {
    // Exit codes: 0 success, 1 for config/usage errors, 2 for runtime
    // numeric precondition failures.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if help { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Config(_) => ExitCode::from(1),
                Error::Precondition(_) => ExitCode::from(2),
            }
        }
    }
}

fn read_config(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::config(format!("cannot read config {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Simulate { config, out, plots } => {
            let text = read_config(&config)?;
            let manifest = RunManifest::from_config_text(&text, &out, plots)?;
            fs::create_dir_all(&manifest.out_dir).map_err(|e| {
                Error::precondition(format!(
                    "cannot create output directory {}: {e}",
                    manifest.out_dir.display()
                ))
            })?;
            let total = manifest.sweeps.len();
            for (i, sweep) in manifest.sweeps.iter().enumerate() {
                let result = run_sweep(sweep)?;
                let stem = file_stem(sweep);
                let csv_path = manifest.out_dir.join(format!("{stem}.csv"));
                write_csv(&result, &csv_path).map_err(|e| {
                    Error::precondition(format!("cannot write {}: {e}", csv_path.display()))
                })?;
                println!("[{}/{}] wrote {}", i + 1, total, csv_path.display());
                if manifest.emit_plots {
                    let svg_path = manifest.out_dir.join(format!("{stem}.svg"));
                    write_plot(&result, &svg_path).map_err(|e| {
                        Error::precondition(format!("cannot write {}: {e}", svg_path.display()))
                    })?;
                    println!("[{}/{}] wrote {}", i + 1, total, svg_path.display());
                }
            }
            Ok(())
        }
        Command::Validate { config } => {
            let text = read_config(&config)?;
            let manifest = RunManifest::from_config_text(&text, &PathBuf::from("results"), false)?;
            println!("config ok: {} sweep(s)", manifest.sweeps.len());
            for sweep in &manifest.sweeps {
                println!(
                    "  {} (steps={}, t in [{}, {}])",
                    file_stem(sweep),
                    sweep.steps,
                    sweep.t_start,
                    sweep.t_end
                );
            }
            Ok(())
        }
        Command::Baseline => {
            let rho = tiles_state();
            let spectrum = hermitian_eigenvalues(rho.matrix(), tol::HERMITICITY)?;
            let cfg = MeasurementConfig::new(vec![], "A|B".parse()?, PtSide::Right)?;
            let m = measure(&rho, &cfg)?;
            println!("tiles state on A|B at t = 0");
            let rendered: Vec<String> = spectrum.iter().map(|v| format!("{v:.12e}")).collect();
            println!("  spectrum      = [{}]", rendered.join(", "));
            println!("  trace         = {:.12e}", m.diagnostics.trace);
            println!("  purity        = {:.12e}", m.diagnostics.purity);
            println!("  negativity    = {:.12e}", m.negativity);
            println!("  ccnr          = {:.12e}", m.ccnr);
            println!(
                "  verdict       = {}",
                if m.detected_entangled() {
                    "entangled (bound: negativity at zero, CCNR positive)"
                } else {
                    "not detected"
                }
            );
            Ok(())
        }
    }
}
