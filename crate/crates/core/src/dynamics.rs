//! Unitary time evolution of the composite state and measurement sweeps.
//!
//! A sweep builds rho_ABC(0) = rho_AB (x) rho_C, embeds the configured
//! pair Hamiltonian, and evaluates rho(t) = U(t) rho(0) U(t)^dagger on a
//! uniform time grid, recording negativity, CCNR and diagnostics at every
//! point. The Hamiltonian is decomposed once per sweep and re-exponentiated
//! per grid time.

use crate::error::{Error, Result};
use crate::hamiltonian::{HamiltonianSpec, build_pair_hamiltonian, embed_on_tripartite};
use crate::matrix::ComplexMatrix;
use crate::measures::{Diagnostics, MeasurementConfig, diagnostics, measure};
use crate::spectral::Propagator;
use crate::states::{AuxAmplitudes, aux_state, initial_state, tiles_state};
use crate::tensor::DensityMatrix;
use crate::tol;

/// Full description of one time sweep.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub hamiltonian: HamiltonianSpec,
    pub aux: AuxAmplitudes,
    pub t_start: f64,
    pub t_end: f64,
    pub steps: usize,
    pub measurement: MeasurementConfig,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if !self.t_start.is_finite() || !self.t_end.is_finite() {
            return Err(Error::config("sweep times must be finite"));
        }
        if self.t_start > self.t_end {
            return Err(Error::config(format!(
                "t_start {} must not exceed t_end {}",
                self.t_start, self.t_end
            )));
        }
        if self.steps == 0 {
            return Err(Error::config("steps must be at least 1"));
        }
        if self.steps > 1 && self.t_start == self.t_end {
            return Err(Error::config(
                "steps > 1 requires t_start < t_end (times must be strictly increasing)",
            ));
        }
        if !self.hamiltonian.strength.is_finite() {
            return Err(Error::config("interaction strength must be finite"));
        }
        Ok(())
    }

    /// Uniform grid, inclusive of both endpoints; a single step emits only
    /// t_start.
    pub fn times(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.t_start];
        }
        let span = self.t_end - self.t_start;
        let last = self.steps - 1;
        (0..self.steps)
            .map(|i| {
                if i == last {
                    self.t_end
                } else {
                    self.t_start + span * (i as f64) / (last as f64)
                }
            })
            .collect()
    }

    /// Short human-readable locator used in error contexts.
    fn locator(&self) -> String {
        format!(
            "sweep[{} strength={} {} cut={}]",
            self.hamiltonian.kind, self.hamiltonian.strength, self.hamiltonian.convention,
            self.measurement.cut
        )
    }
}

/// One grid point of a sweep.
#[derive(Clone, Copy, Debug)]
pub struct SweepRecord {
    pub t: f64,
    pub negativity: f64,
    pub ccnr: f64,
    /// Diagnostics of the reduced, cut-reshaped state that was measured.
    pub reduced: Diagnostics,
    /// Diagnostics of the full evolved 27x27 state, for conservation checks.
    pub full: Diagnostics,
}

/// Ordered records of one sweep plus the config that produced them.
#[derive(Clone, Debug)]
pub struct SweepResult {
    pub config: SweepConfig,
    pub records: Vec<SweepRecord>,
}

impl SweepResult {
    pub fn negativity_column(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.negativity).collect()
    }

    pub fn ccnr_column(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.ccnr).collect()
    }

    pub fn max_negativity(&self) -> f64 {
        self.records
            .iter()
            .map(|r| r.negativity)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// rho(t) = U(t) rho0 U(t)^dagger for a Hermitian full-space Hamiltonian.
pub fn evolve(rho0: &DensityMatrix, h_full: &ComplexMatrix, t: f64) -> Result<DensityMatrix> {
    let prop = Propagator::new(h_full, tol::HERMITICITY)?;
    apply_propagator(rho0, &prop, t)
}

fn apply_propagator(rho0: &DensityMatrix, prop: &Propagator, t: f64) -> Result<DensityMatrix> {
    let u = prop.at(t);
    let evolved = &(&u * rho0.matrix()) * &u.adjoint();
    DensityMatrix::new(evolved, rho0.dims().clone())
}

/// Run one sweep: build the composite initial state, evolve, measure.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepResult> {
    let ctx = cfg.locator();
    let with_ctx = |e: Error| e.with_context(&ctx);
    cfg.validate().map_err(with_ctx)?;

    let rho_ab = tiles_state();
    let rho_c = aux_state(&cfg.aux);
    let rho0 = initial_state(&rho_ab, &rho_c).map_err(with_ctx)?;

    let h_pair = build_pair_hamiltonian(&cfg.hamiltonian);
    let h_full = embed_on_tripartite(&h_pair).map_err(with_ctx)?;
    let prop = Propagator::new(&h_full, tol::HERMITICITY).map_err(with_ctx)?;

    let mut records = Vec::with_capacity(cfg.steps);
    for t in cfg.times() {
        let rho_t = apply_propagator(&rho0, &prop, t).map_err(with_ctx)?;
        let full = diagnostics(rho_t.matrix());
        let m = measure(&rho_t, &cfg.measurement).map_err(with_ctx)?;
        records.push(SweepRecord {
            t,
            negativity: m.negativity,
            ccnr: m.ccnr,
            reduced: m.diagnostics,
            full,
        });
    }
    Ok(SweepResult {
        config: cfg.clone(),
        records,
    })
}

/// Max deviation of each measurement column when the auxiliary amplitudes
/// are swapped out, reported rather than asserted.
#[derive(Clone, Copy, Debug)]
pub struct SensitivityReport {
    pub max_negativity_deviation: f64,
    pub max_ccnr_deviation: f64,
}

pub fn amplitude_sensitivity_report(
    cfg: &SweepConfig,
    alt_aux: &AuxAmplitudes,
) -> Result<SensitivityReport> {
    let base = run_sweep(cfg)?;
    let mut alt_cfg = cfg.clone();
    alt_cfg.aux = *alt_aux;
    let alt = run_sweep(&alt_cfg)?;

    let mut dn = 0.0f64;
    let mut dc = 0.0f64;
    for (a, b) in base.records.iter().zip(alt.records.iter()) {
        dn = dn.max((a.negativity - b.negativity).abs());
        dc = dc.max((a.ccnr - b.ccnr).abs());
    }
    Ok(SensitivityReport {
        max_negativity_deviation: dn,
        max_ccnr_deviation: dc,
    })
}
