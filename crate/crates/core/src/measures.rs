//! Entanglement measures over a configurable bipartition of a possibly
//! multipartite state.
//!
//! A `MeasurementConfig` names which subsystems to trace out first and how
//! the remaining factors split into a left|right cut. Negativity is
//! (||rho^PT||_1 - 1) / 2; the CCNR indicator subtracts the product of the
//! cut marginals before realigning and compares the trace norm against the
//! geometric mean of the marginal impurities. Either is reported as
//! detecting entanglement when it exceeds `tol::DETECTION`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::{C64, ComplexMatrix};
use crate::spectral::{hermitian_eigenvalues, trace_norm, trace_norm_hermitian};
use crate::tensor::{DensityMatrix, TensorDims, kron, partial_trace, realign};
use crate::tol;

/// One of the three qutrit factors, in the fixed global order A, B, C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Subsystem {
    A,
    B,
    C,
}

impl Subsystem {
    pub fn index(&self) -> usize {
        match self {
            Subsystem::A => 0,
            Subsystem::B => 1,
            Subsystem::C => 2,
        }
    }

    fn from_char(ch: char) -> Result<Self> {
        match ch.to_ascii_uppercase() {
            'A' => Ok(Subsystem::A),
            'B' => Ok(Subsystem::B),
            'C' => Ok(Subsystem::C),
            other => Err(Error::config(format!(
                "unknown subsystem `{other}` (expected A, B or C)"
            ))),
        }
    }
}

impl fmt::Display for Subsystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subsystem::A => f.write_str("A"),
            Subsystem::B => f.write_str("B"),
            Subsystem::C => f.write_str("C"),
        }
    }
}

fn parse_block(s: &str) -> Result<Vec<Subsystem>> {
    s.trim().chars().map(Subsystem::from_char).collect()
}

fn block_label(block: &[Subsystem]) -> String {
    block.iter().map(|s| s.to_string()).collect()
}

/// Ordered bipartition of the factors that survive reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    pub left: Vec<Subsystem>,
    pub right: Vec<Subsystem>,
}

impl Cut {
    pub fn new(left: Vec<Subsystem>, right: Vec<Subsystem>) -> Result<Self> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::config("both cut blocks must be non-empty"));
        }
        let mut all: Vec<Subsystem> = left.iter().chain(right.iter()).copied().collect();
        all.sort();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::config("cut blocks must not repeat a subsystem"));
        }
        Ok(Self { left, right })
    }

    fn factors(&self) -> impl Iterator<Item = Subsystem> + '_ {
        self.left.iter().chain(self.right.iter()).copied()
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", block_label(&self.left), block_label(&self.right))
    }
}

impl FromStr for Cut {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split('|');
        let (left, right) = match (parts.next(), parts.next(), parts.next()) {
            (Some(l), Some(r), None) => (l, r),
            _ => {
                return Err(Error::config(format!(
                    "cut `{s}` must have exactly two blocks separated by `|`"
                )));
            }
        };
        Cut::new(parse_block(left)?, parse_block(right)?)
    }
}

/// Which block of the cut gets transposed when computing negativity. The
/// trace norm is the same either way; the knob exists so tests can assert
/// that invariance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PtSide {
    Left,
    #[default]
    Right,
}

impl PtSide {
    pub fn label(&self) -> &'static str {
        match self {
            PtSide::Left => "left",
            PtSide::Right => "right",
        }
    }
}

impl fmt::Display for PtSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for PtSide {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "left" => Ok(PtSide::Left),
            "right" => Ok(PtSide::Right),
            other => Err(Error::config(format!(
                "unknown pt side `{other}` (expected left or right)"
            ))),
        }
    }
}

/// Which subsystems to trace out and how to cut what remains.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasurementConfig {
    pub reduce: Vec<Subsystem>,
    pub cut: Cut,
    pub pt_side: PtSide,
}

impl MeasurementConfig {
    pub fn new(mut reduce: Vec<Subsystem>, cut: Cut, pt_side: PtSide) -> Result<Self> {
        reduce.sort();
        if reduce.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::config("reduce set must not repeat a subsystem"));
        }
        if reduce.iter().any(|r| cut.factors().any(|c| c == *r)) {
            return Err(Error::config(
                "a subsystem cannot be both traced out and part of the cut",
            ));
        }
        Ok(Self {
            reduce,
            cut,
            pt_side,
        })
    }

    /// Trace out C, cut A|B, transpose the right (B) block: the default
    /// measurement applied to the evolved tripartite state.
    pub fn reduce_c_cut_ab() -> Self {
        Self::new(
            vec![Subsystem::C],
            Cut::new(vec![Subsystem::A], vec![Subsystem::B]).unwrap(),
            PtSide::Right,
        )
        .unwrap()
    }

    /// Keep all three factors, cut A|BC: the bipartition on which the
    /// interaction can generate free entanglement.
    pub fn cut_a_bc() -> Self {
        Self::new(
            vec![],
            Cut::new(vec![Subsystem::A], vec![Subsystem::B, Subsystem::C]).unwrap(),
            PtSide::Right,
        )
        .unwrap()
    }

    /// Every subsystem mentioned, for validation against a state.
    fn mentioned(&self) -> Vec<Subsystem> {
        let mut all: Vec<Subsystem> = self.reduce.iter().copied().chain(self.cut.factors()).collect();
        all.sort();
        all
    }

    /// Check that reduce and cut together account for each of the state's
    /// factors exactly once.
    pub fn validate_for(&self, factor_count: usize) -> Result<()> {
        let mentioned = self.mentioned();
        let expected: Vec<Subsystem> = [Subsystem::A, Subsystem::B, Subsystem::C]
            .into_iter()
            .take(factor_count)
            .collect();
        if mentioned != expected {
            return Err(Error::config(format!(
                "measurement must mention each of the state's {factor_count} factor(s) exactly \
                 once; got reduce={:?} cut={}",
                self.reduce, self.cut
            )));
        }
        Ok(())
    }
}

impl Default for MeasurementConfig {
    fn default() -> Self {
        Self::reduce_c_cut_ab()
    }
}

/// Scalar health indicators of a (nominally) density matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Diagnostics {
    /// Re tr(rho); should be 1.
    pub trace: f64,
    /// Re tr(rho^2).
    pub purity: f64,
    /// Smallest eigenvalue of the Hermitian part; raw, never clipped.
    pub min_eigenvalue: f64,
    /// Max entry of |rho - rho^dagger|.
    pub max_hermiticity_defect: f64,
}

/// Diagnostics of an arbitrary square matrix.
pub fn diagnostics(m: &ComplexMatrix) -> Diagnostics {
    let hermitian_part = (m + &m.adjoint()).scale_re(0.5);
    let values = hermitian_eigenvalues(&hermitian_part, 1e-6)
        .expect("hermitian part is Hermitian by construction");
    Diagnostics {
        trace: m.trace().re,
        purity: m.trace_of_square_re(),
        min_eigenvalue: values[0],
        max_hermiticity_defect: m.hermiticity_defect(),
    }
}

/// Negativity, CCNR and diagnostics of one reduced, cut state.
#[derive(Clone, Copy, Debug)]
pub struct Measurement {
    pub negativity: f64,
    pub ccnr: f64,
    pub diagnostics: Diagnostics,
}

impl Measurement {
    /// Detection verdict: entangled if either indicator clears the
    /// detection threshold.
    pub fn detected_entangled(&self) -> bool {
        self.negativity > tol::DETECTION || self.ccnr > tol::DETECTION
    }
}

/// The state reshaped onto the configured bipartition.
struct BipartiteView {
    matrix: ComplexMatrix,
    dims: TensorDims,
}

fn bipartite_view(rho: &DensityMatrix, cfg: &MeasurementConfig) -> Result<BipartiteView> {
    cfg.validate_for(rho.dims().factor_count())?;

    // Reduce to the cut factors (ascending order keeps the global factor
    // ordering).
    let mut keep: Vec<usize> = cfg.cut.factors().map(|s| s.index()).collect();
    keep.sort_unstable();
    let reduced = if keep.len() == rho.dims().factor_count() {
        rho.clone()
    } else {
        rho.partial_trace(&keep)?
    };

    // Reorder the kept factors to (left..., right...).
    let rank_of = |s: Subsystem| keep.iter().position(|&k| k == s.index()).unwrap();
    let perm: Vec<usize> = cfg.cut.factors().map(rank_of).collect();
    let ordered = if perm.iter().enumerate().all(|(k, &p)| k == p) {
        reduced
    } else {
        reduced.permute_factors(&perm)?
    };

    let d_left: usize = ordered.dims().factors()[..cfg.cut.left.len()].iter().product();
    let d_right: usize = ordered.dims().factors()[cfg.cut.left.len()..].iter().product();
    Ok(BipartiteView {
        matrix: ordered.matrix().clone(),
        dims: TensorDims::new(vec![d_left, d_right])?,
    })
}

fn check_state(rho: &DensityMatrix) -> Result<()> {
    let tr = rho.trace();
    if (tr - C64::new(1.0, 0.0)).norm() > tol::EQUALITY {
        return Err(Error::precondition(format!(
            "state does not have unit trace (got {tr})"
        )));
    }
    let defect = rho.matrix().hermiticity_defect();
    if defect > tol::HERMITICITY {
        return Err(Error::precondition(format!(
            "state is not Hermitian: defect {defect:.3e}"
        )));
    }
    Ok(())
}

fn negativity_of_view(view: &BipartiteView, pt_side: PtSide) -> Result<f64> {
    let sub = match pt_side {
        PtSide::Left => 0,
        PtSide::Right => 1,
    };
    let pt = crate::tensor::partial_transpose(&view.matrix, &view.dims, sub)?;
    // Partial transposition permutes entries, so hermiticity carries over
    // from the certified input; the eigenvalue route to the trace norm is
    // exact for it.
    let tn = trace_norm_hermitian(&pt, tol::HERMITICITY)?;
    Ok((tn - 1.0) / 2.0)
}

fn ccnr_of_view(view: &BipartiteView) -> Result<f64> {
    let rho_l = partial_trace(&view.matrix, &view.dims, &[0])?;
    let rho_r = partial_trace(&view.matrix, &view.dims, &[1])?;
    let delta = &view.matrix - &kron(&rho_l, &rho_r);
    let realigned = realign(&delta, &view.dims)?;
    let tn = trace_norm(&realigned);
    let impurity_l = (1.0 - rho_l.trace_of_square_re()).max(0.0);
    let impurity_r = (1.0 - rho_r.trace_of_square_re()).max(0.0);
    Ok(tn - (impurity_l * impurity_r).sqrt())
}

/// Negativity of `rho` on the configured cut: (||rho^PT||_1 - 1) / 2.
///
/// The returned value is never clamped; tiny negative values report
/// solver noise honestly.
pub fn negativity(rho: &DensityMatrix, cfg: &MeasurementConfig) -> Result<f64> {
    check_state(rho)?;
    let view = bipartite_view(rho, cfg)?;
    negativity_of_view(&view, cfg.pt_side)
}

/// CCNR indicator of `rho` on the configured cut:
/// ||(rho - rho_L (x) rho_R)^R||_1 - sqrt((1 - tr rho_L^2)(1 - tr rho_R^2)).
/// Positive values detect entanglement; the sign is meaningful.
pub fn ccnr(rho: &DensityMatrix, cfg: &MeasurementConfig) -> Result<f64> {
    check_state(rho)?;
    let view = bipartite_view(rho, cfg)?;
    ccnr_of_view(&view)
}

/// Negativity, CCNR and diagnostics of the reduced cut state, sharing one
/// reduction.
pub fn measure(rho: &DensityMatrix, cfg: &MeasurementConfig) -> Result<Measurement> {
    check_state(rho)?;
    let view = bipartite_view(rho, cfg)?;
    Ok(Measurement {
        negativity: negativity_of_view(&view, cfg.pt_side)?,
        ccnr: ccnr_of_view(&view)?,
        diagnostics: diagnostics(&view.matrix),
    })
}
