//! Simulation of a two-qutrit bound entangled state opened to an auxiliary
//! qutrit through a choice of pair interactions.
//!
//! The library builds the tiles bound entangled state on qutrits A and B,
//! couples qutrit A to a pure auxiliary qutrit C through a Heisenberg ZZ,
//! bilinear-biquadratic or Dzyaloshinskii-Moriya interaction, evolves the
//! composite unitarily, and tracks negativity and the CCNR separability
//! indicator over configurable bipartitions of the evolving state.
//!
//! Module map:
//! * [`matrix`], [`tensor`], [`spectral`] - dense complex algebra, tensor
//!   structure (Kronecker, partial trace/transpose, realignment) and
//!   spectral kernels (eigendecomposition, trace norm, evolution operator).
//! * [`operators`] - single-qutrit x/y/z triples (spin-1 or Gell-Mann).
//! * [`states`] - tiles state, auxiliary qutrit, composite initial state.
//! * [`hamiltonian`] - the three pair interactions and their embedding.
//! * [`measures`] - negativity, CCNR and diagnostics over a chosen cut.
//! * [`dynamics`] - unitary evolution and measurement sweeps.

pub mod dynamics;
pub mod error;
pub mod hamiltonian;
pub mod matrix;
pub mod measures;
pub mod operators;
pub mod spectral;
pub mod states;
pub mod tensor;
pub mod tol;

pub use dynamics::{
    SensitivityReport, SweepConfig, SweepRecord, SweepResult, amplitude_sensitivity_report,
    evolve, run_sweep,
};
pub use error::{Error, Result};
pub use hamiltonian::{
    HamiltonianSpec, InteractionKind, build_pair_hamiltonian, embed_on_tripartite,
};
pub use matrix::{C64, ComplexMatrix};
pub use measures::{
    Cut, Diagnostics, Measurement, MeasurementConfig, PtSide, Subsystem, ccnr, diagnostics,
    measure, negativity,
};
pub use operators::{OperatorConvention, OperatorTriple, operator_triple};
pub use spectral::{
    HermitianEigen, Propagator, evolution_operator, hermitian_eigen, hermitian_eigenvalues,
    trace_norm, trace_norm_hermitian, unitarity_defect,
};
pub use states::{AuxAmplitudes, aux_state, initial_state, tiles_kets, tiles_state};
pub use tensor::{
    DensityMatrix, TensorDims, kron, partial_trace, partial_transpose, permute_factors, realign,
};
