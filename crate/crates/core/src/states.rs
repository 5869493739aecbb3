//! State constructors: the tiles bound entangled state on qutrits A and B,
//! the pure auxiliary qutrit C, and their composite.

use crate::error::{Error, Result};
use crate::matrix::{C64, ComplexMatrix};
use crate::tensor::{DensityMatrix, TensorDims, kron};
use crate::tol;

/// The five kets of the tiles unextendible product basis on A (x) B, each a
/// normalized 9-component vector, pairwise orthogonal, and a product state
/// across the A|B split.
pub fn tiles_kets() -> [Vec<C64>; 5] {
    let z = C64::new(0.0, 0.0);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let t = 1.0 / 3.0;
    let mut kets = [
        vec![z; 9],
        vec![z; 9],
        vec![z; 9],
        vec![z; 9],
        vec![z; 9],
    ];
    // Flat index of |a>|b> is 3a + b.
    // |0> (|0> - |1>) / sqrt(2)
    kets[0][0] = C64::new(s, 0.0);
    kets[0][1] = C64::new(-s, 0.0);
    // (|0> - |1>) |2> / sqrt(2)
    kets[1][2] = C64::new(s, 0.0);
    kets[1][5] = C64::new(-s, 0.0);
    // |2> (|1> - |2>) / sqrt(2)
    kets[2][7] = C64::new(s, 0.0);
    kets[2][8] = C64::new(-s, 0.0);
    // (|1> - |2>) |0> / sqrt(2)
    kets[3][3] = C64::new(s, 0.0);
    kets[3][6] = C64::new(-s, 0.0);
    // (|0> + |1> + |2>)(|0> + |1> + |2>) / 3
    for e in kets[4].iter_mut() {
        *e = C64::new(t, 0.0);
    }
    kets
}

/// The two-qutrit tiles bound entangled state:
/// rho_AB = (1/4) (I_9 - sum_i |psi_i><psi_i|) over the five tiles kets.
///
/// Rank 4 with eigenvalues {1/4 x4, 0 x5}; positive under partial
/// transpose, yet detected by the CCNR criterion.
pub fn tiles_state() -> DensityMatrix {
    let mut m = ComplexMatrix::identity(9);
    for ket in tiles_kets().iter() {
        m = &m - &ComplexMatrix::outer(ket);
    }
    DensityMatrix::new(m.scale_re(0.25), TensorDims::qutrits(2))
        .expect("tiles state construction is exact")
}

/// Amplitudes (alpha, beta, gamma) of the pure auxiliary qutrit
/// |C> = alpha |0> + beta |1> + gamma |2>, normalized to 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AuxAmplitudes {
    pub alpha: C64,
    pub beta: C64,
    pub gamma: C64,
}

impl AuxAmplitudes {
    pub fn new(alpha: C64, beta: C64, gamma: C64) -> Result<Self> {
        let amps = Self { alpha, beta, gamma };
        let norm = amps.norm_sqr();
        if !norm.is_finite() || (norm - 1.0).abs() > tol::DETECTION {
            return Err(Error::precondition(format!(
                "auxiliary amplitudes not normalized: |a|^2 + |b|^2 + |g|^2 = {norm:.12}"
            )));
        }
        Ok(amps)
    }

    pub fn from_reals(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        Self::new(
            C64::new(alpha, 0.0),
            C64::new(beta, 0.0),
            C64::new(gamma, 0.0),
        )
    }

    /// (1, 1, 1) / sqrt(3).
    pub fn uniform() -> Self {
        let v = 1.0 / 3.0f64.sqrt();
        Self::from_reals(v, v, v).expect("uniform amplitudes are normalized")
    }

    /// The basis state |k> for k in 0..3.
    pub fn basis(k: usize) -> Self {
        assert!(k < 3, "qutrit basis index must be 0, 1 or 2");
        let mut v = [0.0; 3];
        v[k] = 1.0;
        Self::from_reals(v[0], v[1], v[2]).expect("basis amplitudes are normalized")
    }

    pub fn norm_sqr(&self) -> f64 {
        self.alpha.norm_sqr() + self.beta.norm_sqr() + self.gamma.norm_sqr()
    }

    pub fn as_vector(&self) -> [C64; 3] {
        [self.alpha, self.beta, self.gamma]
    }
}

/// Pure density matrix |C><C| of the auxiliary qutrit, with the bra side
/// complex-conjugated so complex amplitudes are admissible.
pub fn aux_state(amps: &AuxAmplitudes) -> DensityMatrix {
    let m = ComplexMatrix::outer(&amps.as_vector());
    DensityMatrix::new(m, TensorDims::qutrits(1)).expect("outer product of a finite vector")
}

/// Composite initial state rho_AB (x) rho_C on A (x) B (x) C.
pub fn initial_state(rho_ab: &DensityMatrix, rho_c: &DensityMatrix) -> Result<DensityMatrix> {
    if rho_ab.dims().factors() != [3, 3] {
        return Err(Error::config(format!(
            "expected a two-qutrit state on A,B; got dims {:?}",
            rho_ab.dims().factors()
        )));
    }
    if rho_c.dims().factors() != [3] {
        return Err(Error::config(format!(
            "expected a single-qutrit state for C; got dims {:?}",
            rho_c.dims().factors()
        )));
    }
    for (name, state) in [("AB", rho_ab), ("C", rho_c)] {
        let tr = state.trace();
        if (tr - C64::new(1.0, 0.0)).norm() > tol::EQUALITY {
            return Err(Error::precondition(format!(
                "state {name} does not have unit trace (got {tr})"
            )));
        }
    }
    DensityMatrix::new(
        kron(rho_ab.matrix(), rho_c.matrix()),
        TensorDims::qutrits(3),
    )
}
