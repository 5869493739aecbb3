//! Spectral decompositions and the norms / exponentials built on them.
//!
//! Dense Hermitian eigendecompositions and singular values come from
//! nalgebra; everything here is small (at most 27x27, realignments up to
//! 9x81), so exact dense solvers are the right tool.

use nalgebra::linalg::{SVD, SymmetricEigen};

use crate::error::{Error, Result};
use crate::matrix::{C64, ComplexMatrix};

/// Eigendecomposition of a Hermitian matrix: `m = V diag(values) V^dagger`.
pub struct HermitianEigen {
    /// Eigenvalues in ascending order.
    pub values: Vec<f64>,
    /// Unitary matrix whose columns are the corresponding eigenvectors.
    pub vectors: ComplexMatrix,
}

fn check_hermitian(m: &ComplexMatrix, tol: f64) -> Result<()> {
    if !m.is_square() {
        return Err(Error::config(format!(
            "expected square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let defect = m.hermiticity_defect();
    if defect > tol {
        return Err(Error::precondition(format!(
            "matrix is not Hermitian: max |m - m^dagger| entry = {defect:.3e} > {tol:.1e}"
        )));
    }
    Ok(())
}

/// Full Hermitian eigendecomposition, eigenvalues sorted ascending.
pub fn hermitian_eigen(m: &ComplexMatrix, tol: f64) -> Result<HermitianEigen> {
    check_hermitian(m, tol)?;
    let n = m.rows();
    // Symmetrize first so the solver sees an exactly Hermitian input.
    let sym = (m + &m.adjoint()).scale_re(0.5);
    let eig = SymmetricEigen::new(sym.as_na().clone());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, order[j])]);
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues only, ascending.
pub fn hermitian_eigenvalues(m: &ComplexMatrix, tol: f64) -> Result<Vec<f64>> {
    check_hermitian(m, tol)?;
    let sym = (m + &m.adjoint()).scale_re(0.5);
    let mut values: Vec<f64> = SymmetricEigen::new(sym.as_na().clone())
        .eigenvalues
        .iter()
        .copied()
        .collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Sum of singular values of an arbitrary rectangular matrix.
pub fn trace_norm(m: &ComplexMatrix) -> f64 {
    SVD::new_unordered(m.as_na().clone(), false, false)
        .singular_values
        .iter()
        .sum()
}

/// Sum of |eigenvalue| for a certified-Hermitian matrix; agrees with
/// `trace_norm` on such inputs.
pub fn trace_norm_hermitian(m: &ComplexMatrix, tol: f64) -> Result<f64> {
    Ok(hermitian_eigenvalues(m, tol)?.iter().map(|v| v.abs()).sum())
}

/// Max entry of |U U^dagger - I|.
pub fn unitarity_defect(u: &ComplexMatrix) -> f64 {
    let prod = u * &u.adjoint();
    prod.max_abs_diff(&ComplexMatrix::identity(u.rows()))
}

/// Cached spectral decomposition of a Hamiltonian, able to produce the
/// evolution operator U(t) = exp(-i h t) for any t.
///
/// Decomposing once and re-exponentiating eigenvalues per time point keeps
/// long sweeps cheap and keeps every U(t) exactly consistent with a single
/// decomposition.
pub struct Propagator {
    values: Vec<f64>,
    vectors: ComplexMatrix,
    vectors_adj: ComplexMatrix,
}

impl Propagator {
    pub fn new(h: &ComplexMatrix, tol: f64) -> Result<Self> {
        let eig = hermitian_eigen(h, tol)?;
        let vectors_adj = eig.vectors.adjoint();
        Ok(Self {
            values: eig.values,
            vectors: eig.vectors,
            vectors_adj,
        })
    }

    /// U(t) = V diag(exp(-i lambda t)) V^dagger.
    pub fn at(&self, t: f64) -> ComplexMatrix {
        let n = self.values.len();
        let phased = ComplexMatrix::from_fn(n, n, |i, j| {
            let phase = C64::new(0.0, -self.values[j] * t).exp();
            self.vectors.get(i, j) * phase
        });
        &phased * &self.vectors_adj
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.values
    }
}

/// Evolution operator for a Hermitian generator: U(t) = exp(-i h t).
pub fn evolution_operator(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    Ok(Propagator::new(h, crate::tol::HERMITICITY)?.at(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tol;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn pseudo_random_hermitian(n: usize, seed: u64) -> ComplexMatrix {
        let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let m = ComplexMatrix::from_fn(n, n, |_, _| c(next(), next()));
        (&m + &m.adjoint()).scale_re(0.5)
    }

    #[test]
    fn trace_norm_of_identity() {
        assert!((trace_norm(&ComplexMatrix::identity(3)) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn trace_norm_of_signed_diagonal() {
        let d = ComplexMatrix::from_real_diagonal(&[1.0, -2.0]);
        assert!((trace_norm(&d) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn trace_norm_routes_agree_on_hermitian_input() {
        for seed in 1..5u64 {
            let h = pseudo_random_hermitian(9, seed);
            let via_svd = trace_norm(&h);
            let via_eig = trace_norm_hermitian(&h, tol::HERMITICITY).unwrap();
            assert!(
                (via_svd - via_eig).abs() < 1e-10,
                "routes disagree: {via_svd} vs {via_eig}"
            );
        }
    }

    #[test]
    fn eigenvalues_of_diagonal_matrix() {
        let m = ComplexMatrix::from_real_diagonal(&[2.0, -1.0, 0.5]);
        let vals = hermitian_eigenvalues(&m, tol::HERMITICITY).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-14);
        assert!((vals[1] - 0.5).abs() < 1e-14);
        assert!((vals[2] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn eigendecomposition_reconstructs_input() {
        let h = pseudo_random_hermitian(9, 77);
        let eig = hermitian_eigen(&h, tol::HERMITICITY).unwrap();
        let lambda = ComplexMatrix::from_real_diagonal(&eig.values);
        let rebuilt = &(&eig.vectors * &lambda) * &eig.vectors.adjoint();
        assert!(rebuilt.max_abs_diff(&h) < 1e-12);
    }

    #[test]
    fn non_hermitian_input_is_rejected() {
        let mut m = ComplexMatrix::identity(3);
        m.set(0, 1, c(0.5, 0.0));
        assert!(hermitian_eigen(&m, tol::HERMITICITY).is_err());
        assert!(evolution_operator(&m, 1.0).is_err());
    }

    #[test]
    fn evolution_at_zero_time_is_identity() {
        let h = pseudo_random_hermitian(9, 5);
        let u = evolution_operator(&h, 0.0).unwrap();
        assert!(u.max_abs_diff(&ComplexMatrix::identity(9)) < 1e-13);
    }

    #[test]
    fn evolution_of_diagonal_hamiltonian_is_diagonal_phases() {
        let h = ComplexMatrix::from_real_diagonal(&[1.0, 0.0, -2.0]);
        let t = 0.7;
        let u = evolution_operator(&h, t).unwrap();
        for (i, lambda) in [1.0, 0.0, -2.0].iter().enumerate() {
            let expected = C64::new(0.0, -lambda * t).exp();
            assert!((u.get(i, i) - expected).norm() < 1e-13);
        }
        assert!((u.get(0, 1)).norm() < 1e-13);
    }

    #[test]
    fn evolution_is_unitary_for_random_27x27() {
        let h = pseudo_random_hermitian(27, 13);
        let u = evolution_operator(&h, 1.3).unwrap();
        assert!(unitarity_defect(&u) < 1e-10);
    }

    #[test]
    fn propagator_satisfies_group_property() {
        let h = pseudo_random_hermitian(27, 29);
        let prop = Propagator::new(&h, tol::HERMITICITY).unwrap();
        let (t1, t2) = (0.6, 1.7);
        let composed = &prop.at(t1) * &prop.at(t2);
        let direct = prop.at(t1 + t2);
        assert!(composed.max_abs_diff(&direct) < 1e-9);
    }
}
