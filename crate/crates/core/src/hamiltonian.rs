//! Interaction Hamiltonians on the A-C qutrit pair and their embedding
//! into the full A (x) B (x) C space.
//!
//! Three interactions are supported, all acting between qutrit A and the
//! auxiliary qutrit C while B stays uncoupled:
//!
//! * `HeisenbergZz`:        H = -J (Sz (x) Sz)
//! * `BilinearBiquadratic`: H = -J [(Sz (x) Sz) + (Sz (x) Sz)^2]
//! * `DzyaloshinskiiMoriya`: H = D (Sx (x) Sy - Sy (x) Sx)
//!
//! Signs are as written above; hbar = 1 and strengths/time are
//! dimensionless. Every builder constructs the strength-1 base matrix and
//! scales it, so H(s) = s * H(1) holds exactly in floating point.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::operators::{OperatorConvention, operator_triple};
use crate::tensor::{TensorDims, kron, permute_factors};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InteractionKind {
    HeisenbergZz,
    BilinearBiquadratic,
    DzyaloshinskiiMoriya,
}

impl InteractionKind {
    pub const ALL: [InteractionKind; 3] = [
        InteractionKind::HeisenbergZz,
        InteractionKind::BilinearBiquadratic,
        InteractionKind::DzyaloshinskiiMoriya,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            InteractionKind::HeisenbergZz => "heisenberg",
            InteractionKind::BilinearBiquadratic => "blbq",
            InteractionKind::DzyaloshinskiiMoriya => "dm",
        }
    }
}

impl fmt::Display for InteractionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for InteractionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "heisenberg" => Ok(InteractionKind::HeisenbergZz),
            "blbq" => Ok(InteractionKind::BilinearBiquadratic),
            "dm" => Ok(InteractionKind::DzyaloshinskiiMoriya),
            other => Err(Error::config(format!(
                "unknown interaction `{other}` (expected heisenberg, blbq or dm)"
            ))),
        }
    }
}

/// Interaction kind, coupling strength (J or D) and operator convention.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HamiltonianSpec {
    pub kind: InteractionKind,
    pub strength: f64,
    pub convention: OperatorConvention,
}

impl HamiltonianSpec {
    pub fn new(kind: InteractionKind, strength: f64, convention: OperatorConvention) -> Result<Self> {
        if !strength.is_finite() {
            return Err(Error::config(format!(
                "interaction strength must be finite, got {strength}"
            )));
        }
        Ok(Self {
            kind,
            strength,
            convention,
        })
    }
}

/// The 9x9 interaction Hamiltonian on A (x) C.
pub fn build_pair_hamiltonian(spec: &HamiltonianSpec) -> ComplexMatrix {
    let ops = operator_triple(spec.convention);
    let base = match spec.kind {
        InteractionKind::HeisenbergZz => kron(&ops.sz, &ops.sz).scale_re(-1.0),
        InteractionKind::BilinearBiquadratic => {
            let zz = kron(&ops.sz, &ops.sz);
            (&zz + &(&zz * &zz)).scale_re(-1.0)
        }
        InteractionKind::DzyaloshinskiiMoriya => {
            &kron(&ops.sx, &ops.sy) - &kron(&ops.sy, &ops.sx)
        }
    };
    base.scale_re(spec.strength)
}

/// Embed a 9x9 operator on A (x) C as a 27x27 operator on A (x) B (x) C,
/// acting as the identity on B. Realized by an index permutation of
/// h_AC (x) I_B from (A, C, B) order into the global (A, B, C) order.
pub fn embed_on_tripartite(h_ac: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !h_ac.is_square() || h_ac.rows() != 9 {
        return Err(Error::config(format!(
            "expected a 9x9 operator on the A,C pair, got {}x{}",
            h_ac.rows(),
            h_ac.cols()
        )));
    }
    let acb = kron(h_ac, &ComplexMatrix::identity(3));
    // Factors currently ordered (A, C, B); move B to the middle.
    let (abc, _) = permute_factors(&acb, &TensorDims::qutrits(3), &[0, 2, 1])?;
    Ok(abc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::C64;
    use crate::spectral::hermitian_eigenvalues;
    use crate::tol;

    fn spec(kind: InteractionKind, strength: f64) -> HamiltonianSpec {
        HamiltonianSpec::new(kind, strength, OperatorConvention::Spin1).unwrap()
    }

    #[test]
    fn zero_strength_gives_zero_matrix() {
        for kind in InteractionKind::ALL {
            let h = build_pair_hamiltonian(&spec(kind, 0.0));
            assert_eq!(h.max_abs(), 0.0);
        }
    }

    #[test]
    fn heisenberg_zz_spin1_is_signed_diagonal() {
        let h = build_pair_hamiltonian(&spec(InteractionKind::HeisenbergZz, 1.0));
        let expected = ComplexMatrix::from_real_diagonal(&[
            -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, -1.0,
        ]);
        assert!(h.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn blbq_spin1_spectrum_is_zero_and_minus_two_j() {
        let j = 0.7;
        let h = build_pair_hamiltonian(&spec(InteractionKind::BilinearBiquadratic, j));
        let vals = hermitian_eigenvalues(&h, tol::HERMITICITY).unwrap();
        for v in vals {
            let near_zero = v.abs() < 1e-12;
            let near_minus_2j = (v + 2.0 * j).abs() < 1e-12;
            assert!(near_zero || near_minus_2j, "unexpected eigenvalue {v}");
        }
    }

    #[test]
    fn all_hamiltonians_hermitian_in_both_conventions() {
        for conv in [OperatorConvention::Spin1, OperatorConvention::GellMann] {
            for kind in InteractionKind::ALL {
                let h = build_pair_hamiltonian(
                    &HamiltonianSpec::new(kind, 0.8, conv).unwrap(),
                );
                assert!(h.hermiticity_defect() < 1e-12, "{kind:?} under {conv:?}");
            }
        }
    }

    #[test]
    fn dm_hamiltonian_is_traceless() {
        for conv in [OperatorConvention::Spin1, OperatorConvention::GellMann] {
            let h = build_pair_hamiltonian(
                &HamiltonianSpec::new(InteractionKind::DzyaloshinskiiMoriya, 1.0, conv).unwrap(),
            );
            assert!(h.trace().norm() < 1e-12);
        }
    }

    #[test]
    fn strength_scaling_is_exact() {
        for kind in InteractionKind::ALL {
            let h1 = build_pair_hamiltonian(&spec(kind, 1.0));
            let hs = build_pair_hamiltonian(&spec(kind, 0.37));
            assert_eq!(hs, h1.scale_re(0.37));
        }
    }

    #[test]
    fn embed_zero_and_identity() {
        let zero = ComplexMatrix::zeros(9, 9);
        assert_eq!(embed_on_tripartite(&zero).unwrap().max_abs(), 0.0);
        let embedded = embed_on_tripartite(&ComplexMatrix::identity(9)).unwrap();
        assert!(embedded.max_abs_diff(&ComplexMatrix::identity(27)) < 1e-15);
    }

    #[test]
    fn embed_triples_the_trace() {
        let h = build_pair_hamiltonian(&spec(InteractionKind::BilinearBiquadratic, 0.9));
        let full = embed_on_tripartite(&h).unwrap();
        assert!((full.trace() - h.trace().scale(3.0)).norm() < 1e-12);
    }

    #[test]
    fn embed_matches_direct_kron_construction() {
        // Independent route: -J Sz (x) I (x) Sz built directly in A,B,C order.
        let j = 0.6;
        let ops = crate::operators::operator_triple(OperatorConvention::Spin1);
        let direct = kron(&kron(&ops.sz, &ComplexMatrix::identity(3)), &ops.sz).scale_re(-j);
        let embedded =
            embed_on_tripartite(&build_pair_hamiltonian(&spec(InteractionKind::HeisenbergZz, j)))
                .unwrap();
        assert!(embedded.max_abs_diff(&direct) < 1e-15);
    }

    #[test]
    fn embed_commutes_with_hermitian_conjugation() {
        let h = build_pair_hamiltonian(&spec(InteractionKind::DzyaloshinskiiMoriya, 0.4));
        let a = embed_on_tripartite(&h.adjoint()).unwrap();
        let b = embed_on_tripartite(&h).unwrap().adjoint();
        assert!(a.max_abs_diff(&b) < 1e-15);
    }

    #[test]
    fn embed_rejects_wrong_dimension() {
        assert!(embed_on_tripartite(&ComplexMatrix::identity(27)).is_err());
    }

    #[test]
    fn spec_rejects_non_finite_strength() {
        assert!(
            HamiltonianSpec::new(InteractionKind::HeisenbergZz, f64::NAN, OperatorConvention::Spin1)
                .is_err()
        );
    }

    #[test]
    fn labels_round_trip() {
        for kind in InteractionKind::ALL {
            assert_eq!(kind.label().parse::<InteractionKind>().unwrap(), kind);
        }
        assert!("ising".parse::<InteractionKind>().is_err());
    }

    #[test]
    fn trace_is_complex_consistent() {
        let h = build_pair_hamiltonian(&spec(InteractionKind::HeisenbergZz, 1.0));
        assert_eq!(h.trace(), C64::new(0.0, 0.0));
    }
}
