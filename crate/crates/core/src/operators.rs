//! Single-qutrit x/y/z operator triples.
//!
//! Two conventions are supported end to end. `Spin1` uses the spin-1
//! angular momentum matrices with Sz = diag(1, 0, -1), the standard choice
//! for Heisenberg-type qutrit chains; `GellMann` uses the first three
//! Gell-Mann matrices (lambda_1, lambda_2, lambda_3). Results files record
//! which convention produced them.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::matrix::{C64, ComplexMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OperatorConvention {
    #[default]
    Spin1,
    GellMann,
}

impl OperatorConvention {
    pub fn label(&self) -> &'static str {
        match self {
            OperatorConvention::Spin1 => "spin1",
            OperatorConvention::GellMann => "gellmann",
        }
    }
}

impl fmt::Display for OperatorConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for OperatorConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "spin1" => Ok(OperatorConvention::Spin1),
            "gellmann" => Ok(OperatorConvention::GellMann),
            other => Err(Error::config(format!(
                "unknown operator convention `{other}` (expected spin1 or gellmann)"
            ))),
        }
    }
}

/// The x/y/z operators of one qutrit under a chosen convention. All three
/// matrices are Hermitian and traceless.
#[derive(Clone, Debug)]
pub struct OperatorTriple {
    pub sx: ComplexMatrix,
    pub sy: ComplexMatrix,
    pub sz: ComplexMatrix,
}

pub fn operator_triple(conv: OperatorConvention) -> OperatorTriple {
    let re = |v: f64| C64::new(v, 0.0);
    let im = |v: f64| C64::new(0.0, v);
    let z = C64::new(0.0, 0.0);
    match conv {
        OperatorConvention::Spin1 => {
            let s = std::f64::consts::FRAC_1_SQRT_2;
            OperatorTriple {
                sx: ComplexMatrix::from_rows(&[
                    vec![z, re(s), z],
                    vec![re(s), z, re(s)],
                    vec![z, re(s), z],
                ]),
                sy: ComplexMatrix::from_rows(&[
                    vec![z, im(-s), z],
                    vec![im(s), z, im(-s)],
                    vec![z, im(s), z],
                ]),
                sz: ComplexMatrix::from_real_diagonal(&[1.0, 0.0, -1.0]),
            }
        }
        OperatorConvention::GellMann => OperatorTriple {
            sx: ComplexMatrix::from_rows(&[
                vec![z, re(1.0), z],
                vec![re(1.0), z, z],
                vec![z, z, z],
            ]),
            sy: ComplexMatrix::from_rows(&[
                vec![z, im(-1.0), z],
                vec![im(1.0), z, z],
                vec![z, z, z],
            ]),
            sz: ComplexMatrix::from_real_diagonal(&[1.0, -1.0, 0.0]),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
        &(a * b) - &(b * a)
    }

    #[test]
    fn spin1_sz_is_signed_diagonal() {
        let t = operator_triple(OperatorConvention::Spin1);
        assert_eq!(t.sz, ComplexMatrix::from_real_diagonal(&[1.0, 0.0, -1.0]));
    }

    #[test]
    fn gellmann_sz_is_lambda3() {
        let t = operator_triple(OperatorConvention::GellMann);
        assert_eq!(t.sz, ComplexMatrix::from_real_diagonal(&[1.0, -1.0, 0.0]));
    }

    #[test]
    fn spin1_commutator_closes() {
        let t = operator_triple(OperatorConvention::Spin1);
        let lhs = commutator(&t.sx, &t.sy);
        let rhs = t.sz.scale(C64::new(0.0, 1.0));
        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn gellmann_commutator_closes() {
        let t = operator_triple(OperatorConvention::GellMann);
        let lhs = commutator(&t.sx, &t.sy);
        let rhs = t.sz.scale(C64::new(0.0, 2.0));
        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn all_operators_hermitian_and_traceless() {
        for conv in [OperatorConvention::Spin1, OperatorConvention::GellMann] {
            let t = operator_triple(conv);
            for m in [&t.sx, &t.sy, &t.sz] {
                assert_eq!(m.hermiticity_defect(), 0.0);
                assert_eq!(m.trace(), C64::new(0.0, 0.0));
            }
        }
    }

    #[test]
    fn spin1_casimir_is_two() {
        let t = operator_triple(OperatorConvention::Spin1);
        let sum = &(&(&t.sx * &t.sx) + &(&t.sy * &t.sy)) + &(&t.sz * &t.sz);
        let expected = ComplexMatrix::identity(3).scale_re(2.0);
        assert!(sum.max_abs_diff(&expected) < 1e-12);
    }

    #[test]
    fn convention_labels_round_trip() {
        for conv in [OperatorConvention::Spin1, OperatorConvention::GellMann] {
            assert_eq!(conv.label().parse::<OperatorConvention>().unwrap(), conv);
        }
        assert!("pauli".parse::<OperatorConvention>().is_err());
    }
}
