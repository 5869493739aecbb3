//! Independent numerical oracles for the integration tests.
//!
//! Everything in this module deliberately avoids the library's spectral
//! and tensor routines: eigenvalues come from a hand-rolled cyclic Jacobi
//! solver on plain nested vectors, singular values from one-sided Jacobi,
//! and realignment / marginals from direct index summation. The oracles
//! are slow and simple on purpose.

// Each test target compiles this module separately and uses a subset.
#![allow(dead_code)]
// Index-explicit loops are deliberate here: the oracle mirrors the
// textbook summation formulas instead of iterator pipelines.
#![allow(clippy::needless_range_loop)]

use boundsim_core::{C64, ComplexMatrix};

pub fn to_rows(m: &ComplexMatrix) -> Vec<Vec<C64>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect())
        .collect()
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, ascending.
pub fn jacobi_hermitian_eigenvalues(a: &[Vec<C64>]) -> Vec<f64> {
    let n = a.len();
    let mut m: Vec<Vec<C64>> = a.to_vec();

    let off_diagonal_norm = |m: &[Vec<C64>]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    s += m[p][q].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    for _sweep in 0..60 {
        if off_diagonal_norm(&m) < 1e-14 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p][q];
                let r = apq.norm();
                if r < 1e-300 {
                    continue;
                }
                let phi = apq.im.atan2(apq.re);
                let app = m[p][p].re;
                let aqq = m[q][q].re;
                // Rotation angle for the phase-stripped real 2x2 block.
                let t = if app == aqq {
                    1.0
                } else {
                    let tau = (aqq - app) / (2.0 * r);
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let e_minus = C64::new(0.0, -phi).exp();
                let e_plus = C64::new(0.0, phi).exp();

                // Column update: M <- M U with U the (p,q) plane rotation
                // U[p][p]=c, U[p][q]=s, U[q][p]=-s e^{-i phi}, U[q][q]=c e^{-i phi}.
                for k in 0..n {
                    let mkp = m[k][p];
                    let mkq = m[k][q];
                    m[k][p] = mkp * c - mkq * s * e_minus;
                    m[k][q] = mkp * s + mkq * c * e_minus;
                }
                // Row update: M <- U^dagger M.
                for k in 0..n {
                    let mpk = m[p][k];
                    let mqk = m[q][k];
                    m[p][k] = mpk * c - mqk * s * e_plus;
                    m[q][k] = mpk * s + mqk * c * e_plus;
                }
            }
        }
    }

    let mut vals: Vec<f64> = (0..n).map(|i| m[i][i].re).collect();
    vals.sort_by(f64::total_cmp);
    vals
}

/// Singular values by one-sided Jacobi: orthogonalize column pairs until
/// convergence, then read off the column norms. Descending order. Accurate
/// for small singular values, unlike the Gram-matrix route.
pub fn jacobi_singular_values(m: &[Vec<C64>]) -> Vec<f64> {
    let rows = m.len();
    let cols = m[0].len();
    // Work on the transpose if needed so columns are the short list.
    let mut a: Vec<Vec<C64>> = if rows >= cols {
        m.to_vec()
    } else {
        (0..cols)
            .map(|i| (0..rows).map(|j| m[j][i].conj()).collect())
            .collect()
    };
    let (nr, nc) = (a.len(), a[0].len());

    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..nc {
            for q in (p + 1)..nc {
                let mut g = C64::new(0.0, 0.0);
                let mut npp = 0.0;
                let mut nqq = 0.0;
                for row in a.iter() {
                    g += row[p].conj() * row[q];
                    npp += row[p].norm_sqr();
                    nqq += row[q].norm_sqr();
                }
                let r = g.norm();
                if r <= 1e-30 || r * r <= 1e-30 * npp * nqq {
                    continue;
                }
                rotated = true;
                let phi = g.im.atan2(g.re);
                let t = if npp == nqq {
                    1.0
                } else {
                    let tau = (nqq - npp) / (2.0 * r);
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let e_minus = C64::new(0.0, -phi).exp();
                for row in a.iter_mut() {
                    let up = row[p];
                    let vq = row[q];
                    row[p] = up * c - vq * s * e_minus;
                    row[q] = up * s + vq * c * e_minus;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut vals: Vec<f64> = (0..nc)
        .map(|j| a.iter().map(|row| row[j].norm_sqr()).sum::<f64>().sqrt())
        .collect();
    vals.sort_by(|x, y| y.total_cmp(x));
    debug_assert_eq!(nr.min(nc), nc);
    vals
}

/// Trace norm as the sum of one-sided-Jacobi singular values.
pub fn trace_norm_oracle(m: &ComplexMatrix) -> f64 {
    jacobi_singular_values(&to_rows(m)).iter().sum()
}

/// Trace norm of a Hermitian matrix as the sum of |Jacobi eigenvalues|.
pub fn hermitian_trace_norm_oracle(m: &ComplexMatrix) -> f64 {
    jacobi_hermitian_eigenvalues(&to_rows(m))
        .iter()
        .map(|v| v.abs())
        .sum()
}

/// CCNR of a bipartite dA x dB state by direct summation: marginals,
/// product subtraction and realignment are all written out index by index,
/// and the trace norm goes through the Gram-Jacobi route.
pub fn ccnr_direct_oracle(rho: &ComplexMatrix, da: usize, db: usize) -> f64 {
    assert_eq!(rho.rows(), da * db);
    let zero = C64::new(0.0, 0.0);

    // Marginals by direct partial summation.
    let mut rho_a = vec![vec![zero; da]; da];
    for i in 0..da {
        for k in 0..da {
            for j in 0..db {
                rho_a[i][k] += rho.get(i * db + j, k * db + j);
            }
        }
    }
    let mut rho_b = vec![vec![zero; db]; db];
    for j in 0..db {
        for l in 0..db {
            for i in 0..da {
                rho_b[j][l] += rho.get(i * db + j, i * db + l);
            }
        }
    }

    // Realignment of rho - rho_A (x) rho_B, entry by entry.
    let mut realigned = vec![vec![zero; db * db]; da * da];
    for i in 0..da {
        for k in 0..da {
            for j in 0..db {
                for l in 0..db {
                    let delta = rho.get(i * db + j, k * db + l) - rho_a[i][k] * rho_b[j][l];
                    realigned[i * da + k][j * db + l] = delta;
                }
            }
        }
    }
    let tn: f64 = jacobi_singular_values(&realigned).iter().sum();

    let purity = |m: &[Vec<C64>]| -> f64 {
        let n = m.len();
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += (m[i][j] * m[j][i]).re;
            }
        }
        acc
    };
    let imp_a = (1.0 - purity(&rho_a)).max(0.0);
    let imp_b = (1.0 - purity(&rho_b)).max(0.0);
    tn - (imp_a * imp_b).sqrt()
}

/// Deterministic pseudo-random Hermitian matrix for oracle cross-checks.
pub fn pseudo_random_hermitian(n: usize, seed: u64) -> ComplexMatrix {
    let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };
    let m = ComplexMatrix::from_fn(n, n, |_, _| C64::new(next(), next()));
    (&m + &m.adjoint()).scale_re(0.5)
}
