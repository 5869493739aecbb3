//! Dense complex matrices.
//!
//! `ComplexMatrix` is the single matrix type used throughout the crate:
//! density matrices, Hamiltonians, evolution operators and realigned
//! matrices are all instances of it. Entries are addressed `(row, col)`;
//! the backing storage layout is an implementation detail.

use std::ops::{Add, Index, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex;

/// Double-precision complex scalar.
pub type C64 = Complex<f64>;

/// Dense complex matrix of arbitrary (rows, cols) shape.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    data: DMatrix<C64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            data: DMatrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "matrix dimensions must be positive");
        Self {
            data: DMatrix::identity(n, n),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> C64) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            data: DMatrix::from_fn(rows, cols, f),
        }
    }

    /// Build from explicit rows. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<C64>]) -> Self {
        let r = rows.len();
        assert!(r > 0, "matrix dimensions must be positive");
        let c = rows[0].len();
        assert!(
            rows.iter().all(|row| row.len() == c),
            "all rows must have equal length"
        );
        Self::from_fn(r, c, |i, j| rows[i][j])
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                C64::new(diag[i], 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        })
    }

    /// Projector |v><v| onto a (not necessarily normalized) vector.
    pub fn outer(v: &[C64]) -> Self {
        let n = v.len();
        Self::from_fn(n, n, |i, j| v[i] * v[j].conj())
    }

    pub fn rows(&self) -> usize {
        self.data.nrows()
    }

    pub fn cols(&self) -> usize {
        self.data.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[(i, j)] = v;
    }

    pub fn trace(&self) -> C64 {
        debug_assert!(self.is_square());
        self.data.diagonal().sum()
    }

    pub fn adjoint(&self) -> Self {
        Self {
            data: self.data.adjoint(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            data: self.data.transpose(),
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            data: self.data.map(|z| z * s),
        }
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    /// Max entry-wise |a_ij - conj(a_ji)|; zero for exactly Hermitian input.
    pub fn hermiticity_defect(&self) -> f64 {
        debug_assert!(self.is_square());
        let n = self.rows();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Max entry-wise absolute difference against another matrix.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.rows(), other.rows());
        assert_eq!(self.cols(), other.cols());
        let mut worst = 0.0f64;
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                worst = worst.max((self.get(i, j) - other.get(i, j)).norm());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn all_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Re tr(m * m), computed without forming the product.
    pub fn trace_of_square_re(&self) -> f64 {
        debug_assert!(self.is_square());
        let n = self.rows();
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += (self.get(i, j) * self.get(j, i)).re;
            }
        }
        acc
    }

    pub(crate) fn as_na(&self) -> &DMatrix<C64> {
        &self.data
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, idx: (usize, usize)) -> &C64 {
        &self.data[idx]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            data: &self.data + &rhs.data,
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            data: &self.data - &rhs.data,
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            data: &self.data * &rhs.data,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn identity_trace_equals_dimension() {
        let i3 = ComplexMatrix::identity(3);
        assert_eq!(i3.trace(), c(3.0, 0.0));
    }

    #[test]
    fn adjoint_conjugates_and_transposes() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.0, 2.0), c(3.0, -1.0)],
            vec![c(0.0, 5.0), c(-2.0, 0.0)],
        ]);
        let a = m.adjoint();
        assert_eq!(a.get(0, 1), c(0.0, -5.0));
        assert_eq!(a.get(1, 0), c(3.0, 1.0));
    }

    #[test]
    fn hermiticity_defect_detects_asymmetry() {
        let h = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.0, 1.0)],
            vec![c(0.0, -1.0), c(2.0, 0.0)],
        ]);
        assert_eq!(h.hermiticity_defect(), 0.0);
        let mut broken = h.clone();
        broken.set(0, 1, c(0.0, 1.5));
        assert!(broken.hermiticity_defect() > 0.4);
    }

    #[test]
    fn outer_builds_projector() {
        let v = [c(1.0, 0.0), c(0.0, 1.0)];
        let p = ComplexMatrix::outer(&v);
        // |v><v| with v = (1, i): entry (0,1) = 1 * conj(i) = -i.
        assert_eq!(p.get(0, 1), c(0.0, -1.0));
        assert_eq!(p.get(1, 0), c(0.0, 1.0));
        assert_eq!(p.trace(), c(2.0, 0.0));
    }

    #[test]
    fn trace_of_square_matches_product() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.5), c(2.0, -1.0)],
            vec![c(0.5, 0.25), c(-1.0, 2.0)],
        ]);
        let prod = &m * &m;
        assert!((m.trace_of_square_re() - prod.trace().re).abs() < 1e-14);
    }
}
