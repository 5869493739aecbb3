//! Tensor-product structure on top of flat matrices.
//!
//! A state on qutrits A, B, C lives in the space A (x) B (x) C with the
//! factor order fixed globally: factor 0 = A, factor 1 = B, factor 2 = C.
//! Flat indices are row-major over the factor components, so for dims
//! `[dA, dB]` the basis ket |i, j> sits at flat index `i * dB + j`.

use crate::error::{Error, Result};
use crate::matrix::{C64, ComplexMatrix};

/// Ordered list of tensor-factor dimensions annotating a square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorDims {
    dims: Vec<usize>,
}

impl TensorDims {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::config("tensor dims must not be empty"));
        }
        if dims.contains(&0) {
            return Err(Error::config("tensor factor dimensions must be positive"));
        }
        Ok(Self { dims })
    }

    /// `n` qutrit factors.
    pub fn qutrits(n: usize) -> Self {
        Self::new(vec![3; n]).expect("positive factor count")
    }

    pub fn factors(&self) -> &[usize] {
        &self.dims
    }

    pub fn factor_count(&self) -> usize {
        self.dims.len()
    }

    /// Product of all factor dimensions: the flat matrix dimension.
    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    /// Row-major strides: flat = sum_k component_k * stride_k.
    fn strides(&self) -> Vec<usize> {
        let n = self.dims.len();
        let mut s = vec![1usize; n];
        for k in (0..n.saturating_sub(1)).rev() {
            s[k] = s[k + 1] * self.dims[k + 1];
        }
        s
    }

    fn decompose(&self, mut flat: usize, out: &mut [usize]) {
        for k in (0..self.dims.len()).rev() {
            out[k] = flat % self.dims[k];
            flat /= self.dims[k];
        }
    }

    fn check_matches(&self, m: &ComplexMatrix) -> Result<()> {
        if !m.is_square() {
            return Err(Error::config(format!(
                "expected square matrix, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        if m.rows() != self.total() {
            return Err(Error::config(format!(
                "matrix dimension {} does not match tensor dims {:?} (product {})",
                m.rows(),
                self.dims,
                self.total()
            )));
        }
        Ok(())
    }
}

/// Square complex matrix with its tensor-factor dimension list attached.
///
/// The central state object: constructed by the state builders, evolved by
/// `dynamics`, consumed by `measures`.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    dims: TensorDims,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix, dims: TensorDims) -> Result<Self> {
        dims.check_matches(&matrix)?;
        if !matrix.all_finite() {
            return Err(Error::precondition("matrix contains non-finite entries"));
        }
        Ok(Self { matrix, dims })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dims(&self) -> &TensorDims {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn trace(&self) -> C64 {
        self.matrix.trace()
    }

    /// Re tr(rho^2).
    pub fn purity(&self) -> f64 {
        self.matrix.trace_of_square_re()
    }

    /// Trace out every factor not listed in `keep`.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let reduced = partial_trace(&self.matrix, &self.dims, keep)?;
        let kept_dims: Vec<usize> = keep.iter().map(|&k| self.dims.factors()[k]).collect();
        DensityMatrix::new(reduced, TensorDims::new(kept_dims)?)
    }

    /// Transpose the indices of one factor.
    pub fn partial_transpose(&self, sub: usize) -> Result<ComplexMatrix> {
        partial_transpose(&self.matrix, &self.dims, sub)
    }

    /// Reorder tensor factors; `perm[k]` is the current factor placed at
    /// position `k` of the result.
    pub fn permute_factors(&self, perm: &[usize]) -> Result<DensityMatrix> {
        let (m, d) = permute_factors(&self.matrix, &self.dims, perm)?;
        DensityMatrix::new(m, d)
    }

    /// Reinterpret the factor list as a coarser grouping with the same
    /// total dimension (e.g. [3, 3, 3] viewed as the bipartition [3, 9]).
    pub fn regroup(&self, dims: TensorDims) -> Result<DensityMatrix> {
        if dims.total() != self.dim() {
            return Err(Error::config(format!(
                "regroup dims {:?} do not multiply to {}",
                dims.factors(),
                self.dim()
            )));
        }
        DensityMatrix::new(self.matrix.clone(), dims)
    }
}

/// Kronecker product: `(kron(a, b))[(i*rb + k), (j*cb + l)] = a[i,j] * b[k,l]`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (ra, ca) = (a.rows(), a.cols());
    let (rb, cb) = (b.rows(), b.cols());
    let mut out = ComplexMatrix::zeros(ra * rb, ca * cb);
    for i in 0..ra {
        for j in 0..ca {
            let aij = a.get(i, j);
            if aij == C64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    out.set(i * rb + k, j * cb + l, aij * b.get(k, l));
                }
            }
        }
    }
    out
}

/// Reduce `rho` to the factors in `keep`, tracing out the rest.
///
/// `keep` must be non-empty, strictly increasing, and in range; the kept
/// factors retain their original order. The trace is preserved.
pub fn partial_trace(
    rho: &ComplexMatrix,
    dims: &TensorDims,
    keep: &[usize],
) -> Result<ComplexMatrix> {
    dims.check_matches(rho)?;
    let n = dims.factor_count();
    if keep.is_empty() {
        return Err(Error::config("partial trace must keep at least one factor"));
    }
    if keep.windows(2).any(|w| w[0] >= w[1]) || keep.iter().any(|&k| k >= n) {
        return Err(Error::config(format!(
            "invalid keep set {keep:?} for {n} factors (must be strictly increasing, in range)"
        )));
    }

    let strides = dims.strides();
    let traced: Vec<usize> = (0..n).filter(|k| !keep.contains(k)).collect();
    let kept_dims: Vec<usize> = keep.iter().map(|&k| dims.factors()[k]).collect();
    let traced_dims: Vec<usize> = traced.iter().map(|&k| dims.factors()[k]).collect();
    let d_out: usize = kept_dims.iter().product();
    let d_tr: usize = traced_dims.iter().product();

    // Flat offsets contributed by each kept / traced multi-index.
    let offsets = |positions: &[usize], local_dims: &[usize]| -> Vec<usize> {
        let count: usize = local_dims.iter().product();
        let mut offs = vec![0usize; count];
        for (flat, off) in offs.iter_mut().enumerate() {
            let mut rem = flat;
            let mut acc = 0usize;
            for k in (0..positions.len()).rev() {
                let c = rem % local_dims[k];
                rem /= local_dims[k];
                acc += c * strides[positions[k]];
            }
            *off = acc;
        }
        offs
    };
    let kept_offsets = offsets(keep, &kept_dims);
    let traced_offsets = offsets(&traced, &traced_dims);

    let mut out = ComplexMatrix::zeros(d_out, d_out);
    for (ri, &roff) in kept_offsets.iter().enumerate() {
        for (ci, &coff) in kept_offsets.iter().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for &toff in traced_offsets.iter().take(d_tr) {
                acc += rho.get(roff + toff, coff + toff);
            }
            out.set(ri, ci, acc);
        }
    }
    Ok(out)
}

/// Transpose the indices of factor `sub` only. Applying it twice returns
/// the input.
pub fn partial_transpose(
    rho: &ComplexMatrix,
    dims: &TensorDims,
    sub: usize,
) -> Result<ComplexMatrix> {
    dims.check_matches(rho)?;
    let n = dims.factor_count();
    if n < 2 {
        return Err(Error::config(
            "partial transpose requires at least two tensor factors",
        ));
    }
    if sub >= n {
        return Err(Error::config(format!(
            "subsystem index {sub} out of range for {n} factors"
        )));
    }

    let d = dims.total();
    let mut rc = vec![0usize; n];
    let mut cc = vec![0usize; n];
    let strides = dims.strides();
    let mut out = ComplexMatrix::zeros(d, d);
    for r in 0..d {
        dims.decompose(r, &mut rc);
        for c in 0..d {
            dims.decompose(c, &mut cc);
            // Swap the `sub` component between the row and column indices.
            let r2 = r + cc[sub] * strides[sub] - rc[sub] * strides[sub];
            let c2 = c + rc[sub] * strides[sub] - cc[sub] * strides[sub];
            out.set(r2, c2, rho.get(r, c));
        }
    }
    Ok(out)
}

/// Realignment of a bipartite matrix: for dims `[dA, dB]` returns the
/// (dA^2) x (dB^2) matrix `R[(i*dA + k), (j*dB + l)] = rho[(i,j), (k,l)]`,
/// with `i, k` indexing factor A and `j, l` indexing factor B.
pub fn realign(rho: &ComplexMatrix, dims: &TensorDims) -> Result<ComplexMatrix> {
    dims.check_matches(rho)?;
    if dims.factor_count() != 2 {
        return Err(Error::config(format!(
            "realignment requires exactly two tensor factors, got {:?}",
            dims.factors()
        )));
    }
    let da = dims.factors()[0];
    let db = dims.factors()[1];
    let mut out = ComplexMatrix::zeros(da * da, db * db);
    for i in 0..da {
        for k in 0..da {
            for j in 0..db {
                for l in 0..db {
                    out.set(i * da + k, j * db + l, rho.get(i * db + j, k * db + l));
                }
            }
        }
    }
    Ok(out)
}

/// Reorder tensor factors. `perm[k]` names the input factor that becomes
/// output factor `k`; `perm` must be a permutation of `0..n`.
pub fn permute_factors(
    rho: &ComplexMatrix,
    dims: &TensorDims,
    perm: &[usize],
) -> Result<(ComplexMatrix, TensorDims)> {
    dims.check_matches(rho)?;
    let n = dims.factor_count();
    let mut seen = vec![false; n];
    if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::config(format!(
            "{perm:?} is not a permutation of 0..{n}"
        )));
    }

    let new_dims = TensorDims::new(perm.iter().map(|&p| dims.factors()[p]).collect())?;
    let new_strides = new_dims.strides();
    let d = dims.total();

    // Map an input flat index to the permuted flat index.
    let remap = |flat: usize, comps: &mut [usize]| -> usize {
        dims.decompose(flat, comps);
        perm.iter()
            .enumerate()
            .map(|(k, &p)| comps[p] * new_strides[k])
            .sum()
    };

    let mut comps = vec![0usize; n];
    let row_map: Vec<usize> = (0..d).map(|r| remap(r, &mut comps)).collect();

    let mut out = ComplexMatrix::zeros(d, d);
    for r in 0..d {
        for c in 0..d {
            out.set(row_map[r], row_map[c], rho.get(r, c));
        }
    }
    Ok((out, new_dims))
}
