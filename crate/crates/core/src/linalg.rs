// Copyright 2026 The ctau Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Dense complex linear algebra for small and medium matrices.
//!
//! Composite indices follow one convention throughout the crate: for
//! subsystem dimensions `d_1, ..., d_k` the basis label `(i_1, ..., i_k)`
//! maps to the flat index `((i_1 * d_2 + i_2) * d_3 + ...)`, so subsystem 1
//! is the most significant digit. Matrices are stored row-major.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest side length any constructed matrix may have.
pub const SIDE_CAP: usize = 4096;

/// Maximum `|M - M^dagger|` entry accepted as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-9;

/// Eigenvalues in `[-CLAMP_TOL, 0)` are treated as round-off and clamped to zero.
pub const CLAMP_TOL: f64 = 1e-10;

const JACOBI_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

pub type C64 = Complex64;

#[inline]
pub(crate) fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Dense row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                let z = self[(r, c)];
                write!(f, "{:+.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![C64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from row-major entries, rejecting wrong lengths and non-finite values.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::invalid(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::invalid("matrix contains non-finite entries"));
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &x) in diag.iter().enumerate() {
            m[(i, i)] = C64::new(x, 0.0);
        }
        m
    }

    /// Outer product `|u><v|`.
    pub fn outer(u: &[C64], v: &[C64]) -> Self {
        let mut m = Self::zeros(u.len(), v.len());
        for (r, a) in u.iter().enumerate() {
            for (c, b) in v.iter().enumerate() {
                m.data[r * v.len() + c] = a * b.conj();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<C64> {
        self.data
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.data[r * self.cols + c].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let out_row = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let b_row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.cols, v.len(), "apply shape mismatch");
        (0..self.rows)
            .map(|r| {
                self.data[r * self.cols..(r + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn add(&self, other: &ComplexMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ComplexMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `M - M^dagger`; infinite for non-square input.
    pub fn hermiticity_error(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows;
        let mut worst = 0.0f64;
        for r in 0..n {
            for c in r..n {
                worst = worst.max((self.data[r * n + c] - self.data[c * n + r].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_error() <= tol
    }

    /// `(M + M^dagger) / 2`.
    pub fn hermitian_part(&self) -> Self {
        self.add(&self.adjoint()).scale(0.5)
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

/// Ordered subsystem dimensions of a composite Hilbert space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimsSpec {
    factors: Vec<usize>,
}

impl DimsSpec {
    pub fn new(factors: Vec<usize>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::invalid("dims must contain at least one factor"));
        }
        if let Some(&d) = factors.iter().find(|&&d| d < 2) {
            return Err(Error::invalid(format!("subsystem dimension {d} < 2")));
        }
        let mut total: usize = 1;
        for &d in &factors {
            total = total
                .checked_mul(d)
                .filter(|&t| t <= SIDE_CAP)
                .ok_or(Error::SizeLimit {
                    side: usize::MAX,
                    cap: SIDE_CAP,
                })?;
        }
        Ok(DimsSpec { factors })
    }

    pub fn bipartite(d1: usize, d2: usize) -> Result<Self> {
        Self::new(vec![d1, d2])
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product of all factors.
    pub fn total(&self) -> usize {
        self.factors.iter().product()
    }

    /// Product of the factors at `idx`.
    pub fn product_of(&self, idx: &[usize]) -> usize {
        idx.iter().map(|&i| self.factors[i]).product()
    }

    /// Fails unless the factors multiply to `side`.
    pub fn check_side(&self, side: usize) -> Result<()> {
        if self.total() != side {
            return Err(Error::invalid(format!(
                "dims {:?} multiply to {}, expected side length {side}",
                self.factors,
                self.total()
            )));
        }
        Ok(())
    }

    /// Dims after merging consecutive runs of subsystems given by `group_sizes`.
    pub fn grouped(&self, group_sizes: &[usize]) -> Result<Self> {
        if group_sizes.iter().sum::<usize>() != self.len() || group_sizes.contains(&0) {
            return Err(Error::invalid(format!(
                "group sizes {group_sizes:?} do not cover {} subsystems",
                self.len()
            )));
        }
        let mut out = Vec::with_capacity(group_sizes.len());
        let mut at = 0;
        for &g in group_sizes {
            out.push(self.factors[at..at + g].iter().product());
            at += g;
        }
        Self::new(out)
    }

    /// Strides of each subsystem digit in the flat index.
    pub fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.len()];
        for s in (0..self.len().saturating_sub(1)).rev() {
            strides[s] = strides[s + 1] * self.factors[s + 1];
        }
        strides
    }

    /// Splits a flat index into per-subsystem digits.
    pub fn digits(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.len()];
        for s in (0..self.len()).rev() {
            out[s] = flat % self.factors[s];
            flat /= self.factors[s];
        }
        out
    }

    /// Joins per-subsystem digits into a flat index.
    pub fn flat(&self, digits: &[usize]) -> usize {
        digits
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&i, &d)| acc * d + i)
    }
}

/// Eigen-decomposition of a Hermitian matrix: ascending eigenvalues and the
/// unitary whose columns are the matching eigenvectors.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    /// Rebuilds `V diag(f(lambda)) V^dagger`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.values.len();
        let mut scaled = self.vectors.clone();
        for c in 0..n {
            let w = f(self.values[c]);
            for r in 0..n {
                scaled[(r, c)] *= w;
            }
        }
        scaled.matmul(&self.vectors.adjoint())
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.reconstruct_with(|x| x)
    }

    /// Eigenvector `c` as a column.
    pub fn vector(&self, c: usize) -> Vec<C64> {
        (0..self.vectors.rows())
            .map(|r| self.vectors[(r, c)])
            .collect()
    }
}

/// Cyclic Jacobi eigensolver for complex Hermitian matrices.
pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<HermitianEigen> {
    if !m.is_square() {
        return Err(Error::invalid(format!(
            "eigensolver needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let herm_err = m.hermiticity_error();
    if herm_err > HERMITIAN_TOL {
        return Err(Error::invalid(format!(
            "matrix is not Hermitian (max |M - M^dagger| = {herm_err:e})"
        )));
    }
    let n = m.rows();
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();

    let mut converged = scale == 0.0 || n < 2;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let off = off_diagonal_norm(&a);
        if off <= JACOBI_TOL * scale {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                jacobi_rotate(&mut a, &mut v, p, q, scale);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) <= JACOBI_TOL * scale {
        converged = true;
    }
    if !converged {
        return Err(Error::Numerical(format!(
            "Jacobi eigensolver did not converge in {MAX_SWEEPS} sweeps (n = {n})"
        )));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(x, x)].re.total_cmp(&a[(y, y)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (new_c, &old_c) in order.iter().enumerate() {
        for r in 0..n {
            vectors[(r, new_c)] = v[(r, old_c)];
        }
    }
    Ok(HermitianEigen { values, vectors })
}

/// Ascending eigenvalues of a Hermitian matrix.
pub fn eigvalsh(m: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(hermitian_eigen(m)?.values)
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                s += a[(r, c)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize, scale: f64) {
    let n = a.rows();
    let apq = a[(p, q)];
    let g = apq.norm();
    if g <= 1e-300 || g <= 1e-18 * scale {
        a[(p, q)] = C64::new(0.0, 0.0);
        a[(q, p)] = C64::new(0.0, 0.0);
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let phase = (apq / g).conj();
    let theta = (aqq - app) / (2.0 * g);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    // G restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
    let gpp = C64::new(c, 0.0);
    let gpq = C64::new(s, 0.0);
    let gqp = phase * (-s);
    let gqq = phase * c;

    for r in 0..n {
        let arp = a[(r, p)];
        let arq = a[(r, q)];
        a[(r, p)] = arp * gpp + arq * gqp;
        a[(r, q)] = arp * gpq + arq * gqq;
    }
    for col in 0..n {
        let apc = a[(p, col)];
        let aqc = a[(q, col)];
        a[(p, col)] = gpp.conj() * apc + gqp.conj() * aqc;
        a[(q, col)] = gpq.conj() * apc + gqq.conj() * aqc;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
    for r in 0..n {
        let vrp = v[(r, p)];
        let vrq = v[(r, q)];
        v[(r, p)] = vrp * gpp + vrq * gqp;
        v[(r, q)] = vrp * gpq + vrq * gqq;
    }
}

/// Clamps round-off negatives in `[-CLAMP_TOL, 0)` to zero; fails below that.
pub(crate) fn clamp_nonneg(x: f64) -> Result<f64> {
    if x >= 0.0 {
        Ok(x)
    } else if x >= -CLAMP_TOL {
        Ok(0.0)
    } else {
        Err(Error::NotPsd { min_eigenvalue: x })
    }
}

/// Principal square root of a Hermitian positive semidefinite matrix.
pub fn psd_sqrt(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eigen(m)?;
    for &x in &eig.values {
        clamp_nonneg(x)?;
    }
    Ok(eig.reconstruct_with(|x| x.max(0.0).sqrt()))
}

/// Kronecker product `A (x) B`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let rows = a.rows() * b.rows();
    let cols = a.cols() * b.cols();
    if rows.max(cols) > SIDE_CAP {
        return Err(Error::SizeLimit {
            side: rows.max(cols),
            cap: SIDE_CAP,
        });
    }
    let mut out = ComplexMatrix::zeros(rows, cols);
    for ar in 0..a.rows() {
        for ac in 0..a.cols() {
            let x = a[(ar, ac)];
            if x.re == 0.0 && x.im == 0.0 {
                continue;
            }
            for br in 0..b.rows() {
                for bc in 0..b.cols() {
                    out[(ar * b.rows() + br, ac * b.cols() + bc)] = x * b[(br, bc)];
                }
            }
        }
    }
    Ok(out)
}

/// Kronecker product of two vectors.
pub fn kron_vec(u: &[C64], v: &[C64]) -> Vec<C64> {
    u.iter()
        .flat_map(|a| v.iter().map(move |b| a * b))
        .collect()
}

fn check_permutation(perm: &[usize], k: usize) -> Result<()> {
    if perm.len() != k {
        return Err(Error::invalid(format!(
            "permutation {perm:?} has length {}, expected {k}",
            perm.len()
        )));
    }
    let mut seen = vec![false; k];
    for &p in perm {
        if p >= k || seen[p] {
            return Err(Error::invalid(format!(
                "{perm:?} is not a permutation of 0..{k}"
            )));
        }
        seen[p] = true;
    }
    Ok(())
}

/// For each new flat index, the old flat index it reads from. New subsystem
/// `s` is old subsystem `perm[s]`.
fn permutation_index_map(dims: &DimsSpec, perm: &[usize]) -> Result<(DimsSpec, Vec<usize>)> {
    check_permutation(perm, dims.len())?;
    let new_dims = DimsSpec::new(perm.iter().map(|&p| dims.factors()[p]).collect())?;
    let old_strides = dims.strides();
    let map = (0..dims.total())
        .map(|x| {
            new_dims
                .digits(x)
                .iter()
                .zip(perm)
                .map(|(&digit, &old)| digit * old_strides[old])
                .sum()
        })
        .collect();
    Ok((new_dims, map))
}

/// Reorders subsystems so that new subsystem `s` is old subsystem `perm[s]`.
/// Returns the permuted matrix together with its dims.
pub fn permute_subsystems(
    m: &ComplexMatrix,
    dims: &DimsSpec,
    perm: &[usize],
) -> Result<(ComplexMatrix, DimsSpec)> {
    dims.check_side(m.rows())?;
    dims.check_side(m.cols())?;
    let (new_dims, map) = permutation_index_map(dims, perm)?;
    let n = map.len();
    let mut out = ComplexMatrix::zeros(n, n);
    for (x, &ox) in map.iter().enumerate() {
        for (y, &oy) in map.iter().enumerate() {
            out[(x, y)] = m[(ox, oy)];
        }
    }
    Ok((out, new_dims))
}

/// Vector analogue of [`permute_subsystems`].
pub fn permute_vector(v: &[C64], dims: &DimsSpec, perm: &[usize]) -> Result<(Vec<C64>, DimsSpec)> {
    dims.check_side(v.len())?;
    let (new_dims, map) = permutation_index_map(dims, perm)?;
    Ok((map.iter().map(|&o| v[o]).collect(), new_dims))
}

fn check_subset(idx: &[usize], k: usize, what: &str) -> Result<()> {
    let mut seen = vec![false; k];
    for &i in idx {
        if i >= k {
            return Err(Error::invalid(format!(
                "{what}: subsystem {i} out of range 0..{k}"
            )));
        }
        if seen[i] {
            return Err(Error::invalid(format!("{what}: subsystem {i} repeated")));
        }
        seen[i] = true;
    }
    Ok(())
}

/// Traces out every subsystem not in `keep`. Kept subsystems retain their
/// original relative order; the returned dims describe the result.
pub fn partial_trace(
    m: &ComplexMatrix,
    dims: &DimsSpec,
    keep: &[usize],
) -> Result<(ComplexMatrix, DimsSpec)> {
    if keep.is_empty() {
        return Err(Error::invalid("partial trace needs a nonempty keep set"));
    }
    check_subset(keep, dims.len(), "partial trace")?;
    dims.check_side(m.rows())?;
    dims.check_side(m.cols())?;
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    let traced: Vec<usize> = (0..dims.len()).filter(|i| !kept.contains(i)).collect();
    let perm: Vec<usize> = kept.iter().chain(&traced).copied().collect();
    let (pm, _) = permute_subsystems(m, dims, &perm)?;
    let keep_side = dims.product_of(&kept);
    let trace_side = dims.product_of(&traced);
    let mut out = ComplexMatrix::zeros(keep_side, keep_side);
    for a in 0..keep_side {
        for b in 0..keep_side {
            let mut s = C64::new(0.0, 0.0);
            for t in 0..trace_side {
                s += pm[(a * trace_side + t, b * trace_side + t)];
            }
            out[(a, b)] = s;
        }
    }
    let out_dims = DimsSpec::new(kept.iter().map(|&i| dims.factors()[i]).collect())?;
    Ok((out, out_dims))
}

/// Transposes the indices of one subsystem.
pub fn partial_transpose(
    m: &ComplexMatrix,
    dims: &DimsSpec,
    subsystem: usize,
) -> Result<ComplexMatrix> {
    if subsystem >= dims.len() {
        return Err(Error::invalid(format!(
            "partial transpose: subsystem {subsystem} out of range 0..{}",
            dims.len()
        )));
    }
    dims.check_side(m.rows())?;
    dims.check_side(m.cols())?;
    let stride = dims.strides()[subsystem];
    let d = dims.factors()[subsystem];
    let n = m.rows();
    let mut out = ComplexMatrix::zeros(n, n);
    for r in 0..n {
        let dr = (r / stride) % d;
        for c in 0..n {
            let dc = (c / stride) % d;
            let src_r = r - dr * stride + dc * stride;
            let src_c = c - dc * stride + dr * stride;
            out[(r, c)] = m[(src_r, src_c)];
        }
    }
    Ok(out)
}

/// Realigned matrix `R(M)_{(i k),(j l)} = M_{(i j),(k l)}` for a bipartite `d1 x d2` split.
pub fn realign(m: &ComplexMatrix, dims: &DimsSpec) -> Result<ComplexMatrix> {
    if dims.len() != 2 {
        return Err(Error::invalid("realignment needs bipartite dims"));
    }
    dims.check_side(m.rows())?;
    dims.check_side(m.cols())?;
    let (d1, d2) = (dims.factors()[0], dims.factors()[1]);
    let mut out = ComplexMatrix::zeros(d1 * d1, d2 * d2);
    for i in 0..d1 {
        for j in 0..d2 {
            for k in 0..d1 {
                for l in 0..d2 {
                    out[(i * d1 + k, j * d2 + l)] = m[(i * d2 + j, k * d2 + l)];
                }
            }
        }
    }
    Ok(out)
}

/// Singular values in non-increasing order, by one-sided (Hestenes) Jacobi.
///
/// Small singular values carry absolute error of order `eps * sigma_max`,
/// unlike the square-root-of-eigenvalue route through `M^dagger M`.
pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let work = if m.rows() >= m.cols() {
        m.clone()
    } else {
        m.adjoint()
    };
    let (rows, cols) = (work.rows(), work.cols());
    let mut columns: Vec<Vec<C64>> = (0..cols)
        .map(|c| (0..rows).map(|r| work[(r, c)]).collect())
        .collect();
    let tol = f64::EPSILON * rows.max(1) as f64;

    let mut converged = cols < 2;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut rotated = false;
        for p in 0..cols {
            for q in p + 1..cols {
                let alpha: f64 = columns[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = columns[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma: C64 = columns[p]
                    .iter()
                    .zip(&columns[q])
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                let g = gamma.norm();
                if g == 0.0 || g <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = (gamma / g).conj();
                let zeta = (beta - alpha) / (2.0 * g);
                let t = if zeta.abs() > 1e150 {
                    0.5 / zeta
                } else {
                    let sign = if zeta >= 0.0 { 1.0 } else { -1.0 };
                    sign / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (left, right) = columns.split_at_mut(q);
                for (x, y) in left[p].iter_mut().zip(right[0].iter_mut()) {
                    let yq = *y * phase;
                    let xp = *x;
                    *x = xp * c - yq * s;
                    *y = xp * s + yq * c;
                }
            }
        }
        if !rotated {
            converged = true;
        }
    }
    if !converged {
        return Err(Error::Numerical(format!(
            "one-sided Jacobi SVD did not converge in {MAX_SWEEPS} sweeps"
        )));
    }
    let mut sv: Vec<f64> = columns
        .iter()
        .map(|col| col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    Ok(sv)
}

/// Sum of singular values.
pub fn trace_norm(m: &ComplexMatrix) -> Result<f64> {
    Ok(singular_values(m)?.iter().sum())
}

/// Trace norm of a Hermitian matrix as the sum of absolute eigenvalues.
pub fn hermitian_trace_norm(m: &ComplexMatrix) -> Result<f64> {
    Ok(eigvalsh(m)?.iter().map(|x| x.abs()).sum())
}

/// Trace norm of the realigned matrix.
pub fn realign_trace_norm(m: &ComplexMatrix, dims: &DimsSpec) -> Result<f64> {
    trace_norm(&realign(m, dims)?)
}
