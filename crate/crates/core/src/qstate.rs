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

//! Validated state containers and the state families used as benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::linalg::{c64, eigvalsh, permute_vector, ComplexMatrix, DimsSpec, C64};

/// Tolerance on Hermiticity, trace and negativity for density matrices.
pub const STATE_TOL: f64 = 1e-9;

/// Tolerance on the norm of pure states.
pub const NORM_TOL: f64 = 1e-12;

/// Seedable generator used for every random state: ChaCha with 8 rounds.
/// Independent streams are derived from `(seed, stream)` pairs.
pub type StateRng = ChaCha8Rng;

/// Generator for `seed` on stream `stream`.
pub fn rng_for(seed: u64, stream: u64) -> StateRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A density matrix annotated with its subsystem dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dims: DimsSpec,
    mat: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(dims: DimsSpec, mat: ComplexMatrix) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::invalid(format!(
                "density matrix must be square, got {}x{}",
                mat.rows(),
                mat.cols()
            )));
        }
        dims.check_side(mat.rows())?;
        if !mat.is_finite() {
            return Err(Error::NotAState("non-finite entries".into()));
        }
        let herm = mat.hermiticity_error();
        if herm > STATE_TOL {
            return Err(Error::NotAState(format!(
                "not Hermitian (max |rho - rho^dagger| = {herm:e})"
            )));
        }
        let trace = mat.trace();
        let min_eig = eigvalsh(&mat)?[0];
        if (trace.re - 1.0).abs() > STATE_TOL || trace.im.abs() > STATE_TOL {
            return Err(Error::NotAState(format!(
                "trace {} (min eigenvalue {min_eig:e})",
                trace.re
            )));
        }
        if min_eig < -STATE_TOL {
            return Err(Error::NotAState(format!(
                "negative eigenvalue {min_eig:e} (trace {})",
                trace.re
            )));
        }
        Ok(DensityMatrix { dims, mat })
    }

    /// Wraps a matrix known to be a state by construction (reductions, products
    /// and permutations of validated states).
    pub(crate) fn from_trusted(dims: DimsSpec, mat: ComplexMatrix) -> Self {
        debug_assert_eq!(dims.total(), mat.rows());
        DensityMatrix { dims, mat }
    }

    pub fn dims(&self) -> &DimsSpec {
        &self.dims
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn side(&self) -> usize {
        self.mat.rows()
    }

    /// Fails unless the state has exactly two subsystems.
    pub fn bipartite_dims(&self) -> Result<(usize, usize)> {
        match self.dims.factors() {
            &[d1, d2] => Ok((d1, d2)),
            other => Err(Error::invalid(format!(
                "expected bipartite dims, got {other:?}"
            ))),
        }
    }

    /// The same matrix viewed with consecutive subsystems merged.
    pub fn regrouped(&self, group_sizes: &[usize]) -> Result<Self> {
        Ok(DensityMatrix {
            dims: self.dims.grouped(group_sizes)?,
            mat: self.mat.clone(),
        })
    }

    pub fn purity(&self) -> f64 {
        let m = &self.mat;
        let n = m.rows();
        let mut s = 0.0;
        for r in 0..n {
            for c in 0..n {
                s += m[(r, c)].norm_sqr();
            }
        }
        s
    }

    /// Reduction onto `keep` (original order retained).
    pub fn reduce(&self, keep: &[usize]) -> Result<Self> {
        let (m, d) = crate::linalg::partial_trace(&self.mat, &self.dims, keep)?;
        Ok(DensityMatrix::from_trusted(d, m))
    }
}

/// A normalized state vector annotated with its subsystem dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    dims: DimsSpec,
    amps: Vec<C64>,
}

impl PureState {
    /// Requires the norm to be within [`NORM_TOL`] of one.
    pub fn new(dims: DimsSpec, amps: Vec<C64>) -> Result<Self> {
        dims.check_side(amps.len())?;
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NotAState("non-finite amplitudes".into()));
        }
        let norm = norm(&amps);
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotAState(format!("norm {norm} is not 1")));
        }
        Ok(PureState { dims, amps })
    }

    /// Scales `amps` to unit norm; rejects the zero vector.
    pub fn normalized(dims: DimsSpec, mut amps: Vec<C64>) -> Result<Self> {
        dims.check_side(amps.len())?;
        let n = norm(&amps);
        if !n.is_finite() || n == 0.0 {
            return Err(Error::invalid(
                "cannot normalize a zero or non-finite vector",
            ));
        }
        for a in &mut amps {
            *a /= n;
        }
        Self::new(dims, amps)
    }

    pub fn dims(&self) -> &DimsSpec {
        &self.dims
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    /// The same vector viewed with consecutive subsystems merged.
    pub fn regrouped(&self, group_sizes: &[usize]) -> Result<Self> {
        Ok(PureState {
            dims: self.dims.grouped(group_sizes)?,
            amps: self.amps.clone(),
        })
    }

    /// Reorders subsystems: new subsystem `s` is old subsystem `perm[s]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let (amps, dims) = permute_vector(&self.amps, &self.dims, perm)?;
        Ok(PureState { dims, amps })
    }

    pub fn projector(&self) -> DensityMatrix {
        DensityMatrix::from_trusted(
            self.dims.clone(),
            ComplexMatrix::outer(&self.amps, &self.amps),
        )
    }

    /// Reduced state on `keep`, computed from the amplitudes without forming
    /// the full projector. Kept subsystems appear in ascending order.
    pub fn reduce(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let k = self.dims.len();
        if keep.is_empty() {
            return Err(Error::invalid("reduction needs a nonempty keep set"));
        }
        let mut kept = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        if kept.len() != keep.len() || kept.iter().any(|&i| i >= k) {
            return Err(Error::invalid(format!(
                "invalid keep set {keep:?} for {k} subsystems"
            )));
        }
        let traced: Vec<usize> = (0..k).filter(|i| !kept.contains(i)).collect();
        let perm: Vec<usize> = kept.iter().chain(&traced).copied().collect();
        let (amps, _) = permute_vector(&self.amps, &self.dims, &perm)?;
        let a = self.dims.product_of(&kept);
        let t = self.dims.product_of(&traced);
        let mut out = ComplexMatrix::zeros(a, a);
        for r in 0..a {
            for c in r..a {
                let s: C64 = (0..t)
                    .map(|x| amps[r * t + x] * amps[c * t + x].conj())
                    .sum();
                out[(r, c)] = s;
                out[(c, r)] = s.conj();
            }
        }
        let dims = DimsSpec::new(kept.iter().map(|&i| self.dims.factors()[i]).collect())?;
        Ok(DensityMatrix::from_trusted(dims, out))
    }
}

fn norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `(1/sqrt(d)) sum_i |ii>` as a flat amplitude vector.
pub fn max_entangled(d: usize) -> Vec<C64> {
    let mut v = vec![c64(0.0, 0.0); d * d];
    let a = 1.0 / (d as f64).sqrt();
    for i in 0..d {
        v[i * d + i] = c64(a, 0.0);
    }
    v
}

/// Horodecki's 3x3 family `sigma_alpha`, `2 <= alpha <= 5`.
pub fn make_horodecki_sigma(alpha: f64) -> Result<DensityMatrix> {
    if !(2.0..=5.0).contains(&alpha) {
        return Err(Error::invalid(format!("alpha = {alpha} outside [2, 5]")));
    }
    let psi = max_entangled(3);
    let mut m = ComplexMatrix::outer(&psi, &psi).scale(2.0 / 7.0);
    let plus = alpha / 21.0;
    let minus = (5.0 - alpha) / 21.0;
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        m[(i * 3 + j, i * 3 + j)] += plus;
    }
    for (i, j) in [(1, 0), (2, 1), (0, 2)] {
        m[(i * 3 + j, i * 3 + j)] += minus;
    }
    DensityMatrix::new(DimsSpec::bipartite(3, 3)?, m)
}

/// Isotropic state in `d x d` with singlet fraction `fidelity`.
pub fn make_isotropic(d: usize, fidelity: f64) -> Result<DensityMatrix> {
    if d < 2 {
        return Err(Error::invalid(format!("isotropic dimension {d} < 2")));
    }
    if !(0.0..=1.0).contains(&fidelity) {
        return Err(Error::invalid(format!(
            "fidelity {fidelity} outside [0, 1]"
        )));
    }
    let n = d * d;
    let phi = max_entangled(d);
    let proj = ComplexMatrix::outer(&phi, &phi);
    let w = (1.0 - fidelity) / (n as f64 - 1.0);
    let m = ComplexMatrix::identity(n)
        .sub(&proj)
        .scale(w)
        .add(&proj.scale(fidelity));
    DensityMatrix::new(DimsSpec::bipartite(d, d)?, m)
}

/// The swap operator on `d x d`.
pub fn swap_operator(d: usize) -> ComplexMatrix {
    let mut h = ComplexMatrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            h[(j * d + i, i * d + j)] = c64(1.0, 0.0);
        }
    }
    h
}

/// Werner state in 3x3: `(lam I - (lam + 1) H / 3) / (8 lam - 1)` with `H` the swap.
///
/// Only `lam >= 1/2` yields a positive matrix; other values are rejected
/// with the offending eigenvalue.
pub fn make_werner3(lam: f64) -> Result<DensityMatrix> {
    let denom = 8.0 * lam - 1.0;
    if !lam.is_finite() || denom == 0.0 {
        return Err(Error::invalid(format!(
            "werner parameter {lam} is singular"
        )));
    }
    let m = ComplexMatrix::identity(9)
        .scale(lam)
        .sub(&swap_operator(3).scale((lam + 1.0) / 3.0))
        .scale(1.0 / denom);
    let min_eig = eigvalsh(&m)?[0];
    if min_eig < -STATE_TOL {
        return Err(Error::NotAState(format!(
            "werner lambda = {lam} gives negative eigenvalue {min_eig:e}"
        )));
    }
    DensityMatrix::new(DimsSpec::bipartite(3, 3)?, m)
}

/// Totally antisymmetric three-qutrit state.
pub fn make_aharonov() -> PureState {
    let a = 1.0 / 6f64.sqrt();
    let mut amps = vec![c64(0.0, 0.0); 27];
    let terms: [([usize; 3], f64); 6] = [
        ([0, 1, 2], a),
        ([1, 2, 0], a),
        ([2, 0, 1], a),
        ([0, 2, 1], -a),
        ([1, 0, 2], -a),
        ([2, 1, 0], -a),
    ];
    for ([i, j, k], s) in terms {
        amps[i * 9 + j * 3 + k] = c64(s, 0.0);
    }
    PureState::new(DimsSpec::new(vec![3, 3, 3]).expect("static dims"), amps)
        .expect("aharonov state is normalized")
}

/// Five-qubit W-type state `c0|10000> + c1|01000> + ... + c4|00001>`.
pub fn make_generalized_w(coeffs: [C64; 5], normalize: bool) -> Result<PureState> {
    let mut amps = vec![c64(0.0, 0.0); 32];
    for (q, &c) in coeffs.iter().enumerate() {
        amps[1 << (4 - q)] = c;
    }
    let dims = DimsSpec::new(vec![2; 5])?;
    if normalize {
        PureState::normalized(dims, amps)
    } else {
        if coeffs.iter().all(|c| c.norm() == 0.0) {
            return Err(Error::invalid("all W coefficients are zero"));
        }
        PureState::new(dims, amps)
    }
}

/// Three-qubit GHZ state `(|000> + |111>)/sqrt 2`.
pub fn make_ghz3() -> PureState {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut amps = vec![c64(0.0, 0.0); 8];
    amps[0] = c64(s, 0.0);
    amps[7] = c64(s, 0.0);
    PureState::new(DimsSpec::new(vec![2, 2, 2]).expect("static dims"), amps).expect("normalized")
}

/// Three-qubit W state `(|100> + |010> + |001>)/sqrt 3`.
pub fn make_w3() -> PureState {
    let a = 1.0 / 3f64.sqrt();
    let mut amps = vec![c64(0.0, 0.0); 8];
    for idx in [4, 2, 1] {
        amps[idx] = c64(a, 0.0);
    }
    PureState::new(DimsSpec::new(vec![2, 2, 2]).expect("static dims"), amps).expect("normalized")
}

/// Product of computational basis states `|i_1 i_2 ... i_k>`.
pub fn basis_state(dims: DimsSpec, digits: &[usize]) -> Result<PureState> {
    if digits.len() != dims.len() || digits.iter().zip(dims.factors()).any(|(&i, &d)| i >= d) {
        return Err(Error::invalid(format!(
            "basis label {digits:?} invalid for {:?}",
            dims.factors()
        )));
    }
    let mut amps = vec![c64(0.0, 0.0); dims.total()];
    amps[dims.flat(digits)] = c64(1.0, 0.0);
    PureState::new(dims, amps)
}

pub(crate) fn complex_gaussian(rng: &mut StateRng) -> C64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    c64(re, im)
}

/// Haar-random pure state: i.i.d. complex Gaussian amplitudes, normalized.
pub fn random_pure(dims: &DimsSpec, seed: u64) -> PureState {
    random_pure_with(dims, &mut rng_for(seed, 0))
}

pub fn random_pure_with(dims: &DimsSpec, rng: &mut StateRng) -> PureState {
    loop {
        let amps: Vec<C64> = (0..dims.total()).map(|_| complex_gaussian(rng)).collect();
        if let Ok(p) = PureState::normalized(dims.clone(), amps) {
            return p;
        }
    }
}

/// Reduction of a Haar-random pure state on `dims (x) ancilla_dim`.
pub fn random_mixed(dims: &DimsSpec, ancilla_dim: usize, seed: u64) -> Result<DensityMatrix> {
    random_mixed_with(dims, ancilla_dim, &mut rng_for(seed, 0))
}

pub fn random_mixed_with(
    dims: &DimsSpec,
    ancilla_dim: usize,
    rng: &mut StateRng,
) -> Result<DensityMatrix> {
    if ancilla_dim == 0 {
        return Err(Error::invalid("ancilla dimension must be at least 1"));
    }
    let side = dims.total();
    let amps: Vec<C64> = (0..side * ancilla_dim)
        .map(|_| complex_gaussian(rng))
        .collect();
    let nrm = norm(&amps);
    // rho = G G^dagger with G the side x ancilla reshaping of the amplitudes
    let mut m = ComplexMatrix::zeros(side, side);
    for r in 0..side {
        for c in r..side {
            let s: C64 = (0..ancilla_dim)
                .map(|x| amps[r * ancilla_dim + x] * amps[c * ancilla_dim + x].conj())
                .sum::<C64>()
                / (nrm * nrm);
            m[(r, c)] = s;
            m[(c, r)] = s.conj();
        }
    }
    Ok(DensityMatrix::from_trusted(dims.clone(), m))
}

/// Haar-random `n x n` unitary from Gram-Schmidt on a complex Gaussian matrix.
pub fn haar_unitary(n: usize, rng: &mut StateRng) -> ComplexMatrix {
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<C64> = (0..n).map(|_| complex_gaussian(rng)).collect();
        for u in &cols {
            let proj: C64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (x, a) in v.iter_mut().zip(u) {
                *x -= proj * a;
            }
        }
        let nv = norm(&v);
        if nv < 1e-8 {
            continue;
        }
        cols.push(v.into_iter().map(|x| x / nv).collect());
    }
    let mut u = ComplexMatrix::zeros(n, n);
    for (c, col) in cols.iter().enumerate() {
        for (r, &x) in col.iter().enumerate() {
            u[(r, c)] = x;
        }
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{hermitian_eigen, partial_transpose};

    fn fidelity_with_phi(rho: &DensityMatrix, d: usize) -> f64 {
        let phi = max_entangled(d);
        let rphi = rho.matrix().apply(&phi);
        phi.iter()
            .zip(&rphi)
            .map(|(a, b)| a.conj() * b)
            .sum::<C64>()
            .re
    }

    #[test]
    fn horodecki_is_state_and_ppt_in_bound_region() {
        for k in 0..=12 {
            let alpha = 2.0 + 0.25 * k as f64;
            let s = make_horodecki_sigma(alpha).unwrap();
            assert!((s.matrix().trace().re - 1.0).abs() < 1e-14);
        }
        let s = make_horodecki_sigma(3.5).unwrap();
        let pt = partial_transpose(s.matrix(), s.dims(), 1).unwrap();
        assert!(eigvalsh(&pt).unwrap()[0] >= -1e-12);
        assert!(make_horodecki_sigma(1.9).is_err());
        assert!(make_horodecki_sigma(5.1).is_err());
    }

    #[test]
    fn isotropic_fidelity_grid() {
        for d in 2..=5 {
            for k in 0..=10 {
                let f = k as f64 / 10.0;
                let rho = make_isotropic(d, f).unwrap();
                assert!((fidelity_with_phi(&rho, d) - f).abs() < 1e-12);
            }
        }
        let d = 3;
        let mixed = make_isotropic(d, 1.0 / 9.0).unwrap();
        assert!(
            mixed
                .matrix()
                .max_abs_diff(&ComplexMatrix::identity(9).scale(1.0 / 9.0))
                < 1e-15
        );
        let bell = make_isotropic(2, 1.0).unwrap();
        let phi = max_entangled(2);
        assert!(
            bell.matrix()
                .max_abs_diff(&ComplexMatrix::outer(&phi, &phi))
                < 1e-15
        );
        assert!(make_isotropic(3, 1.2).is_err());
        assert!(make_isotropic(1, 0.5).is_err());
    }

    #[test]
    fn werner_spectrum_closed_form() {
        for k in 0..=25 {
            let lam = 0.5 + 0.1 * k as f64;
            let rho = make_werner3(lam).unwrap();
            let ev = eigvalsh(rho.matrix()).unwrap();
            let sym = (2.0 * lam - 1.0) / (3.0 * (8.0 * lam - 1.0));
            let anti = (4.0 * lam + 1.0) / (3.0 * (8.0 * lam - 1.0));
            let mut expected = vec![sym; 6];
            expected.extend([anti; 3]);
            expected.sort_by(f64::total_cmp);
            for (a, b) in ev.iter().zip(&expected) {
                assert!((a - b).abs() < 1e-12, "lambda = {lam}");
            }
        }
        let ev = eigvalsh(make_werner3(1.0).unwrap().matrix()).unwrap();
        assert!((ev[0] - 1.0 / 21.0).abs() < 1e-14 && (ev[8] - 5.0 / 21.0).abs() < 1e-14);
    }

    #[test]
    fn werner_rejects_non_states() {
        match make_werner3(0.3) {
            Err(Error::NotAState(msg)) => assert!(msg.contains("eigenvalue")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(make_werner3(0.125).is_err());
        assert!(make_werner3(0.5).is_ok());
    }

    #[test]
    fn werner_is_nppt() {
        let rho = make_werner3(1.0).unwrap();
        let pt = partial_transpose(rho.matrix(), rho.dims(), 1).unwrap();
        assert!(eigvalsh(&pt).unwrap()[0] < -1e-3);
    }

    #[test]
    fn aharonov_reductions_are_maximally_mixed() {
        let psi = make_aharonov();
        assert!((norm(psi.amplitudes()) - 1.0).abs() < 1e-15);
        for k in 0..3 {
            let r = psi.reduce(&[k]).unwrap();
            assert!(
                r.matrix()
                    .max_abs_diff(&ComplexMatrix::identity(3).scale(1.0 / 3.0))
                    < 1e-15
            );
        }
    }

    #[test]
    fn generalized_w_layout() {
        let a = 1.0 / 5f64.sqrt();
        let w = make_generalized_w([c64(a, 0.0); 5], false).unwrap();
        let amps = w.amplitudes();
        for idx in [16, 8, 4, 2, 1] {
            assert!((amps[idx].re - a).abs() < 1e-16);
        }
        assert_eq!(amps.iter().filter(|z| z.norm() > 0.0).count(), 5);
        assert!(make_generalized_w([c64(0.0, 0.0); 5], true).is_err());
        assert!(make_generalized_w([c64(1.0, 0.0); 5], false).is_err());
        let n = make_generalized_w([c64(1.0, 0.0); 5], true).unwrap();
        assert!((n.amplitudes()[16].re - a).abs() < 1e-15);
    }

    #[test]
    fn random_pure_is_deterministic_and_normalized() {
        let dims = DimsSpec::new(vec![2, 3]).unwrap();
        let a = random_pure(&dims, 42);
        let b = random_pure(&dims, 42);
        assert_eq!(a, b);
        assert!((norm(a.amplitudes()) - 1.0).abs() < 1e-14);
        assert_ne!(random_pure(&dims, 43), a);
    }

    #[test]
    fn haar_mean_reduced_purity() {
        // E[Tr rho_A^2] = (dA + dB) / (dA dB + 1) for Haar states.
        let dims = DimsSpec::new(vec![2, 2]).unwrap();
        let mut rng = rng_for(7, 0);
        let n = 1000;
        let mean: f64 = (0..n)
            .map(|_| {
                random_pure_with(&dims, &mut rng)
                    .reduce(&[0])
                    .unwrap()
                    .purity()
            })
            .sum::<f64>()
            / n as f64;
        assert!((mean - 0.8).abs() < 0.02, "mean purity {mean}");
    }

    #[test]
    fn random_mixed_rank_and_validity() {
        let dims = DimsSpec::new(vec![2, 3]).unwrap();
        let pure = random_mixed(&dims, 1, 3).unwrap();
        assert!((pure.purity() - 1.0).abs() < 1e-12);
        for seed in 0..20 {
            for anc in [1, 2, 3, 6] {
                let rho = random_mixed(&dims, anc, seed).unwrap();
                let checked = DensityMatrix::new(rho.dims().clone(), rho.matrix().clone()).unwrap();
                let ev = hermitian_eigen(checked.matrix()).unwrap().values;
                assert!(ev.iter().filter(|&&x| x > 1e-10).count() <= anc.min(6));
            }
        }
        assert!(random_mixed(&dims, 0, 1).is_err());
    }

    #[test]
    fn density_validation_messages() {
        let dims = DimsSpec::new(vec![2, 2]).unwrap();
        match DensityMatrix::new(dims.clone(), ComplexMatrix::identity(4).scale(0.9 / 4.0)) {
            Err(Error::NotAState(msg)) => assert!(msg.contains("0.9")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(DensityMatrix::new(dims, ComplexMatrix::identity(3)).is_err());
    }

    #[test]
    fn haar_unitary_is_unitary() {
        let mut rng = rng_for(1, 2);
        let u = haar_unitary(5, &mut rng);
        assert!(
            u.adjoint()
                .matmul(&u)
                .max_abs_diff(&ComplexMatrix::identity(5))
                < 1e-12
        );
    }
}
