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

//! The lower bound `tau` on squared concurrence.
//!
//! A `d1 x d2` state is cut into all `d1(d1-1)d2(d2-1)/4` two-qubit
//! subspaces. Each subspace contributes the squared Wootters concurrence of
//! the (unnormalized) 4x4 principal submatrix it selects, and `tau` is the
//! sum of those contributions.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{
    c64, hermitian_eigen, kron, permute_subsystems, psd_sqrt, singular_values, ComplexMatrix,
    DimsSpec, C64, HERMITIAN_TOL, SIDE_CAP,
};
use crate::qstate::{DensityMatrix, PureState};

/// Threshold above which `tau` (or a single `C_mn`) counts as positive in verdicts.
pub const POSITIVE_TOL: f64 = 1e-9;

/// A two-qubit subspace: rows `i < j` of subsystem A and `k < l` of subsystem B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubspaceQuad {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

impl SubspaceQuad {
    pub fn new(i: usize, j: usize, k: usize, l: usize, d1: usize, d2: usize) -> Result<Self> {
        if !(i < j && j < d1 && k < l && l < d2) {
            return Err(Error::invalid(format!(
                "subspace ({i},{j};{k},{l}) invalid for {d1}x{d2}"
            )));
        }
        Ok(SubspaceQuad { i, j, k, l })
    }

    /// All quads in lexicographic `(i, j, k, l)` order.
    pub fn enumerate(d1: usize, d2: usize) -> Vec<SubspaceQuad> {
        let mut out = Vec::with_capacity(Self::count(d1, d2));
        for i in 0..d1 {
            for j in i + 1..d1 {
                for k in 0..d2 {
                    for l in k + 1..d2 {
                        out.push(SubspaceQuad { i, j, k, l });
                    }
                }
            }
        }
        out
    }

    pub fn count(d1: usize, d2: usize) -> usize {
        d1 * d1.saturating_sub(1) * d2 * d2.saturating_sub(1) / 4
    }

    /// Flat indices `(ik, il, jk, jl)` in a `d1 x d2` space.
    pub fn indices(&self, d2: usize) -> [usize; 4] {
        [
            self.i * d2 + self.k,
            self.i * d2 + self.l,
            self.j * d2 + self.k,
            self.j * d2 + self.l,
        ]
    }
}

/// Concurrence of one 4x4 block together with its spectral data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitConcurrence {
    pub concurrence: f64,
    /// Square roots of the eigenvalues of `varrho * spin_flip(varrho)`, non-increasing.
    pub lambdas: [f64; 4],
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceTerm {
    pub quad: SubspaceQuad,
    pub concurrence: f64,
    pub lambdas: [f64; 4],
}

#[derive(Debug, Clone, PartialEq)]
pub struct TauReport {
    pub tau: f64,
    pub per_subspace: Vec<SubspaceTerm>,
    pub dims: DimsSpec,
}

impl TauReport {
    pub fn is_positive(&self) -> bool {
        self.tau > POSITIVE_TOL
    }

    /// `sum over quads of sum_i lambda_i^2`, i.e. `sum Tr(varrho * spin_flip(varrho))`.
    pub fn lambda_square_sum(&self) -> f64 {
        self.per_subspace
            .iter()
            .map(|t| t.lambdas.iter().map(|x| x * x).sum::<f64>())
            .sum()
    }

    /// Terms with `C_mn > POSITIVE_TOL`.
    pub fn positive_terms(&self) -> impl Iterator<Item = &SubspaceTerm> {
        self.per_subspace
            .iter()
            .filter(|t| t.concurrence > POSITIVE_TOL)
    }
}

fn check_cut(dims: &DimsSpec, cut: &[usize]) -> Result<Vec<usize>> {
    let k = dims.len();
    let mut group = cut.to_vec();
    group.sort_unstable();
    group.dedup();
    if group.len() != cut.len() || group.iter().any(|&i| i >= k) {
        return Err(Error::invalid(format!(
            "invalid cut {cut:?} for {k} subsystems"
        )));
    }
    if group.is_empty() || group.len() == k {
        return Err(Error::invalid(format!(
            "cut {cut:?} must leave both sides nonempty"
        )));
    }
    Ok(group)
}

/// Squared concurrence `2(1 - Tr rho_A^2)` of a pure state across the cut
/// separating the subsystems in `cut` from the rest.
pub fn pure_concurrence_sq(psi: &PureState, cut: &[usize]) -> Result<f64> {
    let group = check_cut(psi.dims(), cut)?;
    let rest: Vec<usize> = (0..psi.dims().len())
        .filter(|i| !group.contains(i))
        .collect();
    // reduce onto the smaller side; the purities agree
    let smaller = if psi.dims().product_of(&group) <= psi.dims().product_of(&rest) {
        group
    } else {
        rest
    };
    let purity = psi.reduce(&smaller)?.purity();
    Ok((2.0 * (1.0 - purity)).max(0.0))
}

/// `4 sum_{i<j} sum_{k<l} |phi_ik phi_jl - phi_il phi_jk|^2` for coefficients
/// `phi` laid out row-major as a `d1 x d2` array.
pub fn concurrence_sq_from_coefficients(phi: &[C64], d1: usize, d2: usize) -> Result<f64> {
    if phi.len() != d1 * d2 {
        return Err(Error::invalid(format!(
            "{} coefficients do not fill {d1}x{d2}",
            phi.len()
        )));
    }
    let mut s = 0.0;
    for i in 0..d1 {
        for j in i + 1..d1 {
            for k in 0..d2 {
                for l in k + 1..d2 {
                    let m = phi[i * d2 + k] * phi[j * d2 + l] - phi[i * d2 + l] * phi[j * d2 + k];
                    s += m.norm_sqr();
                }
            }
        }
    }
    Ok(4.0 * s)
}

/// The explicit pairwise-minor sum across a cut, after moving the cut's
/// subsystems to the front.
pub fn pure_concurrence_sq_explicit(psi: &PureState, cut: &[usize]) -> Result<f64> {
    let group = check_cut(psi.dims(), cut)?;
    let rest: Vec<usize> = (0..psi.dims().len())
        .filter(|i| !group.contains(i))
        .collect();
    let perm: Vec<usize> = group.iter().chain(&rest).copied().collect();
    let moved = psi.permuted(&perm)?;
    let d1 = psi.dims().product_of(&group);
    let d2 = psi.dims().product_of(&rest);
    concurrence_sq_from_coefficients(moved.amplitudes(), d1, d2)
}

/// The 4x4 principal submatrix on rows/columns `(ik, il, jk, jl)`.
pub fn extract_submatrix(rho: &DensityMatrix, q: SubspaceQuad) -> Result<ComplexMatrix> {
    let (d1, d2) = rho.bipartite_dims()?;
    SubspaceQuad::new(q.i, q.j, q.k, q.l, d1, d2)?;
    Ok(submatrix(rho.matrix(), &q.indices(d2)))
}

fn submatrix(m: &ComplexMatrix, idx: &[usize; 4]) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(4, 4);
    for (r, &ir) in idx.iter().enumerate() {
        for (c, &ic) in idx.iter().enumerate() {
            out[(r, c)] = m[(ir, ic)];
        }
    }
    out
}

/// `sigma_y (x) sigma_y` in the computational basis.
pub fn sigma_yy() -> ComplexMatrix {
    let mut s = ComplexMatrix::zeros(4, 4);
    s[(0, 3)] = c64(-1.0, 0.0);
    s[(1, 2)] = c64(1.0, 0.0);
    s[(2, 1)] = c64(1.0, 0.0);
    s[(3, 0)] = c64(-1.0, 0.0);
    s
}

/// Spin-flipped block `(sigma_y (x) sigma_y) varrho^* (sigma_y (x) sigma_y)`.
pub fn spin_flip(varrho: &ComplexMatrix) -> ComplexMatrix {
    let s = sigma_yy();
    s.matmul(&varrho.conj()).matmul(&s)
}

/// Wootters concurrence of a (possibly unnormalized) PSD 4x4 block.
///
/// The lambdas are computed as singular values of `W^T (sigma_y (x) sigma_y) W`
/// with `W = sqrt(varrho)`; their squares are the eigenvalues of
/// `varrho * spin_flip(varrho)`. With `normalized` set, the block is first
/// divided by its trace.
pub fn two_qubit_concurrence(
    varrho: &ComplexMatrix,
    normalized: bool,
) -> Result<TwoQubitConcurrence> {
    if varrho.rows() != 4 || varrho.cols() != 4 {
        return Err(Error::invalid(format!(
            "two-qubit block must be 4x4, got {}x{}",
            varrho.rows(),
            varrho.cols()
        )));
    }
    if !varrho.is_hermitian(HERMITIAN_TOL) {
        return Err(Error::invalid("two-qubit block is not Hermitian"));
    }
    let block = if normalized {
        let t = varrho.trace().re;
        if t <= 0.0 {
            return Err(Error::invalid("cannot normalize a block with zero trace"));
        }
        varrho.scale(1.0 / t)
    } else {
        varrho.clone()
    };
    let w = psd_sqrt(&block)?;
    let y = w.transpose().matmul(&sigma_yy()).matmul(&w);
    let sv = singular_values(&y)?;
    let lambdas = [sv[0], sv[1], sv[2], sv[3]];
    let concurrence = (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0);
    Ok(TwoQubitConcurrence {
        concurrence,
        lambdas,
    })
}

/// Evaluates every two-qubit subspace and sums the squared concurrences.
pub fn tau(rho: &DensityMatrix) -> Result<TauReport> {
    let (d1, d2) = rho.bipartite_dims()?;
    let quads = SubspaceQuad::enumerate(d1, d2);
    let per_subspace: Vec<SubspaceTerm> = quads
        .par_iter()
        .map(|&quad| {
            let block = submatrix(rho.matrix(), &quad.indices(d2));
            two_qubit_concurrence(&block, false)
                .map(|tq| SubspaceTerm {
                    quad,
                    concurrence: tq.concurrence,
                    lambdas: tq.lambdas,
                })
                .map_err(|e| Error::InSubspace {
                    i: quad.i,
                    j: quad.j,
                    k: quad.k,
                    l: quad.l,
                    source: Box::new(e),
                })
        })
        .collect::<Result<_>>()?;
    // fixed summation order keeps tau bit-stable
    let tau = per_subspace
        .iter()
        .map(|t| t.concurrence * t.concurrence)
        .sum();
    Ok(TauReport {
        tau,
        per_subspace,
        dims: rho.dims().clone(),
    })
}

/// `rho^{(x) copies}` regrouped as a bipartite `(d1^N, d2^N)` state.
pub fn tensor_power(rho: &DensityMatrix, copies: usize) -> Result<DensityMatrix> {
    if copies == 0 {
        return Err(Error::invalid("number of copies must be at least 1"));
    }
    let (d1, d2) = rho.bipartite_dims()?;
    let side = (d1 * d2)
        .checked_pow(copies as u32)
        .filter(|&s| s <= SIDE_CAP)
        .ok_or(Error::SizeLimit {
            side: (d1 * d2).saturating_pow(copies as u32),
            cap: SIDE_CAP,
        })?;
    if copies == 1 {
        return Ok(rho.clone());
    }
    let mut m = rho.matrix().clone();
    for _ in 1..copies {
        m = kron(&m, rho.matrix())?;
    }
    debug_assert_eq!(m.rows(), side);
    // A1 B1 A2 B2 ... -> A1 A2 ... B1 B2 ...
    let interleaved = DimsSpec::new((0..copies).flat_map(|_| [d1, d2]).collect())?;
    let perm: Vec<usize> = (0..copies)
        .map(|c| 2 * c)
        .chain((0..copies).map(|c| 2 * c + 1))
        .collect();
    let (pm, _) = permute_subsystems(&m, &interleaved, &perm)?;
    let dims = DimsSpec::bipartite(d1.pow(copies as u32), d2.pow(copies as u32))?;
    Ok(DensityMatrix::from_trusted(dims, pm))
}

/// `tau` of `rho^{(x) copies}` across the A-copies | B-copies cut.
pub fn tau_power(rho: &DensityMatrix, copies: usize) -> Result<TauReport> {
    tau(&tensor_power(rho, copies)?)
}

/// Squared concurrence of a two-qubit state through the Hermitian
/// `sqrt(rho) rho~ sqrt(rho)` eigenvalue route. Independent of [`tau`];
/// used as a cross-check.
pub fn wootters_concurrence_hermitian(rho: &ComplexMatrix) -> Result<f64> {
    let r = psd_sqrt(rho)?;
    let m = r.matmul(&spin_flip(rho)).matmul(&r).hermitian_part();
    let mut l: Vec<f64> = hermitian_eigen(&m)?
        .values
        .iter()
        .map(|x| x.max(0.0).sqrt())
        .collect();
    l.sort_by(|a, b| b.total_cmp(a));
    Ok((l[0] - l[1] - l[2] - l[3]).max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstate::{
        basis_state, haar_unitary, make_horodecki_sigma, make_isotropic, make_werner3,
        max_entangled, random_mixed, random_pure, rng_for,
    };

    fn bell() -> PureState {
        PureState::new(DimsSpec::bipartite(2, 2).unwrap(), max_entangled(2)).unwrap()
    }

    #[test]
    fn quad_enumeration() {
        for (d1, d2) in [(2, 2), (3, 3), (2, 5), (4, 3)] {
            let q = SubspaceQuad::enumerate(d1, d2);
            assert_eq!(q.len(), d1 * (d1 - 1) * d2 * (d2 - 1) / 4);
            assert!(q.windows(2).all(|w| w[0] < w[1]));
        }
        assert!(SubspaceQuad::new(1, 1, 0, 1, 3, 3).is_err());
        assert!(SubspaceQuad::new(0, 3, 0, 1, 3, 3).is_err());
    }

    #[test]
    fn pure_concurrence_cases() {
        assert!((pure_concurrence_sq(&bell(), &[0]).unwrap() - 1.0).abs() < 1e-14);
        let prod = basis_state(DimsSpec::bipartite(3, 2).unwrap(), &[1, 0]).unwrap();
        assert!(pure_concurrence_sq(&prod, &[0]).unwrap().abs() < 1e-15);
        let phi3 = PureState::new(DimsSpec::bipartite(3, 3).unwrap(), max_entangled(3)).unwrap();
        assert!((pure_concurrence_sq(&phi3, &[0]).unwrap() - 4.0 / 3.0).abs() < 1e-14);
        assert!(pure_concurrence_sq(&phi3, &[]).is_err());
        assert!(pure_concurrence_sq(&phi3, &[0, 1]).is_err());
        assert!(pure_concurrence_sq(&phi3, &[2]).is_err());
    }

    #[test]
    fn explicit_sum_matches_purity_form() {
        for seed in 0..30 {
            let dims = DimsSpec::new(vec![2, 3, 2]).unwrap();
            let psi = random_pure(&dims, seed);
            for cut in [vec![0], vec![1], vec![0, 2]] {
                let a = pure_concurrence_sq(&psi, &cut).unwrap();
                let b = pure_concurrence_sq_explicit(&psi, &cut).unwrap();
                assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn submatrix_cases() {
        let rho = make_isotropic(2, 0.7).unwrap();
        let q = SubspaceQuad::new(0, 1, 0, 1, 2, 2).unwrap();
        assert_eq!(extract_submatrix(&rho, q).unwrap(), *rho.matrix());

        let mixed = make_isotropic(3, 1.0 / 9.0).unwrap();
        let q = SubspaceQuad::new(0, 2, 1, 2, 3, 3).unwrap();
        let s = extract_submatrix(&mixed, q).unwrap();
        assert!(s.max_abs_diff(&ComplexMatrix::identity(4).scale(1.0 / 9.0)) < 1e-15);

        let rnd = random_mixed(&DimsSpec::bipartite(3, 3).unwrap(), 9, 5).unwrap();
        for q in SubspaceQuad::enumerate(3, 3) {
            let s = extract_submatrix(&rnd, q).unwrap();
            assert!(hermitian_eigen(&s).unwrap().values[0] >= -1e-10);
        }
        let bad = SubspaceQuad {
            i: 0,
            j: 3,
            k: 0,
            l: 1,
        };
        assert!(extract_submatrix(&rnd, bad).is_err());
    }

    #[test]
    fn two_qubit_cases() {
        let b = bell().projector();
        let tq = two_qubit_concurrence(b.matrix(), false).unwrap();
        assert!((tq.concurrence - 1.0).abs() < 1e-12);

        let mm = ComplexMatrix::identity(4).scale(0.25);
        assert_eq!(two_qubit_concurrence(&mm, false).unwrap().concurrence, 0.0);

        // p |Psi-><Psi-| + (1 - p) I/4 has C = (3p - 1)/2
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psi_minus = vec![c64(0.0, 0.0), c64(s, 0.0), c64(-s, 0.0), c64(0.0, 0.0)];
        let p = 0.8;
        let rho = ComplexMatrix::outer(&psi_minus, &psi_minus)
            .scale(p)
            .add(&ComplexMatrix::identity(4).scale((1.0 - p) / 4.0));
        let tq = two_qubit_concurrence(&rho, false).unwrap();
        assert!((tq.concurrence - 0.7).abs() < 1e-12);
        assert!(tq.lambdas.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn two_qubit_scaling_and_normalization() {
        let rho = random_mixed(&DimsSpec::bipartite(2, 2).unwrap(), 2, 17).unwrap();
        let base = two_qubit_concurrence(rho.matrix(), false)
            .unwrap()
            .concurrence;
        for c in [0.01, 0.3, 7.0] {
            let scaled = two_qubit_concurrence(&rho.matrix().scale(c), false).unwrap();
            assert!((scaled.concurrence - c * base).abs() < 1e-12 * c.max(1.0));
            let renorm = two_qubit_concurrence(&rho.matrix().scale(c), true).unwrap();
            assert!((renorm.concurrence - base).abs() < 1e-12);
        }
    }

    #[test]
    fn two_qubit_rejects_non_psd() {
        let m = ComplexMatrix::from_real_diag(&[0.5, 0.5, 0.1, -0.1]);
        assert!(matches!(
            two_qubit_concurrence(&m, false),
            Err(Error::NotPsd { .. })
        ));
        assert!(two_qubit_concurrence(&ComplexMatrix::identity(3), false).is_err());
    }

    #[test]
    fn tau_family_values() {
        let t = tau(&make_horodecki_sigma(4.5).unwrap()).unwrap();
        assert!((t.tau - 1.0 / 147.0).abs() < 1e-12);
        let t = tau(&make_isotropic(4, 0.5).unwrap()).unwrap();
        assert!((t.tau - 1.0 / 6.0).abs() < 1e-12);
        let t = tau(&make_werner3(1.0).unwrap()).unwrap();
        assert!((t.tau - 4.0 / 147.0).abs() < 1e-12);
        let t = tau(&make_horodecki_sigma(5.0).unwrap()).unwrap();
        assert!((t.tau - 16.0 / 147.0).abs() < 1e-12);
        let t = tau(&make_isotropic(3, 1.0).unwrap()).unwrap();
        assert!((t.tau - 4.0 / 3.0).abs() < 1e-12);
        let t = tau(&make_werner3(2.0).unwrap()).unwrap();
        assert!(t.tau.abs() < 1e-20);
    }

    #[test]
    fn tau_report_invariants() {
        let rho = random_mixed(&DimsSpec::bipartite(3, 4).unwrap(), 3, 8).unwrap();
        let r = tau(&rho).unwrap();
        assert_eq!(r.per_subspace.len(), 18);
        let s: f64 = r.per_subspace.iter().map(|t| t.concurrence.powi(2)).sum();
        assert!((s - r.tau).abs() < 1e-12);
        for t in &r.per_subspace {
            assert!(t.lambdas.windows(2).all(|w| w[0] >= w[1]));
            assert!(t.lambdas.iter().all(|&x| x >= 0.0));
        }
    }

    #[test]
    fn product_states_have_zero_tau() {
        for (d1, d2) in [(2, 3), (3, 3)] {
            let a = random_mixed(&DimsSpec::new(vec![d1]).unwrap(), d1, 1).unwrap();
            let b = random_mixed(&DimsSpec::new(vec![d2]).unwrap(), d2, 9).unwrap();
            let m = kron(a.matrix(), b.matrix()).unwrap();
            let rho = DensityMatrix::new(DimsSpec::bipartite(d1, d2).unwrap(), m).unwrap();
            assert!(tau(&rho).unwrap().tau < 1e-18);
        }
    }

    #[test]
    fn pure_state_tau_equals_concurrence_sq() {
        for seed in 0..40 {
            let dims = DimsSpec::bipartite(2 + seed as usize % 3, 2 + seed as usize % 4).unwrap();
            let psi = random_pure(&dims, seed);
            let t = tau(&psi.projector()).unwrap().tau;
            let c2 = pure_concurrence_sq(&psi, &[0]).unwrap();
            assert!((t - c2).abs() < 1e-10, "seed {seed}: {t} vs {c2}");
        }
    }

    #[test]
    fn two_by_two_matches_hermitian_route() {
        for seed in 0..50 {
            let rho = random_mixed(&DimsSpec::bipartite(2, 2).unwrap(), 4, seed).unwrap();
            let t = tau(&rho).unwrap();
            assert_eq!(t.per_subspace.len(), 1);
            let c = wootters_concurrence_hermitian(rho.matrix()).unwrap();
            assert!((t.tau - c * c).abs() < 1e-9);
        }
    }

    #[test]
    fn tensor_power_cases() {
        let w = make_werner3(1.0).unwrap();
        assert_eq!(tau_power(&w, 1).unwrap(), tau(&w).unwrap());
        let b = bell().projector();
        let t2 = tau_power(&b, 2).unwrap();
        assert_eq!(t2.dims.factors(), &[4, 4]);
        assert!((t2.tau - 1.5).abs() < 1e-10);
        assert!(tau_power(&b, 0).is_err());
        assert!(matches!(
            tau_power(&make_isotropic(3, 0.5).unwrap(), 4),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn tensor_power_regrouping_matches_product_of_locals() {
        // (rho_A (x) rho_B)^{(x)2} regroups to (rho_A (x) rho_A) (x) (rho_B (x) rho_B)
        let a = random_mixed(&DimsSpec::new(vec![2]).unwrap(), 2, 1).unwrap();
        let b = random_mixed(&DimsSpec::new(vec![3]).unwrap(), 3, 2).unwrap();
        let ab = DensityMatrix::new(
            DimsSpec::bipartite(2, 3).unwrap(),
            kron(a.matrix(), b.matrix()).unwrap(),
        )
        .unwrap();
        let p = tensor_power(&ab, 2).unwrap();
        let expected = kron(
            &kron(a.matrix(), a.matrix()).unwrap(),
            &kron(b.matrix(), b.matrix()).unwrap(),
        )
        .unwrap();
        assert!(p.matrix().max_abs_diff(&expected) < 1e-16);
    }

    #[test]
    fn local_unitary_keeps_tau_valid_for_two_qubits() {
        // exact at 2x2, so LU invariance holds there
        let mut rng = rng_for(11, 0);
        let rho = random_mixed(&DimsSpec::bipartite(2, 2).unwrap(), 2, 4).unwrap();
        let u = kron(&haar_unitary(2, &mut rng), &haar_unitary(2, &mut rng)).unwrap();
        let rotated = DensityMatrix::new(
            rho.dims().clone(),
            u.matmul(rho.matrix()).matmul(&u.adjoint()).hermitian_part(),
        )
        .unwrap();
        assert!((tau(&rho).unwrap().tau - tau(&rotated).unwrap().tau).abs() < 1e-9);
    }
}
