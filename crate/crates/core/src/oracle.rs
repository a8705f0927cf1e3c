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

//! Randomized convex-roof search giving an upper bound on the concurrence.
//!
//! The concurrence of a mixed state is the minimum of the average pure-state
//! concurrence over all decompositions. Every decomposition this search
//! visits is a valid one, so the value it returns can only over-estimate
//! the true concurrence. Assert `tau <= estimate^2`, never closeness, unless
//! the exact value is known independently.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{c64, hermitian_eigen, ComplexMatrix, C64};
use crate::qstate::{complex_gaussian, haar_unitary, rng_for, DensityMatrix, StateRng};

/// Largest side length the search accepts.
pub const ORACLE_SIDE_CAP: usize = 16;

const INITIAL_STEP: f64 = 0.05;
const REJECTIONS_BEFORE_HALVING: usize = 20;
const RANK_TOL: f64 = 1e-12;
const MIN_STEP: f64 = 1e-7;
const GRADIENT_MIN_STEP: f64 = 1e-12;
const REFINE_STARTS: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleConfig {
    /// Numbers of pure states per decomposition; `None` means `rank..=rank + 2`.
    pub decomposition_sizes: Option<Vec<usize>>,
    pub samples: usize,
    pub refine_steps: usize,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            decomposition_sizes: None,
            samples: 2000,
            refine_steps: 200,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleEstimate {
    /// Best average concurrence found, after refinement.
    pub value: f64,
    /// Best value among the random samples, before refinement.
    pub best_sample: f64,
    /// Decomposition size of the winning sample.
    pub size: usize,
    pub rank: usize,
}

/// Upper bound on `C(rho)`; see [`convex_roof_search`].
pub fn convex_roof_upper(rho: &DensityMatrix, cfg: &OracleConfig) -> Result<f64> {
    Ok(convex_roof_search(rho, cfg)?.value)
}

/// Samples Haar-random decompositions of each configured size, then
/// refines the best one with small random unitary rotations, accepting
/// only improvements.
pub fn convex_roof_search(rho: &DensityMatrix, cfg: &OracleConfig) -> Result<OracleEstimate> {
    let (d1, d2) = rho.bipartite_dims()?;
    if rho.side() > ORACLE_SIDE_CAP {
        return Err(Error::SizeLimit {
            side: rho.side(),
            cap: ORACLE_SIDE_CAP,
        });
    }
    let eig = hermitian_eigen(rho.matrix())?;
    // weighted eigenvectors sqrt(lambda_i) |chi_i>, largest first
    let weighted: Vec<Vec<C64>> = (0..eig.values.len())
        .rev()
        .filter(|&c| eig.values[c] > RANK_TOL)
        .map(|c| {
            let s = eig.values[c].sqrt();
            eig.vector(c).into_iter().map(|z| z * s).collect()
        })
        .collect();
    let rank = weighted.len();
    if rank == 0 {
        return Err(Error::invalid(
            "state has no eigenvalue above the rank tolerance",
        ));
    }
    let sizes = cfg
        .decomposition_sizes
        .clone()
        .unwrap_or_else(|| (rank..=rank + 2).collect());
    if sizes.is_empty() {
        return Err(Error::invalid("no decomposition sizes configured"));
    }
    if let Some(&m) = sizes.iter().find(|&&m| m < rank) {
        return Err(Error::invalid(format!(
            "decomposition size {m} is below the rank {rank}"
        )));
    }
    let roof = Roof { weighted, d1, d2 };

    let samples = cfg.samples.max(1);
    let mut pool: Vec<(f64, usize, ComplexMatrix)> = Vec::new();
    for (size_idx, &m) in sizes.iter().enumerate() {
        let mut results: Vec<(f64, ComplexMatrix)> = (0..samples)
            .into_par_iter()
            .map(|s| {
                let stream = ((size_idx as u64) << 32) | s as u64;
                let mut rng = rng_for(cfg.seed, stream);
                let u = haar_unitary(m, &mut rng);
                (roof.average(&u), u)
            })
            .collect();
        // stable sort keeps sample order among ties, so the result is seed-determined
        results.sort_by(|a, b| a.0.total_cmp(&b.0));
        pool.extend(
            results
                .into_iter()
                .take(REFINE_STARTS)
                .map(|(v, u)| (v, m, u)),
        );
    }
    let best_sample = pool.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);

    let refined: Vec<(f64, usize)> = pool
        .into_par_iter()
        .enumerate()
        .map(|(k, (v, m, u))| {
            let mut rng = rng_for(cfg.seed, u64::MAX - k as u64);
            refine(&roof, u, v, cfg.refine_steps, &mut rng).map(|v| (v, m))
        })
        .collect::<Result<_>>()?;
    let (value, size) = refined
        .into_iter()
        .reduce(|a, b| if b.0 < a.0 { b } else { a })
        .expect("at least one start");
    Ok(OracleEstimate {
        value,
        best_sample,
        size,
        rank,
    })
}

/// Gradient descent to a local minimum, a random walk of `steps` moves to
/// leave it, then gradient descent again.
fn refine(
    roof: &Roof,
    mut u: ComplexMatrix,
    value: f64,
    steps: usize,
    rng: &mut StateRng,
) -> Result<f64> {
    let size = u.rows();
    let mut value = gradient_polish(roof, &mut u, value, steps)?;
    let mut step = INITIAL_STEP;
    let mut rejections = 0;
    for it in 0..steps {
        let g = if it % 2 == 0 {
            random_rotation(size, step, rng)?
        } else {
            random_pair_rotation(size, step, rng)
        };
        let candidate = g.matmul(&u);
        let v = roof.average(&candidate);
        if v < value {
            value = v;
            u = candidate;
            rejections = 0;
            step = (step * 2.0).min(INITIAL_STEP);
        } else {
            rejections += 1;
            if rejections == REJECTIONS_BEFORE_HALVING {
                step *= 0.5;
                rejections = 0;
                if step < MIN_STEP {
                    step = INITIAL_STEP;
                }
            }
        }
    }
    gradient_polish(roof, &mut u, value, steps)
}

struct Roof {
    weighted: Vec<Vec<C64>>,
    d1: usize,
    d2: usize,
}

impl Roof {
    /// `sum_j p_j C(psi_j)` for the decomposition `xi_j = sum_i U_ji sqrt(lambda_i) chi_i`.
    fn average(&self, u: &ComplexMatrix) -> f64 {
        let side = self.d1 * self.d2;
        let mut xi = vec![c64(0.0, 0.0); side];
        let mut total = 0.0;
        for j in 0..u.rows() {
            xi.iter_mut().for_each(|z| *z = c64(0.0, 0.0));
            for (i, w) in self.weighted.iter().enumerate() {
                let coef = u[(j, i)];
                for (x, &wv) in xi.iter_mut().zip(w) {
                    *x += coef * wv;
                }
            }
            total += self.weighted_concurrence(&xi);
        }
        total
    }

    fn element(&self, u: &ComplexMatrix, j: usize, xi: &mut [C64]) {
        xi.iter_mut().for_each(|z| *z = c64(0.0, 0.0));
        for (i, w) in self.weighted.iter().enumerate() {
            let coef = u[(j, i)];
            for (x, &wv) in xi.iter_mut().zip(w) {
                *x += coef * wv;
            }
        }
    }

    /// Derivative of [`Roof::average`] with respect to `conj(U)`.
    fn gradient(&self, u: &ComplexMatrix) -> ComplexMatrix {
        let (d1, d2) = (self.d1, self.d2);
        let mut xi = vec![c64(0.0, 0.0); d1 * d2];
        let mut grad = ComplexMatrix::zeros(u.rows(), u.cols());
        for j in 0..u.rows() {
            self.element(u, j, &mut xi);
            let c = self.weighted_concurrence(&xi);
            if c < 1e-14 {
                continue;
            }
            // d C / d conj(Xi) = 2 (p Xi - Xi Xi^dagger Xi) / C
            let p: f64 = xi.iter().map(|z| z.norm_sqr()).sum();
            let mut gram = vec![c64(0.0, 0.0); d1 * d1];
            for a in 0..d1 {
                for b in 0..d1 {
                    gram[a * d1 + b] = (0..d2)
                        .map(|k| xi[a * d2 + k] * xi[b * d2 + k].conj())
                        .sum();
                }
            }
            let mut g = vec![c64(0.0, 0.0); d1 * d2];
            for a in 0..d1 {
                for k in 0..d2 {
                    let cubic: C64 = (0..d1).map(|b| gram[a * d1 + b] * xi[b * d2 + k]).sum();
                    g[a * d2 + k] = (xi[a * d2 + k] * p - cubic) * (2.0 / c);
                }
            }
            for (i, w) in self.weighted.iter().enumerate() {
                grad[(j, i)] = w.iter().zip(&g).map(|(wv, gv)| wv.conj() * gv).sum();
            }
        }
        grad
    }

    /// `p C(xi / sqrt p) = sqrt(2 (p^2 - Tr (Xi Xi^dagger)^2))` with `p = |xi|^2`.
    fn weighted_concurrence(&self, xi: &[C64]) -> f64 {
        let (d1, d2) = (self.d1, self.d2);
        let p: f64 = xi.iter().map(|z| z.norm_sqr()).sum();
        if p == 0.0 {
            return 0.0;
        }
        let mut purity = 0.0;
        for a in 0..d1 {
            for b in a..d1 {
                let s: C64 = (0..d2)
                    .map(|k| xi[a * d2 + k] * xi[b * d2 + k].conj())
                    .sum();
                purity += if a == b {
                    s.norm_sqr()
                } else {
                    2.0 * s.norm_sqr()
                };
            }
        }
        (2.0 * (p * p - purity)).max(0.0).sqrt()
    }
}

/// Riemannian steepest descent on the unitary group with a backtracking
/// line search; stops once no step above [`GRADIENT_MIN_STEP`] improves.
fn gradient_polish(
    roof: &Roof,
    u: &mut ComplexMatrix,
    mut value: f64,
    steps: usize,
) -> Result<f64> {
    let mut step = 1.0;
    for _ in 0..steps {
        let e = roof.gradient(u);
        // U(t) = exp(-t A) U with A = E U^dagger - U E^dagger skew-Hermitian
        let a = e.matmul(&u.adjoint()).sub(&u.matmul(&e.adjoint()));
        let norm = a.frobenius_norm();
        if norm < 1e-14 {
            break;
        }
        // A = i H with H Hermitian
        let h = a.map(|z| z * c64(0.0, -1.0));
        let eig = hermitian_eigen(&h.hermitian_part())?;
        let mut improved = false;
        let mut t = step / norm;
        while t * norm >= GRADIENT_MIN_STEP {
            let mut scaled = eig.vectors.clone();
            for c in 0..u.rows() {
                let phase = c64(0.0, -t * eig.values[c]).exp();
                for r in 0..u.rows() {
                    scaled[(r, c)] *= phase;
                }
            }
            let candidate = scaled.matmul(&eig.vectors.adjoint()).matmul(u);
            let v = roof.average(&candidate);
            if v < value {
                value = v;
                *u = candidate;
                improved = true;
                break;
            }
            t *= 0.5;
        }
        if !improved {
            break;
        }
        step = (t * norm * 2.0).min(1.0);
    }
    Ok(value)
}

/// `exp(i step H)` for a random Hermitian `H` with unit Frobenius norm.
fn random_rotation(n: usize, step: f64, rng: &mut StateRng) -> Result<ComplexMatrix> {
    let mut h = ComplexMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            h[(r, c)] = complex_gaussian(rng);
        }
    }
    let h = h.hermitian_part();
    let norm = h.frobenius_norm().max(f64::MIN_POSITIVE);
    let eig = hermitian_eigen(&h.scale(1.0 / norm))?;
    let mut scaled = eig.vectors.clone();
    for c in 0..n {
        let phase = c64(0.0, step * eig.values[c]).exp();
        for r in 0..n {
            scaled[(r, c)] *= phase;
        }
    }
    Ok(scaled.matmul(&eig.vectors.adjoint()))
}

/// `exp(i step H)` with `H` a random Hermitian supported on two random indices.
fn random_pair_rotation(n: usize, step: f64, rng: &mut StateRng) -> ComplexMatrix {
    use rand::Rng;
    let mut g = ComplexMatrix::identity(n);
    if n < 2 {
        return g;
    }
    let a = rng.gen_range(0..n);
    let mut b = rng.gen_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    // exp(i t (n . sigma)) = cos t I + i sin t (n . sigma) for a unit 3-vector n
    let mut axis = [0.0f64; 3];
    for x in &mut axis {
        *x = rand_distr::Distribution::<f64>::sample(&rand_distr::StandardNormal, rng);
    }
    let len = axis
        .iter()
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt()
        .max(f64::MIN_POSITIVE);
    let [nx, ny, nz] = axis.map(|x| x / len);
    let angle = step * rng.gen_range(-1.0..1.0) * 4.0;
    let (s, c) = angle.sin_cos();
    let i = c64(0.0, 1.0);
    g[(a, a)] = c64(c, 0.0) + i * s * nz;
    g[(b, b)] = c64(c, 0.0) - i * s * nz;
    g[(a, b)] = i * s * c64(nx, -ny);
    g[(b, a)] = i * s * c64(nx, ny);
    g
}
