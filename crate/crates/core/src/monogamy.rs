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

//! Monogamy of `tau` for pure multipartite states and the residual
//! (three-way) entanglement left over by the tripartite inequality.

use crate::bound::{pure_concurrence_sq, tau};
use crate::error::{Error, Result};
use crate::linalg::C64;
use crate::qstate::PureState;

/// Slack allowed before an inequality counts as violated.
pub const MONOGAMY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonogamyReport {
    pub tau_ab: f64,
    pub tau_ac: f64,
    pub tau_a_bc: f64,
    /// `tau_a_bc - tau_ab - tau_ac`.
    pub residual: f64,
    /// Coefficient formula for the residual, evaluated independently.
    pub closed_form: f64,
    pub satisfied: bool,
}

/// Merges consecutive subsystems of `psi` into three parties of sizes
/// `(d1, d2, d3)`.
pub fn as_tripartite(psi: &PureState, d1: usize, d2: usize, d3: usize) -> Result<PureState> {
    let targets = [d1, d2, d3];
    let factors = psi.dims().factors();
    let mut sizes = Vec::with_capacity(3);
    let mut at = 0;
    for &t in &targets {
        let start = at;
        let mut prod = 1;
        while at < factors.len() && prod < t {
            prod *= factors[at];
            at += 1;
        }
        if prod != t || at == start {
            return Err(Error::invalid(format!(
                "dims {factors:?} cannot be grouped as {d1}x{d2}x{d3}"
            )));
        }
        sizes.push(at - start);
    }
    if at != factors.len() {
        return Err(Error::invalid(format!(
            "dims {factors:?} cannot be grouped as {d1}x{d2}x{d3}"
        )));
    }
    psi.regrouped(&sizes)
}

/// `tau(rho_AB) + tau(rho_AC) <= tau(rho_A:BC)` for a pure tripartite state.
pub fn monogamy_tripartite(
    psi: &PureState,
    d1: usize,
    d2: usize,
    d3: usize,
) -> Result<MonogamyReport> {
    let g = as_tripartite(psi, d1, d2, d3)?;
    let tau_ab = tau(&g.reduce(&[0, 1])?)?.tau;
    let tau_ac = tau(&g.reduce(&[0, 2])?)?.tau;
    let tau_a_bc = pure_concurrence_sq(&g, &[0])?;
    let residual = tau_a_bc - tau_ab - tau_ac;
    let closed_form = closed_form_tripartite(&g);
    Ok(MonogamyReport {
        tau_ab,
        tau_ac,
        tau_a_bc,
        residual,
        closed_form,
        satisfied: residual >= -MONOGAMY_TOL,
    })
}

/// Residual entanglement from the coefficients `phi_ijk`: a sum over every
/// embedded 2x2x2 block of the qubit three-tangle expression.
pub fn residual_closed_form(psi: &PureState, d1: usize, d2: usize, d3: usize) -> Result<f64> {
    Ok(closed_form_tripartite(&as_tripartite(psi, d1, d2, d3)?))
}

fn closed_form_tripartite(g: &PureState) -> f64 {
    let f = g.dims().factors();
    let (n1, n2, n3) = (f[0], f[1], f[2]);
    let amps = g.amplitudes();
    let phi = |i: usize, j: usize, k: usize| amps[(i * n2 + j) * n3 + k];
    let mut total = 0.0;
    for i in 0..n1 {
        for ip in i + 1..n1 {
            for j in 0..n2 {
                for jp in j + 1..n2 {
                    for k in 0..n3 {
                        for kp in k + 1..n3 {
                            // a_xyz with x, y, z selecting the lower/upper index
                            let a000 = phi(i, j, k);
                            let a001 = phi(i, j, kp);
                            let a010 = phi(i, jp, k);
                            let a011 = phi(i, jp, kp);
                            let a100 = phi(ip, j, k);
                            let a101 = phi(ip, j, kp);
                            let a110 = phi(ip, jp, k);
                            let a111 = phi(ip, jp, kp);
                            total += tangle_block(a000, a001, a010, a011, a100, a101, a110, a111);
                        }
                    }
                }
            }
        }
    }
    total
}

#[allow(clippy::too_many_arguments)]
fn tangle_block(
    a000: C64,
    a001: C64,
    a010: C64,
    a011: C64,
    a100: C64,
    a101: C64,
    a110: C64,
    a111: C64,
) -> f64 {
    let d1 = a000 * a000 * a111 * a111
        + a001 * a001 * a110 * a110
        + a010 * a010 * a101 * a101
        + a100 * a100 * a011 * a011;
    let d2 = a000 * a111 * a011 * a100
        + a000 * a111 * a101 * a010
        + a000 * a111 * a110 * a001
        + a011 * a100 * a101 * a010
        + a011 * a100 * a110 * a001
        + a101 * a010 * a110 * a001;
    let d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;
    4.0 * (d1 - d2 * 2.0 + d3 * 4.0).norm()
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultipartiteReport {
    /// `tau(rho_{A B_i})` for each `B_i`, in partition order.
    pub per_pair: Vec<f64>,
    pub sum: f64,
    /// `tau(rho_{A:B_1...B_n})`.
    pub tau_total: f64,
    pub satisfied: bool,
}

/// `sum_i tau(rho_{A B_i}) <= tau(rho_{A:B_1...B_n})`.
///
/// `partition[0]` is the group `A`; the remaining entries are `B_1..B_n`.
/// Each group lists elementary subsystem indices of `psi`; together the
/// groups must cover every subsystem exactly once.
pub fn monogamy_multipartite(
    psi: &PureState,
    partition: &[Vec<usize>],
) -> Result<MultipartiteReport> {
    let k = psi.dims().len();
    if partition.len() < 2 {
        return Err(Error::invalid("partition needs A and at least one B group"));
    }
    let mut seen = vec![false; k];
    for group in partition {
        if group.is_empty() {
            return Err(Error::invalid("partition contains an empty group"));
        }
        for &s in group {
            if s >= k || seen[s] {
                return Err(Error::invalid(format!(
                    "partition {partition:?} is not a disjoint cover of 0..{k}"
                )));
            }
            seen[s] = true;
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::invalid(format!(
            "partition {partition:?} does not cover all {k} subsystems"
        )));
    }

    let a = &partition[0];
    let mut per_pair = Vec::with_capacity(partition.len() - 1);
    for b in &partition[1..] {
        let mut sorted: Vec<usize> = a.iter().chain(b).copied().collect();
        sorted.sort_unstable();
        let reduced = psi.reduce(&sorted)?;
        let wanted: Vec<usize> = a.iter().chain(b).copied().collect();
        let perm: Vec<usize> = wanted
            .iter()
            .map(|w| {
                sorted
                    .iter()
                    .position(|s| s == w)
                    .expect("member of sorted")
            })
            .collect();
        let (m, d) = crate::linalg::permute_subsystems(reduced.matrix(), reduced.dims(), &perm)?;
        let rho =
            crate::qstate::DensityMatrix::from_trusted(d, m).regrouped(&[a.len(), b.len()])?;
        per_pair.push(tau(&rho)?.tau);
    }
    let sum = per_pair.iter().sum();
    let tau_total = pure_concurrence_sq(psi, a)?;
    Ok(MultipartiteReport {
        per_pair,
        sum,
        tau_total,
        satisfied: sum <= tau_total + MONOGAMY_TOL,
    })
}

/// Both sides of the purity identities behind the tripartite inequality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityCheck {
    /// `sum over quads of sum_i lambda_i^2` for `rho_AB`.
    pub lhs_ab: f64,
    pub lhs_ac: f64,
    /// `1 - Tr rho_A^2 - Tr rho_B^2 + Tr rho_C^2`.
    pub rhs_ab: f64,
    /// `1 - Tr rho_A^2 + Tr rho_B^2 - Tr rho_C^2`.
    pub rhs_ac: f64,
}

pub fn thm3_identity_check(
    psi: &PureState,
    d1: usize,
    d2: usize,
    d3: usize,
) -> Result<IdentityCheck> {
    let g = as_tripartite(psi, d1, d2, d3)?;
    let lhs_ab = tau(&g.reduce(&[0, 1])?)?.lambda_square_sum();
    let lhs_ac = tau(&g.reduce(&[0, 2])?)?.lambda_square_sum();
    let pa = g.reduce(&[0])?.purity();
    let pb = g.reduce(&[1])?.purity();
    let pc = g.reduce(&[2])?.purity();
    Ok(IdentityCheck {
        lhs_ab,
        lhs_ac,
        rhs_ab: 1.0 - pa - pb + pc,
        rhs_ac: 1.0 - pa + pb - pc,
    })
}
