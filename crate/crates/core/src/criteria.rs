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

//! Separability and distillability verdicts.
//!
//! A positive `tau` on `rho^{(x)N}` for some `N` is a sufficient condition
//! for distillability; `tau = 0` is only necessary for separability, so the
//! verdict never claims a state is separable.

use crate::bound::{tau, tau_power, POSITIVE_TOL};
use crate::error::Result;
use crate::linalg::{eigvalsh, hermitian_trace_norm, partial_transpose, realign_trace_norm};
use crate::qstate::DensityMatrix;

pub const PPT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PptResult {
    pub ppt: bool,
    pub min_eigenvalue: f64,
}

/// PPT test: the partial transpose on B has no eigenvalue below `-tol`.
pub fn is_ppt(rho: &DensityMatrix, tol: f64) -> Result<PptResult> {
    rho.bipartite_dims()?;
    let pt = partial_transpose(rho.matrix(), rho.dims(), 1)?;
    let min_eigenvalue = eigvalsh(&pt)?[0];
    Ok(PptResult {
        ppt: min_eigenvalue >= -tol,
        min_eigenvalue,
    })
}

/// Realignment / partial-transpose lower bound on the concurrence:
/// `sqrt(2 / (m(m-1))) * max(0, max(||R(rho)||_tr, ||rho^{T_A}||_tr) - 1)`
/// with `m = min(d1, d2)`.
pub fn ccnr_lower_bound(rho: &DensityMatrix) -> Result<f64> {
    let (d1, d2) = rho.bipartite_dims()?;
    let m = d1.min(d2) as f64;
    let prefactor = (2.0 / (m * (m - 1.0))).sqrt();
    let realigned = realign_trace_norm(rho.matrix(), rho.dims())?;
    let transposed = hermitian_trace_norm(&partial_transpose(rho.matrix(), rho.dims(), 0)?)?;
    Ok(prefactor * (realigned.max(transposed) - 1.0).max(0.0))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    /// Single-copy `tau`.
    pub tau: f64,
    /// `tau(rho^{(x)N})` for `N = 1..=copies`.
    pub tau_by_copies: Vec<f64>,
    pub tau_positive: bool,
    pub ppt: bool,
    pub ppt_min_eigenvalue: f64,
    pub ccnr_bound: f64,
    /// The sufficient condition fired for some `N <= copies`. `false` is not
    /// a non-distillability claim.
    pub distillable: bool,
    /// Smallest `N` at which the condition fired.
    pub distillable_at: Option<usize>,
    pub notes: Vec<String>,
}

pub fn verdict(rho: &DensityMatrix, copies: usize) -> Result<Verdict> {
    let copies = copies.max(1);
    let single = tau(rho)?;
    let mut tau_by_copies = vec![single.tau];
    for n in 2..=copies {
        tau_by_copies.push(tau_power(rho, n)?.tau);
    }
    let ppt = is_ppt(rho, PPT_TOL)?;
    let ccnr_bound = ccnr_lower_bound(rho)?;
    let tau_positive = single.tau > POSITIVE_TOL;
    let distillable_at = tau_by_copies
        .iter()
        .position(|&t| t > POSITIVE_TOL)
        .map(|i| i + 1);
    let distillable = distillable_at.is_some();

    let mut notes = Vec::new();
    if tau_positive {
        notes.push("tau > 0: entangled and 1-copy distillable".to_string());
    } else if let Some(n) = distillable_at {
        notes.push(format!(
            "tau = 0 on one copy but tau > 0 on {n} copies: distillable"
        ));
    }
    if !tau_positive && ppt.ppt {
        notes.push("tau = 0 and PPT: separability undetermined".to_string());
    }
    if !distillable && !ppt.ppt {
        notes.push(format!(
            "NPPT with tau = 0 up to {copies} cop{}: distillability undetermined",
            if copies == 1 { "y" } else { "ies" }
        ));
    }
    if tau_positive && ppt.ppt {
        // cannot happen for a valid state; surfaced rather than hidden
        notes.push("inconsistent: tau > 0 with PPT".to_string());
    }
    if ccnr_bound * ccnr_bound > single.tau {
        notes.push("realignment bound is stronger than tau for this state".to_string());
    }
    Ok(Verdict {
        tau: single.tau,
        tau_by_copies,
        tau_positive,
        ppt: ppt.ppt,
        ppt_min_eigenvalue: ppt.min_eigenvalue,
        ccnr_bound,
        distillable,
        distillable_at,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{kron, DimsSpec};
    use crate::qstate::{
        basis_state, make_horodecki_sigma, make_isotropic, make_werner3, max_entangled,
        random_mixed, PureState,
    };

    fn product_state() -> DensityMatrix {
        let a = random_mixed(&DimsSpec::new(vec![2]).unwrap(), 2, 1).unwrap();
        let b = random_mixed(&DimsSpec::new(vec![3]).unwrap(), 3, 2).unwrap();
        DensityMatrix::new(
            DimsSpec::bipartite(2, 3).unwrap(),
            kron(a.matrix(), b.matrix()).unwrap(),
        )
        .unwrap()
    }

    fn bell() -> DensityMatrix {
        PureState::new(DimsSpec::bipartite(2, 2).unwrap(), max_entangled(2))
            .unwrap()
            .projector()
    }

    #[test]
    fn ppt_cases() {
        assert!(is_ppt(&product_state(), PPT_TOL).unwrap().ppt);
        let b = is_ppt(&bell(), PPT_TOL).unwrap();
        assert!(!b.ppt);
        assert!((b.min_eigenvalue + 0.5).abs() < 1e-12);
        assert!(
            is_ppt(&make_horodecki_sigma(3.5).unwrap(), PPT_TOL)
                .unwrap()
                .ppt
        );
    }

    #[test]
    fn ccnr_cases() {
        let p = basis_state(DimsSpec::bipartite(3, 3).unwrap(), &[1, 2])
            .unwrap()
            .projector();
        assert!(ccnr_lower_bound(&p).unwrap() < 1e-12);
        assert!((ccnr_lower_bound(&bell()).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn verdict_cases() {
        let v = verdict(&make_isotropic(3, 0.9).unwrap(), 1).unwrap();
        assert!(v.distillable && v.tau_positive && !v.ppt);

        let v = verdict(&make_werner3(3.0).unwrap(), 1).unwrap();
        assert!(!v.tau_positive);
        assert!(!v.ppt);
        assert!(!v.distillable);
        assert!(v
            .notes
            .iter()
            .any(|n| n.contains("distillability undetermined")));

        let v = verdict(&product_state(), 1).unwrap();
        assert!(!v.tau_positive && v.ppt && !v.distillable);
        assert!(v
            .notes
            .iter()
            .any(|n| n.contains("separability undetermined")));
    }

    #[test]
    fn verdict_is_monotone_in_copies() {
        let rho = make_werner3(1.0).unwrap();
        let one = verdict(&rho, 1).unwrap();
        let two = verdict(&rho, 2).unwrap();
        assert!(one.distillable);
        assert!(two.distillable);
        assert_eq!(two.tau_by_copies.len(), 2);
        assert_eq!(two.tau_by_copies[0], one.tau);
    }
}
