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

//! Analytical lower bound `tau` on the squared concurrence of bipartite
//! states, distillability probes built on tensor powers, and the monogamy
//! inequality for `tau` on pure multipartite states.
//!
//! Modules, bottom up:
//! - [`linalg`]: dense complex matrices, Jacobi eigensolver, Kronecker
//!   products, subsystem permutation, partial trace/transpose, realignment.
//! - [`qstate`]: validated density matrices and pure states, plus the
//!   benchmark families and seeded random states.
//! - [`bound`]: two-qubit subspace enumeration and `tau`.
//! - [`criteria`]: PPT, realignment bound and verdicts.
//! - [`monogamy`]: tripartite and multipartite monogamy, residual entanglement.
//! - [`oracle`]: randomized convex-roof upper bound used for cross-checks.
//! - [`cli`]: state files, sweeps and the command-line front end.

pub mod bound;
pub mod cli;
pub mod criteria;
pub mod error;
pub mod linalg;
pub mod monogamy;
pub mod oracle;
pub mod qstate;

pub use error::{Error, Result};
