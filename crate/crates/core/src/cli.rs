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

//! Command-line front end: the state file format, family generators by
//! name, parameter sweeps to CSV and subcommand dispatch.
//!
//! State files are plain text. The first non-blank, non-`#` line is a header
//! `density d1 d2 [d3 ...]` or `pure d1 d2 [d3 ...]`; the body lists complex
//! entries `a+bi` / `a-bi` separated by whitespace, row-major for density
//! matrices (`side^2` entries) and in basis order for pure states (`side`
//! entries).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::bound::{pure_concurrence_sq, tau};
use crate::criteria::{ccnr_lower_bound, is_ppt, verdict, PPT_TOL};
use crate::error::{Error, Result};
use crate::linalg::{c64, ComplexMatrix, DimsSpec, C64};
use crate::monogamy::{monogamy_multipartite, monogamy_tripartite, residual_closed_form};
use crate::oracle::{convex_roof_search, OracleConfig};
use crate::qstate::{
    make_aharonov, make_generalized_w, make_ghz3, make_horodecki_sigma, make_isotropic, make_w3,
    make_werner3, max_entangled, random_mixed, random_pure, DensityMatrix, PureState,
};

/// A parsed or generated state.
#[derive(Debug, Clone, PartialEq)]
pub enum ParsedState {
    Density(DensityMatrix),
    Pure(PureState),
}

impl ParsedState {
    pub fn to_density(&self) -> DensityMatrix {
        match self {
            ParsedState::Density(d) => d.clone(),
            ParsedState::Pure(p) => p.projector(),
        }
    }

    pub fn as_pure(&self) -> Result<&PureState> {
        match self {
            ParsedState::Pure(p) => Ok(p),
            ParsedState::Density(_) => Err(Error::invalid("this command needs a pure state")),
        }
    }

    /// Serializes in the state file format.
    pub fn to_text(&self) -> String {
        match self {
            ParsedState::Density(d) => format_density(d),
            ParsedState::Pure(p) => format_pure(p),
        }
    }
}

/// `a+bi` with 17 significant digits in each part; round-trips bit-exactly.
pub fn format_complex(z: C64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{:.16e}{}{:.16e}i", z.re, sign, z.im.abs())
}

/// Parses `a`, `bi`, `a+bi` or `a-bi` (exponents allowed in both parts).
pub fn parse_complex(tok: &str) -> std::result::Result<C64, String> {
    let bad = || format!("malformed complex number {tok:?}");
    let Some(body) = tok.strip_suffix(['i', 'j']) else {
        return tok.parse::<f64>().map(|re| c64(re, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&p| (bytes[p] == b'+' || bytes[p] == b'-') && !matches!(bytes[p - 1], b'e' | b'E'));
    let (re_part, im_part) = match split {
        Some(p) => (&body[..p], &body[p..]),
        None => ("0", body),
    };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => s.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re_part.parse::<f64>().map_err(|_| bad())?;
    if !re.is_finite() || !im.is_finite() {
        return Err(bad());
    }
    Ok(c64(re, im))
}

pub fn format_density(rho: &DensityMatrix) -> String {
    let mut out = header("density", rho.dims());
    let m = rho.matrix();
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| format_complex(m[(r, c)])).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn format_pure(psi: &PureState) -> String {
    let mut out = header("pure", psi.dims());
    for z in psi.amplitudes() {
        out.push_str(&format_complex(*z));
        out.push('\n');
    }
    out
}

fn header(kind: &str, dims: &DimsSpec) -> String {
    let d: Vec<String> = dims.factors().iter().map(|d| d.to_string()).collect();
    format!("{kind} {}\n", d.join(" "))
}

/// Parses and validates a state file.
pub fn parse_state(text: &str) -> Result<ParsedState> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, head) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let mut words = head.split_whitespace();
    let kind = words.next().unwrap_or_default();
    if kind != "density" && kind != "pure" {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header must start with 'density' or 'pure', found {kind:?}"),
        });
    }
    let factors = words
        .map(|w| w.parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| Error::Parse {
            line: hline,
            msg: format!("bad dimension: {e}"),
        })?;
    let dims = DimsSpec::new(factors).map_err(|e| Error::Parse {
        line: hline,
        msg: e.to_string(),
    })?;
    let side = dims.total();
    let expected = if kind == "density" { side * side } else { side };

    let mut entries = Vec::with_capacity(expected);
    let mut last_line = hline;
    for (n, line) in lines {
        last_line = n;
        for tok in line.split_whitespace() {
            if entries.len() == expected {
                return Err(Error::Parse {
                    line: n,
                    msg: format!("too many entries, expected {expected}"),
                });
            }
            entries.push(parse_complex(tok).map_err(|msg| Error::Parse { line: n, msg })?);
        }
    }
    if entries.len() != expected {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("expected {expected} entries, found {}", entries.len()),
        });
    }
    if kind == "density" {
        let m = ComplexMatrix::from_vec(side, side, entries)?;
        Ok(ParsedState::Density(DensityMatrix::new(dims, m)?))
    } else {
        Ok(ParsedState::Pure(PureState::new(dims, entries)?))
    }
}

pub fn read_state_file(path: &std::path::Path) -> Result<ParsedState> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_state(&text)
}

/// `k=v` parameters, accepted as repeated flags or comma-separated.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for item in items {
            for kv in item.as_ref().split(',').filter(|s| !s.trim().is_empty()) {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| Error::invalid(format!("parameter {kv:?} is not k=v")))?;
                map.insert(k.trim().to_string(), v.trim().to_string());
            }
        }
        Ok(Params(map))
    }

    fn get_f64(&self, keys: &[&str]) -> Result<Option<f64>> {
        for k in keys {
            if let Some(v) = self.0.get(*k) {
                return v
                    .parse()
                    .map(Some)
                    .map_err(|_| Error::invalid(format!("parameter {k}={v} is not a number")));
            }
        }
        Ok(None)
    }

    fn require_f64(&self, keys: &[&str]) -> Result<f64> {
        self.get_f64(keys)?
            .ok_or_else(|| Error::invalid(format!("missing parameter {}", keys[0])))
    }

    fn get_usize(&self, key: &str) -> Result<Option<usize>> {
        self.0
            .get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| Error::invalid(format!("parameter {key}={v} is not an integer")))
            })
            .transpose()
    }

    fn get_dims(&self) -> Result<Option<DimsSpec>> {
        self.0
            .get("dims")
            .map(|v| {
                let f = v
                    .split(['x', ' ', ':'])
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::invalid(format!("dims={v} is not like 2x3")))?;
                DimsSpec::new(f)
            })
            .transpose()
    }
}

/// Named state families understood by `--family` and `gen`.
pub const FAMILIES: &[&str] = &[
    "horodecki",
    "isotropic",
    "werner3",
    "aharonov",
    "w5",
    "ghz3",
    "w3",
    "bell",
    "random-pure",
    "random-mixed",
];

/// Builds a named family member.
pub fn generate(family: &str, params: &Params) -> Result<ParsedState> {
    Ok(match family {
        "horodecki" => ParsedState::Density(make_horodecki_sigma(params.require_f64(&["alpha"])?)?),
        "isotropic" => ParsedState::Density(make_isotropic(
            params.get_usize("d")?.unwrap_or(3),
            params.require_f64(&["F", "f", "fidelity"])?,
        )?),
        "werner3" => ParsedState::Density(make_werner3(params.require_f64(&["lambda", "lam"])?)?),
        "aharonov" => ParsedState::Pure(make_aharonov()),
        "w5" => {
            let names = ["alpha", "beta", "gamma", "delta", "eta"];
            let mut coeffs = [c64(1.0, 0.0); 5];
            for (c, name) in coeffs.iter_mut().zip(names) {
                if let Some(v) = params.get_f64(&[name])? {
                    *c = c64(v, 0.0);
                }
            }
            ParsedState::Pure(make_generalized_w(coeffs, true)?)
        }
        "ghz3" => ParsedState::Pure(make_ghz3()),
        "w3" => ParsedState::Pure(make_w3()),
        "bell" => ParsedState::Pure(PureState::new(
            DimsSpec::bipartite(2, 2)?,
            max_entangled(2),
        )?),
        "random-pure" => {
            let dims = params.get_dims()?.unwrap_or(DimsSpec::bipartite(2, 2)?);
            let seed = params.get_usize("seed")?.unwrap_or(0) as u64;
            ParsedState::Pure(random_pure(&dims, seed))
        }
        "random-mixed" => {
            let dims = params.get_dims()?.unwrap_or(DimsSpec::bipartite(2, 2)?);
            let seed = params.get_usize("seed")?.unwrap_or(0) as u64;
            let anc = params.get_usize("ancilla")?.unwrap_or(dims.total());
            ParsedState::Density(random_mixed(&dims, anc, seed)?)
        }
        other => {
            return Err(Error::invalid(format!(
                "unknown family {other:?}; known: {}",
                FAMILIES.join(", ")
            )))
        }
    })
}

/// Quantities a sweep can tabulate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Tau,
    CcnrSq,
    PptMinEig,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::Tau => "tau",
            Metric::CcnrSq => "ccnr_sq",
            Metric::PptMinEig => "ppt_min_eig",
        }
    }

    pub fn parse_list(list: &str) -> Result<Vec<Metric>> {
        let metrics = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| match s {
                "tau" => Ok(Metric::Tau),
                "ccnr_sq" => Ok(Metric::CcnrSq),
                "ppt_min_eig" => Ok(Metric::PptMinEig),
                other => Err(Error::invalid(format!(
                    "unknown metric {other:?}; known: tau, ccnr_sq, ppt_min_eig"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        if metrics.is_empty() {
            return Err(Error::invalid("no metrics requested"));
        }
        Ok(metrics)
    }

    fn eval(self, rho: &DensityMatrix) -> Result<f64> {
        match self {
            Metric::Tau => Ok(tau(rho)?.tau),
            Metric::CcnrSq => Ok(ccnr_lower_bound(rho)?.powi(2)),
            Metric::PptMinEig => Ok(is_ppt(rho, PPT_TOL)?.min_eigenvalue),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub family: String,
    pub param: String,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    pub metrics: Vec<Metric>,
    /// Fixed parameters of the family (e.g. `d` for isotropic states).
    pub fixed: Params,
}

fn sweep_param_keys(family: &str) -> Result<&'static [&'static str]> {
    match family {
        "horodecki" => Ok(&["alpha"]),
        "isotropic" => Ok(&["F", "f", "fidelity"]),
        "werner3" => Ok(&["lambda", "lam"]),
        other => Err(Error::invalid(format!(
            "family {other:?} cannot be swept; use horodecki, isotropic or werner3"
        ))),
    }
}

/// Formats a CSV number with 17 significant digits.
pub fn csv_number(x: f64) -> String {
    format!("{x:.16e}")
}

/// Evaluates the metrics on an inclusive uniform grid and returns the CSV.
pub fn run_sweep(spec: &SweepSpec) -> Result<String> {
    let keys = sweep_param_keys(&spec.family)?;
    if !keys.contains(&spec.param.as_str()) {
        return Err(Error::invalid(format!(
            "family {} is swept over {}, not {:?}",
            spec.family, keys[0], spec.param
        )));
    }
    if spec.steps < 2 {
        return Err(Error::invalid("a sweep needs at least 2 steps"));
    }
    if !spec.from.is_finite() || !spec.to.is_finite() {
        return Err(Error::invalid("sweep bounds must be finite"));
    }
    let grid: Vec<f64> = (0..spec.steps)
        .map(|k| {
            if k == spec.steps - 1 {
                spec.to
            } else {
                spec.from + (spec.to - spec.from) * k as f64 / (spec.steps - 1) as f64
            }
        })
        .collect();
    let rows: Vec<Vec<f64>> = grid
        .par_iter()
        .map(|&x| {
            let mut p = spec.fixed.clone();
            p.0.insert(spec.param.clone(), x.to_string());
            let rho = generate(&spec.family, &p)?.to_density();
            spec.metrics.iter().map(|m| m.eval(&rho)).collect()
        })
        .collect::<Result<_>>()?;

    let mut out = String::new();
    out.push_str(&spec.param);
    for m in &spec.metrics {
        out.push(',');
        out.push_str(m.name());
    }
    out.push('\n');
    for (x, row) in grid.iter().zip(rows) {
        out.push_str(&csv_number(*x));
        for v in row {
            out.push(',');
            out.push_str(&csv_number(v));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Parses `0|1,2|3` into groups `[[0], [1, 2], [3]]`.
pub fn parse_partition(spec: &str) -> Result<Vec<Vec<usize>>> {
    spec.split('|')
        .map(|g| {
            g.split(',')
                .map(|s| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::invalid(format!("bad partition group {g:?}")))
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Parser)]
#[command(
    name = "ctau",
    version,
    about = "Concurrence lower bound, distillability and monogamy tools"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct StateInput {
    /// State file to read.
    #[arg(long = "in", value_name = "FILE", conflicts_with = "family")]
    pub input: Option<PathBuf>,
    /// Named family to generate instead of reading a file.
    #[arg(long)]
    pub family: Option<String>,
    /// Family parameters, `k=v` (repeatable or comma separated).
    #[arg(long, value_name = "K=V", num_args = 1..)]
    pub params: Vec<String>,
}

impl StateInput {
    pub fn load(&self) -> Result<ParsedState> {
        match (&self.input, &self.family) {
            (Some(path), _) => read_state_file(path),
            (None, Some(f)) => generate(f, &Params::parse(&self.params)?),
            (None, None) => Err(Error::invalid("provide --in FILE or --family NAME")),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lower bound tau on the squared concurrence.
    Tau {
        #[command(flatten)]
        state: StateInput,
        /// Also list every subspace with a positive contribution.
        #[arg(long)]
        details: bool,
    },
    /// Squared concurrence of a pure state across the cut after the first k subsystems.
    ConcurrencePure {
        #[command(flatten)]
        state: StateInput,
        #[arg(long, default_value_t = 1)]
        cut: usize,
    },
    /// Partial-transpose test.
    Ppt {
        #[command(flatten)]
        state: StateInput,
    },
    /// Realignment / partial-transpose concurrence lower bound.
    Ccnr {
        #[command(flatten)]
        state: StateInput,
    },
    /// Distillability evidence from tau on up to N copies.
    Verdict {
        #[command(flatten)]
        state: StateInput,
        #[arg(long, default_value_t = 1)]
        copies: usize,
    },
    /// Tripartite monogamy of tau for a pure state.
    Monogamy {
        #[command(flatten)]
        state: StateInput,
        #[arg(long, num_args = 3, value_names = ["D1", "D2", "D3"])]
        dims: Vec<usize>,
    },
    /// Residual entanglement from the coefficient formula.
    ResidualClosed {
        #[command(flatten)]
        state: StateInput,
        #[arg(long, num_args = 3, value_names = ["D1", "D2", "D3"])]
        dims: Vec<usize>,
    },
    /// Multipartite monogamy; SPEC like `0|1|2,3` (first group is A).
    MultiMonogamy {
        #[command(flatten)]
        state: StateInput,
        #[arg(long, value_name = "SPEC")]
        partition: String,
    },
    /// Randomized convex-roof upper bound on the concurrence.
    Oracle {
        #[command(flatten)]
        state: StateInput,
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        refine: usize,
    },
    /// Tabulate metrics over a family parameter grid as CSV.
    Sweep {
        #[arg(long)]
        family: String,
        #[arg(long)]
        param: String,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value = "tau")]
        metrics: String,
        /// Fixed family parameters, e.g. `d=3`.
        #[arg(long, value_name = "K=V", num_args = 1..)]
        params: Vec<String>,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a family member to a state file.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long, value_name = "K=V", num_args = 1..)]
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Human-readable lines followed by `key=value` lines.
#[derive(Debug, Default, Clone, PartialEq)]
pub struct Report {
    pub lines: Vec<String>,
    pub values: Vec<(String, String)>,
}

impl Report {
    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn num(&mut self, key: &str, v: f64) {
        self.values.push((key.to_string(), format!("{v:.17e}")));
    }

    fn flag(&mut self, key: &str, v: bool) {
        self.values.push((key.to_string(), v.to_string()));
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            let _ = writeln!(s, "{l}");
        }
        for (k, v) in &self.values {
            let _ = writeln!(s, "{k}={v}");
        }
        s
    }
}

fn write_output(path: &Option<PathBuf>, text: &str, report: &mut Report) -> Result<()> {
    match path {
        Some(p) => {
            std::fs::write(p, text)
                .map_err(|e| Error::invalid(format!("cannot write {}: {e}", p.display())))?;
            report.line(format!("wrote {}", p.display()));
        }
        None => report.line(text.trim_end().to_string()),
    }
    Ok(())
}

fn dims3(dims: &[usize]) -> Result<(usize, usize, usize)> {
    match dims {
        &[a, b, c] => Ok((a, b, c)),
        _ => Err(Error::invalid("--dims needs exactly three values")),
    }
}

/// Executes one subcommand.
pub fn run(cli: Cli) -> Result<Report> {
    let mut r = Report::default();
    match cli.command {
        Command::Tau { state, details } => {
            let rho = state.load()?.to_density();
            let rep = tau(&rho)?;
            r.line(format!(
                "tau = {:.12} over {} two-qubit subspaces",
                rep.tau,
                rep.per_subspace.len()
            ));
            if details {
                for t in rep.positive_terms() {
                    let q = t.quad;
                    r.line(format!(
                        "  ({},{};{},{}) C = {:.12}",
                        q.i, q.j, q.k, q.l, t.concurrence
                    ));
                }
            }
            r.num("tau", rep.tau);
        }
        Command::ConcurrencePure { state, cut } => {
            let loaded = state.load()?;
            let psi = loaded.as_pure()?;
            let group: Vec<usize> = (0..cut).collect();
            let c2 = pure_concurrence_sq(psi, &group)?;
            r.line(format!(
                "C^2 = {c2:.12} across the cut after subsystem {cut}"
            ));
            r.num("concurrence_sq", c2);
        }
        Command::Ppt { state } => {
            let p = is_ppt(&state.load()?.to_density(), PPT_TOL)?;
            r.line(if p.ppt { "PPT" } else { "NPPT" });
            r.flag("ppt", p.ppt);
            r.num("ppt_min_eig", p.min_eigenvalue);
        }
        Command::Ccnr { state } => {
            let b = ccnr_lower_bound(&state.load()?.to_density())?;
            r.line(format!("realignment concurrence bound = {b:.12}"));
            r.num("ccnr", b);
            r.num("ccnr_sq", b * b);
        }
        Command::Verdict { state, copies } => {
            let v = verdict(&state.load()?.to_density(), copies)?;
            for n in &v.notes {
                r.line(n.clone());
            }
            r.num("tau", v.tau);
            for (n, t) in v.tau_by_copies.iter().enumerate().skip(1) {
                r.num(&format!("tau_copies_{}", n + 1), *t);
            }
            r.flag("tau_positive", v.tau_positive);
            r.flag("ppt", v.ppt);
            r.num("ppt_min_eig", v.ppt_min_eigenvalue);
            r.num("ccnr", v.ccnr_bound);
            r.flag("distillable", v.distillable);
        }
        Command::Monogamy { state, dims } => {
            let (d1, d2, d3) = dims3(&dims)?;
            let loaded = state.load()?;
            let m = monogamy_tripartite(loaded.as_pure()?, d1, d2, d3)?;
            r.line(format!(
                "tau(AB) + tau(AC) = {:.12} {} tau(A:BC) = {:.12}",
                m.tau_ab + m.tau_ac,
                if m.satisfied { "<=" } else { ">" },
                m.tau_a_bc
            ));
            r.num("tau_ab", m.tau_ab);
            r.num("tau_ac", m.tau_ac);
            r.num("tau_a_bc", m.tau_a_bc);
            r.num("residual", m.residual);
            r.num("closed_form", m.closed_form);
            r.flag("satisfied", m.satisfied);
        }
        Command::ResidualClosed { state, dims } => {
            let (d1, d2, d3) = dims3(&dims)?;
            let loaded = state.load()?;
            let v = residual_closed_form(loaded.as_pure()?, d1, d2, d3)?;
            r.line(format!("residual (coefficient formula) = {v:.12}"));
            r.num("residual_closed", v);
        }
        Command::MultiMonogamy { state, partition } => {
            let groups = parse_partition(&partition)?;
            let loaded = state.load()?;
            let m = monogamy_multipartite(loaded.as_pure()?, &groups)?;
            r.line(format!(
                "sum tau(A B_i) = {:.12} {} tau(A:B) = {:.12}",
                m.sum,
                if m.satisfied { "<=" } else { ">" },
                m.tau_total
            ));
            for (i, t) in m.per_pair.iter().enumerate() {
                r.num(&format!("tau_a_b{}", i + 1), *t);
            }
            r.num("tau_sum", m.sum);
            r.num("tau_total", m.tau_total);
            r.flag("satisfied", m.satisfied);
        }
        Command::Oracle {
            state,
            samples,
            seed,
            refine,
        } => {
            let rho = state.load()?.to_density();
            let cfg = OracleConfig {
                samples,
                seed,
                refine_steps: refine,
                ..OracleConfig::default()
            };
            let est = convex_roof_search(&rho, &cfg)?;
            let t = tau(&rho)?.tau;
            r.line(format!(
                "convex-roof upper bound C <= {:.9} (tau = {:.9}, C^2 >= tau)",
                est.value, t
            ));
            r.num("oracle_upper", est.value);
            r.num("oracle_upper_sq", est.value * est.value);
            r.num("tau", t);
        }
        Command::Sweep {
            family,
            param,
            from,
            to,
            steps,
            metrics,
            params,
            out,
        } => {
            let spec = SweepSpec {
                family,
                param,
                from,
                to,
                steps,
                metrics: Metric::parse_list(&metrics)?,
                fixed: Params::parse(&params)?,
            };
            let csv = run_sweep(&spec)?;
            write_output(&out, &csv, &mut r)?;
            r.values.push(("rows".into(), steps.to_string()));
        }
        Command::Gen {
            family,
            params,
            out,
        } => {
            let st = generate(&family, &Params::parse(&params)?)?;
            write_output(&out, &st.to_text(), &mut r)?;
        }
    }
    Ok(r)
}
