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

use std::collections::HashMap;
use std::process::{Command, Output};

fn ctau(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ctau"))
        .args(args)
        .output()
        .expect("spawn ctau")
}

fn values(out: &Output) -> HashMap<String, f64> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .filter_map(|l| l.split_once('='))
        .filter_map(|(k, v)| Some((k.to_string(), v.parse().ok()?)))
        .collect()
}

#[test]
fn tau_prints_key_value_line() {
    let out = ctau(&["tau", "--family", "horodecki", "--params", "alpha=4.5"]);
    assert!(out.status.success());
    let expect = 4.0 * (2.0 - 2.25f64.sqrt()).powi(2) / 147.0;
    assert!((values(&out)["tau"] - expect).abs() < 1e-12);
}

#[test]
fn exit_codes() {
    assert_eq!(ctau(&["tau"]).status.code(), Some(1));
    assert_eq!(
        ctau(&["tau", "--family", "werner3", "--params", "lambda=0.1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        ctau(&["tau", "--family", "no-such-family"]).status.code(),
        Some(1)
    );
    assert_eq!(ctau(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(ctau(&["--help"]).status.code(), Some(0));
    let missing = ctau(&["tau", "--in", "/definitely/not/here.state"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(!missing.stderr.is_empty());
}

#[test]
fn gen_round_trip_is_bit_identical() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.state");
    let out = ctau(&[
        "gen",
        "--family",
        "random-mixed",
        "--params",
        "dims=2x3,ancilla=3,seed=7",
        "--out",
        first.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let direct = values(&ctau(&[
        "tau",
        "--family",
        "random-mixed",
        "--params",
        "dims=2x3,ancilla=3,seed=7",
    ]));
    let from_file = values(&ctau(&["tau", "--in", first.to_str().unwrap()]));
    assert_eq!(direct["tau"].to_bits(), from_file["tau"].to_bits());

    // parse then re-serialize through a pure-state file as well
    let pure = dir.path().join("p.state");
    assert!(ctau(&[
        "gen",
        "--family",
        "w5",
        "--params",
        "alpha=1,beta=2,gamma=0.5,delta=1,eta=3",
        "--out",
        pure.to_str().unwrap()
    ])
    .status
    .success());
    let text = std::fs::read_to_string(&pure).unwrap();
    assert!(text.starts_with("pure 2 2 2 2 2"));
    let v = values(&ctau(&[
        "monogamy",
        "--in",
        pure.to_str().unwrap(),
        "--dims",
        "2",
        "4",
        "4",
    ]));
    assert!((v["tau_ab"] + v["tau_ac"] - v["tau_a_bc"]).abs() < 1e-9);
}

#[test]
fn sweep_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = ctau(&[
            "sweep",
            "--family",
            "horodecki",
            "--param",
            "alpha",
            "--from",
            "2",
            "--to",
            "5",
            "--steps",
            "301",
            "--metrics",
            "tau,ccnr_sq,ppt_min_eig",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        std::fs::read(path).unwrap()
    };
    let a = run("a.csv");
    assert_eq!(a, run("b.csv"));
    let text = String::from_utf8(a).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "alpha,tau,ccnr_sq,ppt_min_eig");
    assert_eq!(rows.len(), 302);
    assert!(!text.contains('\r'));
    let last: Vec<f64> = rows[301].split(',').map(|x| x.parse().unwrap()).collect();
    assert_eq!(last[0], 5.0);
    assert!((last[1] - 4.0 * 4.0 / 147.0).abs() < 1e-12);
}

#[test]
fn sweep_family_thresholds() {
    let csv = |args: &[&str]| -> Vec<Vec<f64>> {
        let out = ctau(args);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        String::from_utf8(out.stdout)
            .unwrap()
            .lines()
            .skip(1)
            .filter(|l| !l.contains('='))
            .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
            .collect()
    };
    let iso = csv(&[
        "sweep",
        "--family",
        "isotropic",
        "--param",
        "F",
        "--from",
        "0",
        "--to",
        "1",
        "--steps",
        "31",
        "--metrics",
        "tau",
        "--params",
        "d=3",
    ]);
    for row in &iso {
        if row[0] <= 1.0 / 3.0 {
            assert_eq!(row[1], 0.0, "F={}", row[0]);
        } else {
            assert!(row[1] > 0.0);
        }
    }
    let werner = csv(&[
        "sweep",
        "--family",
        "werner3",
        "--param",
        "lambda",
        "--from",
        "0.5",
        "--to",
        "3",
        "--steps",
        "26",
        "--metrics",
        "tau",
    ]);
    for row in &werner {
        assert_eq!(row[1] == 0.0, row[0] >= 2.0, "lambda={}", row[0]);
    }
}

#[test]
fn verdict_reports_each_copy_count() {
    let v = values(&ctau(&[
        "verdict", "--family", "werner3", "--params", "lambda=1", "--copies", "2",
    ]));
    assert!(v["tau"] > 0.0);
    assert!(v["tau_copies_2"].is_finite() && v["tau_copies_2"] >= 0.0);
    let v = values(&ctau(&[
        "verdict",
        "--family",
        "horodecki",
        "--params",
        "alpha=3.5",
    ]));
    assert_eq!(v["tau"], 0.0);
}

#[test]
fn oracle_sandwiches_tau() {
    let out = ctau(&[
        "oracle",
        "--family",
        "random-mixed",
        "--params",
        "dims=2x2,ancilla=2,seed=3",
        "--samples",
        "200",
        "--seed",
        "4",
    ]);
    assert!(out.status.success());
    let v = values(&out);
    assert!(v["tau"] <= v["oracle_upper_sq"] + 1e-6);
}

#[test]
fn residuals_and_partitions() {
    let v = values(&ctau(&[
        "residual-closed",
        "--family",
        "ghz3",
        "--dims",
        "2",
        "2",
        "2",
    ]));
    assert!((v["residual_closed"] - 1.0).abs() < 1e-10);
    let v = values(&ctau(&[
        "multi-monogamy",
        "--family",
        "w5",
        "--params",
        "alpha=1,beta=1,gamma=1,delta=1,eta=1",
        "--partition",
        "0|1,2|3,4",
    ]));
    assert!((v["tau_sum"] - v["tau_total"]).abs() < 1e-9);
    let bad = ctau(&[
        "multi-monogamy",
        "--family",
        "w5",
        "--params",
        "alpha=1,beta=1,gamma=1,delta=1,eta=1",
        "--partition",
        "0|0,1",
    ]);
    assert_eq!(bad.status.code(), Some(1));
}
