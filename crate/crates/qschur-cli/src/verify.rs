//! The `verify` subcommand: re-runs the library's invariant suites at
//! user-chosen sizes and q values and reports every residual as JSON.
//! Checks needing a finite q are skipped for symbolic entries of the q
//! list; the purely combinatorial endpoint checks run once regardless.

use std::collections::BTreeMap;

use clap::ValueEnum;
use serde::Serialize;

use qschur_core::error::Result;
use qschur_core::gtj::{verify_serre, verify_serre_word, word_generator_action, Generator};
use qschur_core::hecke::{t_action_word, verify_hecke_relations_word, verify_hecke_relations_yyh};
use qschur_core::insertion::{all_words, dual_rsk_word, rsk_word_signed};
use qschur_core::matrix::{commutator_defect, orthogonality_defect};
use qschur_core::pieri::{pieri_matrix, CrystalLimit};
use qschur_core::qarith::{qint, qint_ratio, qpow_half};
use qschur_core::schurweyl::{crystal_limit_transform, schur_apply, verify_intertwiners, Direction};
use qschur_core::tableaux::Partition;
use qschur_core::QParam;

use crate::document::q_tag;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Qarith,
    Gtj,
    Hecke,
    Pieri,
    Schurweyl,
    All,
}

impl Suite {
    fn covers(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }

    fn name(self) -> &'static str {
        match self {
            Suite::Qarith => "qarith",
            Suite::Gtj => "gtj",
            Suite::Hecke => "hecke",
            Suite::Pieri => "pieri",
            Suite::Schurweyl => "schurweyl",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub residual: f64,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub n: usize,
    pub d: usize,
    pub q_list: Vec<String>,
    pub tolerance: f64,
    pub passed: bool,
    pub checks: Vec<Check>,
}

struct Recorder {
    tolerance: f64,
    checks: Vec<Check>,
}

impl Recorder {
    fn add(&mut self, name: &str, params: &[(&str, String)], residual: f64) {
        self.checks.push(Check {
            name: name.to_string(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            residual,
            pass: residual <= self.tolerance,
        });
    }
}

pub fn run(
    suite: Suite,
    n: usize,
    d: usize,
    qs: &[QParam<f64>],
    tolerance: f64,
) -> Result<Report> {
    let mut rec = Recorder { tolerance, checks: Vec::new() };
    if suite.covers(Suite::Qarith) {
        qarith_checks(&mut rec, qs)?;
    }
    if suite.covers(Suite::Gtj) {
        gtj_checks(&mut rec, n, d, qs)?;
    }
    if suite.covers(Suite::Hecke) {
        hecke_checks(&mut rec, n, d, qs)?;
    }
    if suite.covers(Suite::Pieri) {
        pieri_checks(&mut rec, n, d, qs)?;
    }
    if suite.covers(Suite::Schurweyl) {
        schurweyl_checks(&mut rec, n, d, qs)?;
    }
    let passed = rec.checks.iter().all(|c| c.pass);
    Ok(Report {
        suite: suite.name().to_string(),
        n,
        d,
        q_list: qs.iter().map(q_tag).collect(),
        tolerance,
        passed,
        checks: rec.checks,
    })
}

fn relative(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).abs() / rhs.abs().max(1.0)
}

/// Quantum-integer identities: [a]² − 1 = [a−1][a+1], invariance under
/// q ↔ 1/q, ratio/power consistency. Relative residuals, since [a] grows
/// like q^{a−1}.
fn qarith_checks(rec: &mut Recorder, qs: &[QParam<f64>]) -> Result<()> {
    for q in qs {
        let QParam::Finite(v) = *q else { continue };
        let tag = q_tag(q);
        let inv = QParam::finite(1.0 / v)?;
        let mut identity = 0.0f64;
        let mut symmetry = 0.0f64;
        let mut ratio = 0.0f64;
        for a in 1..=8u32 {
            let qa = qint(a, q)?.value();
            identity = identity.max(relative(
                qa * qa - 1.0,
                qint(a - 1, q)?.value() * qint(a + 1, q)?.value(),
            ));
            symmetry = symmetry.max(relative(qa, qint(a, &inv)?.value()));
            ratio = ratio.max(relative(
                qint_ratio(a, 8, q)?.value(),
                qa / qint(8, q)?.value(),
            ));
        }
        let power = qpow_half(5, q)?.value() * qpow_half(-5, q)?.value();
        rec.add("qarith/squared-bracket-identity", &[("q", tag.clone())], identity);
        rec.add("qarith/q-inverse-symmetry", &[("q", tag.clone())], symmetry);
        rec.add("qarith/ratio-consistency", &[("q", tag.clone())], ratio);
        rec.add("qarith/half-power-inverse", &[("q", tag)], relative(power, 1.0));
    }
    Ok(())
}

/// Defining relations of the quantum-group generators on every V^λ with
/// λ ⊢ n, and on the word basis.
fn gtj_checks(rec: &mut Recorder, n: usize, d: usize, qs: &[QParam<f64>]) -> Result<()> {
    for q in qs {
        if q.is_symbolic() {
            continue;
        }
        let tag = q_tag(q);
        for lambda in Partition::all_of(n, d) {
            let residual = verify_serre(&lambda, d, q)?;
            rec.add(
                "gtj/defining-relations",
                &[("lambda", lambda.to_string()), ("d", d.to_string()), ("q", tag.clone())],
                residual,
            );
        }
        rec.add(
            "gtj/defining-relations-word",
            &[("n", n.to_string()), ("d", d.to_string()), ("q", tag.clone())],
            verify_serre_word(n, d, q)?,
        );
    }
    Ok(())
}

fn quantum_group_generators(d: usize) -> Vec<Generator> {
    let mut gens: Vec<Generator> = (1..d)
        .flat_map(|i| [Generator::F(i), Generator::E(i)])
        .collect();
    gens.extend((1..=d).map(Generator::QhHalf));
    gens
}

/// Quadratic/braid/commutation relations on every seminormal R^λ with
/// λ ⊢ n and on the word basis, plus mutual commutation of the two word
/// actions.
fn hecke_checks(rec: &mut Recorder, n: usize, d: usize, qs: &[QParam<f64>]) -> Result<()> {
    for q in qs {
        if q.is_symbolic() {
            continue;
        }
        let tag = q_tag(q);
        for lambda in Partition::all_of(n, n) {
            let residual = verify_hecke_relations_yyh(&lambda, q)?;
            rec.add(
                "hecke/relations-seminormal",
                &[("lambda", lambda.to_string()), ("q", tag.clone())],
                residual,
            );
        }
        rec.add(
            "hecke/relations-word",
            &[("n", n.to_string()), ("d", d.to_string()), ("q", tag.clone())],
            verify_hecke_relations_word(n, d, q)?,
        );
        let mut commutation = 0.0f64;
        for i in 1..n {
            let t = t_action_word(n, d, i, q)?.data;
            for g in quantum_group_generators(d) {
                let m = word_generator_action(n, d, g, q)?.data;
                commutation = commutation.max(commutator_defect(&t, &m));
            }
        }
        rec.add(
            "hecke/commutes-with-quantum-group",
            &[("n", n.to_string()), ("d", d.to_string()), ("q", tag)],
            commutation,
        );
    }
    Ok(())
}

/// Column orthonormality of every Pieri transform feeding an n-letter
/// cascade (source shapes of size < n). Runs at symbolic q too, where the
/// matrix must be a signed partial permutation.
fn pieri_checks(rec: &mut Recorder, n: usize, d: usize, qs: &[QParam<f64>]) -> Result<()> {
    for q in qs {
        let tag = q_tag(q);
        for m in 0..n {
            for lambda in Partition::all_of(m, d) {
                let pm = pieri_matrix(&lambda, d, q)?;
                rec.add(
                    "pieri/column-orthonormality",
                    &[("lambda", lambda.to_string()), ("d", d.to_string()), ("q", tag.clone())],
                    orthogonality_defect(&pm.matrix.data),
                );
            }
        }
    }
    Ok(())
}

fn unit_state(dim: usize) -> Vec<f64> {
    let mut x = 0x9e3779b97f4a7c15u64;
    let mut v: Vec<f64> = (0..dim)
        .map(|_| {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            (x as f64 / u64::MAX as f64) - 0.5
        })
        .collect();
    let norm: f64 = v.iter().map(|a| a * a).sum::<f64>().sqrt();
    for a in &mut v {
        *a /= norm;
    }
    v
}

/// Endpoint permutation checks (q-independent), a forward/inverse
/// round-trip per q, and the full intertwining report at each finite q.
fn schurweyl_checks(rec: &mut Recorder, n: usize, d: usize, qs: &[QParam<f64>]) -> Result<()> {
    let size_params = [("n", n.to_string()), ("d", d.to_string())];
    for (limit, name) in [
        (CrystalLimit::Infinity, "schurweyl/crystal-infinity-is-signed-rsk"),
        (CrystalLimit::Zero, "schurweyl/crystal-zero-is-dual-rsk"),
    ] {
        let table = crystal_limit_transform(n, d, limit)?;
        let mut mismatches = 0usize;
        for (w_idx, w) in all_words(n, d).iter().enumerate() {
            let (pair, sign) = match limit {
                CrystalLimit::Infinity => rsk_word_signed(w),
                CrystalLimit::Zero => (dual_rsk_word(w), 1),
            };
            let label = &table.labels[table.target[w_idx]];
            if label.p != pair.p || label.q != pair.q || table.sign[w_idx] != sign {
                mismatches += 1;
            }
        }
        rec.add(name, &size_params, mismatches as f64 / d.pow(n as u32).max(1) as f64);
    }
    for q in qs {
        let tag = q_tag(q);
        let state = unit_state(d.pow(n as u32));
        let (mid, _) = schur_apply(&state, Direction::Forward, n, d, q)?;
        let (back, _) = schur_apply(&mid, Direction::Inverse, n, d, q)?;
        let roundtrip = state
            .iter()
            .zip(&back)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        rec.add(
            "schurweyl/apply-roundtrip",
            &[("n", n.to_string()), ("d", d.to_string()), ("q", tag.clone())],
            roundtrip,
        );
        if q.is_symbolic() {
            continue;
        }
        let report = verify_intertwiners(n, d, q)?;
        let params = [("n", n.to_string()), ("d", d.to_string()), ("q", tag)];
        rec.add("schurweyl/unitarity", &params, report.unitarity_defect);
        rec.add("schurweyl/hecke-intertwiner", &params, report.hecke_residual);
        rec.add("schurweyl/qgroup-intertwiner", &params, report.qgroup_residual);
    }
    Ok(())
}
