//! The cascaded insertion transform on V^⊗n: n−1 controlled Pieri stages
//! turn the word basis into the (λ, P, Q) basis, where P is a semistandard
//! tableau carrying the quantum-group register and Q a standard tableau
//! recording the cover path of the cascade.
//!
//! Three realizations share the same stage data: a dense matrix
//! ([`schur_transform_dense`], capped because it is quadratic in d^n), a
//! matrix-free streaming application ([`schur_apply`], quasilinear in d^n),
//! and the exact endpoint tables ([`crystal_limit_transform`]), which
//! reproduce row insertion (q → ∞, with bumping signs) and column insertion
//! (q → 0, sign-free). [`verify_intertwiners`] checks the defining property:
//! conjugation by the transform turns the word actions of both symmetries
//! into their block-diagonal tableau forms, up to one diagonal ±1 matrix
//! per block.

use std::collections::HashMap;

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::gtj::{generator_matrix, word_generator_action, word_label, Generator};
use crate::hecke::{t_action_word, t_matrix_yyh};
use crate::insertion::all_words;
use crate::matrix::{identity, kron, max_abs_diff, LabeledMatrix};
use crate::parallel;
use crate::pieri::{insertion_amplitudes, CrystalLimit};
use crate::qarith::QParam;
use crate::tableaux::{
    enumerate_ssyt, enumerate_syt, Partition, SemiStandardTableau, StandardTableau,
};
use crate::Float;

/// Default cap on the dense transform dimension d^n.
pub const DENSE_DIMENSION_CAP: usize = 4096;

/// One output basis vector of the transform: an isotypic shape together
/// with its quantum-group tableau P and multiplicity tableau Q.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchurBasisLabel {
    pub lambda: Partition,
    pub p: SemiStandardTableau,
    pub q: StandardTableau,
}

impl std::fmt::Display for SchurBasisLabel {
    /// `[2,1]|1,1/2|1,2/3` — shape, P, Q separated by `|`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}|{}|{}", self.lambda, self.p, self.q)
    }
}

/// All (λ, P, Q) labels for words of length `n` over `1..=d`, in canonical
/// order: shapes in descending lexicographic order, Q varying slower than P
/// within a shape, both in reading-word order. The count is d^n.
pub fn schur_basis(n: usize, d: usize) -> Vec<SchurBasisLabel> {
    let mut out = Vec::new();
    for lambda in Partition::all_of(n, d) {
        let ps = enumerate_ssyt(&lambda, d).expect("shape fits the alphabet");
        for q in enumerate_syt(&lambda) {
            for p in &ps {
                out.push(SchurBasisLabel {
                    lambda: lambda.clone(),
                    p: p.clone(),
                    q: q.clone(),
                });
            }
        }
    }
    out
}

/// λ-blocks of the canonical basis: (shape, row offset, |SSYT|, |SYT|).
fn lambda_blocks(n: usize, d: usize) -> Vec<(Partition, usize, usize, usize)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for lambda in Partition::all_of(n, d) {
        let n_p = enumerate_ssyt(&lambda, d).expect("shape fits the alphabet").len();
        let n_q = enumerate_syt(&lambda).len();
        out.push((lambda, offset, n_p, n_q));
        offset += n_p * n_q;
    }
    out
}

/// One cascade stage: for each (source label, letter) column, the list of
/// (target label, amplitude) pairs, plus the target basis it maps into.
struct Stage<S> {
    columns: Vec<Vec<(usize, S)>>,
    targets: Vec<SchurBasisLabel>,
}

/// The recording tableau grown by one box: `k` placed at `row`.
fn record_box(q: &StandardTableau, k: usize, row: usize) -> Result<StandardTableau> {
    let mut rows = q.rows().to_vec();
    if rows.len() < row {
        rows.push(Vec::new());
    }
    rows[row - 1].push(k);
    StandardTableau::new(rows)
}

/// Row in which `outer` exceeds `inner` by one box.
fn grown_row(inner: &Partition, outer: &Partition) -> usize {
    (1..=outer.len())
        .find(|&r| outer.row(r) == inner.row(r) + 1)
        .expect("outer covers inner")
}

fn build_stage<S: Float>(
    sources: &[SchurBasisLabel],
    k: usize,
    d: usize,
    q: &QParam<S>,
) -> Result<Stage<S>> {
    let targets = schur_basis(k, d);
    let index: HashMap<(SemiStandardTableau, StandardTableau), usize> = targets
        .iter()
        .enumerate()
        .map(|(a, label)| ((label.p.clone(), label.q.clone()), a))
        .collect();
    let columns = parallel::map_indexed(sources.len() * d, |col| -> Result<Vec<(usize, S)>> {
        let source = &sources[col / d];
        let letter = col % d + 1;
        let mut entries = Vec::new();
        for (s, amplitude) in insertion_amplitudes(&source.p, letter, d, q)? {
            let row = grown_row(&source.lambda, &s.shape());
            let recording = record_box(&source.q, k, row)?;
            entries.push((index[&(s, recording)], amplitude));
        }
        Ok(entries)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(Stage { columns, targets })
}

/// The full transform in dense form, with rows labeled by
/// [`schur_basis`]`(n, d)` and columns by the words of length n.
#[derive(Debug, Clone)]
pub struct SchurTransform<S> {
    pub n: usize,
    pub d: usize,
    pub labels: Vec<SchurBasisLabel>,
    pub matrix: LabeledMatrix<S>,
}

fn checked_dimension(n: usize, d: usize) -> Result<usize> {
    d.checked_pow(n as u32).ok_or_else(|| {
        Error::CapExceeded(format!("d^n overflows for d = {d}, n = {n}"))
    })
}

/// Assembles the dense d^n × d^n transform by multiplying out the cascade,
/// stage k acting on the accumulated register and the k-th letter. `cap`
/// bounds the dimension (default [`DENSE_DIMENSION_CAP`]); use
/// [`schur_apply`] for anything bigger.
pub fn schur_transform_dense<S: Float>(
    n: usize,
    d: usize,
    q: &QParam<S>,
    cap: Option<usize>,
) -> Result<SchurTransform<S>> {
    let dim = checked_dimension(n, d)?;
    let cap = cap.unwrap_or(DENSE_DIMENSION_CAP);
    if dim > cap {
        return Err(Error::CapExceeded(format!(
            "dense transform needs d^n = {dim} > cap {cap}"
        )));
    }
    let mut labels = schur_basis(0, d);
    let mut u = Array2::<S>::from_elem((1, 1), S::one());
    for k in 1..=n {
        let stage = build_stage(&labels, k, d, q)?;
        let mut s_mat = Array2::<S>::zeros((stage.targets.len(), labels.len() * d));
        for (col, entries) in stage.columns.iter().enumerate() {
            for &(row, a) in entries {
                s_mat[[row, col]] = a;
            }
        }
        u = s_mat.dot(&kron(&u, &identity::<S>(d)));
        labels = stage.targets;
    }
    let row_labels = labels.iter().map(|l| l.to_string()).collect();
    let col_labels = all_words(n, d).iter().map(|w| word_label(w)).collect();
    Ok(SchurTransform {
        n,
        d,
        labels,
        matrix: LabeledMatrix::new(row_labels, col_labels, u)?,
    })
}

/// Which way [`schur_apply`] runs the cascade.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Arithmetic effort of one [`schur_apply`] call.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ApplyStats {
    pub multiplications: u64,
    pub stages: usize,
}

/// Applies the transform (or its inverse) to a state vector of length d^n
/// without materializing the matrix: each stage streams its sparse columns
/// across the untouched letter suffix, so the total work is
/// O(n · d · d^n) multiplications.
pub fn schur_apply<S: Float>(
    state: &[S],
    direction: Direction,
    n: usize,
    d: usize,
    q: &QParam<S>,
) -> Result<(Vec<S>, ApplyStats)> {
    let dim = checked_dimension(n, d)?;
    if state.len() != dim {
        return Err(Error::DimensionMismatch(format!(
            "state has {} amplitudes, expected d^n = {dim}",
            state.len()
        )));
    }
    let mut stages = Vec::with_capacity(n);
    let mut labels = schur_basis(0, d);
    for k in 1..=n {
        let stage = build_stage(&labels, k, d, q)?;
        labels = stage.targets.clone();
        stages.push(stage);
    }
    let mut stats = ApplyStats { multiplications: 0, stages: n };
    let mut vec = state.to_vec();
    // Stages run in order, but within a stage the output groups sharing a
    // register prefix are disjoint, so they are filled in parallel; each
    // group's sum runs in a fixed order, keeping results independent of the
    // thread count.
    match direction {
        Forward => {
            for (k, stage) in stages.iter().enumerate() {
                let suffix = d.pow((n - k - 1) as u32);
                let mut by_row: Vec<Vec<(usize, S)>> = vec![Vec::new(); stage.targets.len()];
                for (col, entries) in stage.columns.iter().enumerate() {
                    for &(row, a) in entries {
                        by_row[row].push((col, a));
                        stats.multiplications += suffix as u64;
                    }
                }
                let previous = &vec;
                vec = parallel::map_indexed(by_row.len(), |row| {
                    let mut group = vec![S::zero(); suffix];
                    for &(col, a) in &by_row[row] {
                        for s in 0..suffix {
                            group[s] = group[s] + a * previous[col * suffix + s];
                        }
                    }
                    group
                })
                .concat();
            }
        }
        Inverse => {
            for (k, stage) in stages.iter().enumerate().rev() {
                let suffix = d.pow((n - k - 1) as u32);
                let previous = &vec;
                vec = parallel::map_indexed(stage.columns.len(), |col| {
                    let mut group = vec![S::zero(); suffix];
                    for &(row, a) in &stage.columns[col] {
                        for s in 0..suffix {
                            group[s] = group[s] + a * previous[row * suffix + s];
                        }
                    }
                    group
                })
                .concat();
                stats.multiplications += stage
                    .columns
                    .iter()
                    .map(|entries| entries.len() as u64 * suffix as u64)
                    .sum::<u64>();
            }
        }
    }
    debug_assert_eq!(vec.len(), dim);
    Ok((vec, stats))
}

use Direction::{Forward, Inverse};

/// The exact endpoint of the transform as a signed permutation: word w (by
/// index) maps to `labels[target[w]]` with amplitude `sign[w]`.
#[derive(Debug, Clone)]
pub struct CrystalTable {
    pub labels: Vec<SchurBasisLabel>,
    pub target: Vec<usize>,
    pub sign: Vec<i8>,
}

/// Runs the cascade at an endpoint, where every stage sends each word to a
/// single target with amplitude ±1. At `Infinity` the resulting map is row
/// insertion with its bumping sign; at `Zero` it is column insertion with
/// all signs +1.
pub fn crystal_limit_transform(n: usize, d: usize, limit: CrystalLimit) -> Result<CrystalTable> {
    let q = match limit {
        CrystalLimit::Zero => QParam::<f64>::Zero,
        CrystalLimit::Infinity => QParam::<f64>::Infinity,
    };
    let labels = schur_basis(n, d);
    let index: HashMap<(SemiStandardTableau, StandardTableau), usize> = labels
        .iter()
        .enumerate()
        .map(|(a, label)| ((label.p.clone(), label.q.clone()), a))
        .collect();
    let words = all_words(n, d);
    let mut target = Vec::with_capacity(words.len());
    let mut sign = Vec::with_capacity(words.len());
    for w in &words {
        let mut p = SemiStandardTableau::empty();
        let mut q_rec = StandardTableau::empty();
        let mut s_total = 1i8;
        for (k, &letter) in w.iter().enumerate() {
            let amps = insertion_amplitudes::<f64>(&p, letter, d, &q)?;
            assert_eq!(amps.len(), 1, "endpoint insertion is deterministic");
            let (next, a) = amps.into_iter().next().unwrap();
            let row = grown_row(&p.shape(), &next.shape());
            q_rec = record_box(&q_rec, k + 1, row)?;
            p = next;
            s_total *= if a < 0.0 { -1 } else { 1 };
        }
        target.push(index[&(p, q_rec)]);
        sign.push(s_total);
    }
    Ok(CrystalTable { labels, target, sign })
}

/// Residuals of the two intertwining checks plus the unitarity defect,
/// after recovering one diagonal ±1 matrix per λ-block (shared by both
/// checks, anchored at +1 on each block's first row).
#[derive(Debug, Clone, Copy)]
pub struct IntertwinerReport<S> {
    pub unitarity_defect: S,
    pub hecke_residual: S,
    pub qgroup_residual: S,
}

/// Greedy fixed-point sign recovery: a diagonal D ∈ {±1} with
/// D·M·D = T for every (M, T) pair, anchored at D[0] = +1; rows that no
/// target entry connects stay +1.
fn recover_signs<S: Float>(ms: &[Array2<S>], ts: &[Array2<S>], size: usize) -> Vec<S> {
    let threshold = S::from_f64(1e-6).unwrap();
    let mut d: Vec<Option<S>> = vec![None; size];
    d[0] = Some(S::one());
    let mut changed = true;
    while changed {
        changed = false;
        for (m, t) in ms.iter().zip(ts) {
            for r in 0..size {
                let Some(dr) = d[r] else { continue };
                for c in 0..size {
                    if d[c].is_none() && t[[r, c]].abs() > threshold {
                        let same = m[[r, c]] * t[[r, c]] > S::zero();
                        d[c] = Some(if same { dr } else { -dr });
                        changed = true;
                    }
                }
            }
        }
    }
    d.into_iter().map(|v| v.unwrap_or_else(S::one)).collect()
}

/// Full-size block-diagonal matrix from per-λ blocks.
fn block_diagonal<S: Float>(blocks: &[Array2<S>]) -> Array2<S> {
    let dim: usize = blocks.iter().map(|b| b.nrows()).sum();
    let mut out = Array2::zeros((dim, dim));
    let mut offset = 0;
    for b in blocks {
        let k = b.nrows();
        out.slice_mut(ndarray::s![offset..offset + k, offset..offset + k])
            .assign(b);
        offset += k;
    }
    out
}

fn conjugate<S: Float>(u: &Array2<S>, m: &Array2<S>) -> Array2<S> {
    u.dot(m).dot(&u.t())
}

/// Runs both intertwining checks on one dense transform; see
/// [`IntertwinerReport`]. The generator actions on words must turn into
/// (tableau action) ⊗ (identity) on each λ-block — the Hecke generators on
/// the Q factor, the quantum-group generators on the P factor — after one
/// shared sign conjugation.
pub fn verify_intertwiners<S: Float>(
    n: usize,
    d: usize,
    q: &QParam<S>,
) -> Result<IntertwinerReport<S>> {
    let u = schur_transform_dense(n, d, q, None)?.matrix.data;
    let dim = u.nrows();
    let unitarity_defect = max_abs_diff(&u.dot(&u.t()), &identity(dim));
    let blocks = lambda_blocks(n, d);

    let conj_hecke: Vec<Array2<S>> = (1..n)
        .map(|i| Ok(conjugate(&u, &t_action_word(n, d, i, q)?.data)))
        .collect::<Result<_>>()?;
    let yyh: Vec<Vec<Array2<S>>> = (1..n)
        .map(|i| {
            blocks
                .iter()
                .map(|(lambda, _, n_p, _)| {
                    Ok(kron(&t_matrix_yyh(lambda, i, q)?.data, &identity(*n_p)))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    // One ±1 diagonal per λ-block, recovered from the Hecke pairs and then
    // reused verbatim for the quantum-group check.
    let mut sign = vec![S::one(); dim];
    for (bi, (_, offset, n_p, n_q)) in blocks.iter().enumerate() {
        let size = n_p * n_q;
        let ms: Vec<Array2<S>> = conj_hecke
            .iter()
            .map(|m| {
                m.slice(ndarray::s![*offset..offset + size, *offset..offset + size])
                    .to_owned()
            })
            .collect();
        let ts: Vec<Array2<S>> = yyh.iter().map(|per_block| per_block[bi].clone()).collect();
        if !ms.is_empty() {
            for (j, v) in recover_signs(&ms, &ts, size).into_iter().enumerate() {
                sign[offset + j] = v;
            }
        }
    }
    let apply_signs = |m: &Array2<S>| {
        let mut out = m.clone();
        for ((r, c), v) in out.indexed_iter_mut() {
            *v = sign[r] * *v * sign[c];
        }
        out
    };

    let mut hecke_residual = S::zero();
    for (i, conj) in conj_hecke.iter().enumerate() {
        let t = block_diagonal(&yyh[i]);
        hecke_residual = hecke_residual.max(max_abs_diff(&apply_signs(conj), &t));
    }

    let mut qgroup_residual = S::zero();
    let mut gens: Vec<Generator> = (1..d)
        .flat_map(|i| [Generator::F(i), Generator::E(i)])
        .collect();
    gens.extend((1..=d).map(Generator::QhHalf));
    for g in gens {
        let conj = conjugate(&u, &word_generator_action(n, d, g, q)?.data);
        let per_block: Vec<Array2<S>> = blocks
            .iter()
            .map(|(lambda, _, _, n_q)| {
                Ok(kron(&identity(*n_q), &generator_matrix(lambda, d, g, q)?.data))
            })
            .collect::<Result<_>>()?;
        let t = block_diagonal(&per_block);
        // q^{h/2} is diagonal, so the sign conjugation must be a no-op on
        // it; checking it unsigned keeps that property honest.
        let measured = if matches!(g, Generator::QhHalf(_)) {
            conj
        } else {
            apply_signs(&conj)
        };
        qgroup_residual = qgroup_residual.max(max_abs_diff(&measured, &t));
    }

    Ok(IntertwinerReport {
        unitarity_defect,
        hecke_residual,
        qgroup_residual,
    })
}

/// Max residual of the Hecke intertwining check; see [`verify_intertwiners`].
pub fn verify_intertwiner_hecke<S: Float>(n: usize, d: usize, q: &QParam<S>) -> Result<S> {
    Ok(verify_intertwiners(n, d, q)?.hecke_residual)
}

/// Max residual of the quantum-group intertwining check (same recovered
/// signs as the Hecke check); see [`verify_intertwiners`].
pub fn verify_intertwiner_qgroup<S: Float>(n: usize, d: usize, q: &QParam<S>) -> Result<S> {
    Ok(verify_intertwiners(n, d, q)?.qgroup_residual)
}
