//! Action of the `U_q(d)` generators `e_i`, `f_i`, `q^{h_i/2}` on an irrep
//! `V^λ` in its tableau basis, and the iterated-coproduct action on the
//! word basis of `V^⊗n`, plus a residual check of the defining relations.
//!
//! The basis of `V^λ` is the canonical SSYT enumeration. `q^{h_i/2}` is
//! diagonal with eigenvalue `q^{x_i/2}` (`x_i` = number of i's in the
//! tableau); `f_i` turns the last `i` of some row into `i+1`, with a
//! coefficient assembled from the shifted row coordinates of the shapes at
//! levels `i−1`, `i`, `i+1`; `e_i` is its transpose.

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::matrix::LabeledMatrix;
use crate::qarith::{qint_signed, qpow_half, LogScalar, QParam};
use crate::tableaux::{enumerate_ssyt, Partition, SemiStandardTableau};
use crate::insertion::all_words;
use crate::Float;

/// Generator tag; the index is 1-based (`F(i)` with `1 ≤ i ≤ d−1`,
/// `QhHalf(i)` with `1 ≤ i ≤ d`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    E(usize),
    F(usize),
    QhHalf(usize),
}

/// Eigenvalue of `q^{h_i/2}` on the tableau basis vector: `q^{x_i(t)/2}`.
pub fn h_eigenvalue<S: Float>(t: &SemiStandardTableau, i: usize, q: &QParam<S>) -> Result<S> {
    Ok(qpow_half(t.content_count(i) as i64, q)?.value())
}

/// The tableau with the last `i` of row `k` turned into `i+1`, when that is
/// still a valid SSYT.
fn lower_move(t: &SemiStandardTableau, i: usize, k: usize) -> Option<SemiStandardTableau> {
    let mut rows = t.rows().to_vec();
    let row = rows.get_mut(k - 1)?;
    let pos = row.iter().rposition(|&e| e == i)?;
    row[pos] = i + 1;
    SemiStandardTableau::new(rows).ok()
}

/// Matrix element `⟨t_k| f_i |t⟩` where `t_k` is `t` with the last `i` of
/// row `k` lowered to `i+1`; zero when that move does not give a valid
/// tableau. The square of the coefficient is a ratio of quantum integers of
/// shifted-coordinate differences taken from the shapes of `t` restricted
/// to letters `≤ i−1`, `≤ i`, `≤ i+1`.
pub fn f_coefficient<S: Float>(
    t: &SemiStandardTableau,
    k: usize,
    i: usize,
    q: &QParam<S>,
) -> Result<S> {
    if i == 0 {
        return Err(Error::InvalidArgument("generator index is 1-based".into()));
    }
    if k == 0 || k > i {
        return Err(Error::InvalidArgument(format!(
            "row index {k} out of range 1..={i} for f_{i}"
        )));
    }
    if lower_move(t, i, k).is_none() {
        return Ok(S::zero());
    }
    let l_mid = t.restricted_shape(i).shifted_coords(i);
    let l_up = t.restricted_shape(i + 1).shifted_coords(i + 1);
    let l_down = t.restricted_shape(i - 1).shifted_coords(i - 1);
    let pivot = l_mid[k - 1];
    let mut num = LogScalar::one();
    for &a in &l_up {
        num = num.mul(&qint_signed(a - pivot + 1, q)?);
    }
    for &c in &l_down {
        num = num.mul(&qint_signed(c - pivot, q)?);
    }
    let mut den = LogScalar::one();
    for (j, &b) in l_mid.iter().enumerate() {
        if j != k - 1 {
            den = den.mul(&qint_signed(b - pivot, q)?).mul(&qint_signed(b - pivot + 1, q)?);
        }
    }
    if den.is_zero() {
        return Err(Error::InvalidArgument(format!(
            "vanishing denominator in lowering coefficient for t={t}, i={i}, k={k}"
        )));
    }
    let squared = num.div(&den).neg();
    if squared.sign() < 0 {
        return Err(Error::InvalidArgument(format!(
            "negative squared lowering coefficient for t={t}, i={i}, k={k}"
        )));
    }
    Ok(squared.sqrt()?.value())
}

fn require_finite<S: Float>(q: &QParam<S>) -> Result<S> {
    match q {
        QParam::Finite(v) => Ok(*v),
        _ => Err(Error::InvalidArgument(format!(
            "generator matrices need finite q, got {q}; the q ∈ {{0, ∞}} endpoints exist only for the full transform"
        ))),
    }
}

/// Dense matrix of one generator on `V^λ` in the canonical SSYT basis
/// (entry `[target, source]`).
pub fn generator_matrix<S: Float>(
    lambda: &Partition,
    d: usize,
    g: Generator,
    q: &QParam<S>,
) -> Result<LabeledMatrix<S>> {
    require_finite(q)?;
    let basis = enumerate_ssyt(lambda, d)?;
    let labels: Vec<String> = basis.iter().map(|t| t.to_string()).collect();
    let index: std::collections::HashMap<&SemiStandardTableau, usize> =
        basis.iter().enumerate().map(|(a, t)| (t, a)).collect();
    let m = basis.len();
    let mut data = Array2::<S>::zeros((m, m));
    match g {
        Generator::QhHalf(i) => {
            if i == 0 || i > d {
                return Err(Error::InvalidArgument(format!("q^(h_{i}/2) needs 1 ≤ i ≤ {d}")));
            }
            for (a, t) in basis.iter().enumerate() {
                data[[a, a]] = h_eigenvalue(t, i, q)?;
            }
        }
        Generator::F(i) | Generator::E(i) => {
            if i == 0 || i + 1 > d {
                return Err(Error::InvalidArgument(format!("f_{i}/e_{i} needs 1 ≤ i ≤ {}", d.saturating_sub(1))));
            }
            for (a, t) in basis.iter().enumerate() {
                for k in 1..=i {
                    if let Some(moved) = lower_move(t, i, k) {
                        let b = index[&moved];
                        data[[b, a]] = f_coefficient(t, k, i, q)?;
                    }
                }
            }
            if matches!(g, Generator::E(_)) {
                data = data.t().to_owned();
            }
        }
    }
    LabeledMatrix::new(labels.clone(), labels, data)
}

pub(crate) fn word_label(w: &[usize]) -> String {
    w.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Eigenvalue of `k_i = h_i − h_{i+1}` on a single letter.
fn k_weight(letter: usize, i: usize) -> i64 {
    if letter == i {
        1
    } else if letter == i + 1 {
        -1
    } else {
        0
    }
}

/// One generator of `U_q(d)` acting on the word basis of `V^⊗n` through the
/// iterated coproduct: `f_i` acts at one position, with `q^{+k_i/2}` on the
/// factors to its left and `q^{−k_i/2}` on those to its right; `e_i` uses
/// the same weights; `q^{h_i/2}` is diagonal with the letter counts summed.
pub fn word_generator_action<S: Float>(
    n: usize,
    d: usize,
    g: Generator,
    q: &QParam<S>,
) -> Result<LabeledMatrix<S>> {
    require_finite(q)?;
    let words = all_words(n, d);
    let labels: Vec<String> = words.iter().map(|w| word_label(w)).collect();
    let size = words.len();
    let mut data = Array2::<S>::zeros((size, size));
    match g {
        Generator::QhHalf(i) => {
            if i == 0 || i > d {
                return Err(Error::InvalidArgument(format!("q^(h_{i}/2) needs 1 ≤ i ≤ {d}")));
            }
            for (a, w) in words.iter().enumerate() {
                let count = w.iter().filter(|&&x| x == i).count();
                data[[a, a]] = qpow_half(count as i64, q)?.value();
            }
        }
        Generator::F(i) | Generator::E(i) => {
            if i == 0 || i + 1 > d {
                return Err(Error::InvalidArgument(format!("f_{i}/e_{i} needs 1 ≤ i ≤ {}", d.saturating_sub(1))));
            }
            let (from, to) = match g {
                Generator::F(_) => (i, i + 1),
                _ => (i + 1, i),
            };
            for (a, w) in words.iter().enumerate() {
                for p in 0..n {
                    if w[p] != from {
                        continue;
                    }
                    let mut w2 = w.clone();
                    w2[p] = to;
                    let mut exp = 0i64;
                    for (j, &letter) in w.iter().enumerate() {
                        if j < p {
                            exp += k_weight(letter, i);
                        } else if j > p {
                            exp -= k_weight(letter, i);
                        }
                    }
                    let b = crate::insertion::word_index(&w2, d);
                    data[[b, a]] = data[[b, a]] + qpow_half(exp, q)?.value();
                }
            }
        }
    }
    LabeledMatrix::new(labels.clone(), labels, data)
}

/// Max residual of the defining relations over a full generator family:
/// weight conjugation of `e_j`/`f_j` by `q^{h_i/2}`, the `[e_i, f_j]`
/// commutators against the diagonal quantum integer of `k_i`, far
/// commutation, and the two cubic (Serre) relations.
fn relations_residual<S: Float>(
    d: usize,
    fs: &[Array2<S>],
    es: &[Array2<S>],
    qhs: &[Array2<S>],
    k_diffs: &[Vec<i64>],
    q: &QParam<S>,
) -> Result<S> {
    use crate::matrix::max_abs_diff;
    let mut worst = S::zero();
    let mut note = |v: S| {
        if v > worst {
            worst = v;
        }
    };
    let dim = qhs[0].nrows();
    for i in 1..=d {
        let qh = &qhs[i - 1];
        let qh_inv = Array2::from_diag(&qh.diag().mapv(|v| S::one() / v));
        for j in 1..d {
            let c = i64::from(i == j) - i64::from(i == j + 1);
            let scale_e = qpow_half(c, q)?.value();
            let scale_f = qpow_half(-c, q)?.value();
            note(max_abs_diff(&qh.dot(&es[j - 1]).dot(&qh_inv), &es[j - 1].mapv(|v| v * scale_e)));
            note(max_abs_diff(&qh.dot(&fs[j - 1]).dot(&qh_inv), &fs[j - 1].mapv(|v| v * scale_f)));
        }
    }
    for i in 1..d {
        for j in 1..d {
            let comm = es[i - 1].dot(&fs[j - 1]) - fs[j - 1].dot(&es[i - 1]);
            if i == j {
                let mut target = Array2::<S>::zeros((dim, dim));
                for (b, &kv) in k_diffs[i - 1].iter().enumerate() {
                    target[[b, b]] = qint_signed(kv, q)?.value();
                }
                note(max_abs_diff(&comm, &target));
            } else {
                note(comm.iter().fold(S::zero(), |acc, &v| acc.max(v.abs())));
            }
        }
    }
    let two = crate::qarith::qint(2, q)?.value();
    for i in 1..d {
        for j in 1..d {
            if i.abs_diff(j) >= 2 {
                note(max_abs_diff(&es[i - 1].dot(&es[j - 1]), &es[j - 1].dot(&es[i - 1])));
                note(max_abs_diff(&fs[i - 1].dot(&fs[j - 1]), &fs[j - 1].dot(&fs[i - 1])));
            } else if i.abs_diff(j) == 1 {
                for (xs, _tag) in [(es, "e"), (fs, "f")] {
                    let x_i = &xs[i - 1];
                    let x_j = &xs[j - 1];
                    let lhs = x_i.dot(x_i).dot(x_j) + x_j.dot(&x_i.dot(x_i));
                    let mid = x_i.dot(x_j).dot(x_i).mapv(|v| v * two);
                    note(max_abs_diff(&lhs, &mid));
                }
            }
        }
    }
    Ok(worst)
}

/// Residual of all defining relations on `V^λ`.
pub fn verify_serre<S: Float>(lambda: &Partition, d: usize, q: &QParam<S>) -> Result<S> {
    require_finite(q)?;
    let basis = enumerate_ssyt(lambda, d)?;
    let fs: Vec<Array2<S>> = (1..d)
        .map(|i| Ok(generator_matrix(lambda, d, Generator::F(i), q)?.data))
        .collect::<Result<_>>()?;
    let es: Vec<Array2<S>> = fs.iter().map(|f| f.t().to_owned()).collect();
    let qhs: Vec<Array2<S>> = (1..=d)
        .map(|i| Ok(generator_matrix(lambda, d, Generator::QhHalf(i), q)?.data))
        .collect::<Result<_>>()?;
    let k_diffs: Vec<Vec<i64>> = (1..d)
        .map(|i| {
            basis
                .iter()
                .map(|t| t.content_count(i) as i64 - t.content_count(i + 1) as i64)
                .collect()
        })
        .collect();
    relations_residual(d, &fs, &es, &qhs, &k_diffs, q)
}

/// Residual of all defining relations on the word basis of `V^⊗n`.
pub fn verify_serre_word<S: Float>(n: usize, d: usize, q: &QParam<S>) -> Result<S> {
    require_finite(q)?;
    let words = all_words(n, d);
    let fs: Vec<Array2<S>> = (1..d)
        .map(|i| Ok(word_generator_action(n, d, Generator::F(i), q)?.data))
        .collect::<Result<_>>()?;
    let es: Vec<Array2<S>> = (1..d)
        .map(|i| Ok(word_generator_action(n, d, Generator::E(i), q)?.data))
        .collect::<Result<_>>()?;
    let qhs: Vec<Array2<S>> = (1..=d)
        .map(|i| Ok(word_generator_action(n, d, Generator::QhHalf(i), q)?.data))
        .collect::<Result<_>>()?;
    let k_diffs: Vec<Vec<i64>> = (1..d)
        .map(|i| {
            words
                .iter()
                .map(|w| {
                    w.iter().filter(|&&x| x == i).count() as i64
                        - w.iter().filter(|&&x| x == i + 1).count() as i64
                })
                .collect()
        })
        .collect();
    relations_residual(d, &fs, &es, &qhs, &k_diffs, q)
}
