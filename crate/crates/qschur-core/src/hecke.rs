//! Hecke algebra generators in two guises: the seminormal action on
//! standard tableaux and the q-deformed permutation action on words.
//!
//! Both families satisfy the quadratic relation (T − q⁻¹)(T + q) = 0 and the
//! braid relations, and the word action commutes with the quantum-group
//! action from [`crate::gtj`] — the two symmetries centralize each other on
//! V^⊗n, which is what the joint transform in [`crate::schurweyl`] exploits.

use std::collections::HashMap;

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::gtj::word_label;
use crate::insertion::{all_words, word_index};
use crate::matrix::{commutator_defect, identity, max_abs_diff, LabeledMatrix};
use crate::qarith::{qint, qint_signed, qpow_half, QParam};
use crate::tableaux::{enumerate_syt, Partition};
use crate::Float;

fn require_finite<S: Float>(q: &QParam<S>) -> Result<S> {
    match q {
        QParam::Finite(v) => Ok(*v),
        _ => Err(Error::DivergentLimit(
            "Hecke generators have no finite matrix at symbolic q".into(),
        )),
    }
}

/// The generator T_i on the irreducible module labeled by `lambda`, in the
/// seminormal basis of standard tableaux: with `a` the axial distance from
/// the box of `i` to the box of `i+1`,
///
/// T_i |t⟩ = (q⁻ᵃ/[a]) |t⟩ + √(1 − 1/[a]²) |sᵢ·t⟩,
///
/// where the second term is absent when `i` and `i+1` share a row or
/// column. The matrix is symmetric with eigenvalues in {q⁻¹, −q}.
pub fn t_matrix_yyh<S: Float>(
    lambda: &Partition,
    i: usize,
    q: &QParam<S>,
) -> Result<LabeledMatrix<S>> {
    let n = lambda.size();
    if i == 0 || i + 1 > n {
        return Err(Error::InvalidArgument(format!(
            "generator T_{i} needs 1 ≤ i ≤ {}",
            n.saturating_sub(1)
        )));
    }
    require_finite(q)?;
    let basis = enumerate_syt(lambda);
    let index: HashMap<_, _> = basis
        .iter()
        .enumerate()
        .map(|(k, t)| (t.clone(), k))
        .collect();
    let mut data = Array2::zeros((basis.len(), basis.len()));
    for (c, t) in basis.iter().enumerate() {
        let a = t.residue_of(i + 1)? - t.residue_of(i)?;
        data[[c, c]] = qpow_half(-2 * a, q)?.div(&qint_signed(a, q)?).value();
        match t.swap_adjacent(i) {
            Some(swapped) => {
                // |a| = 1 happens exactly when the swap is invalid, so the
                // square root below is always real.
                assert!(a.abs() >= 2, "swap valid but |a| = {}", a.abs());
                let m = a.unsigned_abs() as u32;
                // 1 − 1/[a]² = [a−1][a+1]/[a]², kept in log space.
                let off = qint(m - 1, q)?
                    .mul(&qint(m + 1, q)?)
                    .sqrt()?
                    .div(&qint(m, q)?);
                data[[index[&swapped], c]] = off.value();
            }
            None => assert_eq!(a.abs(), 1, "swap invalid but |a| = {}", a.abs()),
        }
    }
    let labels: Vec<String> = basis.iter().map(|t| t.to_string()).collect();
    LabeledMatrix::new(labels.clone(), labels, data)
}

/// The generator T_i on the word basis of V^⊗n: identity on all factors
/// except positions i, i+1, where |vv⟩ ↦ q⁻¹|vv⟩, |xy⟩ ↦ |yx⟩ for x < y,
/// and |xy⟩ ↦ (q⁻¹ − q)|xy⟩ + |yx⟩ for x > y.
pub fn t_action_word<S: Float>(
    n: usize,
    d: usize,
    i: usize,
    q: &QParam<S>,
) -> Result<LabeledMatrix<S>> {
    if i == 0 || i + 1 > n {
        return Err(Error::InvalidArgument(format!(
            "generator T_{i} needs 1 ≤ i ≤ {}",
            n.saturating_sub(1)
        )));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("alphabet size must be positive".into()));
    }
    let q_val = require_finite(q)?;
    let words = all_words(n, d);
    let mut data = Array2::zeros((words.len(), words.len()));
    for (a, w) in words.iter().enumerate() {
        let (x, y) = (w[i - 1], w[i]);
        if x == y {
            data[[a, a]] = q_val.recip();
        } else {
            let mut swapped = w.clone();
            swapped.swap(i - 1, i);
            data[[word_index(&swapped, d), a]] = S::one();
            if x > y {
                data[[a, a]] = q_val.recip() - q_val;
            }
        }
    }
    let labels: Vec<String> = words.iter().map(|w| word_label(w)).collect();
    LabeledMatrix::new(labels.clone(), labels, data)
}

/// Max residual of the quadratic, braid, and far-commutation relations over
/// a full generator family at parameter value `q_val`.
fn relations_residual<S: Float>(ts: &[Array2<S>], q_val: S) -> S {
    let Some(first) = ts.first() else {
        return S::zero();
    };
    let dim = first.nrows();
    let q_inv_id = identity::<S>(dim).mapv_into(|e| e * q_val.recip());
    let q_id = identity::<S>(dim).mapv_into(|e| e * q_val);
    let zero = Array2::zeros((dim, dim));
    let mut worst = S::zero();
    for t in ts {
        let quad = (t - &q_inv_id).dot(&(t + &q_id));
        worst = worst.max(max_abs_diff(&quad, &zero));
    }
    for pair in ts.windows(2) {
        let lhs = pair[0].dot(&pair[1]).dot(&pair[0]);
        let rhs = pair[1].dot(&pair[0]).dot(&pair[1]);
        worst = worst.max(max_abs_diff(&lhs, &rhs));
    }
    for (k, s) in ts.iter().enumerate() {
        for t in ts.iter().skip(k + 2) {
            worst = worst.max(commutator_defect(s, t));
        }
    }
    worst
}

/// Max relation residual of the seminormal generator family on `lambda`.
pub fn verify_hecke_relations_yyh<S: Float>(lambda: &Partition, q: &QParam<S>) -> Result<S> {
    let q_val = require_finite(q)?;
    let ts: Vec<Array2<S>> = (1..lambda.size())
        .map(|i| t_matrix_yyh(lambda, i, q).map(|m| m.data))
        .collect::<Result<_>>()?;
    Ok(relations_residual(&ts, q_val))
}

/// Max relation residual of the word-action generator family on V^⊗n.
pub fn verify_hecke_relations_word<S: Float>(n: usize, d: usize, q: &QParam<S>) -> Result<S> {
    let q_val = require_finite(q)?;
    let ts: Vec<Array2<S>> = (1..n)
        .map(|i| t_action_word(n, d, i, q).map(|m| m.data))
        .collect::<Result<_>>()?;
    Ok(relations_residual(&ts, q_val))
}
