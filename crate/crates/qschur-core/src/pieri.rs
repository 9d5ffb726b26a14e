//! The Pieri transform: inserting one letter into an irreducible module,
//! expressed as an explicit orthogonal change of basis.
//!
//! The amplitude for the insertion `t, letter → s` factors level by level
//! into two primitive coefficient families: a terminal coefficient for the
//! level where the letter first lands ([`w0`]) and one bumping coefficient
//! per level above it ([`w1`]). Both are ratios of quantum integers built
//! from shifted row coordinates and are evaluated in log space, so deep
//! cascades neither overflow nor lose their signs. The q → 0 and q → ∞
//! endpoints degenerate to exact ±1/0 values served by [`w0_limit`] and
//! [`w1_limit`]; at those endpoints the transform is a signed permutation
//! matching the classical insertion algorithms.

use std::collections::HashMap;

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::matrix::LabeledMatrix;
use crate::parallel;
use crate::qarith::{qint_signed, qpow_half, LogScalar, QParam};
use crate::tableaux::{enumerate_ssyt, Partition, SemiStandardTableau};
use crate::Float;

fn require_finite<S: Float>(q: &QParam<S>) -> Result<()> {
    if q.is_symbolic() {
        Err(Error::DivergentLimit(
            "direct coefficient evaluation needs finite q; use the limit evaluators".into(),
        ))
    } else {
        Ok(())
    }
}

/// |[m]| as a log-domain factor.
fn abs_qint<S: Float>(m: i64, q: &QParam<S>) -> Result<LogScalar<S>> {
    Ok(qint_signed(m, q)?.abs())
}

/// Terminal coefficient (non-negative) for a box landing in row `r` of the
/// level-`k` shape, where `l_b`/`l_c` are the shifted coordinates of the
/// level-`k` and level-`(k-1)` shapes of the source tableau. Zero exactly
/// when the transition is forbidden.
fn w0_log<S: Float>(l_b: &[i64], l_c: &[i64], r: usize, q: &QParam<S>) -> Result<LogScalar<S>> {
    let k = l_b.len();
    debug_assert_eq!(l_c.len() + 1, k);
    debug_assert!((1..=k).contains(&r));
    let ki = k as i64;
    // Multiplicity of the letter k in the source: |sh t⁽ᵏ⁾| − |sh t⁽ᵏ⁻¹⁾|.
    let x = (l_b.iter().sum::<i64>() + ki * (ki + 1) / 2)
        - (l_c.iter().sum::<i64>() + (ki - 1) * ki / 2);
    let pivot = l_b[r - 1];
    let mut acc = qpow_half(2 * (pivot + 1 - x), q)?;
    for &c in l_c {
        let f = abs_qint(c - pivot - 1, q)?;
        if f.is_zero() {
            return Ok(LogScalar::zero());
        }
        acc = acc.mul(&f);
    }
    for (j, &b) in l_b.iter().enumerate() {
        if j == r - 1 {
            continue;
        }
        // Shifted coordinates are strictly decreasing, so b ≠ pivot.
        acc = acc.div(&abs_qint(b - pivot, q)?);
    }
    acc.sqrt()
}

/// Signed bumping coefficient for a box moving from row `r1` of the
/// level-`(k-1)` shape to row `r2` of the level-`k` shape. Zero exactly when
/// the transition is forbidden; negative exactly when the box moves down.
fn w1_log<S: Float>(
    l_b: &[i64],
    l_c: &[i64],
    r1: usize,
    r2: usize,
    q: &QParam<S>,
) -> Result<LogScalar<S>> {
    let k = l_b.len();
    debug_assert_eq!(l_c.len() + 1, k);
    debug_assert!((1..k).contains(&r1) && (1..=k).contains(&r2));
    let b_pivot = l_b[r2 - 1];
    let c_pivot = l_c[r1 - 1];
    let mut acc = qpow_half(2 * (c_pivot - b_pivot), q)?;
    for (j, &b) in l_b.iter().enumerate() {
        if j == r2 - 1 {
            continue;
        }
        let f = abs_qint(b - c_pivot, q)?;
        if f.is_zero() {
            return Ok(LogScalar::zero());
        }
        acc = acc.mul(&f);
    }
    for (j, &c) in l_c.iter().enumerate() {
        if j == r1 - 1 {
            continue;
        }
        let f = abs_qint(c - b_pivot - 1, q)?;
        if f.is_zero() {
            return Ok(LogScalar::zero());
        }
        acc = acc.mul(&f);
    }
    for (j, &b) in l_b.iter().enumerate() {
        if j == r2 - 1 {
            continue;
        }
        acc = acc.div(&abs_qint(b - b_pivot, q)?);
    }
    for (j, &c) in l_c.iter().enumerate() {
        if j == r1 - 1 {
            continue;
        }
        let f = abs_qint(c - c_pivot - 1, q)?;
        if f.is_zero() {
            // Only reachable when row r1 cannot take a box at all.
            return Ok(LogScalar::zero());
        }
        acc = acc.div(&f);
    }
    let root = acc.sqrt()?;
    Ok(if r1 >= r2 { root } else { root.neg() })
}

/// Row of the unique box of `outer \ inner`, when `outer` is `inner` plus
/// exactly one box.
fn single_box_row(inner: &Partition, outer: &Partition) -> Option<usize> {
    let mut found = None;
    for r in 1..=outer.len().max(inner.len()) {
        let (o, i) = (outer.row(r), inner.row(r));
        if o == i {
            continue;
        }
        if o == i + 1 && found.is_none() {
            found = Some(r);
        } else {
            return None;
        }
    }
    found
}

/// Everything needed to evaluate the amplitude ⟨s | t, letter⟩: the level
/// shapes of the source tableau plus the row of the new box at every level
/// from the inserted letter up to the alphabet size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WignerContext {
    t_shapes: Vec<Partition>,
    box_rows: Vec<usize>,
    letter: usize,
    alphabet: usize,
}

impl WignerContext {
    /// Builds the context for `t, letter → s` over the alphabet `1..=d`.
    /// Returns `Ok(None)` when `s` is not reachable, i.e. when the level
    /// shapes of `s` do not agree with those of `t` below the letter and
    /// exceed them by exactly one box at and above it.
    pub fn new(
        t: &SemiStandardTableau,
        letter: usize,
        s: &SemiStandardTableau,
        d: usize,
    ) -> Result<Option<Self>> {
        if letter == 0 || letter > d {
            return Err(Error::InvalidArgument(format!(
                "letter {letter} outside alphabet 1..={d}"
            )));
        }
        if t.max_entry() > d || s.max_entry() > d {
            return Err(Error::InvalidArgument(format!(
                "tableau entries exceed alphabet size {d}"
            )));
        }
        let t_shapes: Vec<Partition> = (0..=d).map(|m| t.restricted_shape(m)).collect();
        let mut box_rows = Vec::with_capacity(d - letter + 1);
        for m in 0..=d {
            let s_shape = s.restricted_shape(m);
            if m < letter {
                if s_shape != t_shapes[m] {
                    return Ok(None);
                }
            } else {
                match single_box_row(&t_shapes[m], &s_shape) {
                    Some(r) => box_rows.push(r),
                    None => return Ok(None),
                }
            }
        }
        Ok(Some(WignerContext {
            t_shapes,
            box_rows,
            letter,
            alphabet: d,
        }))
    }

    pub fn letter(&self) -> usize {
        self.letter
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    /// Row of the new box at `level` (which must lie in `letter..=alphabet`).
    pub fn box_row(&self, level: usize) -> usize {
        assert!(
            (self.letter..=self.alphabet).contains(&level),
            "level {level} outside {}..={}",
            self.letter,
            self.alphabet
        );
        self.box_rows[level - self.letter]
    }

    /// Shape of the source tableau restricted to `1..=level`.
    pub fn source_shape(&self, level: usize) -> &Partition {
        &self.t_shapes[level]
    }

    /// Levels above the letter where a genuine bump happens, i.e. where the
    /// source tableau has a copy of that level's letter in the row the box
    /// arrives from. At every other level the bumping coefficient is
    /// exactly 1 and the box just rides along.
    pub fn bump_chain(&self) -> Vec<usize> {
        (self.letter + 1..=self.alphabet)
            .filter(|&m| {
                let arrival = self.box_row(m - 1);
                self.t_shapes[m].row(arrival) > self.t_shapes[m - 1].row(arrival)
            })
            .collect()
    }

    /// Shifted coordinates of the level and level-below shapes at `level`.
    fn coords(&self, level: usize) -> (Vec<i64>, Vec<i64>) {
        (
            self.t_shapes[level].shifted_coords(level),
            self.t_shapes[level - 1].shifted_coords(level - 1),
        )
    }
}

/// Terminal coefficient of the context: the amplitude factor at the level
/// where the inserted letter first lands. Always non-negative.
pub fn w0<S: Float>(ctx: &WignerContext, q: &QParam<S>) -> Result<S> {
    require_finite(q)?;
    let (l_b, l_c) = ctx.coords(ctx.letter);
    Ok(w0_log(&l_b, &l_c, ctx.box_row(ctx.letter), q)?.value())
}

/// Bumping coefficient of the context at `level`, which must lie in
/// `letter+1..=alphabet`. Negative exactly when the box moves down a row.
pub fn w1<S: Float>(ctx: &WignerContext, level: usize, q: &QParam<S>) -> Result<S> {
    if !(ctx.letter + 1..=ctx.alphabet).contains(&level) {
        return Err(Error::InvalidArgument(format!(
            "bumping level {level} outside {}..={}",
            ctx.letter + 1,
            ctx.alphabet
        )));
    }
    require_finite(q)?;
    let (l_b, l_c) = ctx.coords(level);
    Ok(w1_log(&l_b, &l_c, ctx.box_row(level - 1), ctx.box_row(level), q)?.value())
}

/// Full amplitude of a context: the product of the bumping coefficients for
/// all levels above the letter and the terminal coefficient at its level.
pub fn wigner_from_context<S: Float>(ctx: &WignerContext, q: &QParam<S>) -> Result<S> {
    require_finite(q)?;
    let (l_b, l_c) = ctx.coords(ctx.letter);
    let mut acc = w0_log(&l_b, &l_c, ctx.box_row(ctx.letter), q)?;
    for level in ctx.letter + 1..=ctx.alphabet {
        if acc.is_zero() {
            break;
        }
        let (l_b, l_c) = ctx.coords(level);
        acc = acc.mul(&w1_log(
            &l_b,
            &l_c,
            ctx.box_row(level - 1),
            ctx.box_row(level),
            q,
        )?);
    }
    Ok(acc.value())
}

/// Amplitude ⟨s | t, letter⟩ over the alphabet `1..=d`; zero when `s` is not
/// reachable from `t` by inserting the letter.
pub fn wigner<S: Float>(
    s: &SemiStandardTableau,
    t: &SemiStandardTableau,
    letter: usize,
    d: usize,
    q: &QParam<S>,
) -> Result<S> {
    match WignerContext::new(t, letter, s, d)? {
        Some(ctx) => wigner_from_context(&ctx, q),
        None => Ok(S::zero()),
    }
}

/// Endpoint selector for the q → 0 and q → ∞ coefficient limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrystalLimit {
    Zero,
    Infinity,
}

impl CrystalLimit {
    /// The endpoint named by a symbolic parameter, if any.
    pub fn from_qparam<S: Float>(q: &QParam<S>) -> Option<CrystalLimit> {
        match q {
            QParam::Zero => Some(CrystalLimit::Zero),
            QParam::Infinity => Some(CrystalLimit::Infinity),
            QParam::Finite(_) => None,
        }
    }
}

/// Exact limit of the terminal coefficient at an endpoint: 0 or 1.
pub fn w0_limit(ctx: &WignerContext, limit: CrystalLimit) -> i8 {
    let i = ctx.letter;
    let r = ctx.box_row(i);
    match limit {
        // As q → ∞ the letter always lands in the first row.
        CrystalLimit::Infinity => i8::from(r == 1),
        // As q → 0 it lands in the deepest row reachable down a full
        // staircase: every row below the target must be flush with the row
        // above it in the shape one level down.
        CrystalLimit::Zero => {
            let sh_b = &ctx.t_shapes[i];
            let sh_c = &ctx.t_shapes[i - 1];
            i8::from((r..i).all(|j| sh_b.row(j + 1) == sh_c.row(j)))
        }
    }
}

/// Exact limit of the bumping coefficient at an endpoint: −1, 0, or +1.
pub fn w1_limit(ctx: &WignerContext, level: usize, limit: CrystalLimit) -> i8 {
    assert!(
        (ctx.letter + 1..=ctx.alphabet).contains(&level),
        "bumping level {level} outside {}..={}",
        ctx.letter + 1,
        ctx.alphabet
    );
    let r1 = ctx.box_row(level - 1);
    let r2 = ctx.box_row(level);
    let sh_b = &ctx.t_shapes[level];
    let sh_c = &ctx.t_shapes[level - 1];
    match limit {
        // As q → 0 a bumped box either stays put or climbs a flush
        // staircase; everything else dies.
        CrystalLimit::Zero => {
            i8::from(r1 == r2 || (r1 > r2 && (r2..r1).all(|j| sh_b.row(j + 1) == sh_c.row(j))))
        }
        // As q → ∞ a bumped box drops exactly one row (with a sign), or
        // rides along in place when its row is untouched at this level.
        CrystalLimit::Infinity => {
            if r2 == r1 + 1 {
                -1
            } else if r1 == r2 && sh_b.row(r1) == sh_c.row(r1) {
                1
            } else {
                0
            }
        }
    }
}

/// Exact limit of the full amplitude at an endpoint: −1, 0, or +1.
pub fn wigner_limit(ctx: &WignerContext, limit: CrystalLimit) -> i8 {
    let mut acc = w0_limit(ctx, limit);
    for level in ctx.letter + 1..=ctx.alphabet {
        if acc == 0 {
            break;
        }
        acc *= w1_limit(ctx, level, limit);
    }
    acc
}

/// All tableaux reachable from `t` by inserting `letter` over the alphabet
/// `1..=d`, paired with their evaluation contexts, in enumeration order
/// (covers of the shape by ascending new-box row, then targets in reading
/// word order).
pub fn insertion_targets(
    t: &SemiStandardTableau,
    letter: usize,
    d: usize,
) -> Result<Vec<(SemiStandardTableau, WignerContext)>> {
    let mut out = Vec::new();
    for (_row, mu) in t.shape().one_box_extensions(d) {
        for s in enumerate_ssyt(&mu, d)? {
            if let Some(ctx) = WignerContext::new(t, letter, &s, d)? {
                out.push((s, ctx));
            }
        }
    }
    Ok(out)
}

/// Non-zero amplitudes for inserting `letter` into `t`, in target
/// enumeration order. Symbolic q yields the exact endpoint values, so this
/// is total on q ∈ [0, ∞].
pub fn insertion_amplitudes<S: Float>(
    t: &SemiStandardTableau,
    letter: usize,
    d: usize,
    q: &QParam<S>,
) -> Result<Vec<(SemiStandardTableau, S)>> {
    let limit = CrystalLimit::from_qparam(q);
    let mut out = Vec::new();
    for (s, ctx) in insertion_targets(t, letter, d)? {
        let amplitude = match limit {
            Some(limit) => S::from_i8(wigner_limit(&ctx, limit)).unwrap(),
            None => wigner_from_context(&ctx, q)?,
        };
        if amplitude != S::zero() {
            out.push((s, amplitude));
        }
    }
    Ok(out)
}

/// One full insertion step V^λ ⊗ V ≅ ⊕_μ V^μ in labeled matrix form.
///
/// Rows are (cover shape, target tableau) pairs with covers in descending
/// lexicographic order; columns are (source tableau, inserted letter) pairs
/// with sources in reading-word order and letters ascending within each
/// source. Columns are orthonormal for every q ∈ [0, ∞]; at the endpoints
/// the matrix is a signed permutation.
#[derive(Debug, Clone)]
pub struct PieriMatrix<S> {
    pub matrix: LabeledMatrix<S>,
    pub rows: Vec<(Partition, SemiStandardTableau)>,
    pub cols: Vec<(SemiStandardTableau, usize)>,
}

pub fn pieri_matrix<S: Float>(
    lambda: &Partition,
    d: usize,
    q: &QParam<S>,
) -> Result<PieriMatrix<S>> {
    if d == 0 {
        return Err(Error::InvalidArgument("alphabet size must be positive".into()));
    }
    let sources = enumerate_ssyt(lambda, d)?;
    let mut rows: Vec<(Partition, SemiStandardTableau)> = Vec::new();
    for (_row, mu) in lambda.one_box_extensions(d) {
        for s in enumerate_ssyt(&mu, d)? {
            rows.push((mu.clone(), s));
        }
    }
    let row_of: HashMap<SemiStandardTableau, usize> = rows
        .iter()
        .enumerate()
        .map(|(k, (_, s))| (s.clone(), k))
        .collect();
    let mut cols: Vec<(SemiStandardTableau, usize)> = Vec::new();
    for t in &sources {
        for i in 1..=d {
            cols.push((t.clone(), i));
        }
    }
    debug_assert_eq!(rows.len(), cols.len());
    let computed = parallel::map_indexed(cols.len(), |c| -> Result<Vec<(usize, S)>> {
        let (t, i) = &cols[c];
        Ok(insertion_amplitudes(t, *i, d, q)?
            .into_iter()
            .map(|(s, a)| (row_of[&s], a))
            .collect())
    });
    let mut data = Array2::zeros((rows.len(), cols.len()));
    for (c, column) in computed.into_iter().enumerate() {
        for (r, a) in column? {
            data[[r, c]] = a;
        }
    }
    let row_labels = rows.iter().map(|(_, s)| s.to_string()).collect();
    let col_labels = cols.iter().map(|(t, i)| format!("{t}+{i}")).collect();
    Ok(PieriMatrix {
        matrix: LabeledMatrix::new(row_labels, col_labels, data)?,
        rows,
        cols,
    })
}

/// The d × d single-level gate for a fixed source tableau: entry (r, c) is
/// the top-level coefficient sending input channel c to a new box in row r
/// of the tableau's shape. Channels 1..d are a box arriving in that row of
/// the level-(d−1) shape; channel d is the freshly inserted letter d.
///
/// Realizable channels give unit-norm columns and unrealizable ones give
/// zero columns, but distinct columns are generally not orthogonal: in the
/// cascade they act on mutually orthogonal lower-level states, which is
/// where the overall orthogonality comes from.
pub fn reduced_wigner_transform<S: Float>(
    t: &SemiStandardTableau,
    d: usize,
    q: &QParam<S>,
) -> Result<LabeledMatrix<S>> {
    if d == 0 || t.max_entry() > d {
        return Err(Error::InvalidArgument(format!(
            "gate needs alphabet d ≥ 1 covering all entries, got d = {d}"
        )));
    }
    require_finite(q)?;
    let l_b = t.restricted_shape(d).shifted_coords(d);
    let l_c = t.restricted_shape(d - 1).shifted_coords(d - 1);
    let mut data = Array2::zeros((d, d));
    for r in 1..=d {
        for c in 1..d {
            data[[r - 1, c - 1]] = w1_log(&l_b, &l_c, c, r, q)?.value();
        }
        data[[r - 1, d - 1]] = w0_log(&l_b, &l_c, r, q)?.value();
    }
    let row_labels = (1..=d).map(|r| format!("row {r}")).collect();
    let col_labels = (1..d)
        .map(|c| format!("bump {c}"))
        .chain(std::iter::once("terminal".to_string()))
        .collect();
    LabeledMatrix::new(row_labels, col_labels, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::insertion::{dual_rsk_insert, q_insert, rsk_insert};
    use crate::matrix::orthogonality_defect;
    use crate::qarith::qint;
    use proptest::prelude::*;

    fn ssyt(rows: &[&[usize]]) -> SemiStandardTableau {
        SemiStandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn qf(v: f64) -> QParam<f64> {
        QParam::finite(v).unwrap()
    }

    fn worked_context() -> WignerContext {
        let t = ssyt(&[&[1, 1, 2], &[2, 3]]);
        let s = ssyt(&[&[1, 1, 2], &[2, 2], &[3]]);
        WignerContext::new(&t, 2, &s, 3).unwrap().unwrap()
    }

    #[test]
    fn worked_example_matches_frozen_values() {
        // Independently recomputed with 17 significant digits.
        let cases = [
            (1.0, -0.63245553203367588, 0.57735026918962573, -0.36514837167011072),
            (2.0, -0.89311475127459483, 0.21821789023599236, -0.19489361676178515),
            (0.5, -0.22327868781864871, 0.87287156094396945, -0.19489361676178515),
        ];
        let ctx = worked_context();
        for (qv, w1v, w0v, fullv) in cases {
            let q = qf(qv);
            let got1 = w1(&ctx, 3, &q).unwrap();
            let got0 = w0(&ctx, &q).unwrap();
            let got = wigner_from_context(&ctx, &q).unwrap();
            assert!((got1 - w1v).abs() < 1e-14, "w1(q={qv}) = {got1}");
            assert!((got0 - w0v).abs() < 1e-14, "w0(q={qv}) = {got0}");
            assert!((got - fullv).abs() < 1e-14, "full(q={qv}) = {got}");
            assert!((got - got1 * got0).abs() < 1e-14);
        }
    }

    #[test]
    fn worked_example_matches_bracket_identities() {
        // w0 = q⁻¹/√[3], w1 = −q·√([4]/([2][5])), product = −√([4]/([2][3][5])).
        let ctx = worked_context();
        for qv in [0.5f64, 1.0, 2.0, 3.7] {
            let q = qf(qv);
            let b = |n: u32| qint(n, &q).unwrap().value();
            let w0_expect = qv.powi(-1) / b(3).sqrt();
            let w1_expect = -qv * (b(4) / (b(2) * b(5))).sqrt();
            assert!((w0(&ctx, &q).unwrap() - w0_expect).abs() < 1e-13);
            assert!((w1(&ctx, 3, &q).unwrap() - w1_expect).abs() < 1e-13);
        }
    }

    #[test]
    fn worked_example_context_structure() {
        let ctx = worked_context();
        assert_eq!(ctx.letter(), 2);
        assert_eq!(ctx.alphabet(), 3);
        assert_eq!(ctx.box_row(2), 2);
        assert_eq!(ctx.box_row(3), 3);
        assert_eq!(ctx.bump_chain(), vec![3]);
    }

    #[test]
    fn inserting_into_empty_tableau_is_trivial() {
        for d in 1..=3usize {
            for letter in 1..=d {
                let s = ssyt(&[&[letter]]);
                let v = wigner(&s, &SemiStandardTableau::empty(), letter, d, &qf(1.7)).unwrap();
                assert_eq!(v, 1.0);
            }
        }
    }

    #[test]
    fn riding_levels_contribute_exactly_one() {
        let t = ssyt(&[&[1, 1], &[2]]);
        let q = qf(2.0);
        for (s, ctx) in insertion_targets(&t, 1, 3).unwrap() {
            let chain = ctx.bump_chain();
            for level in 2..=3 {
                if !chain.contains(&level) {
                    let v = w1(&ctx, level, &q).unwrap();
                    assert!((v - 1.0).abs() < 1e-12, "target {s}: {v}");
                }
            }
        }
    }

    #[test]
    fn single_box_pieri_matrix_is_classical_cg_at_q_one() {
        let p = pieri_matrix::<f64>(&Partition::new(vec![1]).unwrap(), 2, &qf(1.0)).unwrap();
        assert_eq!(p.matrix.row_labels, ["1,1", "1,2", "2,2", "1/2"].map(String::from));
        assert_eq!(p.matrix.col_labels, ["1+1", "1+2", "2+1", "2+2"].map(String::from));
        let r = 0.5f64.sqrt();
        let want = ndarray::arr2(&[
            [1.0, 0.0, 0.0, 0.0],
            [0.0, r, r, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, r, -r, 0.0],
        ]);
        assert!(crate::matrix::max_abs_diff(&p.matrix.data, &want) < 1e-15);
    }

    #[test]
    fn empty_shape_pieri_matrix_is_identity() {
        for d in 1..=3usize {
            let p = pieri_matrix::<f64>(&Partition::empty(), d, &qf(0.3)).unwrap();
            assert!(
                crate::matrix::max_abs_diff(&p.matrix.data, &crate::matrix::identity(d)) < 1e-14
            );
        }
    }

    #[test]
    fn pieri_columns_are_orthonormal() {
        for n in 0..=3usize {
            for d in 1..=3usize {
                for lambda in Partition::all_of(n, d) {
                    for qv in [0.25f64, 1.0, 4.0] {
                        let p = pieri_matrix::<f64>(&lambda, d, &qf(qv)).unwrap();
                        let defect = orthogonality_defect(&p.matrix.data);
                        assert!(
                            defect < 1e-12,
                            "λ = {lambda}, d = {d}, q = {qv}: defect {defect}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn support_and_signs_match_q_insertion() {
        let q = qf(2.0);
        for n in 0..=3usize {
            let d = 3;
            for lambda in Partition::all_of(n, d) {
                for t in enumerate_ssyt(&lambda, d).unwrap() {
                    for letter in 1..=d {
                        let amps = insertion_amplitudes(&t, letter, d, &q).unwrap();
                        let outcomes = q_insert(&t, letter);
                        let mut from_amps: Vec<(Vec<Vec<usize>>, i8)> = amps
                            .iter()
                            .map(|(s, a)| (s.rows().to_vec(), if *a < 0.0 { -1 } else { 1 }))
                            .collect();
                        let mut from_ins: Vec<(Vec<Vec<usize>>, i8)> = outcomes
                            .iter()
                            .map(|o| (o.result.rows().to_vec(), o.sign))
                            .collect();
                        from_amps.sort();
                        from_ins.sort();
                        assert_eq!(from_amps, from_ins, "t = {t}, letter = {letter}");
                    }
                }
            }
        }
    }

    #[test]
    fn endpoint_amplitudes_match_classical_insertions() {
        for d in 1..=3usize {
            for lambda in Partition::all_of(2, d) {
                for t in enumerate_ssyt(&lambda, d).unwrap() {
                    for letter in 1..=d {
                        let up = insertion_amplitudes::<f64>(&t, letter, d, &QParam::Infinity)
                            .unwrap();
                        let bump = rsk_insert(&t, letter);
                        assert_eq!(up.len(), 1);
                        assert_eq!(up[0].0, bump.result);
                        assert_eq!(up[0].1, f64::from(bump.sign));

                        let down =
                            insertion_amplitudes::<f64>(&t, letter, d, &QParam::Zero).unwrap();
                        let col = dual_rsk_insert(&t, letter);
                        assert_eq!(down.len(), 1);
                        assert_eq!(down[0].0, col.result);
                        assert_eq!(down[0].1, 1.0);
                    }
                }
            }
        }
    }

    #[test]
    fn limits_agree_with_extreme_finite_q() {
        for n in 0..=3usize {
            let d = 3;
            for lambda in Partition::all_of(n, d) {
                for t in enumerate_ssyt(&lambda, d).unwrap() {
                    for letter in 1..=d {
                        for (s, ctx) in insertion_targets(&t, letter, d).unwrap() {
                            let hi = wigner_from_context(&ctx, &qf(1e3)).unwrap();
                            let lo = wigner_from_context(&ctx, &qf(1e-3)).unwrap();
                            let up = f64::from(wigner_limit(&ctx, CrystalLimit::Infinity));
                            let down = f64::from(wigner_limit(&ctx, CrystalLimit::Zero));
                            assert!((hi - up).abs() < 0.05, "↑ {t} + {letter} → {s}");
                            assert!((lo - down).abs() < 0.05, "↓ {t} + {letter} → {s}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gate_matches_frozen_fixture() {
        // Source 1 over alphabet {1, 2} at q = 2: the bump channel is an
        // exact pass-through and the terminal column is (√(4/5), √(1/5)).
        let gate = reduced_wigner_transform(&ssyt(&[&[1]]), 2, &qf(2.0)).unwrap();
        let want = ndarray::arr2(&[
            [1.0, 0.89442719099991586],
            [0.0, 0.44721359549995793],
        ]);
        assert!(crate::matrix::max_abs_diff(&gate.data, &want) < 1e-15);
        assert_eq!(gate.col_labels, ["bump 1", "terminal"].map(String::from));
    }

    #[test]
    fn gate_columns_are_unit_or_zero() {
        for n in 0..=3usize {
            for d in 1..=3usize {
                for lambda in Partition::all_of(n, d) {
                    for t in enumerate_ssyt(&lambda, d).unwrap() {
                        for qv in [0.5f64, 2.0] {
                            let gate = reduced_wigner_transform(&t, d, &qf(qv)).unwrap();
                            let lower = t.restricted_shape(d - 1);
                            for c in 0..d {
                                let norm2: f64 =
                                    (0..d).map(|r| gate.data[[r, c]].powi(2)).sum();
                                let realizable = if c + 1 < d {
                                    lower.add_box(c + 1).is_ok()
                                } else {
                                    true
                                };
                                if realizable {
                                    assert!(
                                        (norm2 - 1.0).abs() < 1e-12,
                                        "t = {t}, d = {d}, column {c}: |·|² = {norm2}"
                                    );
                                } else {
                                    assert_eq!(norm2, 0.0);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gate_factorizes_the_full_amplitude() {
        // For letters below the top level, ⟨s | t, i⟩ equals the gate entry
        // at (top row, arrival row) times the amplitude one level down.
        let d = 3;
        let q = qf(1.6);
        for lambda in Partition::all_of(3, d) {
            for t in enumerate_ssyt(&lambda, d).unwrap() {
                let gate = reduced_wigner_transform(&t, d, &q).unwrap();
                for letter in 1..d {
                    for (s, ctx) in insertion_targets(&t, letter, d).unwrap() {
                        let full = wigner_from_context(&ctx, &q).unwrap();
                        let r1 = ctx.box_row(d - 1);
                        let r2 = ctx.box_row(d);
                        let below = wigner(
                            &s.restrict(d - 1),
                            &t.restrict(d - 1),
                            letter,
                            d - 1,
                            &q,
                        )
                        .unwrap();
                        let gate_entry = gate.data[[r2 - 1, r1 - 1]];
                        assert!(
                            (full - gate_entry * below).abs() < 1e-12,
                            "t = {t}, letter = {letter}, s = {s}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn symbolic_q_direct_evaluation_errors() {
        let ctx = worked_context();
        assert!(matches!(
            w0::<f64>(&ctx, &QParam::Zero),
            Err(Error::DivergentLimit(_))
        ));
        assert!(matches!(
            w1::<f64>(&ctx, 3, &QParam::Infinity),
            Err(Error::DivergentLimit(_))
        ));
        assert!(matches!(
            reduced_wigner_transform::<f64>(&ssyt(&[&[1]]), 2, &QParam::Zero),
            Err(Error::DivergentLimit(_))
        ));
    }

    #[test]
    fn rejects_letters_outside_alphabet() {
        let t = ssyt(&[&[1]]);
        let s = ssyt(&[&[1, 1]]);
        assert!(WignerContext::new(&t, 0, &s, 2).is_err());
        assert!(WignerContext::new(&t, 3, &s, 2).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn random_pieri_matrices_are_orthogonal(
            parts in proptest::collection::vec(0usize..3, 0..3),
            d in 1usize..4,
            qv in 0.2f64..5.0,
        ) {
            let mut parts = parts;
            parts.sort_unstable_by(|a, b| b.cmp(a));
            parts.truncate(d);
            let lambda = Partition::new(parts).unwrap();
            let p = pieri_matrix::<f64>(&lambda, d, &qf(qv)).unwrap();
            prop_assert!(orthogonality_defect(&p.matrix.data) < 1e-11);
        }
    }
}
