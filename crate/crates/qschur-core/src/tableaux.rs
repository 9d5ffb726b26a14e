//! Partitions, Young diagrams, skew shapes, and (semi)standard tableaux,
//! with the deterministic enumeration order that defines every basis index
//! downstream: partitions in descending lexicographic order, tableaux of a
//! fixed shape in lexicographic order of their row-reading word.

use crate::error::{Error, Result};

/// A partition: weakly decreasing list of positive integers. The empty
/// partition is valid and is the base case of cascades.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates weak decrease; trailing zeros are stripped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must weakly decrease, got {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of (nonzero) rows ℓ(λ).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes |λ|.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of the 1-based row `i`, zero beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    /// Containment of diagrams, cell by cell.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.row(i) >= other.row(i))
    }

    /// Shifted row coordinates `l_j = λ_j − j` for `j = 1..=k`, the rows
    /// padded with zeros out to length k. These are strictly decreasing,
    /// which is what makes the Wigner denominators nonzero.
    pub fn shifted_coords(&self, k: usize) -> Vec<i64> {
        (1..=k).map(|j| self.row(j) as i64 - j as i64).collect()
    }

    /// Adds one box at the 1-based row, if the result is still a partition.
    pub fn add_box(&self, row: usize) -> Result<Partition> {
        if row == 0 || row > self.len() + 1 {
            return Err(Error::InvalidArgument(format!(
                "cannot add a box at row {row} of {self}"
            )));
        }
        if row > 1 && self.row(row - 1) == self.row(row) {
            return Err(Error::InvalidArgument(format!(
                "adding a box at row {row} of {self} breaks weak decrease"
            )));
        }
        let mut parts = self.0.clone();
        if row == self.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Ok(Partition(parts))
    }

    /// Removes one box from the 1-based row, if the result is a partition.
    pub fn remove_box(&self, row: usize) -> Result<Partition> {
        if row == 0 || row > self.len() || self.row(row) == self.row(row + 1) {
            return Err(Error::InvalidArgument(format!(
                "cannot remove a box from row {row} of {self}"
            )));
        }
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        Partition::new(parts)
    }

    /// All `(row, shape)` obtained by adding one box, keeping at most
    /// `max_rows` rows, in increasing row order.
    pub fn one_box_extensions(&self, max_rows: usize) -> Vec<(usize, Partition)> {
        (1..=(self.len() + 1).min(max_rows))
            .filter_map(|r| self.add_box(r).ok().map(|p| (r, p)))
            .collect()
    }

    /// All partitions of `n` with at most `max_rows` rows, in descending
    /// lexicographic order.
    pub fn all_of(n: usize, max_rows: usize) -> Vec<Partition> {
        fn gen(remaining: usize, max_part: usize, rows_left: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(acc.clone()));
                return;
            }
            if rows_left == 0 {
                return;
            }
            for p in (1..=max_part.min(remaining)).rev() {
                acc.push(p);
                gen(remaining - p, p, rows_left - 1, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        gen(n, n, max_rows, &mut Vec::new(), &mut out);
        out
    }
}

impl std::fmt::Display for Partition {
    /// `[3,2,1]`; the empty partition is `[]`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must look like [3,2,1], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// True iff `lambda` is `mu` plus exactly one box.
pub fn covers(mu: &Partition, lambda: &Partition) -> bool {
    lambda.contains(mu) && lambda.size() == mu.size() + 1
}

/// One box of a Young diagram, 1-based coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Result<Self> {
        if row >= 1 && col >= 1 {
            Ok(Cell { row, col })
        } else {
            Err(Error::InvalidArgument(format!("cell coordinates are 1-based, got ({row},{col})")))
        }
    }

    /// Diagonal residue `col − row`.
    pub fn residue(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// Difference of residues; antisymmetric in its arguments.
pub fn axial_distance(b: Cell, b2: Cell) -> i64 {
    b.residue() - b2.residue()
}

/// A skew diagram `outer \ inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidArgument(format!(
                "skew shape needs inner ⊆ outer, got {outer} \\ {inner}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// At most one box per column — equivalently each inner row reaches at
    /// least as far as the next outer row.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..self.outer.len().max(1)).all(|i| self.outer.row(i + 1) <= self.inner.row(i))
    }

    /// Residue of the rightmost box of the 1-based row `i`; errors if the
    /// row holds no boxes of the skew shape.
    pub fn last_box_residue(&self, i: usize) -> Result<i64> {
        if i == 0 || self.outer.row(i) == self.inner.row(i) {
            return Err(Error::InvalidArgument(format!(
                "row {i} of {} \\ {} is empty",
                self.outer, self.inner
            )));
        }
        Ok(self.outer.row(i) as i64 - i as i64)
    }

    /// `a_{ij}` = residue of the last box of row i minus that of row j.
    pub fn row_axial_distance(&self, i: usize, j: usize) -> Result<i64> {
        Ok(self.last_box_residue(i)? - self.last_box_residue(j)?)
    }

    /// The full table `(i, j, a_{ij})` over nonempty rows `i < j`.
    pub fn row_axial_distances(&self) -> Vec<(usize, usize, i64)> {
        let rows: Vec<usize> =
            (1..=self.outer.len()).filter(|&i| self.outer.row(i) > self.inner.row(i)).collect();
        let mut out = Vec::new();
        for (a, &i) in rows.iter().enumerate() {
            for &j in &rows[a + 1..] {
                out.push((i, j, self.row_axial_distance(i, j).unwrap()));
            }
        }
        out
    }
}

fn parse_rows(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('/')
        .map(|row| {
            row.split(',')
                .map(|e| {
                    e.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad tableau entry {e:?} in {s:?}")))
                })
                .collect()
        })
        .collect()
}

fn format_rows(rows: &[Vec<usize>], f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            write!(f, "/")?;
        }
        for (j, e) in row.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
    }
    Ok(())
}

fn rows_shape(rows: &[Vec<usize>]) -> Result<Partition> {
    Partition::new(rows.iter().map(Vec::len).collect()).map_err(|_| {
        Error::InvalidArgument("tableau row lengths must weakly decrease".into())
    })
}

fn check_column_strict(rows: &[Vec<usize>]) -> Result<()> {
    for i in 1..rows.len() {
        for j in 0..rows[i].len() {
            if rows[i][j] <= rows[i - 1][j] {
                return Err(Error::InvalidArgument(format!(
                    "column {} not strictly increasing at row {}",
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    Ok(())
}

/// Rows weakly increase, columns strictly increase, entries ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemiStandardTableau {
    rows: Vec<Vec<usize>>,
}

impl SemiStandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        rows_shape(&rows)?;
        for (i, row) in rows.iter().enumerate() {
            if row.iter().any(|&e| e == 0) {
                return Err(Error::InvalidArgument(format!("entries are 1-based, row {}", i + 1)));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidArgument(format!(
                    "row {} not weakly increasing",
                    i + 1
                )));
            }
        }
        check_column_strict(&rows)?;
        Ok(SemiStandardTableau { rows })
    }

    pub fn empty() -> Self {
        SemiStandardTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        rows_shape(&self.rows).unwrap()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Removes all boxes with entries larger than `k` (the restriction
    /// `t^{(k)}`); entries ≤ k occupy a left-justified prefix of each row.
    pub fn restrict(&self, k: usize) -> SemiStandardTableau {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|row| row.iter().copied().take_while(|&e| e <= k).collect::<Vec<_>>())
            .filter(|row: &Vec<usize>| !row.is_empty())
            .collect();
        SemiStandardTableau { rows }
    }

    /// Shape of the restriction `t^{(k)}` without building it.
    pub fn restricted_shape(&self, k: usize) -> Partition {
        Partition::new(
            self.rows.iter().map(|row| row.iter().take_while(|&&e| e <= k).count()).collect(),
        )
        .unwrap()
    }

    /// Number of entries equal to `i` (the weight component `x_i`).
    pub fn content_count(&self, i: usize) -> usize {
        self.rows.iter().flatten().filter(|&&e| e == i).count()
    }

    /// Rows concatenated top to bottom; lexicographic order on this word is
    /// the canonical basis order within a shape.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl std::fmt::Display for SemiStandardTableau {
    /// `1,1,2/2,3`; the empty tableau is the empty string.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        format_rows(&self.rows, f)
    }
}

impl std::str::FromStr for SemiStandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SemiStandardTableau::new(parse_rows(s)?)
    }
}

/// Entries are exactly `1..=n`, each once; rows and columns strictly
/// increase.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        rows_shape(&rows)?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidArgument("rows must strictly increase".into()));
            }
            for &e in row {
                if e == 0 || e > n || seen[e] {
                    return Err(Error::InvalidArgument(format!(
                        "entries must be 1..={n} without repeats, got {e}"
                    )));
                }
                seen[e] = true;
            }
        }
        check_column_strict(&rows)?;
        Ok(StandardTableau { rows })
    }

    pub fn empty() -> Self {
        StandardTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        rows_shape(&self.rows).unwrap()
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// The cell holding `entry`.
    pub fn cell_of(&self, entry: usize) -> Result<Cell> {
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(j) = row.iter().position(|&e| e == entry) {
                return Cell::new(i + 1, j + 1);
            }
        }
        Err(Error::InvalidArgument(format!("entry {entry} not in tableau {self}")))
    }

    /// Residue of the cell holding `entry`.
    pub fn residue_of(&self, entry: usize) -> Result<i64> {
        Ok(self.cell_of(entry)?.residue())
    }

    /// Swaps the entries `i` and `i+1` when the result is still standard
    /// (i.e. they lie in different rows and columns).
    pub fn swap_adjacent(&self, i: usize) -> Option<StandardTableau> {
        let a = self.cell_of(i).ok()?;
        let b = self.cell_of(i + 1).ok()?;
        if a.row == b.row || a.col == b.col {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[a.row - 1][a.col - 1] = i + 1;
        rows[b.row - 1][b.col - 1] = i;
        Some(StandardTableau { rows })
    }

    /// Shape after keeping only entries `≤ k`, a growth chain of the shape.
    pub fn restricted_shape(&self, k: usize) -> Partition {
        Partition::new(
            self.rows.iter().map(|row| row.iter().take_while(|&&e| e <= k).count()).collect(),
        )
        .unwrap()
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl std::fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        format_rows(&self.rows, f)
    }
}

impl std::str::FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StandardTableau::new(parse_rows(s)?)
    }
}

/// All SSYT of the given shape with entries in `1..=d`, in lexicographic
/// order of the row-reading word. The list index is the basis index used by
/// every matrix downstream.
pub fn enumerate_ssyt(lambda: &Partition, d: usize) -> Result<Vec<SemiStandardTableau>> {
    if lambda.len() > d {
        return Err(Error::InvalidArgument(format!(
            "shape {lambda} has more than {d} rows, so no SSYT with entries ≤ {d} exists"
        )));
    }
    let shape: Vec<usize> = lambda.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    // Fill cells row-major; ascending choices per cell yield reading words in
    // lexicographic order directly.
    fn fill(
        rows: &mut Vec<Vec<usize>>,
        shape: &[usize],
        i: usize,
        j: usize,
        d: usize,
        out: &mut Vec<SemiStandardTableau>,
    ) {
        if i == shape.len() {
            out.push(SemiStandardTableau { rows: rows.clone() });
            return;
        }
        let (ni, nj) = if j + 1 < shape[i] { (i, j + 1) } else { (i + 1, 0) };
        let lo = {
            let left = if j > 0 { rows[i][j - 1] } else { 1 };
            let above = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
            left.max(above)
        };
        for e in lo..=d {
            rows[i][j] = e;
            fill(rows, shape, ni, nj, d, out);
        }
        rows[i][j] = 0;
    }
    if shape.is_empty() {
        out.push(SemiStandardTableau::empty());
    } else {
        fill(&mut rows, &shape, 0, 0, d, &mut out);
    }
    Ok(out)
}

/// All SYT of the given shape, in lexicographic order of the row-reading
/// word.
pub fn enumerate_syt(lambda: &Partition) -> Vec<StandardTableau> {
    let n = lambda.size();
    let mut out = Vec::new();
    // Place 1..n in increasing order; each goes in a cell whose left and
    // upper neighbours are already filled, i.e. the partial shape grows by
    // one addable corner per step.
    fn place(
        lambda: &Partition,
        current: &mut Partition,
        rows: &mut Vec<Vec<usize>>,
        k: usize,
        n: usize,
        out: &mut Vec<StandardTableau>,
    ) {
        if k > n {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for (r, grown) in current.one_box_extensions(lambda.len().max(1)) {
            if !lambda.contains(&grown) {
                continue;
            }
            if rows.len() < r {
                rows.push(Vec::new());
            }
            rows[r - 1].push(k);
            let saved = std::mem::replace(current, grown);
            place(lambda, current, rows, k + 1, n, out);
            *current = saved;
            rows[r - 1].pop();
            if rows.last().map_or(false, Vec::is_empty) {
                rows.pop();
            }
        }
    }
    if n == 0 {
        return vec![StandardTableau::empty()];
    }
    place(lambda, &mut Partition::empty(), &mut Vec::new(), 1, n, &mut out);
    out.sort_by_key(StandardTableau::reading_word);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ssyt(s: &str) -> SemiStandardTableau {
        s.parse().unwrap()
    }

    fn syt(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn covers_examples() {
        assert!(covers(&p(&[2, 1]), &p(&[2, 1, 1])));
        assert!(!covers(&p(&[2, 1]), &p(&[3, 2])));
        assert!(!covers(&p(&[1]), &p(&[1])));
    }

    #[test]
    fn horizontal_strips() {
        let hs = |o: &[usize], i: &[usize]| SkewShape::new(p(o), p(i)).unwrap().is_horizontal_strip();
        assert!(hs(&[3, 1], &[1]));
        assert!(!hs(&[2, 2], &[1]));
        assert!(hs(&[1], &[]));
    }

    #[test]
    fn residues() {
        assert_eq!(Cell::new(1, 3).unwrap().residue(), 2);
        assert_eq!(Cell::new(2, 2).unwrap().residue(), 0);
        assert_eq!(Cell::new(4, 1).unwrap().residue(), -3);
    }

    #[test]
    fn axial_distance_in_tableau() {
        let t = syt("1,2,3/4,5/6");
        let b3 = t.cell_of(3).unwrap();
        let b4 = t.cell_of(4).unwrap();
        assert_eq!(axial_distance(b3, b4), 3);
        assert_eq!(axial_distance(b4, b3), -3);
        assert_eq!(axial_distance(b3, b3), 0);
    }

    #[test]
    fn row_axial_tables() {
        let s = SkewShape::new(p(&[6, 4, 1]), p(&[4, 1])).unwrap();
        assert_eq!(s.row_axial_distance(1, 2).unwrap(), 3);
        assert_eq!(s.row_axial_distance(2, 3).unwrap(), 4);
        assert_eq!(s.row_axial_distance(1, 3).unwrap(), 7);
        assert_eq!(s.row_axial_distances(), vec![(1, 2, 3), (1, 3, 7), (2, 3, 4)]);

        let single = SkewShape::new(p(&[4]), Partition::empty()).unwrap();
        assert!(single.row_axial_distances().is_empty());

        let plain = SkewShape::new(p(&[2, 1]), Partition::empty()).unwrap();
        assert_eq!(plain.row_axial_distance(1, 2).unwrap(), 2);

        // empty-row requests error
        assert!(s.row_axial_distance(1, 4).is_err());
        let gap = SkewShape::new(p(&[2, 2]), p(&[2])).unwrap();
        assert!(gap.last_box_residue(1).is_err());
        assert_eq!(gap.last_box_residue(2).unwrap(), 0);
    }

    #[test]
    fn restriction() {
        let t = ssyt("1,1,2/3");
        assert_eq!(t.restrict(2), ssyt("1,1,2"));
        assert_eq!(t.restrict(9), t);
        assert_eq!(t.restrict(1), ssyt("1,1"));
        assert_eq!(t.restricted_shape(2), p(&[3]));
        assert_eq!(t.restricted_shape(0), Partition::empty());
    }

    #[test]
    fn content_counts() {
        let t = ssyt("1,1,2/2,3");
        assert_eq!(t.content_count(2), 2);
        assert_eq!(t.content_count(7), 0);
        assert_eq!(t.content_count(1), 2);
    }

    #[test]
    fn ssyt_enumeration() {
        assert_eq!(enumerate_ssyt(&p(&[2, 1]), 2).unwrap().len(), 2);
        let ones = enumerate_ssyt(&p(&[5]), 1).unwrap();
        assert_eq!(ones, vec![ssyt("1,1,1,1,1")]);
        assert!(enumerate_ssyt(&p(&[1, 1, 1]), 2).is_err());
        assert_eq!(enumerate_ssyt(&Partition::empty(), 2).unwrap().len(), 1);
    }

    #[test]
    fn syt_enumeration() {
        assert_eq!(enumerate_syt(&p(&[2, 1])), vec![syt("1,2/3"), syt("1,3/2")]);
        assert_eq!(enumerate_syt(&Partition::empty()).len(), 1);
        assert_eq!(enumerate_syt(&p(&[2, 2])).len(), 2);
        assert_eq!(enumerate_syt(&p(&[3, 2])).len(), 5);
    }

    /// Brute force: try every assignment of 1..=d to the cells, keep what
    /// validates.
    fn ssyt_count_by_filter(lambda: &Partition, d: usize) -> usize {
        let cells = lambda.size();
        let mut count = 0;
        let mut assign = vec![1usize; cells];
        loop {
            let mut rows = Vec::new();
            let mut idx = 0;
            for &l in lambda.parts() {
                rows.push(assign[idx..idx + l].to_vec());
                idx += l;
            }
            if SemiStandardTableau::new(rows).is_ok() {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == cells {
                    return count;
                }
                assign[i] += 1;
                if assign[i] <= d {
                    break;
                }
                assign[i] = 1;
                i += 1;
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=5 {
            for d in 1..=3usize {
                for lam in Partition::all_of(n, d) {
                    let fast = enumerate_ssyt(&lam, d).unwrap();
                    assert_eq!(fast.len(), ssyt_count_by_filter(&lam, d), "shape {lam} d={d}");
                    // duplicate-free and sorted by reading word
                    for w in fast.windows(2) {
                        assert!(w[0].reading_word() < w[1].reading_word());
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_count() {
        for d in 1..=3usize {
            for n in 1..=6usize {
                let total: usize = Partition::all_of(n, d)
                    .iter()
                    .map(|lam| enumerate_ssyt(lam, d).unwrap().len() * enumerate_syt(lam).len())
                    .sum();
                assert_eq!(total, d.pow(n as u32), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn partition_order_and_text() {
        let all = Partition::all_of(4, 4);
        let shown: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        for pt in &all {
            assert_eq!(&pt.to_string().parse::<Partition>().unwrap(), pt);
        }
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("3,2".parse::<Partition>().is_err());
    }

    #[test]
    fn tableau_text_round_trip() {
        let t = ssyt("1,1,2/2,3");
        assert_eq!(t.to_string(), "1,1,2/2,3");
        assert_eq!(t.to_string().parse::<SemiStandardTableau>().unwrap(), t);
        assert!("2,1".parse::<SemiStandardTableau>().is_err());
        assert!("1,1/1,2".parse::<SemiStandardTableau>().is_err());
        assert!("1,2/3,4/5".parse::<StandardTableau>().is_ok());
        assert!("1,2/2".parse::<StandardTableau>().is_err());
    }

    #[test]
    fn adjacent_swap() {
        let t = syt("1,2/3");
        assert_eq!(t.swap_adjacent(2), Some(syt("1,3/2")));
        assert_eq!(t.swap_adjacent(1), None); // 1,2 share a row
        let u = syt("1,3/2");
        assert_eq!(u.swap_adjacent(1), None); // 1,2 share a column
        assert_eq!(u.swap_adjacent(2), Some(t));
    }

    #[test]
    fn shifted_coords() {
        assert_eq!(p(&[3, 1]).shifted_coords(3), vec![2, -1, -3]);
        assert_eq!(Partition::empty().shifted_coords(2), vec![-1, -2]);
    }

    proptest! {
        #[test]
        fn restriction_chain_is_horizontal_strips(n in 1usize..7, d in 1usize..4, seed in 0usize..1000) {
            let shapes = Partition::all_of(n, d);
            let lam = &shapes[seed % shapes.len()];
            let all = enumerate_ssyt(lam, d).unwrap();
            let t = &all[seed % all.len()];
            for k in 1..=d {
                let outer = t.restricted_shape(k);
                let inner = t.restricted_shape(k - 1);
                let skew = SkewShape::new(outer, inner).unwrap();
                prop_assert!(skew.is_horizontal_strip());
            }
        }

        #[test]
        fn row_axial_additivity(n in 3usize..9, seed in 0usize..500) {
            let shapes = Partition::all_of(n, n);
            let lam = &shapes[seed % shapes.len()];
            if lam.len() >= 3 {
                let s = SkewShape::new(lam.clone(), Partition::empty()).unwrap();
                for (i, j, k) in [(1usize, 2usize, 3usize)] {
                    let aij = s.row_axial_distance(i, j).unwrap();
                    let ajk = s.row_axial_distance(j, k).unwrap();
                    let aik = s.row_axial_distance(i, k).unwrap();
                    prop_assert_eq!(aij + ajk, aik);
                }
            }
        }

        #[test]
        fn extensions_cover(n in 0usize..6, seed in 0usize..200) {
            let shapes = Partition::all_of(n, n.max(1));
            let lam = &shapes[seed % shapes.len()];
            for (r, grown) in lam.one_box_extensions(n + 1) {
                prop_assert!(covers(lam, &grown));
                prop_assert_eq!(grown.row(r), lam.row(r) + 1);
                prop_assert_eq!(grown.remove_box(r).unwrap(), lam.clone());
            }
        }
    }
}
