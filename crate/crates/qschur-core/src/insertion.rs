//! Row insertion, its column-inserting dual, the word ↔ (P, Q) bijection
//! with recording tableaux, and the nondeterministic quantum insertion that
//! returns *every* admissible outcome with its insertion path and bumping
//! sign. The two classical algorithms are always among the quantum
//! outcomes; they are the `q → ∞` and `q → 0` survivors of the transform.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::tableaux::{Cell, SemiStandardTableau, StandardTableau};

/// One letter movement during an insertion. `from_row` is `None` for the
/// letter entering from outside; bumped letters record the 1-based row they
/// were displaced from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BumpStep {
    pub letter: usize,
    pub from_row: Option<usize>,
    pub to_row: usize,
}

impl BumpStep {
    /// −1 when the letter lands strictly below the row it came from.
    fn sign_factor(&self) -> i8 {
        match self.from_row {
            Some(f) if self.to_row > f => -1,
            _ => 1,
        }
    }
}

fn path_sign(path: &[BumpStep]) -> i8 {
    path.iter().map(BumpStep::sign_factor).product()
}

/// An insertion result: the grown tableau, where its new box sits, the
/// chain of letter movements, and the product of their signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionOutcome {
    pub result: SemiStandardTableau,
    pub new_box: Cell,
    pub path: Vec<BumpStep>,
    pub sign: i8,
}

/// Insertion tableau and its recording tableau; the shapes always agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RskPair {
    pub p: SemiStandardTableau,
    pub q: StandardTableau,
}

/// Row insertion: the letter enters row 1, bumping the leftmost strictly
/// larger entry down a row, until some letter can be appended.
pub fn rsk_insert(t: &SemiStandardTableau, letter: usize) -> InsertionOutcome {
    assert!(letter >= 1, "letters are 1-based");
    let mut rows: Vec<Vec<usize>> = t.rows().to_vec();
    let mut cur = letter;
    let mut from: Option<usize> = None;
    let mut path = Vec::new();
    let mut r = 0;
    let new_box = loop {
        if r == rows.len() {
            rows.push(vec![cur]);
            path.push(BumpStep { letter: cur, from_row: from, to_row: r + 1 });
            break Cell::new(r + 1, 1).unwrap();
        }
        match rows[r].iter().position(|&x| x > cur) {
            None => {
                rows[r].push(cur);
                path.push(BumpStep { letter: cur, from_row: from, to_row: r + 1 });
                break Cell::new(r + 1, rows[r].len()).unwrap();
            }
            Some(c) => {
                let bumped = std::mem::replace(&mut rows[r][c], cur);
                path.push(BumpStep { letter: cur, from_row: from, to_row: r + 1 });
                cur = bumped;
                from = Some(r + 1);
                r += 1;
            }
        }
    };
    let sign = path_sign(&path);
    InsertionOutcome { result: SemiStandardTableau::new(rows).unwrap(), new_box, path, sign }
}

/// Column insertion: the letter enters column 1, bumping the topmost entry
/// `≥` it into the next column. Bumped letters never move down, so the sign
/// is always +1.
pub fn dual_rsk_insert(t: &SemiStandardTableau, letter: usize) -> InsertionOutcome {
    assert!(letter >= 1, "letters are 1-based");
    let mut rows: Vec<Vec<usize>> = t.rows().to_vec();
    let mut cur = letter;
    let mut from: Option<usize> = None;
    let mut path = Vec::new();
    let mut c = 0;
    let new_box = loop {
        let col_len = rows.iter().take_while(|row| row.len() > c).count();
        if col_len == 0 || cur > rows[col_len - 1][c] {
            if col_len == rows.len() {
                rows.push(Vec::new());
            }
            rows[col_len].push(cur);
            debug_assert_eq!(rows[col_len].len(), c + 1);
            path.push(BumpStep { letter: cur, from_row: from, to_row: col_len + 1 });
            break Cell::new(col_len + 1, c + 1).unwrap();
        }
        let r = (0..col_len).find(|&r| rows[r][c] >= cur).unwrap();
        let bumped = std::mem::replace(&mut rows[r][c], cur);
        path.push(BumpStep { letter: cur, from_row: from, to_row: r + 1 });
        cur = bumped;
        from = Some(r + 1);
        c += 1;
    };
    let sign = path_sign(&path);
    debug_assert_eq!(sign, 1);
    InsertionOutcome { result: SemiStandardTableau::new(rows).unwrap(), new_box, path, sign }
}

/// Row-inserts the word left to right, recording in Q which box each step
/// added; also returns the product of the bumping signs.
pub fn rsk_word_signed(w: &[usize]) -> (RskPair, i8) {
    let mut p = SemiStandardTableau::empty();
    let mut q_rows: Vec<Vec<usize>> = Vec::new();
    let mut sign = 1i8;
    for (k, &a) in w.iter().enumerate() {
        let out = rsk_insert(&p, a);
        sign *= out.sign;
        let r = out.new_box.row;
        if q_rows.len() < r {
            q_rows.push(Vec::new());
        }
        q_rows[r - 1].push(k + 1);
        p = out.result;
    }
    (RskPair { p, q: StandardTableau::new(q_rows).unwrap() }, sign)
}

pub fn rsk_word(w: &[usize]) -> RskPair {
    rsk_word_signed(w).0
}

/// Column-inserts the word left to right; Q records the box-addition order
/// (the same recording convention as [`rsk_word`]).
pub fn dual_rsk_word(w: &[usize]) -> RskPair {
    let mut p = SemiStandardTableau::empty();
    let mut q_rows: Vec<Vec<usize>> = Vec::new();
    for (k, &a) in w.iter().enumerate() {
        let out = dual_rsk_insert(&p, a);
        let r = out.new_box.row;
        if q_rows.len() < r {
            q_rows.push(Vec::new());
        }
        q_rows[r - 1].push(k + 1);
        p = out.result;
    }
    RskPair { p, q: StandardTableau::new(q_rows).unwrap() }
}

/// Inverts [`rsk_word`]: peels boxes off in the order recorded by Q,
/// reverse-bumping upward.
pub fn rsk_inverse(pair: &RskPair) -> Result<Vec<usize>> {
    if pair.p.shape() != pair.q.shape() {
        return Err(Error::InvalidArgument(format!(
            "P has shape {} but Q has shape {}",
            pair.p.shape(),
            pair.q.shape()
        )));
    }
    let mut rows: Vec<Vec<usize>> = pair.p.rows().to_vec();
    let n = pair.q.n();
    let mut w = vec![0usize; n];
    for k in (1..=n).rev() {
        let cell = pair.q.cell_of(k)?;
        let mut cur = rows[cell.row - 1].pop().unwrap();
        if rows[cell.row - 1].is_empty() {
            rows.pop();
        }
        for rr in (0..cell.row - 1).rev() {
            // rightmost entry smaller than the falling letter is what bumped it
            let c = rows[rr].iter().rposition(|&x| x < cur).unwrap();
            cur = std::mem::replace(&mut rows[rr][c], cur);
        }
        w[k - 1] = cur;
    }
    Ok(w)
}

const HOLE: usize = 0;

/// Rows weakly increase and columns strictly increase over the non-hole
/// entries; every box below row 1 has a box above it.
fn valid_ignoring_hole(rows: &[Vec<usize>]) -> bool {
    for (r, row) in rows.iter().enumerate() {
        let mut last = None;
        for (c, &v) in row.iter().enumerate() {
            if v == HOLE {
                continue;
            }
            if last.is_some_and(|l| v < l) {
                return false;
            }
            last = Some(v);
            if r > 0 {
                if c >= rows[r - 1].len() {
                    return false;
                }
                let up = rows[r - 1][c];
                if up != HOLE && up >= v {
                    return false;
                }
            }
        }
    }
    true
}

struct QInsertSearch {
    hole: (usize, usize),
    outcomes: HashMap<(Vec<Vec<usize>>, usize), (Vec<BumpStep>, i8)>,
}

impl QInsertSearch {
    fn dfs(
        &mut self,
        rows: &mut Vec<Vec<usize>>,
        cur: usize,
        cur_from: Option<usize>,
        path: &mut Vec<BumpStep>,
        sign: i8,
    ) {
        let (hr, hc) = self.hole;
        // terminate: the current letter fills the hole
        rows[hr][hc] = cur;
        if valid_ignoring_hole(rows) {
            let step = BumpStep { letter: cur, from_row: cur_from.map(|f| f + 1), to_row: hr + 1 };
            let mut full_path = path.clone();
            full_path.push(step);
            let s = sign * step.sign_factor();
            let key = (rows.clone(), hr);
            if let Some((_, prev)) = self.outcomes.get(&key) {
                debug_assert_eq!(*prev, s, "bumping sign must be path-independent");
            } else {
                self.outcomes.insert(key, (full_path, s));
            }
        }
        rows[hr][hc] = HOLE;
        // or: the current letter replaces any strictly larger one, which
        // becomes the next letter to place
        for r in 0..rows.len() {
            for c in 0..rows[r].len() {
                let v = rows[r][c];
                if v == HOLE || v <= cur {
                    continue;
                }
                rows[r][c] = cur;
                if valid_ignoring_hole(rows) {
                    let step =
                        BumpStep { letter: cur, from_row: cur_from.map(|f| f + 1), to_row: r + 1 };
                    path.push(step);
                    self.dfs(rows, v, Some(r), path, sign * step.sign_factor());
                    path.pop();
                }
                rows[r][c] = v;
            }
        }
    }
}

/// Quantum insertion: adds a hole at every addable corner, then lets the
/// letter either fill the hole or displace any strictly larger letter (the
/// displaced letter continuing recursively), keeping exactly the moves that
/// leave rows weakly and columns strictly increasing. Outcomes are
/// deduplicated by (result, new-box row) — the sign is independent of the
/// path taken, and the recorded path is the first one found. Results are
/// ordered by reading word, then by new-box row.
pub fn q_insert(t: &SemiStandardTableau, letter: usize) -> Vec<InsertionOutcome> {
    assert!(letter >= 1, "letters are 1-based");
    let base: Vec<Vec<usize>> = t.rows().to_vec();
    let shape = t.shape();
    let mut search = QInsertSearch { hole: (0, 0), outcomes: HashMap::new() };
    for hr in 1..=shape.len() + 1 {
        if shape.add_box(hr).is_err() {
            continue;
        }
        let mut work = base.clone();
        if hr == work.len() + 1 {
            work.push(Vec::new());
        }
        work[hr - 1].push(HOLE);
        search.hole = (hr - 1, work[hr - 1].len() - 1);
        search.dfs(&mut work, letter, None, &mut Vec::new(), 1);
    }
    let mut out: Vec<InsertionOutcome> = search
        .outcomes
        .into_iter()
        .map(|((rows, hr), (path, sign))| {
            let col = rows[hr].len();
            InsertionOutcome {
                result: SemiStandardTableau::new(rows).unwrap(),
                new_box: Cell::new(hr + 1, col).unwrap(),
                path,
                sign,
            }
        })
        .collect();
    out.sort_by(|a, b| {
        (a.result.reading_word(), a.new_box.row).cmp(&(b.result.reading_word(), b.new_box.row))
    });
    out
}

/// Big-endian index of a word in the `d^n`-dimensional word basis:
/// `Σ (w_j − 1)·d^{n−j}`, zero-based.
pub fn word_index(w: &[usize], d: usize) -> usize {
    w.iter().fold(0, |acc, &a| {
        debug_assert!((1..=d).contains(&a));
        acc * d + (a - 1)
    })
}

/// Inverse of [`word_index`].
pub fn index_to_word(mut index: usize, n: usize, d: usize) -> Vec<usize> {
    let mut w = vec![0usize; n];
    for j in (0..n).rev() {
        w[j] = index % d + 1;
        index /= d;
    }
    debug_assert_eq!(index, 0);
    w
}

/// All words of length n over `{1..d}` in index order.
pub fn all_words(n: usize, d: usize) -> Vec<Vec<usize>> {
    (0..d.pow(n as u32)).map(|ix| index_to_word(ix, n, d)).collect()
}
