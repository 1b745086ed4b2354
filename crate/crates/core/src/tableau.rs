//! Tableaux of shape `λ ⊢ dn` with content `d × n`.
//!
//! Letters are the integers `1..=d`. Boxes are addressed `(row, col)`,
//! 1-based. A tableau only ever stores rows; columns and per-letter
//! statistics are derived on demand.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{precondition, Error, Result};
use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    d: u32,
    n: u64,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Builds a tableau from its rows (top to bottom), checking that the row
    /// lengths form a partition and that every letter in `1..=d` labels
    /// exactly `n` boxes.
    pub fn from_rows(d: u32, n: u64, rows: Vec<Vec<u32>>) -> Result<Self> {
        let lens: Vec<u64> = rows.iter().map(|r| r.len() as u64).collect();
        if lens.contains(&0) {
            return Err(Error::MalformedTableau("empty row".into()));
        }
        let shape = Partition::new(lens)
            .map_err(|_| Error::MalformedTableau("row lengths are not weakly decreasing".into()))?;
        let mut counts = vec![0u64; d as usize + 1];
        for &letter in rows.iter().flatten() {
            if letter == 0 || letter > d {
                return Err(Error::MalformedTableau(format!("letter {letter} outside 1..={d}")));
            }
            counts[letter as usize] += 1;
        }
        if let Some(u) = (1..=d as usize).find(|&u| counts[u] != n) {
            return Err(Error::MalformedTableau(format!(
                "letter {u} labels {} boxes, expected {n}",
                counts[u]
            )));
        }
        Ok(Self { shape, d, n, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Number of letters (outer degree).
    pub fn d(&self) -> u32 {
        self.d
    }

    /// Class size (inner degree).
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn letter_at(&self, row: usize, col: usize) -> u32 {
        self.rows[row - 1][col - 1]
    }

    /// Columns as letter lists, top to bottom.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        let width = self.shape.first() as usize;
        (0..width)
            .map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect()
    }

    /// Number of columns of length at least two (`λ_2`).
    pub fn non_singleton_width(&self) -> usize {
        self.shape.part(2) as usize
    }

    /// `|C¹_u|` for `u = 1..=d` (index 0 unused): boxes of letter `u` in
    /// singleton columns.
    pub fn singleton_counts(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.d as usize + 1];
        if let Some(first) = self.rows.first() {
            for &u in &first[self.non_singleton_width()..] {
                out[u as usize] += 1;
            }
        }
        out
    }

    /// The first letter found twice in a column, with its 1-based column.
    pub fn column_repeat(&self) -> Option<(u32, usize)> {
        for (c, col) in self.columns().iter().enumerate() {
            for (i, &a) in col.iter().enumerate() {
                if col[i + 1..].contains(&a) {
                    return Some((a, c + 1));
                }
            }
        }
        None
    }

    /// `Ok` iff no letter occurs twice in a column; a repeat means `v_T = 0`.
    pub fn validate(&self) -> Result<()> {
        match self.column_repeat() {
            Some((letter, column)) => Err(Error::ColumnRepeat { letter, column }),
            None => Ok(()),
        }
    }

    /// Canonical representative of the equivalence class.
    pub fn canonicalize(&self) -> Result<TableauClass> {
        self.validate()?;
        Ok(TableauClass { canonical: self.canonical_form() })
    }

    fn canonical_form(&self) -> Tableau {
        let w = self.non_singleton_width();
        let mut relabel = vec![0u32; self.d as usize + 1];
        let mut next = 1u32;
        for col in self.columns().iter().take(w) {
            for &u in col {
                if relabel[u as usize] == 0 {
                    relabel[u as usize] = next;
                    next += 1;
                }
            }
        }
        for slot in &mut relabel[1..=self.d as usize] {
            if *slot == 0 {
                *slot = next;
                next += 1;
            }
        }
        let mut rows: Vec<Vec<u32>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&u| relabel[u as usize]).collect())
            .collect();
        if let Some(first) = rows.first_mut() {
            first[w..].sort_unstable();
        }
        Tableau { shape: self.shape.clone(), d: self.d, n: self.n, rows }
    }

    /// Same tableau with its singleton columns sorted by letter (labels kept).
    pub fn with_sorted_singletons(mut self) -> Self {
        let w = self.non_singleton_width();
        if let Some(first) = self.rows.first_mut() {
            first[w..].sort_unstable();
        }
        self
    }

    /// Adds `n_new − n` copies of every letter to the first row.
    pub fn inner_lift(&self, n_new: u64) -> Result<Self> {
        precondition!(n_new >= self.n, "n_new = {n_new} >= n = {}", self.n);
        let extra = n_new - self.n;
        let mut rows = self.rows.clone();
        if rows.is_empty() {
            rows.push(Vec::new());
        }
        for u in 1..=self.d {
            rows[0].extend(core::iter::repeat(u).take(extra as usize));
        }
        let rows = rows.into_iter().filter(|r| !r.is_empty()).collect();
        Ok(Self::from_rows(self.d, n_new, rows)?.with_sorted_singletons())
    }

    /// Adds `d_new − d` fresh letters, `n` boxes each, to the first row.
    pub fn outer_lift(&self, d_new: u32) -> Result<Self> {
        precondition!(d_new >= self.d, "d_new = {d_new} >= d = {}", self.d);
        let mut rows = self.rows.clone();
        if rows.is_empty() {
            rows.push(Vec::new());
        }
        for u in self.d + 1..=d_new {
            rows[0].extend(core::iter::repeat(u).take(self.n as usize));
        }
        let rows = rows.into_iter().filter(|r| !r.is_empty()).collect();
        Ok(Self::from_rows(d_new, self.n, rows)?.with_sorted_singletons())
    }

    /// Inverse of [`Tableau::inner_lift`]: removes `n − m` singleton boxes of
    /// every letter. Fails unless each letter has that many singletons.
    pub fn inner_unlift(&self, m: u64) -> Result<Self> {
        precondition!(m <= self.n, "m = {m} <= n = {}", self.n);
        let remove = self.n - m;
        let singles = self.singleton_counts();
        if let Some(u) = (1..=self.d as usize).find(|&u| singles[u] < remove) {
            return Err(Error::Precondition(format!(
                "letter {u} has {} singleton boxes, fewer than n - m = {remove}",
                singles[u]
            )));
        }
        let w = self.non_singleton_width();
        let mut left = vec![remove; self.d as usize + 1];
        let mut rows = self.rows.clone();
        let first = &mut rows[0];
        let mut kept: Vec<u32> = first[..w].to_vec();
        for &u in &first[w..] {
            if left[u as usize] > 0 {
                left[u as usize] -= 1;
            } else {
                kept.push(u);
            }
        }
        *first = kept;
        let rows = rows.into_iter().filter(|r| !r.is_empty()).collect();
        Self::from_rows(self.d, m, rows)
    }

    /// Inverse of [`Tableau::outer_lift`]: drops `d − k` letters that occur
    /// only in singleton columns, relabelling the survivors to `1..=k`.
    pub fn outer_unlift(&self, k: u32) -> Result<Self> {
        precondition!(k <= self.d, "k = {k} <= d = {}", self.d);
        let singles = self.singleton_counts();
        let free: Vec<u32> = (1..=self.d).filter(|&u| singles[u as usize] == self.n).collect();
        let drop_count = (self.d - k) as usize;
        precondition!(
            free.len() >= drop_count,
            "{} letters occur only in singleton columns, need d - k = {drop_count}",
            free.len()
        );
        let dropped = &free[free.len() - drop_count..];
        let mut relabel = vec![0u32; self.d as usize + 1];
        let mut next = 1;
        for u in 1..=self.d {
            if !dropped.contains(&u) {
                relabel[u as usize] = next;
                next += 1;
            }
        }
        let rows: Vec<Vec<u32>> = self
            .rows
            .iter()
            .map(|r| r.iter().filter(|&&u| relabel[u as usize] != 0).map(|&u| relabel[u as usize]).collect())
            .filter(|r: &Vec<u32>| !r.is_empty())
            .collect();
        Self::from_rows(k, self.n, rows)
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau(d={}, n={}, rows={:?})", self.d, self.n, self.rows)
    }
}

/// An equivalence class of tableaux with no repeated letter in a column,
/// held by its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TableauClass {
    canonical: Tableau,
}

impl TableauClass {
    pub fn tableau(&self) -> &Tableau {
        &self.canonical
    }

    pub fn into_tableau(self) -> Tableau {
        self.canonical
    }
}

/// The `d × n` tableau whose row `u` is filled with the letter `u`.
pub fn row_tableau(d: u32, n: u64) -> Result<Tableau> {
    precondition!(d >= 1 && n >= 1, "d = {d} >= 1 and n = {n} >= 1");
    let rows = (1..=d).map(|u| vec![u; n as usize]).collect();
    Tableau::from_rows(d, n, rows)
}

/// Every class of tableaux of `shape` with content `d × n` and no column
/// repeats, ordered lexicographically by the column-major reading of the
/// canonical representative.
///
/// Classes whose vectors agree up to sign are listed once: permuting the
/// letters inside a column only flips the sign of `v_T`, and swapping two
/// columns of equal length leaves it unchanged. The first class of each such
/// family in the order above is kept.
pub fn enumerate_classes(shape: &Partition, d: u32, n: u64) -> Vec<TableauClass> {
    let mut out = Vec::new();
    if shape.size() != d as u64 * n || shape.length() > d as usize {
        return out;
    }
    if shape.is_empty() {
        if let Ok(t) = Tableau::from_rows(d, n, Vec::new()) {
            out.push(TableauClass { canonical: t });
        }
        return out;
    }
    let w = shape.part(2) as usize;
    // boxes of the non-singleton part in column-major order
    let mut cells = Vec::new();
    for c in 1..=w {
        for r in 1..=shape.column_length(c as u64) {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0u32; l as usize]).collect();
    let mut counts = vec![0u64; d as usize + 1];
    let mut all = Vec::new();
    let mut state = EnumState { shape, d, n, w, cells: &cells, out: &mut all };
    state.fill(0, 0, &mut grid, &mut counts);
    let mut seen = alloc::collections::BTreeSet::new();
    for class in all {
        if seen.insert(class.tableau().span_key()) {
            out.push(class);
        }
    }
    out
}

impl Tableau {
    /// A key identifying the tableau up to letter relabeling, reordering
    /// inside columns and swaps of equal-length columns.
    pub(crate) fn span_key(&self) -> Vec<Vec<u32>> {
        let w = self.non_singleton_width();
        let cols: Vec<Vec<u32>> = self.columns().into_iter().take(w).collect();
        let mut active: Vec<u32> = cols.iter().flatten().copied().collect();
        active.sort_unstable();
        active.dedup();
        // letters are only interchanged with letters of the same profile
        let profile = |u: u32| {
            let mut lens: Vec<usize> = cols.iter().filter(|c| c.contains(&u)).map(Vec::len).collect();
            lens.sort_unstable();
            lens
        };
        let mut groups: BTreeMap<Vec<usize>, Vec<u32>> = BTreeMap::new();
        for &u in &active {
            groups.entry(profile(u)).or_default().push(u);
        }
        let groups: Vec<Vec<u32>> = groups.into_values().collect();
        let mut relabel = vec![0u32; self.d as usize + 1];
        let mut best: Option<Vec<Vec<u32>>> = None;
        search_relabel(&groups, 0, 0, 1, &mut relabel, &cols, &mut best);
        let mut key = best.unwrap_or_default();
        key.push(self.shape.parts().iter().map(|&p| p as u32).collect());
        key
    }
}

fn search_relabel(
    groups: &[Vec<u32>],
    g: usize,
    k: usize,
    next: u32,
    relabel: &mut Vec<u32>,
    cols: &[Vec<u32>],
    best: &mut Option<Vec<Vec<u32>>>,
) {
    if g == groups.len() {
        let mut enc: Vec<Vec<u32>> = cols
            .iter()
            .map(|c| {
                let mut v: Vec<u32> = c.iter().map(|&u| relabel[u as usize]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        enc.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        if best.as_ref().map_or(true, |b| enc < *b) {
            *best = Some(enc);
        }
        return;
    }
    if k == groups[g].len() {
        search_relabel(groups, g + 1, 0, next, relabel, cols, best);
        return;
    }
    // assign label `next` to each still-unlabelled letter of group g in turn
    for &u in &groups[g] {
        if relabel[u as usize] != 0 {
            continue;
        }
        relabel[u as usize] = next;
        search_relabel(groups, g, k + 1, next + 1, relabel, cols, best);
        relabel[u as usize] = 0;
    }
}

struct EnumState<'a> {
    shape: &'a Partition,
    d: u32,
    n: u64,
    w: usize,
    cells: &'a [(usize, usize)],
    out: &'a mut Vec<TableauClass>,
}

impl EnumState<'_> {
    fn fill(&mut self, idx: usize, used: u32, grid: &mut Vec<Vec<u32>>, counts: &mut Vec<u64>) {
        if idx == self.cells.len() {
            let mut rows = grid.clone();
            let mut singles = Vec::new();
            for u in 1..=self.d {
                singles.extend(core::iter::repeat(u).take((self.n - counts[u as usize]) as usize));
            }
            rows[0].truncate(self.w);
            rows[0].extend(singles);
            debug_assert_eq!(rows[0].len() as u64, self.shape.first());
            if let Ok(t) = Tableau::from_rows(self.d, self.n, rows) {
                self.out.push(TableauClass { canonical: t });
            }
            return;
        }
        let (r, c) = self.cells[idx];
        // restricted growth: a new letter must be the next unused label
        let top = (used + 1).min(self.d);
        for u in 1..=top {
            if counts[u as usize] == self.n {
                continue;
            }
            if (1..r).any(|rr| grid[rr - 1][c - 1] == u) {
                continue;
            }
            grid[r - 1][c - 1] = u;
            counts[u as usize] += 1;
            self.fill(idx + 1, used.max(u), grid, counts);
            counts[u as usize] -= 1;
            grid[r - 1][c - 1] = 0;
        }
    }
}
