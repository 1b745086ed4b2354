//! Integer partitions and the shape bookkeeping shared by every module.
//!
//! A [`Partition`] is stored trimmed: weakly decreasing, no trailing zeros.
//! Parts are `u64`; every operation that can grow a part uses checked
//! arithmetic and reports [`Error::Overflow`] instead of wrapping.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly decreasing.
    /// Trailing zeros are trimmed.
    pub fn new(parts: impl Into<Vec<u64>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The single-row partition `(k)`, empty for `k = 0`.
    pub fn row(k: u64) -> Self {
        Self::rectangle(1, k)
    }

    /// `k × l`: `k` rows of length `l`.
    pub fn rectangle(k: u64, l: u64) -> Self {
        if l == 0 {
            return Self::empty();
        }
        Self { parts: alloc::vec![l; k as usize] }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Part `i` counted from 1; zero beyond the length.
    pub fn part(&self, i: usize) -> u64 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u64 {
        self.part(1)
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The partition with the first row removed.
    pub fn body(&self) -> Self {
        Self { parts: self.parts.iter().skip(1).copied().collect() }
    }

    /// Size of the body, `|λ| − λ_1`.
    pub fn body_size(&self) -> u64 {
        self.size() - self.first()
    }

    /// `λ + (k)`: adds `k` boxes to the first row (removes them for `k < 0`).
    pub fn add_first_row(&self, k: i64) -> Result<Self> {
        let first = self.first() as i128 + k as i128;
        if first < self.part(2) as i128 {
            return Err(Error::NotAPartition(format!(
                "adding {k} to the first row of {self} leaves {first} < {}",
                self.part(2)
            )));
        }
        let first = u64::try_from(first).map_err(|_| Error::Overflow("add_first_row"))?;
        let mut parts = self.parts.clone();
        if parts.is_empty() {
            parts.push(first);
        } else {
            parts[0] = first;
        }
        Self::new(parts)
    }

    /// `λ^{♯M}`: prolongs the first row so that the result has `M` boxes.
    pub fn pad_to_size(&self, total: u64) -> Result<Self> {
        let delta = total as i128 - self.size() as i128;
        let delta = i64::try_from(delta).map_err(|_| Error::Overflow("pad_to_size"))?;
        self.add_first_row(delta)
    }

    /// Componentwise sum.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        let len = self.length().max(other.length());
        let mut parts = Vec::with_capacity(len);
        for i in 1..=len {
            parts.push(
                self.part(i)
                    .checked_add(other.part(i))
                    .ok_or(Error::Overflow("partition sum"))?,
            );
        }
        Self::new(parts)
    }

    /// Conjugate partition: part `c` is the length of column `c`.
    pub fn transpose(&self) -> Self {
        let cols = self.first() as usize;
        let mut parts = Vec::with_capacity(cols);
        for c in 1..=cols as u64 {
            parts.push(self.parts.iter().take_while(|&&p| p >= c).count() as u64);
        }
        Self { parts }
    }

    /// Length of column `c` (1-based).
    pub fn column_length(&self, c: u64) -> usize {
        self.parts.iter().take_while(|&&p| p >= c).count()
    }

    /// `k ↦ c_k`, the number of columns of length exactly `k`; zero counts
    /// are omitted.
    pub fn column_counts(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for k in 1..=self.length() {
            let c = self.part(k) - self.part(k + 1);
            if c > 0 {
                out.insert(k, c);
            }
        }
        out
    }

    /// Number of boxes lying in columns of length at least two, `λ_2 + |λ̄|`.
    pub fn non_singleton_boxes(&self) -> u64 {
        self.part(2) + self.body_size()
    }

    /// Iterates the boxes `(row, col)`, 1-based, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len as usize).map(move |c| (r + 1, c)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `size` with at most `max_len` parts, each at most
/// `max_part`, in lexicographically decreasing order.
pub fn partitions_of(size: u64, max_len: usize, max_part: u64) -> Vec<Partition> {
    fn rec(rem: u64, max_part: u64, slots: usize, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        let top = rem.min(max_part);
        for p in (1..=top).rev() {
            // remaining slots must be able to absorb the rest
            if p * (slots as u64) < rem {
                break;
            }
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, max_part, max_len, &mut Vec::new(), &mut out);
    out
}
