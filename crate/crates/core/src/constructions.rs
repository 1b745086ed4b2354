//! Explicit tableaux whose vectors are provably nonzero.
//!
//! Both families have shape `ν = (t+1)×i + (r+1)×1 + (j)`: a `(t+1) × i`
//! rectangle, one extra column of height `r+1` glued to its right (or a
//! long first column when `r > t`), and a long first row. Below the first
//! row every letter occurs a different number of times, so the monomial
//! tensor that records the row of every box pairs with `v_T` through
//! assignments of value `+1` only.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{precondition, Result};
use crate::tableau::Tableau;

/// Appends the missing copies of every letter to the first row, sorted.
fn fill_singletons(d: u32, n: u64, mut rows: Vec<Vec<u32>>) -> Result<Tableau> {
    let mut used = vec![0u64; d as usize + 1];
    for &u in rows.iter().flatten() {
        used[u as usize] += 1;
    }
    for u in 1..=d {
        precondition!(used[u as usize] <= n, "letter {u} needs {} boxes <= n = {n}", used[u as usize]);
        rows[0].extend(core::iter::repeat(u).take((n - used[u as usize]) as usize));
    }
    Tableau::from_rows(d, n, rows)
}

/// The short-column tableau (`t ≥ r`).
///
/// Row `k+1` holds `k+1` copies of `k` followed by `i−k` copies of `2t+1−k`
/// when `k ≤ r`, or `i−k−1` copies when `r < k ≤ t`. The first row begins
/// with `2t+1, …, 2t+i+1`; every other box is a singleton.
pub fn short_column_tableau(t: u32, r: u32, i: u32, n: u64, d: u32) -> Result<Tableau> {
    precondition!(r >= 1, "r = {r} >= 1");
    precondition!(t >= r, "t = {t} >= r = {r}");
    precondition!(i >= 2 * t + 3, "i = {i} >= 2t+3 = {}", 2 * t + 3);
    precondition!(n >= i as u64, "n = {n} >= i = {i}");
    precondition!(d > 2 * t + i, "d = {d} >= 2t+i+1 = {}", 2 * t + i + 1);
    let mut rows = vec![(2 * t + 1..=2 * t + i + 1).collect::<Vec<u32>>()];
    for k in 1..=t {
        let tail = if k <= r { i - k } else { i - k - 1 };
        let mut row = vec![k; k as usize + 1];
        row.extend(core::iter::repeat(2 * t + 1 - k).take(tail as usize));
        rows.push(row);
    }
    fill_singletons(d, n, rows)
}

/// `e = 2(⌊(r−1)/(2t)⌋ + 1)` and `i′ = (te+1)e/2` for the long-column
/// construction.
pub fn long_column_params(t: u32, r: u32) -> (u32, u32) {
    let e = 2 * ((r - 1) / (2 * t) + 1);
    (e, (t * e + 1) * e / 2)
}

/// Row of `T′` (1-based) holding label `s`: `min(ℓ, 2t−ℓ+1)` with
/// `s ≡ ℓ (mod 2t)`, `1 ≤ ℓ ≤ 2t`.
fn inner_row(s: u32, t: u32) -> u32 {
    let l = (s - 1) % (2 * t) + 1;
    l.min(2 * t - l + 1)
}

/// The long-column tableau. For `r ≤ t` this is [`short_column_tableau`].
///
/// The first row begins with `te+1, …, te+i+1`; the first column holds
/// `te, te−1, …, te−r+1` in rows `2..=r+1`; in the `t × i` block `T′`
/// (rows `2..=t+1`, columns `2..=i+1`) label `s ≤ te` fills `s` boxes of a
/// single row. For `i > i′` each row's largest label gets `i − i′` more.
pub fn long_column_tableau(t: u32, r: u32, i: u32, n: u64, d: u32) -> Result<Tableau> {
    precondition!(t >= 1 && r >= 1, "t = {t} >= 1 and r = {r} >= 1");
    if r <= t {
        return short_column_tableau(t, r, i, n, d);
    }
    let (e, i_prime) = long_column_params(t, r);
    let te = t * e;
    let extra = i.saturating_sub(i_prime);
    precondition!(i >= i_prime, "i = {i} >= i' = (te+1)e/2 = {i_prime}");
    precondition!(
        n >= (te + 2 + extra) as u64,
        "n = {n} >= te+2+(i-i') = {}",
        te + 2 + extra
    );
    precondition!(d > te + i, "d = {d} >= te+i+1 = {}", te + i + 1);
    let mut rows = vec![(te + 1..=te + i + 1).collect::<Vec<u32>>()];
    for k in 1..=r.max(t) {
        let mut row = Vec::new();
        if k <= r {
            row.push(te + 1 - k);
        }
        if k <= t {
            for s in (1..=te).filter(|&s| inner_row(s, t) == k) {
                let count = if s == te + 1 - k { s + extra } else { s };
                row.extend(core::iter::repeat(s).take(count as usize));
            }
        }
        rows.push(row);
    }
    fill_singletons(d, n, rows)
}

/// The range of admissible `i` for the long-column construction:
/// `[(r+2t)²/(2t), (r+2t)²/(2t) + r+t+1]`, rounded inward.
pub fn long_column_interval(t: u32, r: u32) -> (u64, u64) {
    let num = ((r + 2 * t) as u64).pow(2);
    let den = 2 * t as u64;
    let lo = num.div_ceil(den);
    let hi = (num + (r + t + 1) as u64 * den) / den;
    (lo, hi)
}

/// The even `i` used for the hook building block `b×1 + c×i + (j)`: the
/// smallest even integer in the admissible interval for `r = b−1`, `t = c−1`.
pub fn hook_width(b: u32, c: u32) -> Result<u32> {
    precondition!(b >= 2 && c >= 2, "b = {b} >= 2 and c = {c} >= 2");
    let (lo, hi) = long_column_interval(c - 1, b - 1);
    let i = lo + lo % 2;
    debug_assert!(i <= hi);
    Ok(i as u32)
}

/// Minimal inner and outer degrees at which the hook tableau for `(b, c, i)`
/// exists.
pub fn hook_minimal_degrees(b: u32, c: u32, i: u32) -> (u64, u32) {
    let (r, t) = (b - 1, c - 1);
    if r <= t {
        (i as u64, 2 * t + i + 1)
    } else {
        let (e, i_prime) = long_column_params(t, r);
        ((t * e + 2 + i.saturating_sub(i_prime)) as u64, t * e + i + 1)
    }
}

/// The tableau of shape `b×1 + c×i + (j)` with content `d × n`.
pub fn hook_tableau(b: u32, c: u32, i: u32, n: u64, d: u32) -> Result<Tableau> {
    precondition!(b >= 2 && c >= 2, "b = {b} >= 2 and c = {c} >= 2");
    long_column_tableau(c - 1, b - 1, i, n, d)
}

/// The monomial tensor `⊗_u m_u` with `m_u = ⊗_{boxes of u} X_row`, as an
/// index map: block `u` lists the rows of the boxes of letter `u`.
pub fn structured_witness(t: &Tableau) -> Vec<u32> {
    let mut per_letter: Vec<Vec<u32>> = vec![Vec::new(); t.d() as usize + 1];
    for (r, row) in t.rows().iter().enumerate() {
        for &u in row {
            per_letter[u as usize].push(r as u32 + 1);
        }
    }
    per_letter.into_iter().skip(1).flatten().collect()
}

/// Occurrences of each letter outside the first row (index 0 unused).
pub fn sub_row_counts(t: &Tableau) -> Vec<u64> {
    let mut out = vec![0u64; t.d() as usize + 1];
    for &u in t.rows().iter().skip(1).flatten() {
        out[u as usize] += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn short_example_shape() {
        let tab = short_column_tableau(1, 1, 5, 5, 8).unwrap();
        assert_eq!(tab.shape().parts(), &[34, 6]);
        assert!(tab.validate().is_ok());
        assert!(matches!(short_column_tableau(1, 1, 4, 5, 8), Err(Error::Precondition(_))));
    }

    #[test]
    fn short_singleton_counts() {
        let (t, r, i, n, d) = (2u32, 1u32, 7u32, 8u64, 12u32);
        let tab = short_column_tableau(t, r, i, n, d).unwrap();
        let singles = tab.singleton_counts();
        let low: Vec<u64> = (1..=2 * t as usize).map(|u| singles[u]).collect();
        let mut sorted = low.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), low.len());
        assert!(low.iter().all(|&c| c <= n - 2));
        assert!((2 * t + 1..=2 * t + i + 1).all(|u| singles[u as usize] == n - 1));
        assert!((2 * t + i + 2..=d).all(|u| singles[u as usize] == n));
    }

    #[test]
    fn long_minimal_instance() {
        let (e, ip) = long_column_params(1, 2);
        assert_eq!((e, ip), (2, 3));
        let tab = long_column_tableau(1, 2, 3, 4, 6).unwrap();
        assert_eq!(tab.shape().parts(), &[19, 4, 1]);
        assert_eq!(tab.rows()[1], vec![2, 1, 2, 2]);
        assert_eq!(tab.rows()[2], vec![1]);
        assert!(tab.validate().is_ok());
    }

    #[test]
    fn long_delegates_for_short_columns() {
        assert_eq!(long_column_tableau(1, 1, 5, 5, 8).unwrap(), short_column_tableau(1, 1, 5, 5, 8).unwrap());
    }

    #[test]
    fn long_with_extra_boxes() {
        let tab = long_column_tableau(1, 2, 5, 6, 8).unwrap();
        assert!(tab.validate().is_ok());
        assert_eq!(tab.shape().part(2), 6);
        assert!(long_column_tableau(1, 2, 5, 5, 8).is_err());
    }

    #[test]
    fn hook_widths() {
        // m = 2: b, c in 2..=4 and i <= m^4 + 2m^2 = 24
        for b in 2..=4 {
            for c in 2..=4 {
                let i = hook_width(b, c).unwrap();
                let (lo, hi) = long_column_interval(c - 1, b - 1);
                assert!(i % 2 == 0 && lo <= i as u64 && i as u64 <= hi && i <= 24, "{b} {c} {i}");
            }
        }
    }
}
