//! Exact rank over the rationals.

use alloc::vec::Vec;
use num_rational::BigRational;
use num_traits::Zero;

/// Rank of a dense rational matrix by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let head = rows[rank][col].clone();
        for x in &mut rows[rank][col..width] {
            *x = &*x / &head;
        }
        let (top, bottom) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in bottom.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for c in col..width {
                if !prow[c].is_zero() {
                    row[c] = &row[c] - &f * &prow[c];
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use alloc::vec;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&x| rational(x)).collect()).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(m(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank(m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(m(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2], &[2, 1, 3]])), 2);
        assert_eq!(rank(vec![]), 0);
    }
}
