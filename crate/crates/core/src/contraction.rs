//! Combinatorial contraction of `v_T` against tensors.
//!
//! For an index map `s: [dn] → [N]` (block `B_u` = positions
//! `(u−1)n+1 ..= un`),
//!
//! ```text
//! ⟨v_T, X_{s(1)} ⊗ … ⊗ X_{s(dn)}⟩ = (1/(d!·n!^d)) Σ_ϑ val_ϑ(s)
//! ```
//!
//! where `ϑ` runs over the bijections boxes → `[dn]` sending every letter
//! class onto a whole block, and `val_ϑ(s)` is the product over columns of
//! the sign of the column's values read top to bottom (zero unless they
//! form a permutation of `1..=len`).
//!
//! Two engines compute this sum. [`contract_rank_one_naive`] enumerates
//! every `ϑ`. [`contract_rank_one`] sums over value fillings instead:
//! blocks with equal value content are grouped, letters receive block
//! contents, and the non-singleton columns are filled by a memoized DP.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{factorial, unsigned};
use crate::budget::Budget;
use crate::error::{precondition, Error, Result};
use crate::symtensor::{Exponent, PowerSumPoint, SymPoly};
use crate::tableau::Tableau;

/// A bijection from boxes to tensor positions, stored in the shape of the
/// tableau: `theta[r][c]` is the 1-based position assigned to box `(r+1, c+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub theta: Vec<Vec<u32>>,
}

impl Assignment {
    /// The block permutation `τ` (index 0 unused), if `ϑ` respects `t`.
    pub fn tau(&self, t: &Tableau) -> Option<Vec<u32>> {
        let n = t.n() as u32;
        let mut tau = vec![0u32; t.d() as usize + 1];
        for (row, trow) in self.theta.iter().zip(t.rows()) {
            for (&pos, &u) in row.iter().zip(trow) {
                let block = (pos - 1) / n + 1;
                match tau[u as usize] {
                    0 => tau[u as usize] = block,
                    b if b != block => return None,
                    _ => {}
                }
            }
        }
        Some(tau)
    }
}

/// Sign of `values` as a permutation of `1..=len`, or 0.
pub fn column_sign(values: &[u32]) -> i8 {
    let len = values.len() as u32;
    let mut seen = 0u64;
    for &v in values {
        if v == 0 || v > len || v > 64 || seen & (1 << (v - 1)) != 0 {
            return 0;
        }
        seen |= 1 << (v - 1);
    }
    let mut inversions = 0usize;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] > values[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 { 1 } else { -1 }
}

/// `val_ϑ(s)`: the product over columns of the sign of the column values.
pub fn val_theta(t: &Tableau, theta: &Assignment, s: &[u32]) -> i8 {
    let width = t.shape().first() as usize;
    let mut val = 1i8;
    for c in 0..width {
        let col: Vec<u32> = theta
            .theta
            .iter()
            .take_while(|r| r.len() > c)
            .map(|r| s[r[c] as usize - 1])
            .collect();
        val *= column_sign(&col);
        if val == 0 {
            break;
        }
    }
    val
}

/// Signed count of the assignments behind a rank-one contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneCounts {
    /// Number of respecting `ϑ` with `val_ϑ(s) = +1`.
    pub positive: BigUint,
    /// Number of respecting `ϑ` with `val_ϑ(s) = −1`.
    pub negative: BigUint,
    /// `d!·n!^d`
    pub normalizer: BigUint,
}

impl RankOneCounts {
    pub fn value(&self) -> BigRational {
        let diff = BigInt::from(self.positive.clone()) - BigInt::from(self.negative.clone());
        BigRational::new(diff, BigInt::from(self.normalizer.clone()))
    }
}

fn normalizer(d: u32, n: u64) -> BigUint {
    factorial(d as u64) * num_traits::pow(factorial(n), d as usize)
}

fn check_index_map(t: &Tableau, s: &[u32]) -> Result<()> {
    let expected = t.d() as u64 * t.n();
    if s.len() as u64 != expected {
        return Err(Error::DegreeMismatch { expected, found: s.len() as u64 });
    }
    Ok(())
}

/// Reference implementation enumerating every respecting `ϑ`. Only meant
/// for tiny tableaux (at most ten million assignments).
pub fn contract_rank_one_naive(t: &Tableau, s: &[u32]) -> Result<RankOneCounts> {
    check_index_map(t, s)?;
    let d = t.d() as usize;
    let n = t.n() as usize;
    let total = normalizer(t.d(), t.n());
    precondition!(
        total <= BigUint::from(10_000_000u32),
        "d!·n!^d = {total} <= 10000000 for naive enumeration"
    );
    let mut boxes: Vec<Vec<(usize, usize)>> = vec![Vec::new(); d + 1];
    for (r, row) in t.rows().iter().enumerate() {
        for (c, &u) in row.iter().enumerate() {
            boxes[u as usize].push((r, c));
        }
    }
    let mut theta = Assignment {
        theta: t.rows().iter().map(|r| vec![0u32; r.len()]).collect(),
    };
    let mut counts = (0u64, 0u64);
    let mut taus = Vec::new();
    permutations(&mut (1..=d as u32).collect::<Vec<_>>(), 0, &mut |p| taus.push(p.to_vec()));
    for tau in taus {
        naive_letters(t, s, n, &boxes, &tau, 1, &mut theta, &mut counts);
    }
    Ok(RankOneCounts {
        positive: BigUint::from(counts.0),
        negative: BigUint::from(counts.1),
        normalizer: total,
    })
}

#[allow(clippy::too_many_arguments)]
fn naive_letters(
    t: &Tableau,
    s: &[u32],
    n: usize,
    boxes: &[Vec<(usize, usize)>],
    tau: &[u32],
    u: usize,
    theta: &mut Assignment,
    counts: &mut (u64, u64),
) {
    if u == boxes.len() {
        match val_theta(t, theta, s) {
            1 => counts.0 += 1,
            -1 => counts.1 += 1,
            _ => {}
        }
        return;
    }
    let block = tau[u - 1] as usize;
    let mut positions: Vec<u32> = ((block - 1) * n + 1..=block * n).map(|p| p as u32).collect();
    let mut perms = Vec::new();
    permutations(&mut positions, 0, &mut |p| perms.push(p.to_vec()));
    for perm in perms {
        for (&(r, c), &pos) in boxes[u].iter().zip(&perm) {
            theta.theta[r][c] = pos;
        }
        naive_letters(t, s, n, boxes, tau, u + 1, theta, counts);
    }
}

fn permutations<T: Clone>(items: &mut Vec<T>, k: usize, f: &mut impl FnMut(&[T])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, f);
        items.swap(k, i);
    }
}

/// `⟨v_T, X_{s(1)} ⊗ … ⊗ X_{s(dn)}⟩` by the grouped engine.
pub fn contract_rank_one(t: &Tableau, s: &[u32], budget: &mut Budget) -> Result<BigRational> {
    Ok(contract_rank_one_counts(t, s, budget)?.value())
}

/// Grouped engine returning the signed assignment counts.
pub fn contract_rank_one_counts(t: &Tableau, s: &[u32], budget: &mut Budget) -> Result<RankOneCounts> {
    check_index_map(t, s)?;
    let zero = || RankOneCounts {
        positive: BigUint::zero(),
        negative: BigUint::zero(),
        normalizer: normalizer(t.d(), t.n()),
    };
    let plan = match GroupPlan::new(t, s) {
        Some(plan) => plan,
        None => return Ok(zero()),
    };
    let (pos, neg) = plan.run(budget)?;
    let mut out = zero();
    out.positive = pos * &plan.weight;
    out.negative = neg * &plan.weight;
    Ok(out)
}

/// Precomputed data for one grouped contraction.
struct GroupPlan {
    d: usize,
    /// number of values, `ℓ(λ)`
    rows: usize,
    /// distinct block contents (dense over values `1..=rows`) and their multiplicities
    types: Vec<(Vec<u16>, u32)>,
    /// per letter: boxes in singleton columns
    singles: Vec<u16>,
    /// per letter and value `v`: boxes in columns of length `≥ v`
    capacity: Vec<Vec<u16>>,
    /// non-singleton columns as letter lists (0-based letters)
    columns: Vec<Vec<usize>>,
    /// `suffix[c][u*rows + v]`: boxes of letter `u` in columns `c..` of length `> v`
    suffix: Vec<Vec<u16>>,
    /// `Π_blocks Π_x m_x! · Π_types mult!`
    weight: BigUint,
}

impl GroupPlan {
    fn new(t: &Tableau, s: &[u32]) -> Option<Self> {
        let d = t.d() as usize;
        let n = t.n() as usize;
        let shape = t.shape();
        let rows = shape.length().max(1);
        // the value content of s must be λ
        let mut content = vec![0u64; rows];
        for &v in s {
            if v == 0 || v as usize > rows {
                return None;
            }
            content[v as usize - 1] += 1;
        }
        if (0..rows).any(|i| content[i] != shape.part(i + 1)) {
            return None;
        }
        let mut type_map: BTreeMap<Vec<u16>, u32> = BTreeMap::new();
        let mut weight = BigUint::one();
        for b in 0..d {
            let mut c = vec![0u16; rows];
            for &v in &s[b * n..(b + 1) * n] {
                c[v as usize - 1] += 1;
            }
            for &k in &c {
                weight *= factorial(k as u64);
            }
            *type_map.entry(c).or_insert(0) += 1;
        }
        for &mult in type_map.values() {
            weight *= factorial(mult as u64);
        }
        let types: Vec<(Vec<u16>, u32)> = type_map.into_iter().collect();

        let singles: Vec<u16> = t.singleton_counts()[1..].iter().map(|&x| x as u16).collect();
        let cols = t.columns();
        let w = t.non_singleton_width();
        let mut capacity = vec![vec![0u16; rows]; d];
        for col in &cols {
            for &u in col {
                for slot in &mut capacity[u as usize - 1][..col.len()] {
                    *slot += 1;
                }
            }
        }
        let columns: Vec<Vec<usize>> =
            cols[..w].iter().map(|c| c.iter().map(|&u| u as usize - 1).collect()).collect();
        let mut suffix = vec![vec![0u16; d * rows]; w + 1];
        for c in (0..w).rev() {
            suffix[c] = suffix[c + 1].clone();
            for &u in &columns[c] {
                for v in 0..columns[c].len() {
                    suffix[c][u * rows + v] += 1;
                }
            }
        }
        Some(Self { d, rows, types, singles, capacity, columns, suffix, weight })
    }

    /// Whether letter `u` can carry block content `c`.
    fn admissible(&self, u: usize, c: &[u16]) -> bool {
        if c[0] < self.singles[u] {
            return false;
        }
        // values ≥ v need boxes in columns of length ≥ v
        let mut tail = 0u16;
        for v in (0..self.rows).rev() {
            tail += c[v];
            if tail > self.capacity[u][v] {
                return false;
            }
        }
        true
    }

    fn run(&self, budget: &mut Budget) -> Result<(BigUint, BigUint)> {
        let mut left: Vec<u32> = self.types.iter().map(|t| t.1).collect();
        let mut chosen = vec![0usize; self.d];
        let mut acc = (BigUint::zero(), BigUint::zero());
        self.assign(0, &mut left, &mut chosen, &mut acc, budget)?;
        Ok(acc)
    }

    fn assign(
        &self,
        u: usize,
        left: &mut Vec<u32>,
        chosen: &mut Vec<usize>,
        acc: &mut (BigUint, BigUint),
        budget: &mut Budget,
    ) -> Result<()> {
        budget.tick(1)?;
        if u == self.d {
            let (p, n) = self.fill_columns(chosen, budget)?;
            acc.0 += p;
            acc.1 += n;
            return Ok(());
        }
        for k in 0..self.types.len() {
            if left[k] == 0 || !self.admissible(u, &self.types[k].0) {
                continue;
            }
            left[k] -= 1;
            chosen[u] = k;
            self.assign(u + 1, left, chosen, acc, budget)?;
            left[k] += 1;
        }
        Ok(())
    }

    /// Signed number of value fillings of the non-singleton columns where
    /// letter `u` receives content `types[chosen[u]]` minus its singleton ones.
    fn fill_columns(&self, chosen: &[usize], budget: &mut Budget) -> Result<(BigUint, BigUint)> {
        let rows = self.rows;
        let mut state = vec![0u16; self.d * rows];
        for u in 0..self.d {
            let c = &self.types[chosen[u]].0;
            state[u * rows..(u + 1) * rows].copy_from_slice(c);
            state[u * rows] -= self.singles[u];
        }
        let mut memo: BTreeMap<(usize, Vec<u16>), (u128, u128)> = BTreeMap::new();
        let (p, n) = self.column_dp(0, &mut state, &mut memo, budget)?;
        Ok((BigUint::from(p), BigUint::from(n)))
    }

    fn feasible(&self, col: usize, state: &[u16]) -> bool {
        let cap = &self.suffix[col];
        for u in 0..self.d {
            let mut tail = 0u16;
            for v in (0..self.rows).rev() {
                tail += state[u * self.rows + v];
                if tail > cap[u * self.rows + v] {
                    return false;
                }
            }
        }
        true
    }

    fn column_dp(
        &self,
        col: usize,
        state: &mut Vec<u16>,
        memo: &mut BTreeMap<(usize, Vec<u16>), (u128, u128)>,
        budget: &mut Budget,
    ) -> Result<(u128, u128)> {
        if col == self.columns.len() {
            let done = state.iter().all(|&x| x == 0);
            return Ok(if done { (1, 0) } else { (0, 0) });
        }
        if !self.feasible(col, state) {
            return Ok((0, 0));
        }
        let key = (col, state.clone());
        if let Some(&hit) = memo.get(&key) {
            return Ok(hit);
        }
        budget.tick(1)?;
        let mut acc = (0u128, 0u128);
        let column = &self.columns[col];
        let mut used = vec![false; column.len()];
        let mut perm = vec![0usize; column.len()];
        self.fill_one(col, 0, column, &mut used, &mut perm, state, memo, &mut acc, budget)?;
        memo.insert(key, acc);
        Ok(acc)
    }

    #[allow(clippy::too_many_arguments)]
    fn fill_one(
        &self,
        col: usize,
        row: usize,
        column: &[usize],
        used: &mut Vec<bool>,
        perm: &mut Vec<usize>,
        state: &mut Vec<u16>,
        memo: &mut BTreeMap<(usize, Vec<u16>), (u128, u128)>,
        acc: &mut (u128, u128),
        budget: &mut Budget,
    ) -> Result<()> {
        if row == column.len() {
            let mut inv = 0;
            for i in 0..perm.len() {
                for j in i + 1..perm.len() {
                    if perm[i] > perm[j] {
                        inv += 1;
                    }
                }
            }
            let (p, n) = self.column_dp(col + 1, state, memo, budget)?;
            let (p, n) = if inv % 2 == 0 { (p, n) } else { (n, p) };
            acc.0 = acc.0.checked_add(p).ok_or(Error::Overflow("grouped contraction"))?;
            acc.1 = acc.1.checked_add(n).ok_or(Error::Overflow("grouped contraction"))?;
            return Ok(());
        }
        let u = column[row];
        for v in 0..column.len() {
            if used[v] || state[u * self.rows + v] == 0 {
                continue;
            }
            used[v] = true;
            perm[row] = v;
            state[u * self.rows + v] -= 1;
            self.fill_one(col, row + 1, column, used, perm, state, memo, acc, budget)?;
            state[u * self.rows + v] += 1;
            used[v] = false;
        }
        Ok(())
    }
}

/// `⟨v_T, p^{⊗d}⟩` for `p ∈ Sym^n V`.
///
/// `p^{⊗d}` is expanded over multisets of `d` terms of `p`; only multisets
/// whose combined exponent equals `λ` can contribute.
pub fn contract_power(t: &Tableau, p: &SymPoly, budget: &mut Budget) -> Result<BigRational> {
    if p.is_zero() {
        return Ok(if t.d() == 0 { BigRational::one() } else { BigRational::zero() });
    }
    if p.degree() != t.n() {
        return Err(Error::DegreeMismatch { expected: t.n(), found: p.degree() });
    }
    let shape = t.shape();
    let rows = shape.length().max(1);
    let target: Vec<u64> = (1..=rows).map(|i| shape.part(i)).collect();
    let terms: Vec<(Vec<u64>, &Exponent, &BigRational)> = p
        .terms()
        .filter(|(a, _)| a.max_var() as usize <= rows)
        .map(|(a, c)| (a.to_dense(rows), a, c))
        .filter(|(dense, _, _)| dense.iter().zip(&target).all(|(x, y)| x <= y))
        .collect();
    let mut acc = BigRational::zero();
    let mut mult = vec![0u64; terms.len()];
    let mut remaining = target.clone();
    let mut ctx = PowerCtx { t, terms: &terms, d: t.d() as u64, budget, acc: &mut acc };
    ctx.choose(0, t.d() as u64, &mut remaining, &mut mult)?;
    Ok(acc)
}

/// `⟨v_T, q^{⊗d}⟩` at a power-sum point.
pub fn contract_power_point(t: &Tableau, q: &PowerSumPoint, budget: &mut Budget) -> Result<BigRational> {
    contract_power(t, &q.expand(), budget)
}

struct PowerCtx<'a, 'b> {
    t: &'a Tableau,
    terms: &'a [(Vec<u64>, &'a Exponent, &'a BigRational)],
    d: u64,
    budget: &'b mut Budget,
    acc: &'b mut BigRational,
}

impl PowerCtx<'_, '_> {
    fn choose(&mut self, i: usize, k: u64, remaining: &mut Vec<u64>, mult: &mut Vec<u64>) -> Result<()> {
        if k == 0 {
            if remaining.iter().all(|&x| x == 0) {
                self.evaluate(mult)?;
            }
            return Ok(());
        }
        if i == self.terms.len() {
            return Ok(());
        }
        self.budget.tick(1)?;
        let dense = &self.terms[i].0;
        let max_c = dense
            .iter()
            .zip(remaining.iter())
            .filter(|(&e, _)| e > 0)
            .map(|(&e, &r)| r / e)
            .min()
            .unwrap_or(k)
            .min(k);
        for c in (0..=max_c).rev() {
            for (r, &e) in remaining.iter_mut().zip(dense) {
                *r -= c * e;
            }
            mult[i] = c;
            self.choose(i + 1, k - c, remaining, mult)?;
            for (r, &e) in remaining.iter_mut().zip(dense) {
                *r += c * e;
            }
        }
        mult[i] = 0;
        Ok(())
    }

    fn evaluate(&mut self, mult: &[u64]) -> Result<()> {
        let mut s = Vec::new();
        let mut coef = unsigned(factorial(self.d));
        for (i, &c) in mult.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (_, alpha, x) = &self.terms[i];
            let idx = alpha.index_list();
            for _ in 0..c {
                s.extend_from_slice(&idx);
            }
            coef = coef * num_traits::pow((*x).clone(), c as usize) / unsigned(factorial(c));
        }
        let v = contract_rank_one(self.t, &s, self.budget)?;
        *self.acc += coef * v;
        Ok(())
    }
}

/// `⟨v_T, w_1 ⊗ … ⊗ w_d⟩` for `w_i ∈ Sym^n V`, expanded over term tuples.
pub fn contract_tensor_product(t: &Tableau, ws: &[SymPoly], budget: &mut Budget) -> Result<BigRational> {
    precondition!(ws.len() == t.d() as usize, "number of factors {} = d = {}", ws.len(), t.d());
    for w in ws {
        if w.degree() != t.n() && !w.is_zero() {
            return Err(Error::DegreeMismatch { expected: t.n(), found: w.degree() });
        }
    }
    let rows = t.shape().length().max(1);
    let lists: Vec<Vec<(&Exponent, &BigRational)>> = ws
        .iter()
        .map(|w| w.terms().filter(|(a, _)| a.max_var() as usize <= rows).collect())
        .collect();
    let mut acc = BigRational::zero();
    let mut s = Vec::new();
    tuple_rec(t, &lists, 0, BigRational::one(), &mut s, &mut acc, budget)?;
    Ok(acc)
}

fn tuple_rec(
    t: &Tableau,
    lists: &[Vec<(&Exponent, &BigRational)>],
    i: usize,
    coef: BigRational,
    s: &mut Vec<u32>,
    acc: &mut BigRational,
    budget: &mut Budget,
) -> Result<()> {
    if i == lists.len() {
        *acc += coef * contract_rank_one(t, s, budget)?;
        return Ok(());
    }
    for (alpha, c) in &lists[i] {
        let len = s.len();
        s.extend(alpha.index_list());
        tuple_rec(t, lists, i + 1, &coef * *c, s, acc, budget)?;
        s.truncate(len);
    }
    Ok(())
}

/// True iff the shape of `t` forces `⟨v_T, q^{⊗d}⟩ = 0` at every
/// `q = X_1^{n−m}·p` with `p` of degree `m` in `m²` variables:
/// `ℓ(λ) > m²` or `λ_1 < (n−m)d`.
pub fn kl_vanishes(t: &Tableau, m: u64) -> bool {
    kl_vanishes_shape(t.shape(), t.n(), t.d() as u64, m)
}

pub fn kl_vanishes_shape(shape: &crate::Partition, n: u64, d: u64, m: u64) -> bool {
    let long = shape.length() as u64 > m.saturating_mul(m);
    let short_first = n >= m && shape.first() < (n - m) * d;
    long || short_first
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use crate::partition::Partition;
    use crate::tableau::{enumerate_classes, row_tableau};

    fn t(d: u32, n: u64, rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(d, n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn q(n: i64) -> BigRational {
        rational(n)
    }

    #[test]
    fn column_signs() {
        assert_eq!(column_sign(&[1, 2]), 1);
        assert_eq!(column_sign(&[2, 1]), -1);
        assert_eq!(column_sign(&[1, 1]), 0);
        assert_eq!(column_sign(&[2]), 0);
        assert_eq!(column_sign(&[3, 1, 2]), 1);
    }

    #[test]
    fn rank_one_examples() {
        let mut b = Budget::unlimited();
        let single = t(1, 2, &[&[1, 1]]);
        assert_eq!(contract_rank_one(&single, &[1, 1], &mut b).unwrap(), q(1));
        let column = t(2, 1, &[&[1], &[2]]);
        assert_eq!(contract_rank_one(&column, &[1, 2], &mut b).unwrap(), q(0));
        let naive = contract_rank_one_naive(&column, &[1, 2]).unwrap();
        assert_eq!((naive.positive, naive.negative), (BigUint::from(1u8), BigUint::from(1u8)));
        let row = t(2, 1, &[&[1, 2]]);
        assert_eq!(contract_rank_one(&row, &[1, 1], &mut b).unwrap(), q(1));
        assert_eq!(contract_rank_one_naive(&row, &[1, 1]).unwrap().value(), q(1));
    }

    #[test]
    fn power_examples() {
        let mut b = Budget::unlimited();
        let p = SymPoly::var_power(1, 2).add(&SymPoly::var_power(2, 2)).unwrap();
        assert_eq!(contract_power(&row_tableau(2, 2).unwrap(), &p, &mut b).unwrap(), q(2));
        let p = PowerSumPoint::diagonal(0, 2, &[q(1), q(2), q(3)]).expand();
        assert_eq!(contract_power(&row_tableau(3, 2).unwrap(), &p, &mut b).unwrap(), q(36));
        let single_row = t(2, 2, &[&[1, 1, 2, 2]]);
        let p = SymPoly::var_power(2, 2);
        assert_eq!(contract_power(&single_row, &p, &mut b).unwrap(), q(0));
    }

    #[test]
    fn naive_and_grouped_agree_small() {
        let mut b = Budget::unlimited();
        for (d, n) in [(2u32, 2u64), (2, 3), (3, 2), (4, 2), (2, 4)] {
            for shape in crate::partition::partitions_of(d as u64 * n, d as usize, u64::MAX) {
                for class in enumerate_classes(&shape, d, n) {
                    let tab = class.tableau();
                    let rows = shape.length() as u32;
                    // all s with values in 1..=rows and content λ, restricted to a few
                    let mut s: Vec<u32> = Vec::new();
                    for (i, &l) in shape.parts().iter().enumerate() {
                        s.extend(core::iter::repeat(i as u32 + 1).take(l as usize));
                    }
                    let mut tried = 0;
                    permutations(&mut s.clone(), 0, &mut |perm| {
                        if tried < 40 {
                            tried += 1;
                            let a = contract_rank_one_counts(tab, perm, &mut b).unwrap();
                            let c = contract_rank_one_naive(tab, perm).unwrap();
                            assert_eq!(a, c, "{tab:?} {perm:?}");
                        }
                    });
                    assert!(rows >= 1);
                }
            }
        }
    }

    #[test]
    fn repeat_in_column_vanishes() {
        let mut b = Budget::unlimited();
        let bad = t(2, 2, &[&[1, 2], &[1, 2]]);
        for s in [[1, 1, 2, 2], [1, 2, 1, 2], [1, 2, 2, 1]] {
            assert_eq!(contract_rank_one(&bad, &s, &mut b).unwrap(), q(0));
        }
    }

    #[test]
    fn cost_cap_is_enforced() {
        let tab = row_tableau(3, 2).unwrap();
        let p = PowerSumPoint::diagonal(0, 2, &[q(1), q(2), q(3)]).expand();
        let err = contract_power(&tab, &p, &mut Budget::capped(2)).unwrap_err();
        assert_eq!(err, Error::CostCapExceeded { cap: 2 });
    }

    #[test]
    fn kl_examples() {
        let row = t(2, 2, &[&[1, 1, 2, 2]]);
        assert!(!kl_vanishes(&row, 1));
        let shape = Partition::new(vec![2, 1, 1]).unwrap();
        assert!(kl_vanishes_shape(&shape, 2, 2, 1));
        // λ_1 = (n−m)d − 1
        let shape = Partition::new(vec![3, 1]).unwrap();
        assert!(kl_vanishes_shape(&shape, 3, 2, 1));
    }

    #[test]
    fn tau_of_respecting_assignment() {
        let tab = t(2, 1, &[&[1], &[2]]);
        let a = Assignment { theta: vec![vec![2], vec![1]] };
        assert_eq!(a.tau(&tab), Some(vec![0, 2, 1]));
        assert_eq!(val_theta(&tab, &a, &[1, 2]), -1);
    }
}
