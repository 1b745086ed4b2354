//! Independent ground truth for plethysm coefficients `a_λ(d[n])`.
//!
//! * [`plethysm_coeff_sf`]: monomial expansion of `h_d[h_n]` followed by
//!   triangular Schur extraction with Kostka numbers.
//! * [`plethysm_coeff_tensor`]: dimension of the joint kernel of the
//!   raising operators on the weight-`λ` space of `Sym^d Sym^n C^N`.
//! * [`hwv_rank_by_evaluation`]: rank of the tableau vectors `v_T` evaluated
//!   at random power-sum points.
//!
//! The weight spaces of `Sym^d Sym^n C^N` have a basis of orbit sums: an
//! orbit of words under the wreath product is a multiset of `d` blocks, each
//! block a content vector of size `n`. [`OrbitKey`] stores it sorted.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{binomial, factorial, multinomial, unsigned};
use crate::budget::Budget;
use crate::contraction::contract_power;
use crate::error::{precondition, Error, Result};
use crate::linalg::rank;
use crate::partition::{partitions_of, Partition};
use crate::symtensor::PowerSumPoint;
use crate::tableau::{enumerate_classes, Tableau};

/// Sorted multiset of block contents (dense over variables `1..=N`).
pub type OrbitKey = Vec<Vec<u64>>;

/// All content vectors of size `n` over `len` variables bounded by `cap`.
fn blocks(n: u64, cap: &[u64]) -> Vec<Vec<u64>> {
    fn rec(i: usize, left: u64, cap: &[u64], cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i + 1 == cap.len() {
            if left <= cap[i] {
                cur[i] = left;
                out.push(cur.clone());
                cur[i] = 0;
            }
            return;
        }
        for e in (0..=left.min(cap[i])).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cap, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if cap.is_empty() {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, n, cap, &mut vec![0; cap.len()], &mut out);
    out
}

/// Visits every multiset of `d` blocks of size `n` with total content
/// `target`, as `(block, multiplicity)` lists.
fn block_multisets(target: &[u64], d: u64, n: u64, visit: &mut impl FnMut(&[(&Vec<u64>, u64)])) {
    let all = blocks(n, target);
    let mut remaining = target.to_vec();
    let mut chosen = Vec::new();
    fn rec<'a>(
        all: &'a [Vec<u64>],
        i: usize,
        k: u64,
        remaining: &mut Vec<u64>,
        chosen: &mut Vec<(&'a Vec<u64>, u64)>,
        visit: &mut impl FnMut(&[(&Vec<u64>, u64)]),
    ) {
        if k == 0 {
            if remaining.iter().all(|&x| x == 0) {
                visit(chosen);
            }
            return;
        }
        if i == all.len() {
            return;
        }
        let b = &all[i];
        let max_c = b
            .iter()
            .zip(remaining.iter())
            .filter(|(&e, _)| e > 0)
            .map(|(&e, &r)| r / e)
            .min()
            .unwrap_or(k)
            .min(k);
        for c in (0..=max_c).rev() {
            for (r, &e) in remaining.iter_mut().zip(b) {
                *r -= c * e;
            }
            if c > 0 {
                chosen.push((b, c));
            }
            rec(all, i + 1, k - c, remaining, chosen, visit);
            if c > 0 {
                chosen.pop();
            }
            for (r, &e) in remaining.iter_mut().zip(b) {
                *r += c * e;
            }
        }
    }
    rec(&all, 0, d, &mut remaining, &mut chosen, visit);
}

/// Orbits of weight `target` in `Sym^d Sym^n C^N` (`N = target.len()`).
pub fn weight_orbits(target: &[u64], d: u64, n: u64) -> Vec<OrbitKey> {
    let mut out = Vec::new();
    block_multisets(target, d, n, &mut |ms| {
        let mut key: OrbitKey = Vec::new();
        for &(b, c) in ms {
            for _ in 0..c {
                key.push(b.clone());
            }
        }
        key.sort();
        out.push(key);
    });
    out.sort();
    out
}

/// Coefficient of `x^μ` in `h_d[h_n]`, which is the number of orbits of
/// weight `μ`.
pub fn monomial_coefficient(mu: &[u64], d: u64, n: u64) -> BigUint {
    let mut count = BigUint::zero();
    block_multisets(mu, d, n, &mut |_| count += 1u32);
    count
}

/// Number of semistandard tableaux of `shape` with content `content`.
pub fn kostka(shape: &Partition, content: &[u64]) -> BigUint {
    let mut memo = BTreeMap::new();
    kostka_rec(shape.parts().to_vec(), content, &mut memo)
}

fn kostka_rec(shape: Vec<u64>, content: &[u64], memo: &mut BTreeMap<(Vec<u64>, usize), BigUint>) -> BigUint {
    let size: u64 = shape.iter().sum();
    let total: u64 = content.iter().sum();
    if size != total {
        return BigUint::zero();
    }
    if content.is_empty() {
        return BigUint::one();
    }
    if shape.len() > content.len() {
        return BigUint::zero();
    }
    let key = (shape.clone(), content.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let k = *content.last().unwrap();
    let rest = &content[..content.len() - 1];
    // remove a horizontal strip of size k holding the largest letter
    let mut acc = BigUint::zero();
    let mut inner = shape.clone();
    strips(&shape, 0, k, &mut inner, &mut |smaller| {
        let trimmed: Vec<u64> = smaller.iter().copied().filter(|&x| x > 0).collect();
        acc += kostka_rec(trimmed, rest, memo);
    });
    memo.insert(key, acc.clone());
    acc
}

fn strips(shape: &[u64], i: usize, left: u64, inner: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
    if i == shape.len() {
        if left == 0 {
            f(inner);
        }
        return;
    }
    let floor = shape.get(i + 1).copied().unwrap_or(0);
    let most = (shape[i] - floor).min(left);
    for take in 0..=most {
        inner[i] = shape[i] - take;
        strips(shape, i + 1, left - take, inner, f);
    }
    inner[i] = shape[i];
}

/// `a_λ(d[n])` from the symmetric-function expansion of `h_d[h_n]` in
/// `num_vars` variables.
pub fn plethysm_coeff_sf(lambda: &Partition, d: u64, n: u64, num_vars: usize) -> Result<u64> {
    precondition!(
        lambda.size() == d * n,
        "|λ| = {} equals d·n = {}",
        lambda.size(),
        d * n
    );
    precondition!(
        num_vars >= lambda.length(),
        "numVars = {num_vars} >= ℓ(λ) = {}",
        lambda.length()
    );
    if d * n == 0 {
        return Ok(1);
    }
    // partitions μ ≥_lex λ with at most num_vars parts, lex-decreasing
    let mus: Vec<Partition> = partitions_of(d * n, num_vars, d * n)
        .into_iter()
        .take_while(|mu| mu.parts() >= lambda.parts())
        .collect();
    let mut found: Vec<(Partition, BigInt)> = Vec::new();
    for mu in &mus {
        let dense: Vec<u64> = (1..=num_vars).map(|i| mu.part(i)).collect();
        let mut a = BigInt::from(monomial_coefficient(&dense, d, n));
        for (rho, coef) in &found {
            if !coef.is_zero() {
                a -= coef * BigInt::from(kostka(rho, mu.parts()));
            }
        }
        if mu == lambda {
            return a.to_u64().ok_or(Error::Overflow("plethysm coefficient"));
        }
        found.push((mu.clone(), a));
    }
    Ok(0)
}

/// `E_{i,i+1}` (replace one `X_{i+1}` by `X_i`) applied to the orbit sum of
/// `w`, as a combination of orbit sums. `i` is 1-based.
pub fn raise_orbit(w: &OrbitKey, i: usize) -> BTreeMap<OrbitKey, BigRational> {
    let mut targets = alloc::collections::BTreeSet::new();
    for (j, b) in w.iter().enumerate() {
        if b[i] > 0 {
            let mut u = w.clone();
            u[j][i] -= 1;
            u[j][i - 1] += 1;
            u.sort();
            targets.insert(u);
        }
    }
    let mut out = BTreeMap::new();
    for u in targets {
        // positions of the representative of u holding i whose change to
        // i+1 lands in the orbit of w
        let mut coef = 0u64;
        for (j, b) in u.iter().enumerate() {
            if b[i - 1] == 0 {
                continue;
            }
            let mut back = u.clone();
            back[j][i - 1] -= 1;
            back[j][i] += 1;
            back.sort();
            if &back == w {
                coef += b[i - 1];
            }
        }
        out.insert(u, BigRational::from_integer(BigInt::from(coef)));
    }
    out
}

/// `a_λ(d[n])` as the dimension of the highest weight space of weight `λ`
/// in `Sym^d Sym^n C^{ℓ(λ)}`.
pub fn plethysm_coeff_tensor(lambda: &Partition, d: u64, n: u64) -> Result<u64> {
    precondition!(
        lambda.size() == d * n,
        "|λ| = {} equals d·n = {}",
        lambda.size(),
        d * n
    );
    if d * n > 12 {
        return Err(Error::CapExceeded(format!("d·n = {} > 12 for the tensor oracle", d * n)));
    }
    let big_n = lambda.length().max(1);
    let target: Vec<u64> = (1..=big_n).map(|i| lambda.part(i)).collect();
    let orbits = weight_orbits(&target, d, n);
    if orbits.len() > 5000 {
        return Err(Error::CapExceeded(format!("{} weight orbits > 5000", orbits.len())));
    }
    let mut rows: BTreeMap<(usize, OrbitKey), Vec<BigRational>> = BTreeMap::new();
    for (col, w) in orbits.iter().enumerate() {
        for i in 1..big_n {
            for (u, c) in raise_orbit(w, i) {
                let row = rows.entry((i, u)).or_insert_with(|| vec![BigRational::zero(); orbits.len()]);
                row[col] += c;
            }
        }
    }
    let r = rank(rows.into_values().collect());
    Ok((orbits.len() - r) as u64)
}

/// A vector of `Sym^d Sym^n C^N` in the orbit-sum basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitVector {
    pub coeffs: BTreeMap<OrbitKey, BigRational>,
}

impl OrbitVector {
    /// `⟨v, X_{s(1)} ⊗ … ⊗ X_{s(dn)}⟩`: the coefficient of the orbit of `s`.
    pub fn pair_with_word(&self, s: &[u32], n: usize, num_vars: usize) -> BigRational {
        self.coeffs.get(&orbit_of_word(s, n, num_vars)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Applies `E_{i,i+1}`.
    pub fn raise(&self, i: usize) -> BTreeMap<OrbitKey, BigRational> {
        let mut out: BTreeMap<OrbitKey, BigRational> = BTreeMap::new();
        for (w, c) in &self.coeffs {
            for (u, x) in raise_orbit(w, i) {
                *out.entry(u).or_insert_with(BigRational::zero) += c * x;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

pub fn orbit_of_word(s: &[u32], n: usize, num_vars: usize) -> OrbitKey {
    let mut key: OrbitKey = s
        .chunks(n)
        .map(|blk| {
            let mut c = vec![0u64; num_vars];
            for &v in blk {
                c[v as usize - 1] += 1;
            }
            c
        })
        .collect();
    key.sort();
    key
}

fn orbit_size(key: &OrbitKey) -> BigUint {
    let mut size = factorial(key.len() as u64);
    let mut k = 0;
    while k < key.len() {
        let mut j = k;
        while j < key.len() && key[j] == key[k] {
            j += 1;
        }
        size /= factorial((j - k) as u64);
        k = j;
    }
    for b in key {
        size *= multinomial(b);
    }
    size
}

/// `v_T` built by brute force: expand one `π v_λ` with `T = T_λ(π)` as a
/// signed sum of words (one wedge per column) and symmetrize each word into
/// its orbit sum.
pub fn explicit_v_t(t: &Tableau) -> Result<OrbitVector> {
    let d = t.d() as usize;
    let n = t.n() as usize;
    precondition!(d * n <= 10, "d·n = {} <= 10 for explicit symmetrization", d * n);
    let num_vars = t.shape().length().max(1);
    // position of every box: letter u's boxes in reading order fill block u
    let mut next = vec![0usize; d + 1];
    let pos: Vec<Vec<usize>> = t
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&u| {
                    let p = (u as usize - 1) * n + next[u as usize];
                    next[u as usize] += 1;
                    p
                })
                .collect()
        })
        .collect();
    let cols = t.columns();
    let mut word = vec![0u32; d * n];
    let mut coeffs: BTreeMap<OrbitKey, BigRational> = BTreeMap::new();
    expand_columns(&cols, &pos, 0, 1, &mut word, &mut |w, sign| {
        let key = orbit_of_word(w, n, num_vars);
        let size = unsigned(orbit_size(&key));
        let e = coeffs.entry(key).or_insert_with(BigRational::zero);
        *e += BigRational::from_integer(BigInt::from(sign)) / size;
    });
    coeffs.retain(|_, v| !v.is_zero());
    Ok(OrbitVector { coeffs })
}

fn expand_columns(
    cols: &[Vec<u32>],
    pos: &[Vec<usize>],
    c: usize,
    sign: i32,
    word: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32], i32),
) {
    if c == cols.len() {
        f(word, sign);
        return;
    }
    let len = cols[c].len();
    let mut perm: Vec<u32> = (1..=len as u32).collect();
    let mut all = Vec::new();
    permute(&mut perm, 0, 1, &mut all);
    for (p, sg) in all {
        for (r, &v) in p.iter().enumerate() {
            word[pos[r][c]] = v;
        }
        expand_columns(cols, pos, c + 1, sign * sg, word, f);
    }
}

fn permute(items: &mut Vec<u32>, k: usize, sign: i32, out: &mut Vec<(Vec<u32>, i32)>) {
    if k == items.len() {
        out.push((items.clone(), sign));
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, if i == k { sign } else { -sign }, out);
        items.swap(k, i);
    }
}

/// Rank of the evaluation matrix of all tableau classes at
/// `#classes + 4` seeded random power-sum points with `d` summands.
pub fn hwv_rank_by_evaluation(lambda: &Partition, d: u64, n: u64, seed: u64) -> Result<usize> {
    let classes = enumerate_classes(lambda, d as u32, n);
    if classes.is_empty() {
        return Ok(0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = lambda.length().max(1) as u32;
    let points: Vec<_> = (0..classes.len() + 4)
        .map(|_| PowerSumPoint::random(&mut rng, 0, n, d as usize, vars, 5).expand())
        .collect();
    let mut budget = Budget::unlimited();
    let mut rows = Vec::with_capacity(classes.len());
    for class in &classes {
        let row = points
            .iter()
            .map(|p| contract_power(class.tableau(), p, &mut budget))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(rank(rows))
}

/// Dimension of the Schur module `S_λ(C^N)` by the hook-content formula.
pub fn schur_module_dim(lambda: &Partition, big_n: u64) -> BigUint {
    let mut num = BigInt::one();
    let mut den = BigUint::one();
    let conj = lambda.transpose();
    for (r, c) in lambda.boxes() {
        num *= BigInt::from(big_n) + BigInt::from(c as i64) - BigInt::from(r as i64);
        let arm = lambda.part(r) - c as u64;
        let leg = conj.part(c) - r as u64;
        den *= arm + leg + 1;
    }
    if num <= BigInt::zero() {
        return BigUint::zero();
    }
    num.to_biguint().unwrap() / den
}

/// `dim Sym^d Sym^n C^N`
pub fn plethysm_dim(d: u64, n: u64, big_n: u64) -> BigUint {
    let inner = binomial(big_n + n - 1, n);
    let inner = inner.to_u64().expect("inner dimension fits in u64");
    binomial(inner + d - 1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn kostka_values() {
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]), BigUint::from(2u8));
        assert_eq!(kostka(&p(&[3, 2]), &[2, 2, 1]), BigUint::from(2u8));
        assert_eq!(kostka(&p(&[2, 2]), &[3, 1]), BigUint::zero());
        assert_eq!(kostka(&p(&[3, 1]), &[2, 2]), BigUint::one());
    }

    #[test]
    fn sf_examples() {
        assert_eq!(plethysm_coeff_sf(&p(&[2, 2]), 2, 2, 2).unwrap(), 1);
        assert_eq!(plethysm_coeff_sf(&p(&[3, 1]), 2, 2, 2).unwrap(), 0);
        assert_eq!(plethysm_coeff_sf(&p(&[2, 2, 2]), 3, 2, 3).unwrap(), 1);
        assert_eq!(plethysm_coeff_sf(&p(&[4]), 2, 2, 1).unwrap(), 1);
        assert!(plethysm_coeff_sf(&p(&[2, 1, 1]), 2, 2, 2).is_err());
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(plethysm_coeff_tensor(&p(&[4]), 2, 2).unwrap(), 1);
        assert_eq!(plethysm_coeff_tensor(&p(&[1, 1]), 2, 1).unwrap(), 0);
        assert_eq!(plethysm_coeff_tensor(&p(&[6]), 3, 2).unwrap(), 1);
        assert_eq!(plethysm_coeff_tensor(&p(&[2, 2]), 2, 2).unwrap(), 1);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(hwv_rank_by_evaluation(&p(&[2, 2]), 2, 2, 0).unwrap(), 1);
        assert_eq!(hwv_rank_by_evaluation(&p(&[4]), 2, 2, 0).unwrap(), 1);
        assert_eq!(hwv_rank_by_evaluation(&p(&[2, 1, 1]), 2, 2, 0).unwrap(), 0);
    }

    #[test]
    fn schur_dims() {
        assert_eq!(schur_module_dim(&p(&[2]), 3), BigUint::from(6u8));
        assert_eq!(schur_module_dim(&p(&[1, 1]), 3), BigUint::from(3u8));
        assert_eq!(schur_module_dim(&p(&[2, 1]), 3), BigUint::from(8u8));
        assert_eq!(schur_module_dim(&p(&[1, 1, 1, 1]), 3), BigUint::zero());
        assert_eq!(plethysm_dim(2, 2, 2), BigUint::from(6u8));
    }
}
