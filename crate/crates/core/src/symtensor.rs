//! Sparse exact symmetric tensors, identified with homogeneous polynomials.
//!
//! A [`SymPoly`] stores `Σ c_α X^α`, where the symmetric tensor `X^α` is the
//! average of all `X_I` of type `α`. Products of symmetric tensors are
//! ordinary polynomial products. The inner product is the one induced by
//! the orthonormal basis `X_I` of `⊗^m V`, so `⟨X^α, X^α⟩ = 1/multinomial(m; α)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::arith::{binomial, multinomial, unsigned};
use crate::error::{precondition, Error, Result};

/// A sparse exponent vector `α`, variables indexed from 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Exponent(Vec<(u32, u64)>);

impl Exponent {
    /// Builds from `(variable, power)` pairs; zero powers are dropped and
    /// repeated variables accumulate.
    pub fn new(pairs: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            assert!(v >= 1, "variables are indexed from 1");
            *map.entry(v).or_insert(0u64) += e;
        }
        Self(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    /// `X_i^e`
    pub fn power(i: u32, e: u64) -> Self {
        Self::new([(i, e)])
    }

    /// From a dense vector `(α_1, α_2, …)`.
    pub fn from_dense(dense: &[u64]) -> Self {
        Self::new(dense.iter().enumerate().map(|(i, &e)| (i as u32 + 1, e)))
    }

    pub fn get(&self, var: u32) -> u64 {
        self.0.iter().find(|&&(v, _)| v == var).map_or(0, |&(_, e)| e)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn entries(&self) -> &[(u32, u64)] {
        &self.0
    }

    pub fn max_var(&self) -> u32 {
        self.0.last().map_or(0, |&(v, _)| v)
    }

    pub fn to_dense(&self, len: usize) -> Vec<u64> {
        let mut out = vec![0; len];
        for &(v, e) in &self.0 {
            if (v as usize) <= len {
                out[v as usize - 1] = e;
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.0.iter().chain(other.0.iter()).copied())
    }

    /// The canonical index list `(1,…,1,2,…,2,…)` of a tensor `X_I` of
    /// type `α`.
    pub fn index_list(&self) -> Vec<u32> {
        self.0.iter().flat_map(|&(v, e)| core::iter::repeat(v).take(e as usize)).collect()
    }

    /// `multinomial(|α|; α)`, the number of `X_I` of type `α`.
    pub fn multiplicity(&self) -> num_bigint::BigUint {
        let parts: Vec<u64> = self.0.iter().map(|&(_, e)| e).collect();
        multinomial(&parts)
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "X{v}")?;
            } else {
                write!(f, "X{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A homogeneous polynomial of a fixed degree with exact rational
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct SymPoly {
    degree: u64,
    terms: BTreeMap<Exponent, BigRational>,
}

impl SymPoly {
    pub fn zero(degree: u64) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Exponent::default())
    }

    pub fn monomial(alpha: Exponent) -> Self {
        Self::term(alpha, BigRational::one())
    }

    pub fn term(alpha: Exponent, coef: BigRational) -> Self {
        let mut p = Self::zero(alpha.degree());
        p.add_term(alpha, coef);
        p
    }

    /// `X_i^e`
    pub fn var_power(i: u32, e: u64) -> Self {
        Self::monomial(Exponent::power(i, e))
    }

    /// Collects terms, all of which must have degree `degree`.
    pub fn from_terms(
        degree: u64,
        terms: impl IntoIterator<Item = (Exponent, BigRational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(degree);
        for (alpha, c) in terms {
            if alpha.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: alpha.degree() });
            }
            p.add_term(alpha, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, alpha: Exponent, coef: BigRational) {
        debug_assert_eq!(alpha.degree(), self.degree);
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, alpha: &Exponent) -> BigRational {
        self.terms.get(alpha).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest variable index in the support (0 for constants and zero).
    pub fn max_var(&self) -> u32 {
        self.terms.keys().map(Exponent::max_var).max().unwrap_or(0)
    }

    fn same_degree(&self, other: &Self) -> Result<()> {
        if self.degree == other.degree {
            Ok(())
        } else {
            Err(Error::DegreeMismatch { expected: self.degree, found: other.degree })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_degree(other)?;
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            terms: self.terms.iter().map(|(a, x)| (a.clone(), x * c)).collect(),
        }
    }

    /// Symmetrized tensor product, which is the polynomial product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.add(b), x * y);
            }
        }
        out
    }

    pub fn pow(&self, k: u64) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// The inner product induced by the tensor embedding.
    pub fn inner_product(&self, other: &Self) -> Result<BigRational> {
        self.same_degree(other)?;
        let mut acc = BigRational::zero();
        for (a, x) in &self.terms {
            if let Some(y) = other.terms.get(a) {
                acc += x * y / unsigned(a.multiplicity());
            }
        }
        Ok(acc)
    }

    /// Evaluates the polynomial; `point[i]` is the value of `X_{i+1}` and
    /// variables beyond the slice are zero.
    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        'terms: for (a, c) in &self.terms {
            let mut v = c.clone();
            for &(var, e) in a.entries() {
                match point.get(var as usize - 1) {
                    Some(x) => v *= num_traits::pow(x.clone(), e as usize),
                    None => continue 'terms,
                }
            }
            acc += v;
        }
        acc
    }

    /// Largest power of `X_1` among the terms; `None` stands for `−∞` on
    /// the zero polynomial.
    pub fn deg_in_x1(&self) -> Option<u64> {
        self.terms.keys().map(|a| a.get(1)).max()
    }

    /// Multiplication by `X_1^e`.
    pub fn pad_multiply(&self, e: u64) -> Self {
        self.mul(&Self::var_power(1, e))
    }

    /// The scaling map `S_{m,n}`: `X^α ↦ binom(n,m)/binom(α_1+n−m, n−m) · X^α`
    /// on degree-`m` polynomials, or its inverse.
    pub fn scaling_map(&self, m: u64, n: u64, inverse: bool) -> Result<Self> {
        precondition!(n >= m, "n = {n} >= m = {m}");
        if !self.is_zero() && self.degree != m {
            return Err(Error::DegreeMismatch { expected: m, found: self.degree });
        }
        let top = unsigned(binomial(n, m));
        let mut out = Self::zero(self.degree);
        for (a, c) in &self.terms {
            let bottom = unsigned(binomial(a.get(1) + n - m, n - m));
            let factor = if inverse { &bottom / &top } else { &top / &bottom };
            out.add_term(a.clone(), c * factor);
        }
        Ok(out)
    }

    /// Applies a linear substitution given by the images of the variables.
    pub fn substitute(&self, images: &[SymPoly]) -> Self {
        let mut out = Self::zero(self.degree);
        for (a, c) in &self.terms {
            let mut t = Self::one();
            for &(v, e) in a.entries() {
                t = t.mul(&images[v as usize - 1].pow(e));
            }
            out = out.add(&t.scale(c)).expect("linear substitution preserves degree");
        }
        out
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 (deg {})", self.degree);
        }
        for (k, (a, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{a:?}")?;
        }
        Ok(())
    }
}

/// A sparse vector over the variables, read as a linear form.
pub type SparseVec = BTreeMap<u32, BigRational>;

/// `(Σ_i v_i X_i)^s`, expanded by the multinomial theorem.
pub fn linear_power(v: &SparseVec, s: u64) -> SymPoly {
    let support: Vec<(u32, &BigRational)> =
        v.iter().filter(|(_, c)| !c.is_zero()).map(|(&i, c)| (i, c)).collect();
    let mut out = SymPoly::zero(s);
    let mut exps = vec![0u64; support.len()];
    fn rec(
        idx: usize,
        left: u64,
        support: &[(u32, &BigRational)],
        exps: &mut Vec<u64>,
        out: &mut SymPoly,
    ) {
        if idx + 1 >= support.len() {
            if support.is_empty() {
                if left == 0 {
                    out.add_term(Exponent::default(), BigRational::one());
                }
                return;
            }
            exps[idx] = left;
            let mut coef = unsigned(multinomial(exps));
            for (k, &(_, c)) in support.iter().enumerate() {
                coef *= num_traits::pow(c.clone(), exps[k] as usize);
            }
            let alpha = Exponent::new(support.iter().zip(exps.iter()).map(|(&(i, _), &e)| (i, e)));
            out.add_term(alpha, coef);
            return;
        }
        for e in 0..=left {
            exps[idx] = e;
            rec(idx + 1, left - e, support, exps, out);
        }
        exps[idx] = 0;
    }
    rec(0, s, &support, &mut exps, &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub coef: BigRational,
    pub vec: SparseVec,
}

/// The point `X_1^pad · Σ_j c_j v_j^s` of `Sym^{pad+s} V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumPoint {
    pub pad: u64,
    pub s: u64,
    pub summands: Vec<Summand>,
}

impl PowerSumPoint {
    pub fn new(pad: u64, s: u64, summands: Vec<Summand>) -> Self {
        Self { pad, s, summands }
    }

    pub fn degree(&self) -> u64 {
        self.pad + self.s
    }

    pub fn expand(&self) -> SymPoly {
        self.expand_inner().pad_multiply(self.pad)
    }

    /// `Σ_j c_j v_j^s` without the `X_1` padding.
    pub fn expand_inner(&self) -> SymPoly {
        let mut out = SymPoly::zero(self.s);
        for sm in &self.summands {
            let t = linear_power(&sm.vec, self.s).scale(&sm.coef);
            out = out.add(&t).expect("all summands have degree s");
        }
        out
    }

    /// A point with `count` summands whose coefficients and vector entries
    /// (over variables `1..=nvars`) are uniform in `[−bound, bound]`.
    pub fn random<R: Rng>(rng: &mut R, pad: u64, s: u64, count: usize, nvars: u32, bound: i64) -> Self {
        let summands = (0..count)
            .map(|_| {
                let coef = BigRational::from_integer(BigInt::from(rng.gen_range(-bound..=bound)));
                let vec = (1..=nvars)
                    .filter_map(|i| {
                        let x = rng.gen_range(-bound..=bound);
                        (x != 0).then(|| (i, BigRational::from_integer(BigInt::from(x))))
                    })
                    .collect();
                Summand { coef, vec }
            })
            .collect();
        Self { pad, s, summands }
    }

    /// `c_1 X_1^s + … + c_k X_k^s` padded by `X_1^pad`.
    pub fn diagonal(pad: u64, s: u64, coefs: &[BigRational]) -> Self {
        let summands = coefs
            .iter()
            .enumerate()
            .map(|(j, c)| Summand {
                coef: c.clone(),
                vec: [(j as u32 + 1, BigRational::one())].into_iter().collect(),
            })
            .collect();
        Self { pad, s, summands }
    }
}

/// Multilinearizes a degree-`d` functional `F` on `W` (`d = ws.len()`):
/// `(1/d!) Σ_{I⊆[d]} (−1)^{d−|I|} F(Σ_{i∈I} w_i)`.
pub fn polarize<F>(ws: &[SymPoly], mut f: F) -> Result<BigRational>
where
    F: FnMut(&SymPoly) -> Result<BigRational>,
{
    let d = ws.len();
    precondition!((1..32).contains(&d), "1 <= d = {d} < 32");
    let deg = ws[0].degree();
    for w in ws {
        w.same_degree(&ws[0]).map_err(|_| Error::DegreeMismatch { expected: deg, found: w.degree() })?;
    }
    let mut acc = BigRational::zero();
    for mask in 1u32..(1 << d) {
        let mut sum = SymPoly::zero(deg);
        for (i, w) in ws.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum = sum.add(w)?;
            }
        }
        let v = f(&sum)?;
        if (d as u32 - mask.count_ones()) % 2 == 0 {
            acc += v;
        } else {
            acc -= v;
        }
    }
    Ok(acc / unsigned(crate::arith::factorial(d as u64)))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            (!q.is_zero()).then(|| BigRational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Renders `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &BigRational) -> alloc::string::String {
    if r.is_integer() {
        alloc::format!("{}", r.numer())
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64) -> BigRational {
        rational(n)
    }

    fn frac(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn x(i: u32) -> SymPoly {
        SymPoly::var_power(i, 1)
    }

    #[test]
    fn inner_product_examples() {
        let x1m = SymPoly::var_power(1, 3);
        assert_eq!(x1m.inner_product(&x1m).unwrap(), q(1));
        let x1x2 = SymPoly::monomial(Exponent::new([(1, 1), (2, 1)]));
        assert_eq!(x1x2.inner_product(&x1x2).unwrap(), frac(1, 2));
        let a = SymPoly::var_power(1, 2);
        let b = SymPoly::var_power(2, 2);
        assert_eq!(a.inner_product(&b).unwrap(), q(0));
        assert!(matches!(a.inner_product(&x(1)), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn product_examples() {
        assert_eq!(x(1).mul(&x(1)), SymPoly::var_power(1, 2));
        let s = x(1).add(&x(2)).unwrap();
        let d = x(1).sub(&x(2)).unwrap();
        let expect = SymPoly::var_power(1, 2).sub(&SymPoly::var_power(2, 2)).unwrap();
        assert_eq!(s.mul(&d), expect);
        assert_eq!(
            SymPoly::var_power(1, 2).mul(&x(2)),
            SymPoly::monomial(Exponent::new([(1, 2), (2, 1)]))
        );
    }

    #[test]
    fn power_sum_examples() {
        let p = PowerSumPoint::diagonal(0, 2, &[q(1), q(1)]).expand();
        assert_eq!(p, SymPoly::var_power(1, 2).add(&SymPoly::var_power(2, 2)).unwrap());
        let p = PowerSumPoint {
            pad: 2,
            s: 2,
            summands: vec![Summand { coef: q(1), vec: [(2, q(1))].into_iter().collect() }],
        };
        assert_eq!(p.expand(), SymPoly::monomial(Exponent::new([(1, 2), (2, 2)])));
        let p = PowerSumPoint {
            pad: 0,
            s: 2,
            summands: vec![Summand { coef: q(1), vec: [(1, q(1)), (2, q(1))].into_iter().collect() }],
        };
        let e = p.expand();
        assert_eq!(e.coefficient(&Exponent::new([(1, 1), (2, 1)])), q(2));
        assert_eq!(e.coefficient(&Exponent::power(2, 2)), q(1));
        assert_eq!(e.num_terms(), 3);
    }

    #[test]
    fn polarize_examples() {
        let w = SymPoly::var_power(1, 2).add(&SymPoly::var_power(2, 2).scale(&q(3))).unwrap();
        let g = |p: &SymPoly| Ok(p.coefficient(&Exponent::power(1, 2)) + p.coefficient(&Exponent::power(2, 2)));
        assert_eq!(polarize(core::slice::from_ref(&w), g).unwrap(), q(4));
        // F(w) = ⟨X_1^n, w⟩², the functional (X_1^n)·(X_1^n) in degree 2
        let n = 3;
        let x1n = SymPoly::var_power(1, n);
        let f = |p: &SymPoly| {
            let a = x1n.inner_product(p)?;
            Ok(&a * &a)
        };
        assert_eq!(polarize(&[x1n.clone(), x1n.clone()], f).unwrap(), q(1));
    }

    #[test]
    fn scaling_examples() {
        let p = SymPoly::var_power(1, 2);
        assert_eq!(p.scaling_map(2, 4, false).unwrap(), p);
        let p = SymPoly::var_power(2, 2);
        assert_eq!(p.scaling_map(2, 4, false).unwrap(), p.scale(&q(6)));
        assert_eq!(p.scaling_map(2, 2, false).unwrap(), p);
    }

    #[test]
    fn x1_degree_and_padding() {
        let p = SymPoly::monomial(Exponent::new([(1, 2), (2, 1)])).add(&SymPoly::var_power(2, 3)).unwrap();
        assert_eq!(p.deg_in_x1(), Some(2));
        assert_eq!(SymPoly::zero(3).deg_in_x1(), None);
        assert_eq!(
            SymPoly::var_power(2, 2).pad_multiply(3),
            SymPoly::monomial(Exponent::new([(1, 3), (2, 2)]))
        );
    }

    #[test]
    fn rational_text_round_trip() {
        for s in ["3", "-7/2", "0"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("4/2"), Some(q(2)));
        assert_eq!(parse_rational("1/0"), None);
    }

    fn arb_poly(deg: u64, nvars: u32) -> impl Strategy<Value = SymPoly> {
        prop::collection::vec((prop::collection::vec(0u64..=deg, nvars as usize), -6i64..=6), 0..6)
            .prop_map(move |raw| {
                let mut p = SymPoly::zero(deg);
                for (mut e, c) in raw {
                    let tot: u64 = e.iter().skip(1).sum();
                    if tot > deg {
                        continue;
                    }
                    e[0] = deg - tot;
                    p = p.add(&SymPoly::term(Exponent::from_dense(&e), q(c))).unwrap();
                }
                p
            })
    }

    proptest! {
        #[test]
        fn scaling_inverse_is_identity(p in arb_poly(3, 3), k in 0u64..4) {
            let s = p.scaling_map(3, 3 + k, false).unwrap();
            prop_assert_eq!(s.scaling_map(3, 3 + k, true).unwrap(), p);
        }

        #[test]
        fn scaling_composes_stepwise(p in arb_poly(3, 3), k in 0u64..4) {
            // X_1 · S_{j,j+1} applied k times equals X_1^k · S_{m,m+k}
            let mut step = p.clone();
            for j in 0..k {
                step = step.scaling_map(3 + j, 4 + j, false).unwrap().pad_multiply(1);
            }
            prop_assert_eq!(step, p.scaling_map(3, 3 + k, false).unwrap().pad_multiply(k));
        }

        #[test]
        fn inner_product_symmetric_bilinear(p in arb_poly(2, 3), r in arb_poly(2, 3), s in arb_poly(2, 3), a in -4i64..4) {
            prop_assert_eq!(p.inner_product(&r).unwrap(), r.inner_product(&p).unwrap());
            let lhs = p.add(&r.scale(&q(a))).unwrap().inner_product(&s).unwrap();
            let rhs = p.inner_product(&s).unwrap() + q(a) * r.inner_product(&s).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pairing_with_power_evaluates(p in arb_poly(3, 3), v in prop::collection::vec(-4i64..=4, 3)) {
            // ⟨p, ℓ^m⟩ = p(v) for the linear form ℓ = Σ v_i X_i
            let vec: SparseVec = v.iter().enumerate().map(|(i, &c)| (i as u32 + 1, q(c))).collect();
            let point: Vec<BigRational> = v.iter().map(|&c| q(c)).collect();
            prop_assert_eq!(p.inner_product(&linear_power(&vec, 3)).unwrap(), p.evaluate(&point));
        }

        #[test]
        fn polarize_on_diagonal(w in arb_poly(2, 2), d in 1usize..=4) {
            // F(w) = ⟨X_1^2, w⟩^d; polarization at (w,…,w) gives F(w)
            let x = SymPoly::var_power(1, 2);
            let f = |p: &SymPoly| Ok(num_traits::pow(x.inner_product(p)?, d));
            let ws = vec![w.clone(); d];
            prop_assert_eq!(polarize(&ws, f).unwrap(), f(&w).unwrap());
        }
    }

    #[test]
    fn random_points_are_seeded() {
        let a = PowerSumPoint::random(&mut ChaCha8Rng::seed_from_u64(7), 1, 3, 2, 3, 5);
        let b = PowerSumPoint::random(&mut ChaCha8Rng::seed_from_u64(7), 1, 3, 2, 3, 5);
        assert_eq!(a, b);
        assert_eq!(a.expand().degree(), 4);
    }
}
